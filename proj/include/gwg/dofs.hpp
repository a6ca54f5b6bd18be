#pragma once

#include <vector>

#include "gwg/config.hpp"
#include "gwg/mesh.hpp"
#include "gwg/polybasis.hpp"

namespace gwg {

/// Global numbering: all v0 blocks element by element, then per edge the block
/// [v_b (m+1) | v_g1 (l+1) | v_g2 (l+1)].
struct DofLayout {
  int num_elements = 0;
  int num_edges = 0;
  int k = 0;
  int v0_size = 0;  // dim P_k
  int vb_size = 0;  // m + 1
  int vg_size = 0;  // l + 1, per component

  DofLayout() = default;
  DofLayout(int elements, int edges, const GwgConfig& cfg);

  int edge_block() const { return vb_size + 2 * vg_size; }
  int size() const { return num_elements * v0_size + num_edges * edge_block(); }
  int v0_offset(int t) const { return t * v0_size; }
  int vb_offset(int e) const { return num_elements * v0_size + e * edge_block(); }
  int vg_offset(int e, int comp) const { return vb_offset(e) + vb_size + comp * vg_size; }

  bool operator==(const DofLayout&) const = default;
};

/// Local numbering on an element with E edges: [v0 | v_b of edge 0..E-1 | v_g of edge
/// 0..E-1], each v_g block ordered component 1 then component 2.
struct LocalDofLayout {
  int v0_size = 0;
  int num_edges = 0;
  int vb_size = 0;
  int vg_size = 0;  // per component

  LocalDofLayout() = default;
  LocalDofLayout(int edges, const GwgConfig& cfg);

  int size() const { return v0_size + num_edges * (vb_size + 2 * vg_size); }
  int vb_offset(int local_edge) const { return v0_size + local_edge * vb_size; }
  int vg_offset(int local_edge, int comp) const {
    return v0_size + num_edges * vb_size + local_edge * 2 * vg_size + comp * vg_size;
  }
};

/// A discrete weak function {v0, v_b, v_g} stored as one global coefficient vector.
/// v0 is expanded in the element's scaled monomials, v_b and v_g in edge Legendre
/// polynomials of the edge's global frame.
struct WeakFunction {
  DofLayout layout;
  VectorXd coeffs;

  WeakFunction() = default;
  explicit WeakFunction(const DofLayout& lay) : layout(lay), coeffs(VectorXd::Zero(lay.size())) {}

  auto v0(int t) { return coeffs.segment(layout.v0_offset(t), layout.v0_size); }
  auto v0(int t) const { return coeffs.segment(layout.v0_offset(t), layout.v0_size); }
  auto vb(int e) { return coeffs.segment(layout.vb_offset(e), layout.vb_size); }
  auto vb(int e) const { return coeffs.segment(layout.vb_offset(e), layout.vb_size); }
  auto vg(int e, int comp) { return coeffs.segment(layout.vg_offset(e, comp), layout.vg_size); }
  auto vg(int e, int comp) const {
    return coeffs.segment(layout.vg_offset(e, comp), layout.vg_size);
  }
};

class DofMap {
 public:
  DofMap(const Mesh& mesh, const GwgConfig& cfg);

  const DofLayout& layout() const { return layout_; }
  int size() const { return layout_.size(); }
  LocalDofLayout local_layout(int t) const;

  /// Global index of every local DOF of element t.
  std::vector<int> local_to_global(int t) const;

  /// True for v_b and v_g DOFs on boundary edges.
  const std::vector<bool>& boundary_mask() const { return boundary_; }
  int num_constrained() const { return num_constrained_; }

  /// Free (unconstrained) global indices in ascending order.
  std::vector<int> free_dofs() const;

 private:
  const Mesh* mesh_;
  GwgConfig cfg_;
  DofLayout layout_;
  std::vector<bool> boundary_;
  int num_constrained_ = 0;
};

}  // namespace gwg

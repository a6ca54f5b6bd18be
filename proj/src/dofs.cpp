#include "gwg/dofs.hpp"

namespace gwg {

DofLayout::DofLayout(int elements, int edges, const GwgConfig& cfg)
    : num_elements(elements),
      num_edges(edges),
      k(cfg.k),
      v0_size(poly_dimension(cfg.k)),
      vb_size(cfg.m + 1),
      vg_size(cfg.l + 1) {}

LocalDofLayout::LocalDofLayout(int edges, const GwgConfig& cfg)
    : v0_size(poly_dimension(cfg.k)), num_edges(edges), vb_size(cfg.m + 1), vg_size(cfg.l + 1) {}

DofMap::DofMap(const Mesh& mesh, const GwgConfig& cfg)
    : mesh_(&mesh), cfg_(cfg), layout_(mesh.num_elements(), mesh.num_edges(), cfg) {
  boundary_.assign(layout_.size(), false);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (!mesh.edge(e).is_boundary()) continue;
    const int first = layout_.vb_offset(e);
    for (int i = 0; i < layout_.edge_block(); ++i) boundary_[first + i] = true;
    num_constrained_ += layout_.edge_block();
  }
}

LocalDofLayout DofMap::local_layout(int t) const {
  return LocalDofLayout(static_cast<int>(mesh_->element_edges(t).size()), cfg_);
}

std::vector<int> DofMap::local_to_global(int t) const {
  const LocalDofLayout local = local_layout(t);
  std::vector<int> map(local.size());
  for (int i = 0; i < local.v0_size; ++i) map[i] = layout_.v0_offset(t) + i;
  const auto refs = mesh_->element_edges(t);
  for (int le = 0; le < local.num_edges; ++le) {
    const int e = refs[le].edge;
    for (int i = 0; i < local.vb_size; ++i) map[local.vb_offset(le) + i] = layout_.vb_offset(e) + i;
    for (int c = 0; c < 2; ++c) {
      for (int i = 0; i < local.vg_size; ++i) {
        map[local.vg_offset(le, c) + i] = layout_.vg_offset(e, c) + i;
      }
    }
  }
  return map;
}

std::vector<int> DofMap::free_dofs() const {
  std::vector<int> free;
  free.reserve(size() - num_constrained_);
  for (int i = 0; i < size(); ++i) {
    if (!boundary_[i]) free.push_back(i);
  }
  return free;
}

}  // namespace gwg

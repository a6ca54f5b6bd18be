#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace gwg {

using Point = Eigen::Vector2d;
using Vec2 = Eigen::Vector2d;

enum class Domain { unit_square, l_shaped };

std::string to_string(Domain domain);
Domain domain_from_string(const std::string& name);

/// Area of the domain polygon (1 for the unit square, 3 for the L-shape).
double domain_area(Domain domain);

/// True if p lies in the open domain.
bool domain_contains(Domain domain, const Point& p);

/// Straight segment with the parameterization x(t) = midpoint + t * (length / 2) * tangent,
/// t in [-1, 1]. Edge polynomials are expanded in t, so both elements sharing an edge
/// must use the same frame.
struct EdgeFrame {
  Point a;
  Point b;
  Point midpoint;
  Vec2 tangent;
  double length = 0.0;

  EdgeFrame() = default;
  EdgeFrame(const Point& from, const Point& to);

  Point at(double t) const { return midpoint + (0.5 * length * t) * tangent; }
};

struct LocalEdgeGeometry {
  Vec2 normal;   // unit outward normal
  Vec2 tangent;  // unit tangent, counter-clockwise around the element
  double length = 0.0;
  Point midpoint;
};

struct ElementGeometry {
  std::vector<Point> vertices;  // counter-clockwise
  std::vector<LocalEdgeGeometry> edges;  // edge i runs from vertex i to vertex i+1
  double diameter = 0.0;
  double area = 0.0;
  Point centroid;

  int num_edges() const { return static_cast<int>(edges.size()); }
};

/// Geometry of a convex polygon given by counter-clockwise vertices.
/// Throws std::invalid_argument for fewer than three vertices or a non-positive area.
ElementGeometry make_element_geometry(std::span<const Point> ccw_vertices);

struct Edge {
  int v0 = -1;
  int v1 = -1;
  int left = -1;   // element that traverses v0 -> v1 counter-clockwise
  int right = -1;  // -1 on the boundary

  bool is_boundary() const { return right < 0; }
};

/// Reference from an element to one of its edges.
struct ElementEdge {
  int edge = -1;
  bool aligned = true;  // local direction (vertex i -> i+1) agrees with v0 -> v1
};

/// Conforming polygonal mesh. Immutable after construction.
class Mesh {
 public:
  Mesh(Domain domain, std::vector<Point> vertices, std::vector<std::vector<int>> elements);

  Domain domain() const { return domain_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_elements() const { return static_cast<int>(elements_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<Point>& vertices() const { return vertices_; }
  std::span<const int> element(int t) const { return elements_[t]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const ElementEdge> element_edges(int t) const { return element_edges_[t]; }

  const ElementGeometry& geometry(int t) const { return geometry_[t]; }
  EdgeFrame edge_frame(int e) const;

  /// Frames of the element's edges in local order, oriented by the global edge direction.
  std::vector<EdgeFrame> element_frames(int t) const;

  int num_boundary_edges() const;
  double total_area() const;

 private:
  Domain domain_;
  std::vector<Point> vertices_;
  std::vector<std::vector<int>> elements_;
  std::vector<Edge> edges_;
  std::vector<std::vector<ElementEdge>> element_edges_;
  std::vector<ElementGeometry> geometry_;
};

/// h = max over elements of the element diameter.
double mesh_size(const Mesh& mesh);

enum class Diagonal { rising, falling };

/// n squares per unit length, each cut along the same diagonal (rising: lower-left to
/// upper-right). On the L-shape the reentrant corner (0,0) is always a vertex.
Mesh generate_uniform_triangular(Domain domain, int n_per_side,
                                 Diagonal diagonal = Diagonal::rising);

/// Axis-aligned squares of side 1 / n_per_side.
Mesh generate_uniform_square(Domain domain, int n_per_side);

/// (3 * 2^level) x (2 * 2^level) rectangles on the unit square.
Mesh generate_uniform_rectangular(int level);

/// JSON dump with "vertices", "elements" and "edges" arrays (0-based indices).
void write_mesh_json(const Mesh& mesh, std::ostream& out);

}  // namespace gwg

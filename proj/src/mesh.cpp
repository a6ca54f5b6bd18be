#include "gwg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace gwg {

std::string to_string(Domain domain) {
  return domain == Domain::unit_square ? "unit_square" : "l_shaped";
}

Domain domain_from_string(const std::string& name) {
  if (name == "unit_square") return Domain::unit_square;
  if (name == "l_shaped") return Domain::l_shaped;
  throw std::invalid_argument("unknown domain '" + name + "'");
}

double domain_area(Domain domain) { return domain == Domain::unit_square ? 1.0 : 3.0; }

bool domain_contains(Domain domain, const Point& p) {
  const double x = p.x();
  const double y = p.y();
  if (domain == Domain::unit_square) return x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0;
  const bool in_box = x > -1.0 && x < 1.0 && y > -1.0 && y < 1.0;
  const bool in_notch = x >= 0.0 && y <= 0.0;
  return in_box && !in_notch;
}

EdgeFrame::EdgeFrame(const Point& from, const Point& to)
    : a(from), b(to), midpoint(0.5 * (from + to)), length((to - from).norm()) {
  tangent = (to - from) / length;
}

ElementGeometry make_element_geometry(std::span<const Point> ccw_vertices) {
  const int nv = static_cast<int>(ccw_vertices.size());
  if (nv < 3) throw std::invalid_argument("element needs at least three vertices");

  ElementGeometry g;
  g.vertices.assign(ccw_vertices.begin(), ccw_vertices.end());

  double twice_area = 0.0;
  Point c = Point::Zero();
  for (int i = 0; i < nv; ++i) {
    const Point& p = g.vertices[i];
    const Point& q = g.vertices[(i + 1) % nv];
    const double cross = p.x() * q.y() - q.x() * p.y();
    twice_area += cross;
    c += cross * (p + q);
  }
  if (!(twice_area > 0.0)) {
    throw std::invalid_argument("element vertices are not counter-clockwise or degenerate");
  }
  g.area = 0.5 * twice_area;
  g.centroid = c / (3.0 * twice_area);

  for (int i = 0; i < nv; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      g.diameter = std::max(g.diameter, (g.vertices[i] - g.vertices[j]).norm());
    }
  }

  g.edges.reserve(nv);
  for (int i = 0; i < nv; ++i) {
    const Point& p = g.vertices[i];
    const Point& q = g.vertices[(i + 1) % nv];
    LocalEdgeGeometry e;
    e.length = (q - p).norm();
    e.tangent = (q - p) / e.length;
    e.normal = Vec2(e.tangent.y(), -e.tangent.x());
    e.midpoint = 0.5 * (p + q);
    g.edges.push_back(e);
  }
  return g;
}

Mesh::Mesh(Domain domain, std::vector<Point> vertices, std::vector<std::vector<int>> elements)
    : domain_(domain), vertices_(std::move(vertices)), elements_(std::move(elements)) {
  const auto nv = static_cast<std::int64_t>(vertices_.size());
  std::unordered_map<std::int64_t, int> edge_of_pair;
  element_edges_.resize(elements_.size());
  geometry_.reserve(elements_.size());

  for (int t = 0; t < num_elements(); ++t) {
    const auto& loop = elements_[t];
    std::vector<Point> pts;
    pts.reserve(loop.size());
    for (int v : loop) {
      if (v < 0 || v >= nv) throw std::invalid_argument("element references a missing vertex");
      pts.push_back(vertices_[v]);
    }
    geometry_.push_back(make_element_geometry(pts));

    const int n = static_cast<int>(loop.size());
    for (int i = 0; i < n; ++i) {
      const int a = loop[i];
      const int b = loop[(i + 1) % n];
      const std::int64_t key = std::min(a, b) * nv + std::max(a, b);
      auto it = edge_of_pair.find(key);
      if (it == edge_of_pair.end()) {
        edge_of_pair.emplace(key, num_edges());
        element_edges_[t].push_back({num_edges(), true});
        edges_.push_back({a, b, t, -1});
        continue;
      }
      Edge& e = edges_[it->second];
      if (e.right >= 0 || e.v0 != b || e.v1 != a) {
        throw std::invalid_argument("mesh is not a consistently oriented manifold");
      }
      e.right = t;
      element_edges_[t].push_back({it->second, false});
    }
  }
}

EdgeFrame Mesh::edge_frame(int e) const {
  return EdgeFrame(vertices_[edges_[e].v0], vertices_[edges_[e].v1]);
}

std::vector<EdgeFrame> Mesh::element_frames(int t) const {
  std::vector<EdgeFrame> frames;
  frames.reserve(element_edges_[t].size());
  for (const auto& ref : element_edges_[t]) frames.push_back(edge_frame(ref.edge));
  return frames;
}

int Mesh::num_boundary_edges() const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_boundary(); }));
}

double Mesh::total_area() const {
  double a = 0.0;
  for (const auto& g : geometry_) a += g.area;
  return a;
}

double mesh_size(const Mesh& mesh) {
  double h = 0.0;
  for (int t = 0; t < mesh.num_elements(); ++t) h = std::max(h, mesh.geometry(t).diameter);
  return h;
}

namespace {

// Structured lattice of nx x ny cells of size hx x hy anchored at origin. Cells for which
// keep(i, j) is false are skipped; only referenced lattice points become vertices.
class Lattice {
 public:
  Lattice(Point origin, int nx, int ny, double hx, double hy)
      : origin_(origin), nx_(nx), ny_(ny), hx_(hx), hy_(hy),
        id_(static_cast<std::size_t>(nx + 1) * (ny + 1), -1) {}

  int vertex(int i, int j) {
    int& id = id_[static_cast<std::size_t>(j) * (nx_ + 1) + i];
    if (id < 0) {
      id = static_cast<int>(points_.size());
      points_.emplace_back(origin_.x() + i * hx_, origin_.y() + j * hy_);
    }
    return id;
  }

  Point cell_center(int i, int j) const {
    return {origin_.x() + (i + 0.5) * hx_, origin_.y() + (j + 0.5) * hy_};
  }

  std::vector<Point> take_points() { return std::move(points_); }

 private:
  Point origin_;
  int nx_, ny_;
  double hx_, hy_;
  std::vector<int> id_;
  std::vector<Point> points_;
};

struct CellGrid {
  Point origin;
  int nx;
  int ny;
};

CellGrid domain_grid(Domain domain, int n_per_side) {
  if (domain == Domain::unit_square) return {{0.0, 0.0}, n_per_side, n_per_side};
  return {{-1.0, -1.0}, 2 * n_per_side, 2 * n_per_side};
}

void check_resolution(int n) {
  if (n < 1) throw std::invalid_argument("n_per_side must be positive");
}

}  // namespace

Mesh generate_uniform_triangular(Domain domain, int n_per_side, Diagonal diagonal) {
  check_resolution(n_per_side);
  const CellGrid grid = domain_grid(domain, n_per_side);
  const double h = 1.0 / n_per_side;
  Lattice lattice(grid.origin, grid.nx, grid.ny, h, h);
  std::vector<std::vector<int>> elements;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      if (!domain_contains(domain, lattice.cell_center(i, j))) continue;
      const int p00 = lattice.vertex(i, j);
      const int p10 = lattice.vertex(i + 1, j);
      const int p11 = lattice.vertex(i + 1, j + 1);
      const int p01 = lattice.vertex(i, j + 1);
      if (diagonal == Diagonal::rising) {
        elements.push_back({p00, p10, p11});
        elements.push_back({p00, p11, p01});
      } else {
        elements.push_back({p00, p10, p01});
        elements.push_back({p10, p11, p01});
      }
    }
  }
  return Mesh(domain, lattice.take_points(), std::move(elements));
}

Mesh generate_uniform_square(Domain domain, int n_per_side) {
  check_resolution(n_per_side);
  const CellGrid grid = domain_grid(domain, n_per_side);
  const double h = 1.0 / n_per_side;
  Lattice lattice(grid.origin, grid.nx, grid.ny, h, h);
  std::vector<std::vector<int>> elements;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      if (!domain_contains(domain, lattice.cell_center(i, j))) continue;
      elements.push_back({lattice.vertex(i, j), lattice.vertex(i + 1, j),
                          lattice.vertex(i + 1, j + 1), lattice.vertex(i, j + 1)});
    }
  }
  return Mesh(domain, lattice.take_points(), std::move(elements));
}

Mesh generate_uniform_rectangular(int level) {
  if (level < 0 || level > 20) throw std::invalid_argument("rectangular level out of range");
  const int nx = 3 << level;
  const int ny = 2 << level;
  Lattice lattice({0.0, 0.0}, nx, ny, 1.0 / nx, 1.0 / ny);
  std::vector<std::vector<int>> elements;
  elements.reserve(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      elements.push_back({lattice.vertex(i, j), lattice.vertex(i + 1, j),
                          lattice.vertex(i + 1, j + 1), lattice.vertex(i, j + 1)});
    }
  }
  return Mesh(Domain::unit_square, lattice.take_points(), std::move(elements));
}

void write_mesh_json(const Mesh& mesh, std::ostream& out) {
  nlohmann::json j;
  j["domain"] = to_string(mesh.domain());
  auto& verts = j["vertices"] = nlohmann::json::array();
  for (const auto& p : mesh.vertices()) verts.push_back({p.x(), p.y()});
  auto& elems = j["elements"] = nlohmann::json::array();
  for (int t = 0; t < mesh.num_elements(); ++t) {
    const auto loop = mesh.element(t);
    elems.push_back(std::vector<int>(loop.begin(), loop.end()));
  }
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& e : mesh.edges()) edges.push_back({e.v0, e.v1, e.left, e.right});
  out << j.dump() << '\n';
}

}  // namespace gwg

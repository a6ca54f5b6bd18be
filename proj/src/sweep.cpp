#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gwg/errors.hpp"
#include "gwg/experiments.hpp"

namespace gwg {

std::string to_string(MeshKind kind) {
  switch (kind) {
    case MeshKind::triangular: return "triangular";
    case MeshKind::square: return "square";
    case MeshKind::rectangular: return "rectangular";
  }
  return "?";
}

MeshKind mesh_kind_from_string(const std::string& name) {
  if (name == "triangular") return MeshKind::triangular;
  if (name == "square") return MeshKind::square;
  if (name == "rectangular") return MeshKind::rectangular;
  throw ConfigError("unknown mesh_kind '" + name + "'");
}

RunConfig parse_run_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("invalid config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  RunConfig cfg;
  try {
    if (j.contains("domain")) {
      try {
        cfg.domain = domain_from_string(j.at("domain").get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
    if (j.contains("mesh_kind")) cfg.mesh_kind = mesh_kind_from_string(j.at("mesh_kind"));
    if (j.contains("diagonal")) {
      const std::string diagonal = j.at("diagonal");
      if (diagonal == "rising") {
        cfg.diagonal = Diagonal::rising;
      } else if (diagonal == "falling") {
        cfg.diagonal = Diagonal::falling;
      } else {
        throw ConfigError("unknown diagonal '" + diagonal + "'");
      }
    }
    GwgConfig& s = cfg.scheme;
    s.k = j.value("k", s.k);
    s.m = j.value("m", s.m);
    s.l = j.value("l", s.l);
    s.n = j.value("n", s.n);
    s.rho1 = j.value("rho1", s.rho1);
    s.rho2 = j.value("rho2", s.rho2);
    s.gamma1 = j.value("gamma1", s.gamma1);
    s.gamma2 = j.value("gamma2", s.gamma2);
    s.tol = j.value("tol", s.tol);
    s.max_iters = j.value("max_iters", s.max_iters);
    if (j.contains("solver")) {
      const std::string solver = j.at("solver");
      if (solver == "cg") {
        s.solver = SolverKind::cg;
      } else if (solver == "dense") {
        s.solver = SolverKind::dense;
      } else {
        throw ConfigError("unknown solver '" + solver + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  if (cfg.mesh_kind == MeshKind::rectangular && cfg.domain != Domain::unit_square) {
    throw ConfigError("rectangular meshes are only available on the unit square");
  }
  cfg.scheme.validate();
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

Mesh make_mesh(const RunConfig& cfg, int inv_h) {
  if (inv_h < 1) throw ConfigError("1/h must be positive");
  switch (cfg.mesh_kind) {
    case MeshKind::triangular: return generate_uniform_triangular(cfg.domain, inv_h, cfg.diagonal);
    case MeshKind::square: return generate_uniform_square(cfg.domain, inv_h);
    case MeshKind::rectangular: {
      if (cfg.domain != Domain::unit_square) {
        throw ConfigError("rectangular meshes are only available on the unit square");
      }
      int level = 0;
      while ((2 << level) < inv_h) ++level;
      if ((2 << level) != inv_h) {
        throw ConfigError("rectangular meshes need 1/h = 2^(level+1), got " +
                          std::to_string(inv_h));
      }
      return generate_uniform_rectangular(level);
    }
  }
  throw ConfigError("unknown mesh kind");
}

std::array<double, kNumMetrics> metric_values(const ErrorReport& e) {
  return {e.triple_bar, e.l2_e0, e.eb_edge, e.eg_edge, e.h2_center, e.h1_center};
}

std::array<double, kNumMetrics> ConvergenceTable::rates(std::size_t row) const {
  std::array<double, kNumMetrics> r;
  r.fill(kUndefinedRate);
  if (row == 0 || row >= rows.size()) return r;
  const auto prev = metric_values(rows[row - 1].errors);
  const auto cur = metric_values(rows[row].errors);
  // Rates assume each row halves h; use the actual ratio of the labels.
  const double ratio = std::log2(static_cast<double>(rows[row].inv_h) / rows[row - 1].inv_h);
  for (int i = 0; i < kNumMetrics; ++i) {
    const double pair[2] = {prev[i], cur[i]};
    r[i] = gwg::rates(pair)[0] / ratio;
  }
  return r;
}

LevelSolution solve_level(const RunConfig& cfg, const ManufacturedCase& mcase, int inv_h) {
  const auto start = std::chrono::steady_clock::now();
  LevelSolution sol = solve_on_mesh(make_mesh(cfg, inv_h), cfg.scheme, mcase);
  sol.result.inv_h = inv_h;
  sol.result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

LevelSolution solve_on_mesh(const Mesh& mesh, const GwgConfig& scheme,
                            const ManufacturedCase& mcase) {
  const auto start = std::chrono::steady_clock::now();

  AssembledSystem system(mesh, scheme);
  system.assemble_load(mcase.f);
  system.apply_boundary_conditions(mcase.clamped());

  LevelResult result;
  result.h = mesh_size(mesh);
  result.num_elements = mesh.num_elements();
  result.num_dofs = system.dofs().size();
  result.num_free = static_cast<int>(system.free_dofs().size());

  VectorXd x;
  if (scheme.solver == SolverKind::dense) {
    x = solve_dense(system.matrix(), system.rhs(), scheme.dense_cap);
    result.solve.relative_residual =
        (system.rhs() - system.matrix() * x).norm() / std::max(system.rhs().norm(), 1e-300);
  } else {
    CgResult cg = solve_cg(system.matrix(), system.rhs(), scheme.tol, scheme.max_iters);
    x = std::move(cg.x);
    result.solve = cg.report;
  }

  WeakFunction uh = system.expand(x);
  WeakFunction projected = project_weak(mesh, scheme, mcase.u, mcase.grad, scheme.error_quad_degree());
  WeakFunction err(projected.layout);
  err.coeffs = projected.coeffs - uh.coeffs;

  ErrorReport& e = result.errors;
  e.triple_bar = triple_bar(system.full_matrix(), err);
  e.l2_e0 = l2_e0(mesh, err);
  e.eb_edge = eb_edge(mesh, err);
  e.eg_edge = eg_edge(mesh, err);
  std::tie(e.h2_center, e.h1_center) = center_seminorms(mesh, uh, mcase.grad, mcase.hess);

  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {result, std::move(uh), std::move(projected)};
}

ConvergenceTable run_sweep(const RunConfig& cfg, const ManufacturedCase& mcase,
                           const std::vector<int>& levels) {
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i] <= levels[i - 1]) throw ConfigError("levels must be strictly ascending");
  }
  ConvergenceTable table;
  table.case_id = mcase.id;
  table.config = cfg;
  for (int inv_h : levels) {
    try {
      table.rows.push_back(solve_level(cfg, mcase, inv_h).result);
    } catch (const SolverError& e) {
      throw SolverError("level 1/h=" + std::to_string(inv_h) + ": " + e.what(), e.best_iterate(),
                        e.residual());
    }
  }
  return table;
}

namespace {

RunConfig preset_config(Domain domain, MeshKind kind, int k, int m, int l, int n,
                        double rho1 = 1.0, double rho2 = 1.0) {
  RunConfig cfg;
  cfg.domain = domain;
  cfg.mesh_kind = kind;
  cfg.scheme.k = k;
  cfg.scheme.m = m;
  cfg.scheme.l = l;
  cfg.scheme.n = n;
  cfg.scheme.rho1 = rho1;
  cfg.scheme.rho2 = rho2;
  return cfg;
}

std::vector<int> capped(std::vector<int> levels, int max_inv_h) {
  std::erase_if(levels, [max_inv_h](int v) { return v > max_inv_h; });
  return levels;
}

}  // namespace

std::vector<Preset> table_presets(int table, int max_inv_h) {
  const std::vector<int> from8 = capped({8, 16, 32, 64, 128}, max_inv_h);
  const std::vector<int> from4 = capped({4, 8, 16, 32, 64}, max_inv_h);
  constexpr auto sq = Domain::unit_square;
  constexpr auto tri = MeshKind::triangular;
  switch (table) {
    case 1:
      return {{"table1", "cosx1sin2y1",
               preset_config(sq, MeshKind::rectangular, 2, 0, 0, 1), from8}};
    case 2:
      return {{"table2_m0", "sinxsiny", preset_config(sq, tri, 2, 0, 0, 0), from8},
              {"table2_m1", "sinxsiny", preset_config(sq, tri, 2, 1, 0, 0), from8},
              {"table2_m2", "sinxsiny", preset_config(sq, tri, 2, 2, 0, 0), from8}};
    case 3:
      return {{"table3", "cosx1sin2y1", preset_config(sq, tri, 3, 0, 1, 1), from4}};
    case 4:
      return {{"table4_rho1_1_rho2_1", "cosxsiny", preset_config(sq, tri, 2, 0, 0, 0, 1, 1), from8},
              {"table4_rho1_10_rho2_10", "cosxsiny", preset_config(sq, tri, 2, 0, 0, 0, 10, 10),
               from8},
              {"table4_rho1_100_rho2_1", "cosxsiny", preset_config(sq, tri, 2, 0, 0, 0, 100, 1),
               from8}};
    case 5:
      return {{"table5_n0", "corner08", preset_config(sq, MeshKind::square, 2, 0, 0, 0), from8},
              {"table5_n1", "corner08", preset_config(sq, MeshKind::square, 2, 0, 0, 1), from8}};
    case 6:
      return {{"table6_square_unit", "rsingular", preset_config(sq, MeshKind::square, 2, 0, 0, 0),
               from8},
              {"table6_tri_unit", "rsingular", preset_config(sq, tri, 2, 0, 0, 0), from8},
              {"table6_tri_lshape", "rsingular",
               preset_config(Domain::l_shaped, tri, 2, 0, 0, 0), from4}};
    case 7:
      return {{"table7_m0_l1", "cosx1sin2y1", preset_config(sq, tri, 3, 0, 1, 0), from4},
              {"table7_m2_l1", "cosx1sin2y1", preset_config(sq, tri, 3, 2, 1, 0), from4},
              {"table7_m2_l0", "cosx1sin2y1", preset_config(sq, tri, 3, 2, 0, 0), from4}};
    default:
      throw ConfigError("table must be between 1 and 7");
  }
}

}  // namespace gwg

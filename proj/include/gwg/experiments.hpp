#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "gwg/assembly.hpp"
#include "gwg/errnorms.hpp"

namespace gwg {

/// Closed-form solution of the clamped biharmonic problem with its derivatives and load.
struct ManufacturedCase {
  std::string id;
  std::string formula;
  std::string regularity;
  bool smooth = true;
  ScalarField u;
  GradientField grad;
  HessianField hess;
  ScalarField f;  // bilaplacian of u

  /// g1 = u, g2 = grad u . n, grad g1 = grad u.
  ClampedData clamped() const;
};

/// The five reference cases: cosx1sin2y1, sinxsiny, cosxsiny, corner08, rsingular.
const std::vector<ManufacturedCase>& registry();

/// Quadratic u = 1 + 2x - y + x^2 - 3xy + y^2/2, reproduced exactly when s = 0.
const ManufacturedCase& patch_quadratic_case();

/// Looks up registry() and then the patch case ("quadratic"). Throws ConfigError.
const ManufacturedCase& find_case(const std::string& id);

/// Polar angle on the branch (-pi/2, 3pi/2], continuous on both domains.
double polar_angle(const Point& p);

enum class MeshKind { triangular, square, rectangular };

std::string to_string(MeshKind kind);
MeshKind mesh_kind_from_string(const std::string& name);

struct RunConfig {
  Domain domain = Domain::unit_square;
  MeshKind mesh_kind = MeshKind::triangular;
  Diagonal diagonal = Diagonal::rising;  // triangular meshes only
  GwgConfig scheme;
};

/// Parses the JSON keys domain, mesh_kind, diagonal, k, m, l, n, rho1, rho2, gamma1, gamma2,
/// solver, tol (all optional). Throws ConfigError.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

/// Mesh for the resolution label 1/h. Triangular and square meshes use inv_h cells per unit
/// length; rectangular meshes have 3/2 inv_h x inv_h cells, so inv_h = 2^(level+1).
Mesh make_mesh(const RunConfig& cfg, int inv_h);

struct LevelResult {
  int inv_h = 0;
  double h = 0.0;
  int num_elements = 0;
  int num_dofs = 0;
  int num_free = 0;
  ErrorReport errors;
  SolveReport solve;
  double seconds = 0.0;
};

/// Metric order shared by rates and output columns.
inline constexpr int kNumMetrics = 6;
std::array<double, kNumMetrics> metric_values(const ErrorReport& e);

struct ConvergenceTable {
  std::string case_id;
  RunConfig config;
  std::vector<LevelResult> rows;

  /// Rates between row i - 1 and row i; undefined for the first row.
  std::array<double, kNumMetrics> rates(std::size_t row) const;
};

/// Result of one level: the numerical solution and Q_h u on the same layout.
struct LevelSolution {
  LevelResult result;
  WeakFunction uh;
  WeakFunction projected;
};

LevelSolution solve_level(const RunConfig& cfg, const ManufacturedCase& mcase, int inv_h);

/// Same pipeline on a caller-supplied mesh; result.inv_h is left at zero.
LevelSolution solve_on_mesh(const Mesh& mesh, const GwgConfig& scheme,
                            const ManufacturedCase& mcase);

/// Runs ascending levels. A SolverError is rethrown with the failing 1/h in its message.
ConvergenceTable run_sweep(const RunConfig& cfg, const ManufacturedCase& mcase,
                           const std::vector<int>& levels);

enum class TableFormat { csv, markdown };
TableFormat table_format_from_string(const std::string& name);

/// Columns inv_h, tri_norm, tri_rate, l2_e0, l2_rate, eb, eb_rate, eg, eg_rate, h2c, h2c_rate,
/// h1c, h1c_rate. Errors print as 8.73e-02, rates as 0.98, undefined rates as "-".
void emit(const ConvergenceTable& table, TableFormat format, std::ostream& out);
/// Throws std::runtime_error if the file cannot be written.
void emit(const ConvergenceTable& table, TableFormat format, const std::string& path);

/// A named run reproducing one block of a reference table.
struct Preset {
  std::string name;
  std::string case_id;
  RunConfig config;
  std::vector<int> levels;
};

/// Presets for tables 1..7, with levels capped at max_inv_h. Throws ConfigError otherwise.
std::vector<Preset> table_presets(int table, int max_inv_h = 64);

}  // namespace gwg

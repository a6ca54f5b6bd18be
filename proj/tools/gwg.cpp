#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gwg/errors.hpp"
#include "gwg/experiments.hpp"

namespace {

constexpr int kExitSolver = 2;
constexpr int kExitConfig = 3;

std::vector<int> parse_levels(const std::string& text) {
  std::vector<int> levels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      levels.push_back(v);
    } catch (const std::exception&) {
      throw gwg::ConfigError("bad level '" + item + "' in --levels");
    }
  }
  if (levels.empty()) throw gwg::ConfigError("--levels is empty");
  return levels;
}

void log_rows(const gwg::ConvergenceTable& table) {
  for (const auto& row : table.rows) {
    std::cerr << "  1/h=" << row.inv_h << "  elements=" << row.num_elements
              << "  free dofs=" << row.num_free << "  cg iters=" << row.solve.iterations
              << "  residual=" << row.solve.relative_residual << "  " << row.seconds << "s\n";
  }
}

struct SweepArgs {
  std::string config;
  std::string case_id;
  std::string levels = "8,16,32";
  std::string out;
  std::string format = "csv";
};

int run_sweep_command(const SweepArgs& args) {
  const gwg::RunConfig cfg = gwg::load_run_config(args.config);
  const gwg::ManufacturedCase& mcase = gwg::find_case(args.case_id);
  const gwg::TableFormat format = gwg::table_format_from_string(args.format);
  const std::vector<int> levels = parse_levels(args.levels);
  const gwg::ConvergenceTable table = gwg::run_sweep(cfg, mcase, levels);
  log_rows(table);
  if (args.out.empty() || args.out == "-") {
    gwg::emit(table, format, std::cout);
  } else {
    gwg::emit(table, format, args.out);
  }
  return 0;
}

struct ReproduceArgs {
  int table = 0;
  std::string out = ".";
  int max_inv_h = 64;
  std::string format = "csv";
};

int run_reproduce_command(const ReproduceArgs& args) {
  const gwg::TableFormat format = gwg::table_format_from_string(args.format);
  const auto presets = gwg::table_presets(args.table, args.max_inv_h);
  std::filesystem::create_directories(args.out);
  const char* ext = format == gwg::TableFormat::csv ? ".csv" : ".md";
  if (args.table == 1) {
    std::cerr << "note: rectangular 1/h labels are a convention; compare rates, absolute values "
                 "are informational\n";
  }
  for (const auto& preset : presets) {
    std::cerr << preset.name << " (" << preset.config.scheme.label() << ", "
              << gwg::to_string(preset.config.mesh_kind) << ", " << preset.case_id << ")\n";
    const auto table = gwg::run_sweep(preset.config, gwg::find_case(preset.case_id), preset.levels);
    log_rows(table);
    const auto path = std::filesystem::path(args.out) / (preset.name + ext);
    gwg::emit(table, format, path.string());
    std::cout << path.string() << '\n';
  }
  return 0;
}

struct MeshArgs {
  std::string domain = "unit_square";
  std::string kind = "triangular";
  int inv_h = 4;
  std::string out;
};

int run_mesh_command(const MeshArgs& args) {
  gwg::RunConfig cfg;
  try {
    cfg.domain = gwg::domain_from_string(args.domain);
  } catch (const std::invalid_argument& e) {
    throw gwg::ConfigError(e.what());
  }
  cfg.mesh_kind = gwg::mesh_kind_from_string(args.kind);
  const gwg::Mesh mesh = gwg::make_mesh(cfg, args.inv_h);
  if (args.out.empty() || args.out == "-") {
    gwg::write_mesh_json(mesh, std::cout);
  } else {
    std::ofstream out(args.out);
    if (!out) throw std::runtime_error("cannot write '" + args.out + "'");
    gwg::write_mesh_json(mesh, out);
  }
  return 0;
}

struct MatrixArgs {
  std::string config;
  int inv_h = 4;
  bool reduced = false;
  std::string out;
};

int run_matrix_command(const MatrixArgs& args) {
  const gwg::RunConfig cfg = gwg::load_run_config(args.config);
  const gwg::Mesh mesh = gwg::make_mesh(cfg, args.inv_h);
  const gwg::AssembledSystem system(mesh, cfg.scheme);
  const auto& a = args.reduced ? system.matrix() : system.full_matrix();
  if (args.out.empty() || args.out == "-") {
    gwg::write_coordinate(a, std::cout);
  } else {
    std::ofstream out(args.out);
    if (!out) throw std::runtime_error("cannot write '" + args.out + "'");
    gwg::write_coordinate(a, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized weak Galerkin solver for the clamped biharmonic problem"};
  app.require_subcommand(1);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Convergence sweep for one case and configuration");
  sweep_cmd->add_option("--config", sweep.config, "JSON configuration file")->required();
  sweep_cmd->add_option("--case", sweep.case_id, "Manufactured case id")->required();
  sweep_cmd->add_option("--levels", sweep.levels, "Comma separated 1/h values");
  sweep_cmd->add_option("--out", sweep.out, "Output file (default stdout)");
  sweep_cmd->add_option("--format", sweep.format, "csv or markdown");

  ReproduceArgs repro;
  auto* repro_cmd = app.add_subcommand("reproduce", "Run the presets of one reference table");
  repro_cmd->add_option("--table", repro.table, "Table number (1-7)")->required();
  repro_cmd->add_option("--out", repro.out, "Output directory");
  repro_cmd->add_option("--max-inv-h", repro.max_inv_h, "Largest 1/h to run");
  repro_cmd->add_option("--format", repro.format, "csv or markdown");

  MeshArgs mesh;
  auto* mesh_cmd = app.add_subcommand("mesh", "Write a generated mesh as JSON");
  mesh_cmd->add_option("--domain", mesh.domain, "unit_square or l_shaped");
  mesh_cmd->add_option("--kind", mesh.kind, "triangular, square or rectangular");
  mesh_cmd->add_option("--inv-h", mesh.inv_h, "1/h");
  mesh_cmd->add_option("--out", mesh.out, "Output file (default stdout)");

  MatrixArgs matrix;
  auto* matrix_cmd = app.add_subcommand("matrix", "Write the assembled stiffness matrix");
  matrix_cmd->add_option("--config", matrix.config, "JSON configuration file")->required();
  matrix_cmd->add_option("--inv-h", matrix.inv_h, "1/h");
  matrix_cmd->add_flag("--reduced", matrix.reduced, "Only the free DOFs");
  matrix_cmd->add_option("--out", matrix.out, "Output file (default stdout)");

  auto* cases_cmd = app.add_subcommand("cases", "List the manufactured cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*sweep_cmd) return run_sweep_command(sweep);
    if (*repro_cmd) return run_reproduce_command(repro);
    if (*mesh_cmd) return run_mesh_command(mesh);
    if (*matrix_cmd) return run_matrix_command(matrix);
    if (*cases_cmd) {
      for (const auto& c : gwg::registry()) {
        std::cout << c.id << "\t" << c.formula << "\t" << c.regularity << '\n';
      }
      return 0;
    }
  } catch (const gwg::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const gwg::SolverError& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

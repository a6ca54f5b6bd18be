#include "gwg/config.hpp"

#include <cmath>
#include <sstream>

#include "gwg/errors.hpp"

namespace gwg {

void GwgConfig::validate() const {
  if (k < 2) throw ConfigError("k must be at least 2");
  if (m < 0 || l < 0 || n < 0) throw ConfigError("m, l and n must be nonnegative");
  if (std::max({k, m, l, n}) > 8) throw ConfigError("polynomial degrees above 8 are not supported");
  if (!(rho1 > 0.0) || !(rho2 > 0.0)) throw ConfigError("rho1 and rho2 must be positive");
  if (!std::isfinite(gamma1) || !std::isfinite(gamma2)) {
    throw ConfigError("gamma1 and gamma2 must be finite");
  }
  if (!(tol > 0.0)) throw ConfigError("solver tolerance must be positive");
  if (max_iters < 1) throw ConfigError("max_iters must be positive");
}

std::string GwgConfig::label() const {
  std::ostringstream os;
  os << 'P' << k << "|P" << m << "|[P" << l << "]^2||P" << n;
  return os.str();
}

std::string to_string(SolverKind kind) { return kind == SolverKind::cg ? "cg" : "dense"; }

}  // namespace gwg

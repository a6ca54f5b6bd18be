#include <cmath>
#include <numbers>

#include "gwg/errors.hpp"
#include "gwg/experiments.hpp"

namespace gwg {

namespace {

using Mat2 = Eigen::Matrix2d;

Mat2 sym(double xx, double xy, double yy) {
  Mat2 h;
  h << xx, xy, xy, yy;
  return h;
}

ManufacturedCase cosx1sin2y1() {
  ManufacturedCase c;
  c.id = "cosx1sin2y1";
  c.formula = "cos(x+1) sin(2y-1)";
  c.regularity = "smooth";
  c.u = [](const Point& p) { return std::cos(p.x() + 1.0) * std::sin(2.0 * p.y() - 1.0); };
  c.grad = [](const Point& p) {
    const double cx = std::cos(p.x() + 1.0), sx = std::sin(p.x() + 1.0);
    const double cy = std::cos(2.0 * p.y() - 1.0), sy = std::sin(2.0 * p.y() - 1.0);
    return Vec2(-sx * sy, 2.0 * cx * cy);
  };
  c.hess = [](const Point& p) {
    const double cx = std::cos(p.x() + 1.0), sx = std::sin(p.x() + 1.0);
    const double cy = std::cos(2.0 * p.y() - 1.0), sy = std::sin(2.0 * p.y() - 1.0);
    return sym(-cx * sy, -2.0 * sx * cy, -4.0 * cx * sy);
  };
  c.f = [u = c.u](const Point& p) { return 25.0 * u(p); };
  return c;
}

ManufacturedCase sinxsiny() {
  ManufacturedCase c;
  c.id = "sinxsiny";
  c.formula = "sin(x) sin(y)";
  c.regularity = "smooth";
  c.u = [](const Point& p) { return std::sin(p.x()) * std::sin(p.y()); };
  c.grad = [](const Point& p) {
    return Vec2(std::cos(p.x()) * std::sin(p.y()), std::sin(p.x()) * std::cos(p.y()));
  };
  c.hess = [](const Point& p) {
    const double u = std::sin(p.x()) * std::sin(p.y());
    return sym(-u, std::cos(p.x()) * std::cos(p.y()), -u);
  };
  c.f = [u = c.u](const Point& p) { return 4.0 * u(p); };
  return c;
}

ManufacturedCase cosxsiny() {
  ManufacturedCase c;
  c.id = "cosxsiny";
  c.formula = "cos(x) sin(y)";
  c.regularity = "smooth";
  c.u = [](const Point& p) { return std::cos(p.x()) * std::sin(p.y()); };
  c.grad = [](const Point& p) {
    return Vec2(-std::sin(p.x()) * std::sin(p.y()), std::cos(p.x()) * std::cos(p.y()));
  };
  c.hess = [](const Point& p) {
    const double u = std::cos(p.x()) * std::sin(p.y());
    return sym(-u, -std::sin(p.x()) * std::cos(p.y()), -u);
  };
  c.f = [u = c.u](const Point& p) { return 4.0 * u(p); };
  return c;
}

// u = (x^2 + y^2)^0.8; the bilaplacian of r^b is b^2 (b-2)^2 r^(b-4).
ManufacturedCase corner08() {
  ManufacturedCase c;
  c.id = "corner08";
  c.formula = "(x^2+y^2)^0.8";
  c.regularity = "H^(2.6-eps), singular at (0,0)";
  c.smooth = false;
  c.u = [](const Point& p) { return std::pow(p.squaredNorm(), 0.8); };
  c.grad = [](const Point& p) {
    const double s = p.squaredNorm();
    if (s == 0.0) return Vec2(0.0, 0.0);
    return Vec2(1.6 * std::pow(s, -0.2) * p);
  };
  c.hess = [](const Point& p) {
    const double s = p.squaredNorm();
    const double a = 1.6 * std::pow(s, -0.2);
    const double b = -0.64 * std::pow(s, -1.2);
    return sym(a + b * p.x() * p.x(), b * p.x() * p.y(), a + b * p.y() * p.y());
  };
  c.f = [](const Point& p) { return 0.4096 * std::pow(p.squaredNorm(), -1.2); };
  return c;
}

// u = r^lambda sin(mu theta) with lambda = 3/2, mu = 1/2; biharmonic away from the origin.
ManufacturedCase rsingular() {
  constexpr double lambda = 1.5;
  constexpr double mu = 0.5;
  ManufacturedCase c;
  c.id = "rsingular";
  c.formula = "r^(3/2) sin(theta/2)";
  c.regularity = "H^(2.5-eps), singular at (0,0)";
  c.smooth = false;
  c.u = [](const Point& p) { return std::pow(p.norm(), lambda) * std::sin(mu * polar_angle(p)); };
  c.grad = [](const Point& p) {
    const double r = p.norm();
    const double th = polar_angle(p);
    const double g = std::sin(mu * th), dg = mu * std::cos(mu * th);
    const double ct = std::cos(th), st = std::sin(th);
    const double rl = std::pow(r, lambda - 1.0);
    return Vec2(rl * (lambda * g * ct - dg * st), rl * (lambda * g * st + dg * ct));
  };
  c.hess = [](const Point& p) {
    const double r = p.norm();
    const double th = polar_angle(p);
    const double g = std::sin(mu * th), dg = mu * std::cos(mu * th), d2g = -mu * mu * g;
    const double ct = std::cos(th), st = std::sin(th);
    // u_x = r^(lambda-1) hx(theta), u_y = r^(lambda-1) hy(theta).
    const double hx = lambda * g * ct - dg * st;
    const double hy = lambda * g * st + dg * ct;
    const double dhx = lambda * dg * ct - lambda * g * st - d2g * st - dg * ct;
    const double dhy = lambda * dg * st + lambda * g * ct + d2g * ct - dg * st;
    const double rl = std::pow(r, lambda - 2.0);
    const double lm1 = lambda - 1.0;
    return sym(rl * (lm1 * hx * ct - dhx * st), rl * (lm1 * hx * st + dhx * ct),
               rl * (lm1 * hy * st + dhy * ct));
  };
  c.f = [](const Point&) { return 0.0; };
  return c;
}

ManufacturedCase quadratic() {
  ManufacturedCase c;
  c.id = "quadratic";
  c.formula = "1 + 2x - y + x^2 - 3xy + y^2/2";
  c.regularity = "polynomial";
  c.u = [](const Point& p) {
    const double x = p.x(), y = p.y();
    return 1.0 + 2.0 * x - y + x * x - 3.0 * x * y + 0.5 * y * y;
  };
  c.grad = [](const Point& p) {
    return Vec2(2.0 + 2.0 * p.x() - 3.0 * p.y(), -1.0 - 3.0 * p.x() + p.y());
  };
  c.hess = [](const Point&) { return sym(2.0, -3.0, 1.0); };
  c.f = [](const Point&) { return 0.0; };
  return c;
}

}  // namespace

double polar_angle(const Point& p) {
  double th = std::atan2(p.y(), p.x());
  if (th <= -0.5 * std::numbers::pi) th += 2.0 * std::numbers::pi;
  return th;
}

ClampedData ManufacturedCase::clamped() const {
  ClampedData d;
  d.g1 = u;
  d.g2 = [g = grad](const Point& p, const Vec2& n) { return g(p).dot(n); };
  d.grad_g1 = grad;
  return d;
}

const std::vector<ManufacturedCase>& registry() {
  static const std::vector<ManufacturedCase> cases = {cosx1sin2y1(), sinxsiny(), cosxsiny(),
                                                      corner08(), rsingular()};
  return cases;
}

const ManufacturedCase& patch_quadratic_case() {
  static const ManufacturedCase c = quadratic();
  return c;
}

const ManufacturedCase& find_case(const std::string& id) {
  for (const auto& c : registry()) {
    if (c.id == id) return c;
  }
  if (id == patch_quadratic_case().id) return patch_quadratic_case();
  throw ConfigError("unknown manufactured case '" + id + "'");
}

}  // namespace gwg

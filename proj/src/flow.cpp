#include "algflow/flow.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace algflow {

namespace {

void require_ordered(double s, double tau, double t) {
  if (!(0.0 <= s && s < tau && tau < t)) {
    throw std::invalid_argument("time ordering 0 <= s < tau < t violated (s=" + std::to_string(s) +
                                ", tau=" + std::to_string(tau) + ", t=" + std::to_string(t) + ")");
  }
}

}  // namespace

TimeInterval::TimeInterval(double s, double t) : s_(s), t_(t) {
  if (!(std::isfinite(s) && std::isfinite(t) && 0.0 <= s && s <= t)) {
    throw std::invalid_argument("time interval requires 0 <= s <= t");
  }
}

Matrix2 rotation_matrix(double d) {
  const double c = std::cos(d);
  const double s = std::sin(d);
  Matrix2 r;
  r << c, s, -s, c;
  return r;
}

FlowFamily::FlowFamily(std::string name, Generator generator)
    : name_(std::move(name)), generator_(std::move(generator)) {
  if (!generator_) throw std::invalid_argument("flow family '" + name_ + "' has no generator");
  const Matrix2 at_zero = generator_(0.0);
  if ((at_zero - Matrix2::Identity()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("flow family '" + name_ + "': generator(0) is not the identity");
  }
}

FlowFamily FlowFamily::rotation() { return FlowFamily("rotation", rotation_matrix); }

CubicTensor FlowFamily::build(double d) const {
  const Matrix2 a = generator_(d);
  CubicTensor c(2);
  for (int i = 0; i < 2; ++i)
    for (int r = 0; r < 2; ++r) {
      c(i, 0, r) = a(i, r);
      c(i, 1, r) = a(r, i);
    }
  return c;
}

CubicTensor flow_tensor(double d) {
  const double c = std::cos(d);
  const double s = std::sin(d);
  CubicTensor m(2);
  m(0, 0, 0) = c;
  m(0, 0, 1) = s;
  m(0, 1, 0) = c;
  m(0, 1, 1) = -s;
  m(1, 0, 0) = -s;
  m(1, 0, 1) = c;
  m(1, 1, 0) = s;
  m(1, 1, 1) = c;
  return m;
}

double verify_kce(const FlowFamily& family, double s, double tau, double t) {
  require_ordered(s, tau, t);
  const CubicTensor whole = family.build(t - s);
  const CubicTensor split = mul_type_c(family.build(tau - s), family.build(t - tau));
  return max_abs_diff(whole, split);
}

double verify_base_system(const FlowFamily& family, double s, double tau, double t) {
  require_ordered(s, tau, t);
  const Matrix2 whole = family.generator(t - s);
  const Matrix2 split = family.generator(tau - s) * family.generator(t - tau);
  return (whole - split).cwiseAbs().maxCoeff();
}

}  // namespace algflow

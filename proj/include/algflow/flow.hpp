#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "algflow/algebra.hpp"
#include "algflow/cubic_tensor.hpp"

namespace algflow {

using Matrix2 = Eigen::Matrix2d;

/// Default threshold for |cos d + sin d| on the commutative locus.
inline constexpr double kDefaultLocusTol = 1e-9;

/// A pair of times 0 <= s <= t.
class TimeInterval {
 public:
  TimeInterval(double s, double t);

  double start() const noexcept { return s_; }
  double end() const noexcept { return t_; }
  double elapsed() const noexcept { return t_ - s_; }

 private:
  double s_;
  double t_;
};

/// [[cos d, sin d], [-sin d, cos d]]
Matrix2 rotation_matrix(double d);

/// A time-homogeneous flow of type C built from a 2x2 generator d -> a(d)
/// solving the semigroup system a(t-s) = a(tau-s) a(t-tau). The tensor at
/// elapsed time d pairs c_{i0r} = a_ir(d) with c_{i1r} = a_ri(d).
class FlowFamily {
 public:
  using Generator = std::function<Matrix2(double)>;

  /// Throws std::invalid_argument unless generator(0) is within 1e-12 of I.
  FlowFamily(std::string name, Generator generator);

  /// The rotation solution a(d) = rotation_matrix(d).
  static FlowFamily rotation();

  const std::string& name() const noexcept { return name_; }
  Matrix2 generator(double d) const { return generator_(d); }

  /// Tensor with slice 0 = a(d) and slice 1 = a(d)^T.
  CubicTensor build(double d) const;
  CubicTensor build(const TimeInterval& interval) const { return build(interval.elapsed()); }

 private:
  std::string name_;
  Generator generator_;
};

inline CubicTensor build_from_pair(const FlowFamily& family, double d) { return family.build(d); }

/// The rotation-flow tensor at elapsed time d.
CubicTensor flow_tensor(double d);
inline CubicTensor flow_tensor(const TimeInterval& interval) { return flow_tensor(interval.elapsed()); }

/// The flow algebra A^[t].
inline Algebra flow_algebra(double t) { return Algebra(flow_tensor(t)); }

/// max-abs residual of M^[s,t] - M^[s,tau] * M^[tau,t] under the type-C
/// product. Requires 0 <= s < tau < t (std::invalid_argument otherwise).
double verify_kce(const FlowFamily& family, double s, double tau, double t);

/// max-abs residual of a(t-s) - a(tau-s) a(t-tau) for the 2x2 generator.
double verify_base_system(const FlowFamily& family, double s, double tau, double t);

/// cos d + sin d; zero exactly where the flow algebra is commutative.
inline double commutativity_defect(double d) { return std::cos(d) + std::sin(d); }

inline bool on_commutative_locus(double d, double tol = kDefaultLocusTol) {
  return std::abs(commutativity_defect(d)) <= tol;
}

}  // namespace algflow

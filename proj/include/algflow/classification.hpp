#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algflow/algebra.hpp"
#include "algflow/flow.hpp"
#include "algflow/isomorphism.hpp"

namespace algflow {

inline constexpr double kDefaultClassifyTol = 1e-9;

/// Isomorphism class of a rotation-flow algebra A^[t].
///
/// A1 (t = 0 mod pi), A0Plus (pi/2), A2 (3pi/4, the commutative class) and the
/// one-parameter classes ACosPlus(c), ACosMinus(c) with c in (0, 1).
class FlowClassLabel {
 public:
  enum class Kind { A1, A0Plus, A2, ACosPlus, ACosMinus };

  static FlowClassLabel a1() { return FlowClassLabel(Kind::A1, std::nullopt); }
  static FlowClassLabel a0_plus() { return FlowClassLabel(Kind::A0Plus, std::nullopt); }
  static FlowClassLabel a2() { return FlowClassLabel(Kind::A2, std::nullopt); }
  /// Throws std::invalid_argument unless 0 < c < 1.
  static FlowClassLabel cos_plus(double c);
  static FlowClassLabel cos_minus(double c);

  Kind kind() const noexcept { return kind_; }
  std::optional<double> parameter() const noexcept { return c_; }
  std::string_view name() const noexcept;

  /// Same variant and, for the parametrized variants, |c1 - c2| <= tol.
  bool same_class(const FlowClassLabel& other, double tol = kDefaultClassifyTol) const noexcept;

  std::string to_string() const;

  bool operator==(const FlowClassLabel&) const = default;

 private:
  FlowClassLabel(Kind kind, std::optional<double> c) : kind_(kind), c_(c) {}

  Kind kind_;
  std::optional<double> c_;
};

/// Parses "A1", "A0Plus", "A2", "ACosPlus", "ACosMinus".
FlowClassLabel::Kind parse_class_kind(std::string_view name);

/// Class of A^[t]. t is reduced mod pi with exceptional residues 0, pi/2 and
/// 3pi/4 matched within `tol`; the parametrized classes carry c = |cos t|.
/// Throws std::invalid_argument for t < 0.
FlowClassLabel classify_time(double t, double tol = kDefaultClassifyTol);

/// The rotation-flow-shaped tensor with cos entries `cos_value` and sin
/// entries sin_sign * sqrt(1 - cos_value^2). Requires 0 < |cos_value| < 1
/// and sin_sign = +-1.
CubicTensor cos_family_tensor(double cos_value, int sin_sign);

/// Representative algebra of a class: M_1, M_0^+, M_2, M^+_c or M^-_c.
Algebra class_representative(const FlowClassLabel& label);

/// One of the fifteen canonical families of nontrivial 2-dimensional real
/// algebras, numbered 1..15, with its parameter vector.
///
/// Parameters by family: 1 -> (a1, a2, a4, b1); 2, 3 -> (a1, b1, b2);
/// 4 -> (b1, b2); 5 -> (a1, b2); 6 -> (a1); 7, 8 -> (a1, b1); 9 -> (b1);
/// 10 -> (a1); 11..15 -> none. Families 2, 3, 7 and 8 need b1 >= 0.
class BekbaevForm {
 public:
  /// Throws std::invalid_argument on an unknown family, wrong parameter
  /// count, non-finite parameters or b1 < 0 where it must be non-negative.
  BekbaevForm(int family, std::vector<double> params);

  static int param_count(int family);

  int family() const noexcept { return family_; }
  const std::vector<double>& params() const noexcept { return params_; }

  bool operator==(const BekbaevForm&) const = default;

 private:
  int family_;
  std::vector<double> params_;
};

StructMatrix2x4 bekbaev_matrix(const BekbaevForm& form);

/// The basis change e*_1 = (e_1 + e_2) / (4 cos t), e*_2 = (e_1 - e_2) / (2 sqrt|sin 2t|)
/// bringing a flow-shaped tensor with the given cos/sin entries into canonical
/// form. Requires cos t != 0 and sin t != 0.
BasisChange cos_branch_basis_change(double cos_t, double sin_t);

struct BekbaevReduction {
  BekbaevForm form;
  /// Takes class_representative(label) to from_2x4(bekbaev_matrix(form)).
  BasisChange basis_change;
  double residual;
};

/// Reduction of a flow class to its canonical family. Throws
/// std::logic_error if the certificate residual exceeds 1e-10.
BekbaevReduction to_bekbaev(const FlowClassLabel& label);

/// Associativity of A1, A0Plus, A2 and ACosPlus/ACosMinus(c) for
/// c in {0.1, ..., 0.9}.
std::vector<std::pair<FlowClassLabel, bool>> associativity_census();

/// Everything a caller needs to canonicalize A^[t].
struct TimeCanonicalization {
  double t;
  FlowClassLabel label;
  Algebra representative;
  /// A^[t] -> representative.
  BasisChange to_representative;
  BekbaevReduction reduction;
  /// A^[t] -> canonical form, composed from the two changes above.
  BasisChange to_canonical;
  double residual;
};

TimeCanonicalization canonicalize_time(double t, double tol = kDefaultClassifyTol);

}  // namespace algflow

#include "algflow/classification.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace algflow {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kReductionTol = 1e-10;

// Tensor with the sign pattern of the rotation flow at a time with the given cos and sin.
CubicTensor flow_shaped(double c, double s) {
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

void require_open_unit(double c) {
  if (!(c > 0.0 && c < 1.0)) {
    throw std::invalid_argument("class parameter must lie in (0, 1), got " + std::to_string(c));
  }
}

}  // namespace

FlowClassLabel FlowClassLabel::cos_plus(double c) {
  require_open_unit(c);
  return FlowClassLabel(Kind::ACosPlus, c);
}

FlowClassLabel FlowClassLabel::cos_minus(double c) {
  require_open_unit(c);
  return FlowClassLabel(Kind::ACosMinus, c);
}

std::string_view FlowClassLabel::name() const noexcept {
  switch (kind_) {
    case Kind::A1: return "A1";
    case Kind::A0Plus: return "A0Plus";
    case Kind::A2: return "A2";
    case Kind::ACosPlus: return "ACosPlus";
    case Kind::ACosMinus: return "ACosMinus";
  }
  return "?";
}

bool FlowClassLabel::same_class(const FlowClassLabel& other, double tol) const noexcept {
  if (kind_ != other.kind_) return false;
  if (!c_ || !other.c_) return true;
  return std::abs(*c_ - *other.c_) <= tol;
}

std::string FlowClassLabel::to_string() const {
  std::ostringstream os;
  os << name();
  if (c_) {
    os.precision(17);
    os << "(c=" << *c_ << ")";
  }
  return os.str();
}

FlowClassLabel::Kind parse_class_kind(std::string_view name) {
  using K = FlowClassLabel::Kind;
  if (name == "A1") return K::A1;
  if (name == "A0Plus") return K::A0Plus;
  if (name == "A2") return K::A2;
  if (name == "ACosPlus") return K::ACosPlus;
  if (name == "ACosMinus") return K::ACosMinus;
  throw std::invalid_argument("unknown flow class '" + std::string(name) + "'");
}

FlowClassLabel classify_time(double t, double tol) {
  if (!(std::isfinite(t) && t >= 0.0)) throw std::invalid_argument("classify_time: t must be finite and >= 0");
  const double r = std::fmod(t, kPi);
  if (r <= tol || kPi - r <= tol) return FlowClassLabel::a1();
  if (std::abs(r - kPi / 2) <= tol) return FlowClassLabel::a0_plus();
  if (std::abs(r - 3 * kPi / 4) <= tol) return FlowClassLabel::a2();

  const double c = std::abs(std::cos(t));
  // Just outside the band around 0 mod pi, |cos t| can round to exactly 1.
  if (c >= 1.0) return FlowClassLabel::a1();
  return r < kPi / 2 ? FlowClassLabel::cos_plus(c) : FlowClassLabel::cos_minus(c);
}

CubicTensor cos_family_tensor(double cos_value, int sin_sign) {
  if (!(std::abs(cos_value) > 0.0 && std::abs(cos_value) < 1.0)) {
    throw std::invalid_argument("cos_family_tensor: need 0 < |cos| < 1");
  }
  if (sin_sign != 1 && sin_sign != -1) throw std::invalid_argument("cos_family_tensor: sin_sign must be +1 or -1");
  const double s = sin_sign * std::sqrt(1.0 - cos_value * cos_value);
  return flow_shaped(cos_value, s);
}

Algebra class_representative(const FlowClassLabel& label) {
  using K = FlowClassLabel::Kind;
  switch (label.kind()) {
    case K::A1: return Algebra(flow_shaped(1.0, 0.0));
    case K::A0Plus: return Algebra(flow_shaped(0.0, 1.0));
    case K::A2: return Algebra(flow_shaped(std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2));
    case K::ACosPlus: return Algebra(cos_family_tensor(*label.parameter(), +1));
    case K::ACosMinus: return Algebra(cos_family_tensor(*label.parameter(), -1));
  }
  throw std::logic_error("unhandled flow class");
}

int BekbaevForm::param_count(int family) {
  static constexpr std::array<int, 15> counts{4, 3, 3, 2, 2, 1, 2, 2, 1, 1, 0, 0, 0, 0, 0};
  if (family < 1 || family > 15) {
    throw std::invalid_argument("canonical family must be in 1..15, got " + std::to_string(family));
  }
  return counts[static_cast<std::size_t>(family - 1)];
}

BekbaevForm::BekbaevForm(int family, std::vector<double> params) : family_(family), params_(std::move(params)) {
  const int expected = param_count(family);
  if (static_cast<int>(params_.size()) != expected) {
    throw std::invalid_argument("family " + std::to_string(family) + " takes " + std::to_string(expected) +
                                " parameters, got " + std::to_string(params_.size()));
  }
  for (double p : params_) {
    if (!std::isfinite(p)) throw std::invalid_argument("canonical form parameters must be finite");
  }
  const bool needs_nonneg_b1 = family == 2 || family == 3 || family == 7 || family == 8;
  if (needs_nonneg_b1 && params_[1] < 0.0) {
    throw std::invalid_argument("family " + std::to_string(family) + " requires b1 >= 0");
  }
}

StructMatrix2x4 bekbaev_matrix(const BekbaevForm& form) {
  const auto& p = form.params();
  StructMatrix2x4 m;
  switch (form.family()) {
    case 1: {
      const double a1 = p[0], a2 = p[1], a4 = p[2], b1 = p[3];
      m << a1, a2, a2 + 1, a4, b1, -a1, -a1 + 1, -a2;
      break;
    }
    case 2: m << p[0], 0, 0, 1, p[1], p[2], 1 - p[0], 0; break;
    case 3: m << p[0], 0, 0, -1, p[1], p[2], 1 - p[0], 0; break;
    case 4: m << 0, 1, 1, 0, p[0], p[1], 1, -1; break;
    case 5: m << p[0], 0, 0, 0, 0, p[1], 1 - p[0], 0; break;
    case 6: m << p[0], 0, 0, 0, 1, 2 * p[0] - 1, 1 - p[0], 0; break;
    case 7: m << p[0], 0, 0, 1, p[1], 1 - p[0], -p[0], 0; break;
    case 8: m << p[0], 0, 0, -1, p[1], 1 - p[0], -p[0], 0; break;
    case 9: m << 0, 1, 1, 0, p[0], 1, 0, -1; break;
    case 10: m << p[0], 0, 0, 0, 0, 1 - p[0], -p[0], 0; break;
    case 11: m << 1.0 / 3, 0, 0, 0, 1, 2.0 / 3, -1.0 / 3, 0; break;
    case 12: m << 0, 1, 1, 0, 1, 0, 0, -1; break;
    case 13: m << 0, 1, 1, 0, -1, 0, 0, -1; break;
    case 14: m << 0, 1, 1, 0, 0, 0, 0, -1; break;
    case 15: m << 0, 0, 0, 0, 1, 0, 0, 0; break;
    default: throw std::logic_error("unhandled canonical family");
  }
  return m;
}

BasisChange cos_branch_basis_change(double cos_t, double sin_t) {
  if (cos_t == 0.0 || sin_t == 0.0) {
    throw std::invalid_argument("cos_branch_basis_change needs cos t != 0 and sin t != 0");
  }
  const double a = 1.0 / (4.0 * cos_t);
  const double b = 1.0 / (2.0 * std::sqrt(std::abs(2.0 * sin_t * cos_t)));
  return BasisChange::from_rows(a, a, b, -b);
}

BekbaevReduction to_bekbaev(const FlowClassLabel& label) {
  using K = FlowClassLabel::Kind;
  std::optional<BekbaevForm> form;
  std::optional<BasisChange> p;
  switch (label.kind()) {
    case K::A1:
      form.emplace(5, std::vector<double>{0.5, 0.0});
      p.emplace(BasisChange::from_rows(0.5, 0.0, -1.0, 1.0));
      break;
    case K::A0Plus:
      form.emplace(8, std::vector<double>{0.0, 0.0});
      p.emplace(BasisChange::from_rows(-0.5, -0.5, 0.5, -0.5));
      break;
    case K::A2:
      form.emplace(3, std::vector<double>{0.5, 0.0, 0.5});
      p.emplace(cos_branch_basis_change(std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2));
      break;
    case K::ACosPlus: {
      const double c = *label.parameter();
      const double s = std::sqrt(1.0 - c * c);
      form.emplace(2, std::vector<double>{0.5, 0.0, -s / (2.0 * c)});
      p.emplace(cos_branch_basis_change(c, s));
      break;
    }
    case K::ACosMinus: {
      const double c = *label.parameter();
      const double s = std::sqrt(1.0 - c * c);
      form.emplace(3, std::vector<double>{0.5, 0.0, s / (2.0 * c)});
      p.emplace(cos_branch_basis_change(c, -s));
      break;
    }
  }
  const double residual = iso_residual(class_representative(label), from_2x4(bekbaev_matrix(*form)), *p);
  if (!(residual <= kReductionTol)) {
    throw std::logic_error("canonical reduction of " + label.to_string() +
                           " failed verification, residual = " + std::to_string(residual));
  }
  return {std::move(*form), std::move(*p), residual};
}

std::vector<std::pair<FlowClassLabel, bool>> associativity_census() {
  std::vector<FlowClassLabel> labels{FlowClassLabel::a1(), FlowClassLabel::a0_plus(), FlowClassLabel::a2()};
  for (int n = 1; n <= 9; ++n) labels.push_back(FlowClassLabel::cos_plus(n / 10.0));
  for (int n = 1; n <= 9; ++n) labels.push_back(FlowClassLabel::cos_minus(n / 10.0));

  std::vector<std::pair<FlowClassLabel, bool>> out;
  out.reserve(labels.size());
  for (const auto& label : labels) out.emplace_back(label, is_associative(class_representative(label)));
  return out;
}

TimeCanonicalization canonicalize_time(double t, double tol) {
  FlowClassLabel label = classify_time(t, tol);
  Algebra rep = class_representative(label);
  const Algebra flow = flow_algebra(t);

  // The flow algebra equals the representative up to a global sign.
  BasisChange plus = BasisChange::identity(2);
  BasisChange minus = BasisChange::from_rows(-1.0, 0.0, 0.0, -1.0);
  const bool use_plus = iso_residual(flow, rep, plus) <= iso_residual(flow, rep, minus);
  BasisChange to_rep = use_plus ? plus : minus;

  BekbaevReduction reduction = to_bekbaev(label);
  BasisChange total = to_rep.then(reduction.basis_change);
  const double residual = iso_residual(flow, from_2x4(bekbaev_matrix(reduction.form)), total);
  return {t, std::move(label), std::move(rep), std::move(to_rep), std::move(reduction), std::move(total), residual};
}

}  // namespace algflow

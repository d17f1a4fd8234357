#include "algflow/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "algflow/algebra.hpp"
#include "algflow/classification.hpp"
#include "algflow/cubic_tensor.hpp"
#include "algflow/flow.hpp"
#include "algflow/isomorphism.hpp"

namespace algflow::acceptance {

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

double tol_or(const Options& o, double fallback) { return o.tol_override.value_or(fallback); }

CubicTensor random_tensor(std::mt19937_64& rng, int m) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> e(static_cast<std::size_t>(m) * m * m);
  for (double& x : e) x = u(rng);
  return CubicTensor(m, std::move(e));
}

// 1. Kolmogorov-Chapman equation for the rotation flow.
Outcome check_kce(const Options& o) {
  const double tol = tol_or(o, 1e-12);
  const FlowFamily rot = FlowFamily::rotation();
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  double worst = 0.0;
  int n = 0;
  const auto t0 = std::chrono::steady_clock::now();
  while (n < 1000) {
    std::array<double, 3> x{u(rng), u(rng), u(rng)};
    std::sort(x.begin(), x.end());
    if (!(x[0] < x[1] && x[1] < x[2])) continue;
    worst = std::max(worst, verify_kce(rot, x[0], x[1], x[2]));
    ++n;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst < tol && secs < 1.0, "max residual " + sci(worst) + " (< " + sci(tol) + "), " + sci(secs) + " s (< 1 s)"};
}

// 2. Commutative locus d = 3pi/4 + pi n on [0, 4pi].
Outcome check_commutative_locus(const Options& o) {
  const double tol = tol_or(o, kDefaultLocusTol);
  std::vector<double> grid;
  for (int i = 0; i < 10000; ++i) grid.push_back(4 * kPi * i / 9999.0);
  for (int n = 0; n < 4; ++n) grid.push_back(3 * kPi / 4 + n * kPi);

  int mismatches = 0;
  int on_locus = 0;
  for (double d : grid) {
    const double nearest = 3 * kPi / 4 + kPi * std::round((d - 3 * kPi / 4) / kPi);
    const bool near_locus = std::abs(d - nearest) <= 1e-9;
    const bool comm = is_commutative(flow_algebra(d), tol);
    on_locus += comm;
    if (comm != near_locus || comm != (std::abs(commutativity_defect(d)) <= tol)) ++mismatches;
  }
  return {mismatches == 0 && on_locus == 4,
          std::to_string(grid.size()) + " points, " + std::to_string(on_locus) + " commutative, " +
              std::to_string(mismatches) + " mismatches"};
}

// 3. A+_c and A-_{-c} differ by e_i -> -e_i.
Outcome check_sign_flip(const Options& o) {
  const double tol = tol_or(o, 1e-12);
  const BasisChange minus = BasisChange::from_rows(-1, 0, 0, -1);
  double worst = 0.0;
  for (int n = 1; n <= 9; ++n) {
    const double c = n / 10.0;
    const Algebra plus(cos_family_tensor(c, +1));
    const Algebra flipped(cos_family_tensor(-c, -1));
    worst = std::max(worst, iso_residual(plus, flipped, minus));
  }
  return {worst <= tol, "max residual " + sci(worst) + " (<= " + sci(tol) + ")"};
}

// 4. Isomorphism iff sin(t2 - t1) = 0, and classification agrees.
Outcome check_iso_grid(const Options&) {
  constexpr double locus = 1e-9;
  constexpr double band = 1e-6;
  int checked = 0, iso = 0, bad_iso = 0, bad_class = 0, skipped = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 50; ++j) {
      const double t1 = 2 * kPi * i / 50.0;
      const double t2 = 2 * kPi * j / 50.0;
      const double sn = std::abs(std::sin(t2 - t1));
      if (sn > locus && sn < band) {
        ++skipped;
        continue;
      }
      const bool expected = sn <= locus;
      const bool got = rotation_iso(t1, t2).is_isomorphic();
      const bool same = classify_time(t1).same_class(classify_time(t2), 1e-9);
      bad_iso += got != expected;
      bad_class += same != got;
      iso += got;
      ++checked;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {bad_iso == 0 && bad_class == 0 && secs < 5.0,
          std::to_string(checked) + " pairs (" + std::to_string(iso) + " isomorphic, " + std::to_string(skipped) +
              " in band), " + std::to_string(bad_iso) + " verdict and " + std::to_string(bad_class) +
              " label mismatches, " + sci(secs) + " s (< 5 s)"};
}

// 5. Explicit reductions to the canonical families.
Outcome check_canonical_forms(const Options& o) {
  const double tol_plus = tol_or(o, 1e-12);
  const double tol_minus = tol_or(o, 1e-10);
  double worst_plus = 0.0;
  for (int n = 0; n < 50; ++n) {
    const double t = 0.05 + (kPi / 2 - 0.1) * (n + 1) / 51.0;
    const double c = std::cos(t), s = std::sin(t);
    const StructMatrix2x4 got = to_2x4(change_of_basis(flow_algebra(t), cos_branch_basis_change(c, s)));
    StructMatrix2x4 want;
    want << 0.5, 0, 0, 1, 0, -s / (2 * c), 0.5, 0;
    worst_plus = std::max(worst_plus, (got - want).cwiseAbs().maxCoeff());
  }

  double worst_minus = 0.0;
  bool minus_params_ok = true;
  for (int n = 0; n < 50; ++n) {
    const double t = kPi / 2 + 0.05 + (kPi / 2 - 0.1) * (n + 1) / 51.0;
    const FlowClassLabel label = classify_time(t);
    if (label.kind() != FlowClassLabel::Kind::ACosMinus) continue;
    const TimeCanonicalization canon = canonicalize_time(t);
    const double c = *label.parameter();
    const auto& p = canon.reduction.form.params();
    minus_params_ok = minus_params_ok && canon.reduction.form.family() == 3 && p[0] == 0.5 && p[1] == 0.0 &&
                      std::abs(p[2] - std::sqrt(1 - c * c) / (2 * c)) <= 1e-12;
    worst_minus = std::max({worst_minus, canon.reduction.residual, canon.residual});
  }

  const StructMatrix2x4 a1 =
      to_2x4(change_of_basis(class_representative(FlowClassLabel::a1()), BasisChange::from_rows(0.5, 0, -1, 1)));
  const StructMatrix2x4 a0 = to_2x4(
      change_of_basis(class_representative(FlowClassLabel::a0_plus()), BasisChange::from_rows(-0.5, -0.5, 0.5, -0.5)));
  const bool exact = a1 == bekbaev_matrix(BekbaevForm(5, {0.5, 0.0})) && a0 == bekbaev_matrix(BekbaevForm(8, {0.0, 0.0}));

  return {worst_plus < tol_plus && worst_minus <= tol_minus && minus_params_ok && exact,
          "plus branch max error " + sci(worst_plus) + " (< " + sci(tol_plus) + "), minus branch residual " +
              sci(worst_minus) + " (<= " + sci(tol_minus) + "), A1/A0Plus exact: " + (exact ? "yes" : "no")};
}

// 6. Only A1 and A2 are associative.
Outcome check_associativity(const Options&) {
  using K = FlowClassLabel::Kind;
  int wrong = 0;
  std::string assoc_names;
  for (const auto& [label, assoc] : associativity_census()) {
    const bool expected = label.kind() == K::A1 || label.kind() == K::A2;
    wrong += assoc != expected;
    if (assoc) assoc_names += (assoc_names.empty() ? "" : ",") + std::string(label.name());
  }
  const double r = associativity_residual(class_representative(FlowClassLabel::cos_plus(0.5)));
  return {wrong == 0 && r > 0.1, "associative: {" + assoc_names + "}, ACosPlus(0.5) residual " + sci(r) + " (> 0.1)"};
}

// 7. A0Plus is not isomorphic to A1.
Outcome check_a0plus_vs_a1(const Options&) {
  const Algebra a0 = class_representative(FlowClassLabel::a0_plus());
  const Algebra a1 = class_representative(FlowClassLabel::a1());
  const InvariantSignature s0 = invariant_signature(a0);
  const InvariantSignature s1 = invariant_signature(a1);
  const IsoVerdict v = iso_search(a0, a1);
  const bool ok = !s0.associative && s1.associative && v.kind == VerdictKind::NotFoundWithinBudget;
  return {ok, "A0Plus associative=" + std::string(s0.associative ? "true" : "false") +
                  ", A1 associative=" + (s1.associative ? "true" : "false") + ", search: " +
                  std::string(to_string(v.kind))};
}

// 8. Basis-change formula against products re-expressed through a 2x2 solve.
Outcome check_basis_change_oracle(const Options& o) {
  const double tol = tol_or(o, 1e-10);
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const Algebra a(random_tensor(rng, 2));
    double x1, x2, y1, y2, det;
    do {
      x1 = u(rng), x2 = u(rng), y1 = u(rng), y2 = u(rng);
      det = x1 * y2 - x2 * y1;
    } while (std::abs(det) < 0.5 || std::abs(det) > 2.0);
    const BasisChange p = BasisChange::from_rows(x1, x2, y1, y2);
    const Algebra fast = change_of_basis(a, p);

    const std::array<Vector, 2> rows{Vector{{x1, x2}}, Vector{{y1, y2}}};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Vector z = a.product(rows[i], rows[j]);
        // z = w_0 e'_0 + w_1 e'_1 in old coordinates: P^T w = z, by Cramer's rule.
        const double w0 = (z(0) * y2 - y1 * z(1)) / det;
        const double w1 = (x1 * z(1) - z(0) * x2) / det;
        worst = std::max({worst, std::abs(fast.constants()(i, j, 0) - w0), std::abs(fast.constants()(i, j, 1) - w1)});
      }
  }
  return {worst < tol, "500 trials, max difference " + sci(worst) + " (< " + sci(tol) + ")"};
}

// 9. Type-C product associativity.
Outcome check_type_c_associativity(const Options& o) {
  const double tol = tol_or(o, 1e-12);
  std::mt19937_64 rng(909);
  std::uniform_int_distribution<int> dim(1, 4);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = dim(rng);
    const CubicTensor a = random_tensor(rng, m), b = random_tensor(rng, m), c = random_tensor(rng, m);
    worst = std::max(worst, max_abs_diff(mul_type_c(mul_type_c(a, b), c), mul_type_c(a, mul_type_c(b, c))));
  }
  return {worst < tol, "1000 triples, max |(AB)C - A(BC)| = " + sci(worst) + " (< " + sci(tol) + ")"};
}

struct Entry {
  const char* name;
  const char* title;
  Outcome (*fn)(const Options&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {"kce", "Kolmogorov-Chapman equation, 1000 random triples", check_kce},
      {"commutative_locus", "commutativity exactly on 3pi/4 + pi n", check_commutative_locus},
      {"sign_flip", "A+_c ~ A-_{-c} via -I", check_sign_flip},
      {"iso_grid", "isomorphism iff sin(t2 - t1) = 0; labels agree", check_iso_grid},
      {"canonical_forms", "reductions to canonical families", check_canonical_forms},
      {"associativity", "only A1 and A2 associative", check_associativity},
      {"a0plus_vs_a1", "A0Plus not isomorphic to A1", check_a0plus_vs_a1},
      {"basis_change_oracle", "basis change vs brute-force re-derivation", check_basis_change_oracle},
      {"type_c_associativity", "type-C product associativity", check_type_c_associativity},
  };
  return entries;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& e : registry()) names.emplace_back(e.name);
  return names;
}

CheckResult run_check(const std::string& name, const Options& opts) {
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const Entry& e) { return name == e.name; });
  if (it == reg.end()) throw std::invalid_argument("unknown acceptance check '" + name + "'");

  CheckResult r;
  r.name = name;
  r.title = it->title;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Outcome out = it->fn(opts);
    r.passed = out.passed;
    r.detail = out.detail;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& only, const Options& opts) {
  std::vector<CheckResult> out;
  for (const auto& name : only.empty() ? check_names() : only) out.push_back(run_check(name, opts));
  return out;
}

}  // namespace algflow::acceptance

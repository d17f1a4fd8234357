#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algflow/algebra.hpp"
#include "algflow/flow.hpp"

namespace algflow {

enum class VerdictKind {
  Isomorphic,
  NotIsomorphicExact,
  SeparatedByInvariant,
  /// The numeric search ran out of budget. Not a proof of non-isomorphism.
  NotFoundWithinBudget,
};

std::string_view to_string(VerdictKind kind);

/// Outcome of an isomorphism test. An Isomorphic verdict always carries a
/// certificate P with change_of_basis(A, P) == B up to `residual`.
struct IsoVerdict {
  VerdictKind kind = VerdictKind::NotFoundWithinBudget;
  std::optional<BasisChange> certificate;
  /// Certificate residual for Isomorphic; best residual reached for NotFoundWithinBudget.
  std::optional<double> residual;
  /// Violated condition (NotIsomorphicExact) or invariant name (SeparatedByInvariant).
  std::string reason;
  /// Case-analysis notes for debugging.
  std::vector<std::string> trace;

  bool is_isomorphic() const noexcept { return kind == VerdictKind::Isomorphic; }

  static IsoVerdict isomorphic(BasisChange certificate, double residual);
  static IsoVerdict not_isomorphic(std::string reason);
  static IsoVerdict separated_by(std::string invariant);
  static IsoVerdict not_found(double best_residual);
};

inline constexpr std::uint64_t kDefaultSearchSeed = 0x5eed2024;

struct SearchConfig {
  int restarts = 64;
  int max_iterations = 200;
  double tol = 1e-9;
  std::uint64_t seed = kDefaultSearchSeed;
  double det_epsilon = kDefaultDetEpsilon;

  /// Throws std::invalid_argument on restarts < 1, max_iterations < 1 or tol <= 0.
  void validate() const;
};

/// max_{ijk} |change_of_basis(a, p) - b|; zero iff p maps a onto b.
double iso_residual(const Algebra& a, const Algebra& b, const BasisChange& p);

/// Multi-start Levenberg-Marquardt search for a basis change taking `a` to
/// `b` (both 2-dimensional). Returns Isomorphic with a verified certificate
/// or NotFoundWithinBudget; never claims non-isomorphism.
IsoVerdict iso_search(const Algebra& a, const Algebra& b, const SearchConfig& cfg = {});

/// Exact decision for the rotation flow: A^[t1] ~ A^[t2] iff sin(t2 - t1) = 0
/// (within `tol`). Certificates are verified against 2 * tol. Throws
/// std::invalid_argument for negative times.
IsoVerdict rotation_iso(double t1, double t2, double tol = kDefaultLocusTol);

struct InvariantSignature {
  bool commutative = false;
  bool associative = false;
  int rank_2x4 = 0;

  bool operator==(const InvariantSignature&) const = default;
};

InvariantSignature invariant_signature(const Algebra& a, double tol = kDefaultPredicateTol);

/// Name of the first invariant on which the signatures differ, if any.
std::optional<std::string> separating_invariant(const InvariantSignature& a, const InvariantSignature& b);

/// Invariant separation first, then iso_search.
IsoVerdict decide_isomorphism(const Algebra& a, const Algebra& b, const SearchConfig& cfg = {});

namespace detail {

/// The 8 residuals of change_of_basis(a, P) - b, ordered (i, j, k).
Vector transform_residuals(const Algebra& a, const Algebra& b, const Matrix& p);

/// Analytic 8x4 Jacobian of transform_residuals with respect to the
/// row-major entries of P.
Matrix transform_jacobian(const Algebra& a, const Matrix& p);

}  // namespace detail

}  // namespace algflow

#include "algflow/isomorphism.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace algflow {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Isomorphic: return "Isomorphic";
    case VerdictKind::NotIsomorphicExact: return "NotIsomorphicExact";
    case VerdictKind::SeparatedByInvariant: return "SeparatedByInvariant";
    case VerdictKind::NotFoundWithinBudget: return "NotFoundWithinBudget";
  }
  return "Unknown";
}

IsoVerdict IsoVerdict::isomorphic(BasisChange certificate, double residual) {
  IsoVerdict v;
  v.kind = VerdictKind::Isomorphic;
  v.certificate = std::move(certificate);
  v.residual = residual;
  return v;
}

IsoVerdict IsoVerdict::not_isomorphic(std::string reason) {
  IsoVerdict v;
  v.kind = VerdictKind::NotIsomorphicExact;
  v.reason = std::move(reason);
  return v;
}

IsoVerdict IsoVerdict::separated_by(std::string invariant) {
  IsoVerdict v;
  v.kind = VerdictKind::SeparatedByInvariant;
  v.reason = std::move(invariant);
  return v;
}

IsoVerdict IsoVerdict::not_found(double best_residual) {
  IsoVerdict v;
  v.kind = VerdictKind::NotFoundWithinBudget;
  if (std::isfinite(best_residual)) v.residual = best_residual;
  return v;
}

void SearchConfig::validate() const {
  if (restarts < 1) throw std::invalid_argument("search config: restarts must be >= 1");
  if (max_iterations < 1) throw std::invalid_argument("search config: max_iterations must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("search config: tol must be > 0");
  if (!(det_epsilon >= 0.0)) throw std::invalid_argument("search config: det_epsilon must be >= 0");
}

namespace {

void require_dim2(const Algebra& a, const Algebra& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw std::invalid_argument("isomorphism testing is implemented for 2-dimensional algebras only");
  }
}

double det2(const Matrix& p) { return p(0, 0) * p(1, 1) - p(0, 1) * p(1, 0); }

Matrix inverse2(const Matrix& p) {
  const double d = det2(p);
  Matrix q(2, 2);
  q << p(1, 1) / d, -p(0, 1) / d, -p(1, 0) / d, p(0, 0) / d;
  return q;
}

// Transformed constants c'_ijk for a raw (possibly ill-conditioned) 2x2 matrix.
CubicTensor transformed(const CubicTensor& c, const Matrix& p, const Matrix& q) {
  CubicTensor w(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < 2; ++r) {
        double s = 0.0;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) s += p(i, a) * p(j, b) * c(a, b, r);
        w(i, j, r) = s;
      }
  CubicTensor out(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out(i, j, k) = w(i, j, 0) * q(0, k) + w(i, j, 1) * q(1, k);
  return out;
}

struct Attempt {
  Matrix p;
  double cost;
};

// One damped Gauss-Newton descent on 0.5 * |r(P)|^2.
Attempt descend(const Algebra& a, const Algebra& b, Matrix p, const SearchConfig& cfg) {
  Vector r = detail::transform_residuals(a, b, p);
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  const double stop = 1e-6 * cfg.tol * cfg.tol;

  for (int it = 0; it < cfg.max_iterations && cost > stop; ++it) {
    const Matrix jac = detail::transform_jacobian(a, p);
    const Eigen::Matrix4d h = jac.transpose() * jac;
    const Eigen::Vector4d g = jac.transpose() * r;

    bool accepted = false;
    while (lambda < 1e12) {
      const Eigen::Matrix4d damped = h + lambda * Eigen::Matrix4d::Identity();
      const Eigen::Vector4d step = damped.ldlt().solve(-g);
      Matrix trial = p;
      trial(0, 0) += step(0);
      trial(0, 1) += step(1);
      trial(1, 0) += step(2);
      trial(1, 1) += step(3);
      if (std::abs(det2(trial)) > cfg.det_epsilon) {
        const Vector tr = detail::transform_residuals(a, b, trial);
        const double tc = tr.squaredNorm();
        if (std::isfinite(tc) && tc < cost) {
          p = std::move(trial);
          r = tr;
          cost = tc;
          lambda = std::max(lambda / 10.0, 1e-15);
          accepted = true;
          break;
        }
      }
      lambda *= 10.0;
    }
    if (!accepted) break;
  }
  return {std::move(p), cost};
}

void check_certificate(const IsoVerdict& v, double tol, double det_epsilon) {
  if (!v.is_isomorphic()) return;
  if (!v.certificate || !v.residual || *v.residual > tol || !(std::abs(v.certificate->determinant()) > det_epsilon)) {
    throw std::logic_error("isomorphism certificate failed verification");
  }
}

std::string fmt_uvab(const BasisChange& p) {
  std::ostringstream os;
  os.precision(17);
  os << "u=" << p.u() << " v=" << p.v() << " alpha=" << p.alpha() << " beta=" << p.beta();
  return os.str();
}

}  // namespace

namespace detail {

Vector transform_residuals(const Algebra& a, const Algebra& b, const Matrix& p) {
  const CubicTensor t = transformed(a.constants(), p, inverse2(p));
  Vector r(8);
  for (int n = 0; n < 8; ++n) r(n) = t.entries()[n] - b.constants().entries()[n];
  return r;
}

Matrix transform_jacobian(const Algebra& a, const Matrix& p) {
  const CubicTensor& c = a.constants();
  const Matrix q = inverse2(p);
  const CubicTensor cp = transformed(c, p, q);
  Matrix jac = Matrix::Zero(8, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const int row = (i * 2 + j) * 2 + k;
        for (int m = 0; m < 2; ++m)
          for (int n = 0; n < 2; ++n) {
            double d = 0.0;
            // d/dP_mn of P_ip P_jq c_pqr Q_rk, using dQ = -Q dP Q.
            for (int x = 0; x < 2; ++x)
              for (int r = 0; r < 2; ++r) {
                if (i == m) d += p(j, x) * c(n, x, r) * q(r, k);
                if (j == m) d += p(i, x) * c(x, n, r) * q(r, k);
              }
            d -= cp(i, j, m) * q(n, k);
            jac(row, m * 2 + n) = d;
          }
      }
  return jac;
}

}  // namespace detail

double iso_residual(const Algebra& a, const Algebra& b, const BasisChange& p) {
  if (a.dim() != b.dim() || p.dim() != a.dim()) throw std::invalid_argument("iso_residual: dimension mismatch");
  return max_abs_diff(change_of_basis(a, p).constants(), b.constants());
}

IsoVerdict iso_search(const Algebra& a, const Algebra& b, const SearchConfig& cfg) {
  require_dim2(a, b);
  cfg.validate();

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  double best = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    Matrix start(2, 2);
    do {
      for (int n = 0; n < 4; ++n) start(n / 2, n % 2) = entry(rng);
    } while (!(std::abs(det2(start)) > cfg.det_epsilon));

    const Attempt found = descend(a, b, std::move(start), cfg);
    if (!(std::abs(det2(found.p)) > cfg.det_epsilon)) continue;
    BasisChange cert(found.p, cfg.det_epsilon);
    const double res = iso_residual(a, b, cert);
    if (res <= cfg.tol) {
      IsoVerdict v = IsoVerdict::isomorphic(std::move(cert), res);
      v.trace.push_back("restart " + std::to_string(restart));
      check_certificate(v, cfg.tol, cfg.det_epsilon);
      return v;
    }
    best = std::min(best, res);
  }
  return IsoVerdict::not_found(best);
}

IsoVerdict rotation_iso(double t1, double t2, double tol) {
  if (!(t1 >= 0.0) || !(t2 >= 0.0)) throw std::invalid_argument("rotation_iso: times must be non-negative");
  if (!(tol > 0.0)) throw std::invalid_argument("rotation_iso: tol must be > 0");

  const double s1 = std::sin(t1), c1 = std::cos(t1);
  const double s2 = std::sin(t2), c2 = std::cos(t2);
  const double shift = std::sin(t2 - t1);

  if (std::abs(shift) > tol) {
    const bool comm1 = std::abs(c1 + s1) <= tol;
    const bool comm2 = std::abs(c2 + s2) <= tol;
    const bool sin1 = std::abs(s1) <= tol;
    const bool sin2 = std::abs(s2) <= tol;
    const bool cos1 = std::abs(c1) <= tol;
    const bool cos2 = std::abs(c2) <= tol;
    if (comm1 != comm2) return IsoVerdict::not_isomorphic("commutative at only one of the two times");
    if (sin1 != sin2) return IsoVerdict::not_isomorphic("sin t vanishes at only one of the two times");
    if (cos1 != cos2) return IsoVerdict::not_isomorphic("cos t vanishes at only one of the two times");
    return IsoVerdict::not_isomorphic("sin(t2 - t1) != 0");
  }

  const double cert_tol = 2.0 * tol;
  const Algebra a = flow_algebra(t1);
  const Algebra b = flow_algebra(t2);
  const long long half_turns = std::llround((t2 - t1) / std::numbers::pi);
  const double sign = (half_turns % 2 == 0) ? 1.0 : -1.0;

  std::vector<std::string> trace;
  std::optional<BasisChange> cert;
  if (std::abs(s1) <= tol) {
    // x1 = gamma, x2 = sign - gamma, y1 = mu, y2 = sign - mu with gamma != mu.
    constexpr double gamma = 2.0, mu = 1.0;
    cert = BasisChange::from_rows(gamma, sign - gamma, mu, sign - mu);
    trace.push_back("sin t1 = 0: row sums equal " + std::to_string(static_cast<int>(sign)));
  } else if (std::abs(c1) <= tol) {
    const double ratio = s2 / s1;
    cert = BasisChange::from_rows(ratio, 0.0, 0.0, ratio);
    trace.push_back("cos t1 = 0: x1 = y2 = sin t2 / sin t1");
  } else {
    const double ratio = c2 / c1;
    cert = BasisChange::from_rows(ratio, 0.0, 0.0, ratio);
    trace.push_back("generic: x1 = y2 = cos t2 / cos t1");
  }

  double res = iso_residual(a, b, *cert);
  if (res > cert_tol) {
    trace.push_back("closed-form certificate residual " + std::to_string(res) + ", falling back to sign * I");
    cert = BasisChange::from_rows(sign, 0.0, 0.0, sign);
    res = iso_residual(a, b, *cert);
  }
  trace.push_back(fmt_uvab(*cert));

  IsoVerdict v = IsoVerdict::isomorphic(std::move(*cert), res);
  v.trace = std::move(trace);
  check_certificate(v, cert_tol, kDefaultDetEpsilon);
  return v;
}

InvariantSignature invariant_signature(const Algebra& a, double tol) {
  if (a.dim() != 2) throw std::invalid_argument("invariant_signature requires a 2-dimensional algebra");
  return {is_commutative(a, tol), is_associative(a, tol), rank_2x4(a)};
}

std::optional<std::string> separating_invariant(const InvariantSignature& a, const InvariantSignature& b) {
  if (a.commutative != b.commutative) return "commutative";
  if (a.associative != b.associative) return "associative";
  if (a.rank_2x4 != b.rank_2x4) return "rank_2x4";
  return std::nullopt;
}

IsoVerdict decide_isomorphism(const Algebra& a, const Algebra& b, const SearchConfig& cfg) {
  require_dim2(a, b);
  if (auto name = separating_invariant(invariant_signature(a), invariant_signature(b))) {
    return IsoVerdict::separated_by(std::move(*name));
  }
  return iso_search(a, b, cfg);
}

}  // namespace algflow

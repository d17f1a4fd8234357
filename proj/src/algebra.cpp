#include "algflow/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace algflow {

Vector Algebra::product(const Vector& x, const Vector& y) const {
  const int m = dim();
  if (x.size() != m || y.size() != m) {
    throw std::invalid_argument("product: vector length must equal the algebra dimension " + std::to_string(m));
  }
  Vector z = Vector::Zero(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double w = x(i) * y(j);
      if (w == 0.0) continue;
      for (int k = 0; k < m; ++k) z(k) += w * constants_(i, j, k);
    }
  return z;
}

BasisChange::BasisChange(Matrix p, double det_epsilon) : p_(std::move(p)) {
  if (p_.rows() != p_.cols() || p_.rows() < 1) {
    throw std::invalid_argument("basis change must be a non-empty square matrix");
  }
  if (!p_.allFinite()) throw std::invalid_argument("basis change entries must be finite");
  if (p_.rows() == 2) {
    det_ = p_(0, 0) * p_(1, 1) - p_(0, 1) * p_(1, 0);
  } else {
    det_ = p_.determinant();
  }
  if (!(std::abs(det_) > det_epsilon)) {
    throw std::domain_error("basis change is singular: |det| = " + std::to_string(std::abs(det_)));
  }
  if (p_.rows() == 2) {
    inv_.resize(2, 2);
    inv_ << p_(1, 1) / det_, -p_(0, 1) / det_, -p_(1, 0) / det_, p_(0, 0) / det_;
  } else {
    inv_ = p_.fullPivLu().inverse();
  }
}

BasisChange BasisChange::from_rows(double x1, double x2, double y1, double y2, double det_epsilon) {
  Matrix p(2, 2);
  p << x1, x2, y1, y2;
  return BasisChange(std::move(p), det_epsilon);
}

BasisChange BasisChange::then(const BasisChange& next) const {
  if (next.dim() != dim()) throw std::invalid_argument("basis change composition: dimension mismatch");
  return BasisChange(next.p_ * p_, 0.0);
}

double BasisChange::p2(int r, int c) const {
  if (dim() != 2) throw std::logic_error("u/v/alpha/beta are defined for 2x2 basis changes only");
  return p_(r, c);
}

double commutativity_residual(const Algebra& a) {
  const auto& c = a.constants();
  const int m = a.dim();
  double worst = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = 0; k < m; ++k) worst = std::max(worst, std::abs(c(i, j, k) - c(j, i, k)));
  return worst;
}

bool is_commutative(const Algebra& a, double tol) { return commutativity_residual(a) <= tol; }

double associativity_residual(const Algebra& a) {
  const auto& c = a.constants();
  const int m = a.dim();
  double worst = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          double lhs = 0.0;
          double rhs = 0.0;
          for (int r = 0; r < m; ++r) {
            lhs += c(i, j, r) * c(r, k, l);
            rhs += c(i, r, l) * c(j, k, r);
          }
          worst = std::max(worst, std::abs(lhs - rhs));
        }
  return worst;
}

bool is_associative(const Algebra& a, double tol) { return associativity_residual(a) <= tol; }

Algebra change_of_basis(const Algebra& a, const BasisChange& p) {
  const int m = a.dim();
  if (p.dim() != m) throw std::invalid_argument("change_of_basis: basis change dimension mismatch");
  const auto& c = a.constants();
  const Matrix& P = p.matrix();
  const Matrix& Q = p.inverse();

  // Contract one index at a time: w_ijr = sum_{p,q} P_ip P_jq c_pqr, then c'_ijk = sum_r w_ijr Q_rk.
  CubicTensor first(m);
  for (int i = 0; i < m; ++i)
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < m; ++r) {
        double s = 0.0;
        for (int pp = 0; pp < m; ++pp) s += P(i, pp) * c(pp, q, r);
        first(i, q, r) = s;
      }
  CubicTensor second(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int r = 0; r < m; ++r) {
        double s = 0.0;
        for (int q = 0; q < m; ++q) s += P(j, q) * first(i, q, r);
        second(i, j, r) = s;
      }
  CubicTensor out(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        double s = 0.0;
        for (int r = 0; r < m; ++r) s += second(i, j, r) * Q(r, k);
        out(i, j, k) = s;
      }
  return Algebra(std::move(out));
}

StructMatrix2x4 to_2x4(const Algebra& a) {
  if (a.dim() != 2) throw std::invalid_argument("to_2x4 requires a 2-dimensional algebra");
  const auto& c = a.constants();
  StructMatrix2x4 m;
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(k, 2 * i + j) = c(i, j, k);
  return m;
}

Algebra from_2x4(const StructMatrix2x4& m) {
  CubicTensor c(2);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) c(i, j, k) = m(k, 2 * i + j);
  if (!m.allFinite()) throw std::invalid_argument("from_2x4: entries must be finite");
  return Algebra(std::move(c));
}

int rank_2x4(const Algebra& a, double threshold) {
  const StructMatrix2x4 m = to_2x4(a);
  const Eigen::JacobiSVD<Matrix> svd{Matrix(m)};
  const auto& sv = svd.singularValues();
  return static_cast<int>(std::count_if(sv.data(), sv.data() + sv.size(), [&](double s) { return s > threshold; }));
}

}  // namespace algflow

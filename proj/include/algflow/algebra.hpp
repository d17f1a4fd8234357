#pragma once

#include <optional>

#include "algflow/cubic_tensor.hpp"

namespace algflow {

/// Default absolute tolerance of the commutativity and associativity predicates.
inline constexpr double kDefaultPredicateTol = 1e-9;

/// Default lower bound on |det P| for a basis change.
inline constexpr double kDefaultDetEpsilon = 1e-10;

/// Structure constants of a 2-dimensional algebra as a 2x4 matrix. Row k
/// holds c_{ijk} with columns (i,j) = (0,0), (0,1), (1,0), (1,1).
using StructMatrix2x4 = Eigen::Matrix<double, 2, 4>;

/// A finite-dimensional real algebra with basis e_0..e_{m-1} and
/// multiplication e_i e_j = sum_k c_ijk e_k.
class Algebra {
 public:
  explicit Algebra(CubicTensor constants) : constants_(std::move(constants)) {}

  int dim() const noexcept { return constants_.dim(); }
  const CubicTensor& constants() const noexcept { return constants_; }

  /// z_k = sum_{i,j} x_i y_j c_ijk
  Vector product(const Vector& x, const Vector& y) const;

  bool operator==(const Algebra&) const = default;

 private:
  CubicTensor constants_;
};

/// An invertible change of basis. Row i of the matrix holds the coordinates
/// of the new basis vector e'_i in the old basis: e'_i = sum_p P_ip e_p.
/// For dim 2 the rows are (x1, x2) and (y1, y2).
class BasisChange {
 public:
  /// Throws std::domain_error if |det P| <= det_epsilon, std::invalid_argument
  /// if P is not square.
  explicit BasisChange(Matrix p, double det_epsilon = kDefaultDetEpsilon);

  static BasisChange identity(int dim) { return BasisChange(Matrix::Identity(dim, dim)); }
  static BasisChange from_rows(double x1, double x2, double y1, double y2,
                               double det_epsilon = kDefaultDetEpsilon);

  int dim() const noexcept { return static_cast<int>(p_.rows()); }
  const Matrix& matrix() const noexcept { return p_; }
  const Matrix& inverse() const noexcept { return inv_; }
  double determinant() const noexcept { return det_; }

  BasisChange inverted() const { return BasisChange(inv_, 0.0); }

  /// Change to the basis obtained by applying `this` first, then `next`.
  BasisChange then(const BasisChange& next) const;

  // The sums and differences x1 +- x2, y1 +- y2 (dim 2 only).
  double u() const { return p2(0, 0) + p2(0, 1); }
  double v() const { return p2(1, 0) + p2(1, 1); }
  double alpha() const { return p2(0, 0) - p2(0, 1); }
  double beta() const { return p2(1, 0) - p2(1, 1); }

 private:
  double p2(int r, int c) const;

  Matrix p_;
  Matrix inv_;
  double det_;
};

/// max_{ijk} |c_ijk - c_jik|
double commutativity_residual(const Algebra& a);
bool is_commutative(const Algebra& a, double tol = kDefaultPredicateTol);

/// max over (i,j,k,l) of |sum_r c_ijr c_rkl - sum_r c_irl c_jkr|, i.e. the
/// largest coefficient of the associator (e_i e_j) e_k - e_i (e_j e_k).
double associativity_residual(const Algebra& a);
bool is_associative(const Algebra& a, double tol = kDefaultPredicateTol);

/// Structure constants in the basis e'_i = sum_p P_ip e_p:
/// c'_ijk = sum_{p,q,r} P_ip P_jq c_pqr (P^-1)_rk.
Algebra change_of_basis(const Algebra& a, const BasisChange& p);

StructMatrix2x4 to_2x4(const Algebra& a);
Algebra from_2x4(const StructMatrix2x4& m);

/// Numerical rank of the 2x4 form: number of singular values above `threshold`.
int rank_2x4(const Algebra& a, double threshold = 1e-8);

}  // namespace algflow

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace algflow {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Dense cubic matrix (q_ijk), i,j,k in [0, dim).
///
/// Storage is row-major in (i, j, k): the last index varies fastest.
/// Indices are 0-based throughout the C++ and Python APIs.
class CubicTensor {
 public:
  /// Zero tensor of the given dimension.
  explicit CubicTensor(int dim);

  /// Takes ownership of dim^3 entries in (i, j, k) row-major order.
  CubicTensor(int dim, std::vector<double> entries);

  /// E_ijk: a single 1 at (i, j, k).
  static CubicTensor basis_unit(int dim, int i, int j, int k);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return entries_.size(); }

  double operator()(int i, int j, int k) const noexcept {
    return entries_[index(i, j, k)];
  }
  double& operator()(int i, int j, int k) noexcept {
    return entries_[index(i, j, k)];
  }

  /// Bounds-checked access.
  double at(int i, int j, int k) const;

  std::span<const double> entries() const noexcept { return entries_; }

  /// The m x m matrix (q_ijk)_{i,k} for a fixed middle index j.
  Matrix slice(int j) const;

  /// Largest absolute entry.
  double max_abs() const noexcept;

  bool operator==(const CubicTensor&) const = default;

 private:
  std::size_t index(int i, int j, int k) const noexcept {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }

  int dim_;
  std::vector<double> entries_;
};

CubicTensor add(const CubicTensor& a, const CubicTensor& b);
CubicTensor scale(double lambda, const CubicTensor& a);

inline CubicTensor operator+(const CubicTensor& a, const CubicTensor& b) { return add(a, b); }
inline CubicTensor operator*(double lambda, const CubicTensor& a) { return scale(lambda, a); }

/// max_{ijk} |a_ijk - b_ijk|
double max_abs_diff(const CubicTensor& a, const CubicTensor& b);

/// Type-C product: c_ijr = sum_k a_ijk b_kjr.
///
/// For each middle index j this is the ordinary product of the j-slices.
/// The sum over k runs in ascending order.
CubicTensor mul_type_c(const CubicTensor& a, const CubicTensor& b);

/// Binary operation a: I x I -> I on {0..dim-1}, stored as a full table.
class BinaryOpTable {
 public:
  /// `table[j * dim + n]` is a(j, n). Throws std::invalid_argument if the
  /// table is not total on {0..dim-1}^2, or if `validate_associative` is
  /// set and a(a(j,n),r) != a(j,a(n,r)) for some triple.
  BinaryOpTable(int dim, std::vector<int> table, bool validate_associative = false);

  static BinaryOpTable left_projection(int dim);
  static BinaryOpTable right_projection(int dim);

  int dim() const noexcept { return dim_; }
  int operator()(int j, int n) const noexcept { return table_[static_cast<std::size_t>(j) * dim_ + n]; }

  bool is_associative() const noexcept;

 private:
  int dim_;
  std::vector<int> table_;
};

/// Product of the family E_ijk *_a E_lnr = delta_kl E_{i a(j,n) r}, extended
/// bilinearly: c_{i,p,r} = sum_{(j,n): a(j,n)=p} sum_k a_ijk b_knr.
CubicTensor mul_general(const CubicTensor& a, const CubicTensor& b, const BinaryOpTable& op);

}  // namespace algflow

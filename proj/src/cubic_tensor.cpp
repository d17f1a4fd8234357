#include "algflow/cubic_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace algflow {

namespace {

void require_dim(int dim) {
  if (dim < 1) {
    throw std::invalid_argument("cubic tensor dimension must be positive, got " + std::to_string(dim));
  }
}

void require_same_dim(const CubicTensor& a, const CubicTensor& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + ")");
  }
}

void require_index(int dim, int idx, const char* name) {
  if (idx < 0 || idx >= dim) {
    throw std::out_of_range(std::string("index ") + name + "=" + std::to_string(idx) + " outside [0, " +
                            std::to_string(dim) + ")");
  }
}

}  // namespace

CubicTensor::CubicTensor(int dim) : dim_(dim) {
  require_dim(dim);
  entries_.assign(static_cast<std::size_t>(dim) * dim * dim, 0.0);
}

CubicTensor::CubicTensor(int dim, std::vector<double> entries) : dim_(dim), entries_(std::move(entries)) {
  require_dim(dim);
  const auto expected = static_cast<std::size_t>(dim) * dim * dim;
  if (entries_.size() != expected) {
    throw std::invalid_argument("cubic tensor of dim " + std::to_string(dim) + " needs " + std::to_string(expected) +
                                " entries, got " + std::to_string(entries_.size()));
  }
  if (!std::all_of(entries_.begin(), entries_.end(), [](double x) { return std::isfinite(x); })) {
    throw std::invalid_argument("cubic tensor entries must be finite");
  }
}

CubicTensor CubicTensor::basis_unit(int dim, int i, int j, int k) {
  CubicTensor e(dim);
  require_index(dim, i, "i");
  require_index(dim, j, "j");
  require_index(dim, k, "k");
  e(i, j, k) = 1.0;
  return e;
}

double CubicTensor::at(int i, int j, int k) const {
  require_index(dim_, i, "i");
  require_index(dim_, j, "j");
  require_index(dim_, k, "k");
  return (*this)(i, j, k);
}

Matrix CubicTensor::slice(int j) const {
  require_index(dim_, j, "j");
  Matrix s(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      s(i, k) = (*this)(i, j, k);
    }
  }
  return s;
}

double CubicTensor::max_abs() const noexcept {
  double m = 0.0;
  for (double x : entries_) m = std::max(m, std::abs(x));
  return m;
}

CubicTensor add(const CubicTensor& a, const CubicTensor& b) {
  require_same_dim(a, b, "add");
  std::vector<double> out(a.size());
  std::transform(a.entries().begin(), a.entries().end(), b.entries().begin(), out.begin(), std::plus<>{});
  return CubicTensor(a.dim(), std::move(out));
}

CubicTensor scale(double lambda, const CubicTensor& a) {
  std::vector<double> out(a.size());
  std::transform(a.entries().begin(), a.entries().end(), out.begin(), [lambda](double x) { return lambda * x; });
  return CubicTensor(a.dim(), std::move(out));
}

double max_abs_diff(const CubicTensor& a, const CubicTensor& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    m = std::max(m, std::abs(a.entries()[n] - b.entries()[n]));
  }
  return m;
}

CubicTensor mul_type_c(const CubicTensor& a, const CubicTensor& b) {
  require_same_dim(a, b, "mul_type_c");
  const int m = a.dim();
  CubicTensor c(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int r = 0; r < m; ++r) {
        double sum = 0.0;
        for (int k = 0; k < m; ++k) sum += a(i, j, k) * b(k, j, r);
        c(i, j, r) = sum;
      }
    }
  }
  return c;
}

BinaryOpTable::BinaryOpTable(int dim, std::vector<int> table, bool validate_associative)
    : dim_(dim), table_(std::move(table)) {
  if (dim < 1) throw std::invalid_argument("binary operation dimension must be positive");
  if (table_.size() != static_cast<std::size_t>(dim) * dim) {
    throw std::invalid_argument("binary operation table is not total: expected " + std::to_string(dim * dim) +
                                " entries, got " + std::to_string(table_.size()));
  }
  for (int v : table_) {
    if (v < 0 || v >= dim) {
      throw std::invalid_argument("binary operation value " + std::to_string(v) + " outside [0, " +
                                  std::to_string(dim) + ")");
    }
  }
  if (validate_associative && !is_associative()) {
    throw std::invalid_argument("binary operation is not associative");
  }
}

BinaryOpTable BinaryOpTable::left_projection(int dim) {
  std::vector<int> t(static_cast<std::size_t>(dim) * dim);
  for (int j = 0; j < dim; ++j)
    for (int n = 0; n < dim; ++n) t[static_cast<std::size_t>(j) * dim + n] = j;
  return BinaryOpTable(dim, std::move(t));
}

BinaryOpTable BinaryOpTable::right_projection(int dim) {
  std::vector<int> t(static_cast<std::size_t>(dim) * dim);
  for (int j = 0; j < dim; ++j)
    for (int n = 0; n < dim; ++n) t[static_cast<std::size_t>(j) * dim + n] = n;
  return BinaryOpTable(dim, std::move(t));
}

bool BinaryOpTable::is_associative() const noexcept {
  const auto& op = *this;
  for (int j = 0; j < dim_; ++j)
    for (int n = 0; n < dim_; ++n)
      for (int r = 0; r < dim_; ++r)
        if (op(op(j, n), r) != op(j, op(n, r))) return false;
  return true;
}

CubicTensor mul_general(const CubicTensor& a, const CubicTensor& b, const BinaryOpTable& op) {
  require_same_dim(a, b, "mul_general");
  if (op.dim() != a.dim()) {
    throw std::invalid_argument("mul_general: operation table has dim " + std::to_string(op.dim()) +
                                ", tensors have dim " + std::to_string(a.dim()));
  }
  const int m = a.dim();
  CubicTensor c(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int n = 0; n < m; ++n) {
        const int p = op(j, n);
        for (int r = 0; r < m; ++r) {
          double sum = 0.0;
          for (int k = 0; k < m; ++k) sum += a(i, j, k) * b(k, n, r);
          c(i, p, r) += sum;
        }
      }
    }
  }
  return c;
}

}  // namespace algflow

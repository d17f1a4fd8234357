#pragma once

#include <random>

#include "algflow/cubic_tensor.hpp"

namespace algflow::testing {

inline CubicTensor random_tensor(std::mt19937_64& rng, int dim, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  CubicTensor t(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) t(i, j, k) = u(rng);
  return t;
}

inline bool is_zero(const CubicTensor& t) { return t.max_abs() == 0.0; }

}  // namespace algflow::testing

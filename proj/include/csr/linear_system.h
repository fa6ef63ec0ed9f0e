// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Sparse linear systems A x = b. The exact solver works over rationals and
// explains infeasibility with a combination of the original equations whose
// left-hand sides cancel but whose right-hand sides do not.

#ifndef CSR_LINEAR_SYSTEM_H_
#define CSR_LINEAR_SYSTEM_H_

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace csr {

// One equation: sum of coefficient * x[variable] = rhs.
template <typename T>
struct SparseEquation {
  std::vector<std::pair<int, T>> terms;
  T rhs;
};

struct ExactSolution {
  bool consistent = false;
  // A particular solution with every free variable set to zero.
  std::vector<mpq_class> x;
  int rank = 0;
  std::vector<int> free_variables;
  // When inconsistent: (equation index, multiplier) pairs whose weighted
  // sum has a vanishing left-hand side and right-hand side `residual`.
  std::vector<std::pair<int, mpq_class>> certificate;
  mpq_class residual;
};

ExactSolution SolveExact(int num_variables,
                         const std::vector<SparseEquation<mpq_class>>& rows);

struct LeastSquaresSolution {
  std::vector<double> x;
  // max over equations of |A x - b|.
  double max_residual = 0.0;
  int rank = 0;
};

LeastSquaresSolution SolveLeastSquares(
    int num_variables, const std::vector<SparseEquation<double>>& rows);

}  // namespace csr

#endif  // CSR_LINEAR_SYSTEM_H_

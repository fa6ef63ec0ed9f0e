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

#include "csr/linear_system.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>

namespace csr {

namespace {

// A row in the incremental echelon basis. `combination` records how the
// row was built from the original equations.
struct BasisRow {
  std::map<int, mpq_class> coeffs;
  mpq_class rhs;
  std::map<int, mpq_class> combination;
  int pivot = -1;
};

void AddScaled(std::map<int, mpq_class>& target,
               const std::map<int, mpq_class>& source,
               const mpq_class& factor) {
  for (const auto& [key, value] : source) {
    mpq_class& slot = target[key];
    slot += factor * value;
    if (sgn(slot) == 0) target.erase(key);
  }
}

}  // namespace

ExactSolution SolveExact(int num_variables,
                         const std::vector<SparseEquation<mpq_class>>& rows) {
  std::vector<BasisRow> basis;
  std::vector<int> pivot_row(num_variables, -1);
  ExactSolution out;
  for (size_t e = 0; e < rows.size(); ++e) {
    BasisRow row;
    for (const auto& [var, coeff] : rows[e].terms) {
      if (sgn(coeff) == 0) continue;
      mpq_class& slot = row.coeffs[var];
      slot += coeff;
      if (sgn(slot) == 0) row.coeffs.erase(var);
    }
    row.rhs = rows[e].rhs;
    row.combination[static_cast<int>(e)] = 1;
    for (const BasisRow& b : basis) {
      auto it = row.coeffs.find(b.pivot);
      if (it == row.coeffs.end()) continue;
      mpq_class factor = -it->second / b.coeffs.at(b.pivot);
      AddScaled(row.coeffs, b.coeffs, factor);
      row.rhs += factor * b.rhs;
      AddScaled(row.combination, b.combination, factor);
    }
    if (row.coeffs.empty()) {
      if (sgn(row.rhs) != 0) {
        out.consistent = false;
        out.residual = row.rhs;
        out.certificate.assign(row.combination.begin(), row.combination.end());
        out.rank = static_cast<int>(basis.size());
        return out;
      }
      continue;
    }
    row.pivot = row.coeffs.begin()->first;
    pivot_row[row.pivot] = static_cast<int>(basis.size());
    basis.push_back(std::move(row));
  }
  out.consistent = true;
  out.rank = static_cast<int>(basis.size());
  out.x.assign(num_variables, mpq_class(0));
  for (int v = 0; v < num_variables; ++v) {
    if (pivot_row[v] < 0) out.free_variables.push_back(v);
  }
  // Later rows never mention earlier pivots, so solve back to front.
  for (int i = static_cast<int>(basis.size()) - 1; i >= 0; --i) {
    const BasisRow& b = basis[i];
    mpq_class value = b.rhs;
    for (const auto& [var, coeff] : b.coeffs) {
      if (var != b.pivot) value -= coeff * out.x[var];
    }
    out.x[b.pivot] = value / b.coeffs.at(b.pivot);
  }
  return out;
}

LeastSquaresSolution SolveLeastSquares(
    int num_variables, const std::vector<SparseEquation<double>>& rows) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows.size(), num_variables);
  Eigen::VectorXd b(rows.size());
  for (size_t e = 0; e < rows.size(); ++e) {
    for (const auto& [var, coeff] : rows[e].terms) a(e, var) += coeff;
    b(e) = rows[e].rhs;
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
  Eigen::VectorXd x = cod.solve(b);
  LeastSquaresSolution out;
  out.rank = static_cast<int>(cod.rank());
  out.x.assign(x.data(), x.data() + x.size());
  Eigen::VectorXd r = a * x - b;
  out.max_residual = r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff();
  return out;
}

}  // namespace csr

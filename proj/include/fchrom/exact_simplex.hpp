#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fchrom/rational.hpp"

namespace fchrom {

// Dense tableau simplex over exact rationals for
//
//   maximize c^T x  subject to  A x <= b,  x >= 0,  with b >= 0,
//
// so the all-slack basis is feasible and no phase one is needed. Bland's rule
// (lowest-index entering column, lowest-index leaving basic variable among
// ratio ties) guarantees termination.
struct SimplexResult {
  Rational objective;
  std::vector<Rational> primal;  // x, one per column of A
  std::vector<Rational> dual;    // multipliers, one per row of A
  std::size_t pivots = 0;
};

class ExactSimplex {
 public:
  ExactSimplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational> c)
      : rows_(a.size()), cols_(c.size()) {
    if (b.size() != rows_) throw InvalidArgument("simplex: rhs size mismatch");
    tableau_.assign(rows_, std::vector<Rational>(cols_ + rows_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (a[i].size() != cols_) throw InvalidArgument("simplex: ragged constraint matrix");
      if (b[i] < 0) throw InvalidArgument("simplex: negative rhs");
      for (std::size_t j = 0; j < cols_; ++j) tableau_[i][j] = std::move(a[i][j]);
      tableau_[i][cols_ + i] = 1;
      tableau_[i][cols_ + rows_] = std::move(b[i]);
    }
    reduced_.assign(cols_ + rows_ + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) reduced_[j] = -c[j];
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) basis_[i] = cols_ + i;
  }

  SimplexResult solve() {
    const std::size_t width = cols_ + rows_;
    SimplexResult result;
    while (true) {
      std::size_t entering = width;
      for (std::size_t j = 0; j < width; ++j)
        if (reduced_[j] < 0) {
          entering = j;
          break;
        }
      if (entering == width) break;

      std::size_t leaving = rows_;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Rational& coeff = tableau_[i][entering];
        if (coeff <= 0) continue;
        Rational ratio = tableau_[i][width] / coeff;
        if (leaving == rows_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == rows_) throw InternalError("simplex: objective unbounded");
      pivot(leaving, entering);
      ++result.pivots;
    }

    result.objective = reduced_[width];
    result.primal.assign(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < cols_) result.primal[basis_[i]] = tableau_[i][width];
    result.dual.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) result.dual[i] = reduced_[cols_ + i];
    return result;
  }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const std::size_t last = cols_ + rows_;
    auto& pivot_row = tableau_[row];
    const Rational inv = 1 / pivot_row[col];
    for (std::size_t j = 0; j <= last; ++j)
      if (pivot_row[j] != 0) pivot_row[j] *= inv;

    auto eliminate = [&](std::vector<Rational>& target) {
      if (target[col] == 0) return;
      const Rational factor = target[col];
      for (std::size_t j = 0; j <= last; ++j)
        if (pivot_row[j] != 0) target[j] -= factor * pivot_row[j];
    };
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != row) eliminate(tableau_[i]);
    eliminate(reduced_);
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> tableau_;  // [A | I | b]
  std::vector<Rational> reduced_;               // reduced costs, objective value last
  std::vector<std::size_t> basis_;
};

}  // namespace fchrom

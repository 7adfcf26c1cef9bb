#pragma once

// Exact rational linear algebra: rank, kernels and positive solutions of
// homogeneous systems. No floating point anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace coverlab::ratlin {

/// GMP rationals are kept in canonical form (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;
using RatVector = std::vector<Rational>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  /// M v, exactly.
  RatVector apply(std::span<const Rational> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::size_t rank(const RatMatrix& m);

/// Basis of {v : M v = 0}; one vector per free column of the reduced row echelon form.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// A strictly positive integer vector alpha with M alpha = 0, or nullopt when
/// none exists. Decided by an exact phase-1 simplex with Bland's rule on
/// {M alpha = 0, alpha >= 1}; the witness is scaled to coprime integers.
std::optional<std::vector<Integer>> positive_solution(const RatMatrix& m);

}  // namespace coverlab::ratlin

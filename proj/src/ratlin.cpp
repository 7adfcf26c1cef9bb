#include "coverlab/ratlin.hpp"

#include <stdexcept>
#include <utility>

namespace coverlab::ratlin {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("RatMatrix::from_rows: ragged row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(static_cast<long>(rows[r][c]));
  }
  return m;
}

RatVector RatMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("RatMatrix::apply: dimension mismatch");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

namespace {

struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan elimination to reduced row echelon form.
Echelon rref(RatMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Phase-1 simplex tableau for A x = b, x >= 0, b >= 0, with one artificial
// variable per row. Columns [0, n) are structural, [n, n + m) artificial.
class PhaseOne {
 public:
  PhaseOne(const RatMatrix& a, const RatVector& b)
      : m_(a.rows()), n_(a.cols()), width_(n_ + m_), tab_(m_ * width_), rhs_(b), basis_(m_), cost_(width_) {
    for (std::size_t r = 0; r < m_; ++r) {
      const bool flip = sgn(rhs_[r]) < 0;
      if (flip) rhs_[r] = -rhs_[r];
      for (std::size_t c = 0; c < n_; ++c) at(r, c) = flip ? Rational(-a(r, c)) : a(r, c);
      at(r, n_ + r) = 1;
      basis_[r] = n_ + r;
    }
    // Reduced costs of minimizing the sum of artificials.
    for (std::size_t c = 0; c < n_; ++c) {
      Rational s = 0;
      for (std::size_t r = 0; r < m_; ++r) s += at(r, c);
      cost_[c] = -s;
    }
    for (std::size_t r = 0; r < m_; ++r) objective_ -= rhs_[r];
  }

  void solve() {
    for (;;) {
      // Bland: lowest-index entering column with negative reduced cost.
      std::size_t enter = width_;
      for (std::size_t c = 0; c < width_; ++c)
        if (sgn(cost_[c]) < 0) {
          enter = c;
          break;
        }
      if (enter == width_) return;

      std::size_t leave = m_;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (sgn(at(r, enter)) <= 0) continue;
        Rational ratio = rhs_[r] / at(r, enter);
        if (leave == m_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      // Phase 1 is bounded below by zero, so an improving column always has a pivot row.
      if (leave == m_) throw std::logic_error("phase-1 simplex: unbounded direction");
      pivot(leave, enter);
    }
  }

  bool feasible() const { return sgn(objective_) == 0; }

  RatVector structural_solution() const {
    RatVector x(n_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] < n_) x[basis_[r]] = rhs_[r];
    return x;
  }

 private:
  Rational& at(std::size_t r, std::size_t c) { return tab_[r * width_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return tab_[r * width_ + c]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = 1 / at(pr, pc);
    for (std::size_t c = 0; c < width_; ++c) at(pr, c) *= inv;
    rhs_[pr] *= inv;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == pr || sgn(at(r, pc)) == 0) continue;
      const Rational f = at(r, pc);
      for (std::size_t c = 0; c < width_; ++c) at(r, c) -= f * at(pr, c);
      rhs_[r] -= f * rhs_[pr];
    }
    if (sgn(cost_[pc]) != 0) {
      const Rational f = cost_[pc];
      for (std::size_t c = 0; c < width_; ++c) cost_[c] -= f * at(pr, c);
      objective_ -= f * rhs_[pr];
    }
    basis_[pr] = pc;
  }

  std::size_t m_, n_, width_;
  std::vector<Rational> tab_;
  RatVector rhs_;
  std::vector<std::size_t> basis_;
  RatVector cost_;
  Rational objective_ = 0;  // negated sum of artificials
};

}  // namespace

std::optional<std::vector<Integer>> positive_solution(const RatMatrix& m) {
  const std::size_t n = m.cols();
  RatVector alpha(n, Rational(1));

  if (m.rows() > 0 && n > 0) {
    // alpha = 1 + beta with beta >= 0:  M beta = -M 1.
    RatVector b = m.apply(alpha);
    for (auto& x : b) x = -x;
    PhaseOne lp(m, b);
    lp.solve();
    if (!lp.feasible()) return std::nullopt;
    const RatVector beta = lp.structural_solution();
    for (std::size_t i = 0; i < n; ++i) alpha[i] += beta[i];
  } else if (m.rows() > 0) {
    return std::vector<Integer>{};
  }

  Integer denom_lcm = 1;
  for (const auto& x : alpha) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out(n);
  Integer g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = alpha[i].get_num() * (denom_lcm / alpha[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) x /= g;

  // Re-substitute before returning.
  RatVector check(out.begin(), out.end());
  for (const auto& r : m.apply(check))
    if (sgn(r) != 0) throw std::logic_error("positive_solution: witness fails M alpha = 0");
  for (const auto& x : out)
    if (x < 1) throw std::logic_error("positive_solution: witness has a non-positive entry");
  return out;
}

}  // namespace coverlab::ratlin

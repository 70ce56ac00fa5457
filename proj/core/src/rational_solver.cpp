#include <stdexcept>

#include "coinv/zlinalg.hpp"

namespace coinv {

RatMatrix::RatMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), data_(m.rows() * m.cols()) {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = Rational(m(r, c));
}

RationalSolver::RationalSolver(RatMatrix a)
    : rows_(a.rows()), cols_(a.cols()), reduced_(std::move(a)), transform_(rows_, rows_) {
  for (std::size_t i = 0; i < rows_; ++i) transform_(i, i) = 1;

  auto swap_rows = [](RatMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
  };
  // row_i -= f * row_j on both R and E
  auto eliminate = [this](std::size_t i, std::size_t j, const Rational& f) {
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(reduced_(j, c)) != 0) reduced_(i, c) -= f * reduced_(j, c);
    for (std::size_t c = 0; c < rows_; ++c)
      if (sgn(transform_(j, c)) != 0) transform_(i, c) -= f * transform_(j, c);
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && sgn(reduced_(p, c)) == 0) ++p;
    if (p == rows_) continue;
    swap_rows(reduced_, p, r);
    swap_rows(transform_, p, r);
    Rational inv = 1 / reduced_(r, c);
    for (std::size_t k = 0; k < cols_; ++k) reduced_(r, k) *= inv;
    for (std::size_t k = 0; k < rows_; ++k) transform_(r, k) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn(reduced_(i, c)) == 0) continue;
      Rational f = reduced_(i, c);
      eliminate(i, r, f);
    }
    pivots_.push_back(c);
    ++r;
  }
}

std::optional<RatVector> RationalSolver::solve(std::span<const Rational> b) const {
  if (b.size() != rows_) throw std::invalid_argument("right-hand side length does not match matrix rows");
  RatVector eb(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (std::size_t k = 0; k < rows_; ++k)
      if (sgn(transform_(i, k)) != 0 && sgn(b[k]) != 0) acc += transform_(i, k) * b[k];
    eb[i] = acc;
  }
  for (std::size_t i = pivots_.size(); i < rows_; ++i)
    if (sgn(eb[i]) != 0) return std::nullopt;
  RatVector x(cols_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = eb[i];
  return x;
}

std::vector<RatVector> RationalSolver::nullspace() const {
  std::vector<char> is_pivot(cols_, 0);
  for (std::size_t p : pivots_) is_pivot[p] = 1;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols_);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots_.size(); ++i) v[pivots_[i]] = -reduced_(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace coinv

#include <stdexcept>

#include "coinv/zlinalg.hpp"

namespace coinv {

CokernelInvariants cokernel_invariants(const IntMatrix& relations) {
  SNFDecomposition d = smith_decompose(relations, SNFOptions{false, false, false});
  CokernelInvariants out;
  out.free_rank = relations.cols() - d.diagonal.size();
  for (const Integer& v : d.diagonal)
    if (v > 1) out.torsion_factors.push_back(v);
  return out;
}

CokernelInvariants cokernel_invariants(const std::vector<IntVector>& relations,
                                       std::size_t ambient_rank) {
  return cokernel_invariants(IntMatrix::from_rows(relations, ambient_rank));
}

InvariantFactors canonical_invariant_factors(const std::vector<Integer>& orders) {
  for (const Integer& o : orders)
    if (o <= 0) throw std::invalid_argument("cyclic orders must be positive");
  SNFDecomposition d = smith_decompose(IntMatrix::diagonal(orders), SNFOptions{false, false, false});
  InvariantFactors out;
  for (const Integer& v : d.diagonal)
    if (v > 1) out.push_back(v);
  return out;
}

Quotient::Quotient(const std::vector<IntVector>& relations, std::size_t ambient_rank)
    : ambient_(ambient_rank) {
  init(IntMatrix::from_rows(relations, ambient_rank));
}

Quotient::Quotient(const IntMatrix& relations) : ambient_(relations.cols()) { init(relations); }

void Quotient::init(const IntMatrix& relations) {
  SNFDecomposition d = smith_decompose(relations, SNFOptions{false, true, true});
  diag_ = std::move(d.diagonal);
  v_ = std::move(*d.V);
  first_torsion_ = diag_.size();
  for (std::size_t k = 0; k < diag_.size(); ++k) {
    if (diag_[k] > 1) {
      if (first_torsion_ == diag_.size()) first_torsion_ = k;
      torsion_moduli_.push_back(diag_[k]);
      torsion_gens_.push_back(d.V_inverse->row_vector(k));
    }
  }
}

CokernelInvariants Quotient::invariants() const {
  return CokernelInvariants{ambient_ - diag_.size(), torsion_moduli_};
}

IntVector Quotient::coordinates(std::span<const Integer> v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("vector of length " + std::to_string(v.size()) +
                                " in a quotient of Z^" + std::to_string(ambient_));
  return row_times(v, v_);
}

ClassOrder Quotient::class_order(std::span<const Integer> v) const {
  IntVector w = coordinates(v);
  Integer order = 1;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k >= diag_.size()) {
      if (w[k] != 0) return std::nullopt;
      continue;
    }
    Integer g = gcd(w[k], diag_[k]);
    order = lcm(order, diag_[k] / g);
  }
  return order;
}

bool Quotient::contains(std::span<const Integer> v) const {
  ClassOrder o = class_order(v);
  return o && *o == 1;
}

bool Quotient::is_torsion(std::span<const Integer> v) const { return class_order(v).has_value(); }

IntVector Quotient::torsion_coordinates(std::span<const Integer> v) const {
  IntVector w = coordinates(v);
  IntVector out;
  out.reserve(torsion_moduli_.size());
  for (std::size_t k = 0; k < torsion_moduli_.size(); ++k)
    out.push_back(mod_floor(w[first_torsion_ + k], torsion_moduli_[k]));
  return out;
}

bool Quotient::free_part_vanishes(std::span<const Integer> v) const {
  IntVector w = coordinates(v);
  for (std::size_t k = diag_.size(); k < w.size(); ++k)
    if (w[k] != 0) return false;
  return true;
}

ClassOrder class_order(const std::vector<IntVector>& relations, std::span<const Integer> v) {
  return Quotient(relations, v.size()).class_order(v);
}

std::optional<RatVector> solve_linear(const IntMatrix& a, std::span<const Integer> b, Domain domain) {
  if (b.size() != a.rows())
    throw std::invalid_argument("right-hand side length does not match matrix rows");
  if (domain == Domain::Q) return RationalSolver(RatMatrix(a)).solve(RatVector(b.begin(), b.end()));

  SNFDecomposition d = smith_decompose(a, SNFOptions{true, true, false});
  IntVector ub = times_column(*d.U, b);
  IntVector y(a.cols());
  for (std::size_t k = 0; k < ub.size(); ++k) {
    if (k < d.diagonal.size()) {
      if (!mpz_divisible_p(ub[k].get_mpz_t(), d.diagonal[k].get_mpz_t())) return std::nullopt;
      y[k] = ub[k] / d.diagonal[k];
    } else if (ub[k] != 0) {
      return std::nullopt;
    }
  }
  IntVector x = times_column(*d.V, y);
  return RatVector(x.begin(), x.end());
}

std::size_t rational_rank(const IntMatrix& a) { return RationalSolver(RatMatrix(a)).rank(); }

}  // namespace coinv

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coinv/int_matrix.hpp"
#include "coinv/numeric.hpp"

namespace coinv {

/// S = U * A * V with U, V unimodular and S diagonal, d_1 | d_2 | ... | d_r,
/// every d_k > 0 and zeros after position r.
struct SNFResult {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  std::vector<Integer> diagonal() const;  // min(rows, cols) entries
  std::size_t rank() const;
};

/// Which transforms to accumulate. The diagonal alone is much cheaper.
struct SNFOptions {
  bool want_u = true;
  bool want_v = true;
  bool want_v_inverse = false;
};

/// Smith normal form with transforms.
///
/// Pivoting: the entry of minimal nonzero absolute value in the active
/// submatrix, ties broken by lowest (row, col). After diagonalisation the
/// divisibility chain is enforced pairwise with 2x2 unimodular gcd/lcm steps.
/// Arithmetic runs in checked 64-bit integers and restarts in GMP integers on
/// overflow, so the result never depends on which path ran.
SNFResult smith_normal_form(const IntMatrix& a);

/// Lower-level form; `v_inverse` is filled when requested.
struct SNFDecomposition {
  std::vector<Integer> diagonal;  // nonzero invariant factors, length = rank
  std::optional<IntMatrix> U, V, V_inverse;
};
SNFDecomposition smith_decompose(const IntMatrix& a, const SNFOptions& options);

struct CokernelInvariants {
  std::size_t free_rank = 0;
  InvariantFactors torsion_factors;

  friend bool operator==(const CokernelInvariants&, const CokernelInvariants&) = default;
};

/// Invariants of Z^ambient / (row span of `relations`).
CokernelInvariants cokernel_invariants(const std::vector<IntVector>& relations,
                                       std::size_t ambient_rank);
CokernelInvariants cokernel_invariants(const IntMatrix& relations);

/// Canonical chain of a direct sum of cyclic groups Z_{orders[k]}.
/// Orders 0 and 1 are allowed; 1 contributes nothing, 0 is rejected.
InvariantFactors canonical_invariant_factors(const std::vector<Integer>& orders);

/// Order of a class in a quotient. std::nullopt stands for infinite order.
using ClassOrder = std::optional<Integer>;

/// Z^n modulo the row span of a relation matrix, in Smith coordinates.
///
/// With U R V = S, a row vector x has coordinates w = x V; the relation
/// lattice becomes the span of d_k e_k. Coordinates with d_k > 1 carry the
/// torsion, coordinates past the rank are free.
class Quotient {
 public:
  Quotient(const std::vector<IntVector>& relations, std::size_t ambient_rank);
  explicit Quotient(const IntMatrix& relations);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t relation_rank() const { return diag_.size(); }
  CokernelInvariants invariants() const;

  IntVector coordinates(std::span<const Integer> v) const;
  ClassOrder class_order(std::span<const Integer> v) const;
  bool contains(std::span<const Integer> v) const;  // integer row span membership
  bool is_torsion(std::span<const Integer> v) const;

  /// Moduli d_k > 1 of the torsion coordinates, in chain order.
  const InvariantFactors& torsion_moduli() const { return torsion_moduli_; }
  /// Vectors of Z^n whose classes generate the torsion subgroup, one per
  /// torsion modulus (rows of V^{-1}).
  const std::vector<IntVector>& torsion_generators() const { return torsion_gens_; }
  /// Residues of the torsion coordinates of v, each reduced modulo d_k.
  IntVector torsion_coordinates(std::span<const Integer> v) const;
  /// True iff every free coordinate of v vanishes.
  bool free_part_vanishes(std::span<const Integer> v) const;

 private:
  void init(const IntMatrix& relations);

  std::size_t ambient_ = 0;
  std::vector<Integer> diag_;
  IntMatrix v_;
  std::size_t first_torsion_ = 0;
  InvariantFactors torsion_moduli_;
  std::vector<IntVector> torsion_gens_;
};

/// Smallest n >= 1 with n v in the row span, or nullopt if the class of v
/// has infinite order.
ClassOrder class_order(const std::vector<IntVector>& relations, std::span<const Integer> v);

enum class Domain { Z, Q };

/// Some solution of A x = b over the requested domain, or nullopt. Integer
/// solves go through Smith coordinates; rational ones through row reduction.
std::optional<RatVector> solve_linear(const IntMatrix& a, std::span<const Integer> b, Domain domain);

/// Dense rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RatMatrix(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Factor-once rational solver for A x = b with many right-hand sides.
///
/// Row reduces A to reduced echelon form E A = R once; each solve applies E
/// to b, checks consistency and reads off the particular solution with all
/// free variables set to zero.
class RationalSolver {
 public:
  explicit RationalSolver(RatMatrix a);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t unknowns() const { return cols_; }

  std::optional<RatVector> solve(std::span<const Rational> b) const;
  /// Basis of the null space of A.
  std::vector<RatVector> nullspace() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RatMatrix reduced_;    // R
  RatMatrix transform_;  // E
  std::vector<std::size_t> pivots_;
};

/// Rank over Q.
std::size_t rational_rank(const IntMatrix& a);

}  // namespace coinv

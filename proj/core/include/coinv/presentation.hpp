#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coinv/abelian.hpp"
#include "coinv/group_ring.hpp"
#include "coinv/numeric.hpp"
#include "coinv/zlinalg.hpp"

namespace coinv {

/// The data (A, B, mu): two nonempty label lists and the values of mu on
/// each. Both mu(A) and mu(B) must generate G; `create` enforces this.
class CocycleData {
 public:
  static CocycleData create(FinAbGroup group, std::vector<std::string> a_labels,
                            std::vector<GroupElt> mu_a, std::vector<std::string> b_labels,
                            std::vector<GroupElt> mu_b);

  /// A = B = {p_1, ..., p_n} with mu the inclusion.
  static CocycleData standard(const FinAbGroup& group);

  const FinAbGroup& group() const { return group_; }
  const std::vector<std::string>& a_labels() const { return a_labels_; }
  const std::vector<std::string>& b_labels() const { return b_labels_; }
  const std::vector<GroupElt>& mu_a() const { return mu_a_; }
  const std::vector<GroupElt>& mu_b() const { return mu_b_; }
  std::size_t a_count() const { return a_labels_.size(); }
  std::size_t b_count() const { return b_labels_.size(); }

  bool is_standard() const;

 private:
  CocycleData() = default;

  FinAbGroup group_;
  std::vector<std::string> a_labels_, b_labels_;
  std::vector<GroupElt> mu_a_, mu_b_;
};

/// Fixture text format:
///
///   # comment
///   group: 2,2
///   A: a1=(1,0) a2=(0,1)
///   B: b1=(1,1) b2=(0,1)
CocycleData parse_cocycle_fixture(const std::string& text);
std::string format_cocycle_fixture(const CocycleData& data);

/// Random valid data: label counts uniform in [1, max_labels], values
/// uniform in G, resampled until both images generate.
CocycleData random_cocycle_data(const FinAbGroup& group, std::size_t max_labels, std::mt19937_64& rng);

/// Coordinates of M(A,B) = Z[G] (x) Z^A (x) Z^B:
/// position(g, a, b) = (g |A| + a) |B| + b with g the canonical element index.
struct ModuleBasis {
  std::size_t group_order = 0;
  std::size_t a_count = 0;
  std::size_t b_count = 0;

  std::size_t size() const { return group_order * a_count * b_count; }
  std::size_t position(std::size_t g, std::size_t a, std::size_t b) const {
    return (g * a_count + a) * b_count + b;
  }
  struct Triple {
    std::size_t g, a, b;
  };
  Triple triple(std::size_t position) const;

  /// Vector of sum_{a,b} r(a,b) (x) a (x) b from the block components.
  IntVector assemble(const std::vector<std::vector<RingElt>>& blocks) const;
  /// Component r(a, b) of a vector, as an element of Z[G].
  RingElt component(const FinAbGroup& group, std::span<const Integer> v, std::size_t a, std::size_t b) const;
};

/// N(A,B) = M(A,B) / (A + B) presented by relation rows.
///
/// Rows [0, |A||G|) span the subgroup A: for each a and g, the vector of
/// sum_b g (e - mu(b)) (x) a (x) b. The remaining |B||G| rows span B
/// symmetrically. Row order within a family: label major, group element minor.
struct Presentation {
  ModuleBasis basis;
  std::vector<IntVector> relation_rows;
  CocycleData source;

  std::size_t a_family_size() const { return basis.group_order * basis.a_count; }
  std::vector<IntVector> a_family() const;
  std::vector<IntVector> b_family() const;
};

Presentation build_presentation(const CocycleData& data);

/// Free rank and torsion of N(A,B).
CokernelInvariants torsion_of_N(const CocycleData& data);

/// True iff r is a rational combination of relation rows.
bool is_torsion_class(const CocycleData& data, std::span<const Integer> r);

/// (m_k/d Q_k - m_l/d Q_l) (x) p_k (x) p_l on standard data, 0-based k < l.
/// Throws std::domain_error when d = gcd(m_k, m_l) = 1.
IntVector surjectivity_witness(const FinAbGroup& group, std::size_t k, std::size_t l);

struct TorsionResidues {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (i, j), i < j, 0-based
  std::vector<Integer> moduli;                             // d(i, j)
  std::vector<Integer> residues;                           // in [0, d(i, j))

  friend bool operator==(const TorsionResidues&, const TorsionResidues&) = default;
};

/// The residues (t_{i,j} d(i,j) mod d(i,j))_{i<j} of torsion classes in
/// N(A,B) for standard data.
///
/// For r in A_Q + B_Q it solves r(a, b) = alpha(a)(e - b) + beta(b)(e - a)
/// over Q, forms kappa_{i,j} = (alpha(p_i) + beta(p_i))(e - p_j), and reads
/// t_{i,j} off the coefficient at e; every coefficient of kappa - t N must
/// be an integer. The linear system depends only on G and is factored once.
class TorsionClassifier {
 public:
  explicit TorsionClassifier(FinAbGroup group);

  const FinAbGroup& group() const { return group_; }
  const CocycleData& data() const { return data_; }

  /// Throws std::domain_error when the class of r is not torsion.
  TorsionResidues classify(std::span<const Integer> r) const;

  /// Same, and re-solves with a random null-space shift of (alpha, beta);
  /// throws std::logic_error if the residues change.
  TorsionResidues classify_checked(std::span<const Integer> r, std::mt19937_64& rng) const;

  /// t_{i,j} d(i,j) mod d(i,j) for any ordered pair i != j.
  Integer pair_residue(std::span<const Integer> r, std::size_t i, std::size_t j) const;

 private:
  struct Split {
    std::vector<RingElt> alpha, beta;
  };
  Split split(std::span<const Integer> r, const RatVector* shift) const;
  Integer residue_from(const Split& s, std::size_t i, std::size_t j) const;
  TorsionResidues residues_from(const Split& s) const;

  FinAbGroup group_;
  CocycleData data_;
  RationalSolver solver_;
  std::vector<RatVector> nullspace_;
};

/// Convenience wrapper over a one-off TorsionClassifier (standard data only).
TorsionResidues torsion_class_invariant(const FinAbGroup& group, std::span<const Integer> r);

/// Given r_1..r_n in Q[G] (n = rank of G) with r_i P_i integral and
/// r_i (e - p_j) - r_j (e - p_i) integral, returns x in Q[G] with
/// r_i - x (e - p_i) integral for all i. Induction on the number of factors.
RingElt lemma_solution(const FinAbGroup& group, std::span<const RingElt> r);

/// Given r_1..r_n with r_i (e - p_j) - r_j (e - p_i) integral, returns
/// integral u_1..u_n with (r_i - u_i)(e - p_j) = (r_j - u_j)(e - p_i).
std::vector<RingElt> lemma_adjust(const FinAbGroup& group, std::span<const RingElt> r);

}  // namespace coinv

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coinv/abelian.hpp"
#include "coinv/numeric.hpp"
#include "coinv/zlinalg.hpp"

namespace coinv {

/// An element of Z[G] or Q[G].
///
/// Coefficients are stored densely, indexed by the canonical enumeration of
/// G. The domain tag records which ring the value is meant to live in; a Z
/// tag guarantees integral coefficients. Arithmetic promotes to Q as soon as
/// one operand is Q or a scalar is non-integral. Equality compares
/// coefficients only.
class RingElt {
 public:
  explicit RingElt(FinAbGroup group, Domain domain = Domain::Z);
  RingElt(FinAbGroup group, RatVector coefficients, Domain domain);

  /// c * g
  static RingElt monomial(const GroupElt& g, const Rational& c = 1);
  static RingElt one(const FinAbGroup& group) { return monomial(group.identity()); }

  /// Parses "1*(0,0) - 1*(1,0) + 1/2*(1,1)". A bare monomial "(1,0)" means
  /// coefficient 1, "0" is the zero element. The domain is Z if every
  /// coefficient is integral.
  static RingElt parse(const FinAbGroup& group, std::string_view text);

  const FinAbGroup& group() const { return group_; }
  Domain domain() const { return domain_; }
  const RatVector& coefficients() const { return coeffs_; }
  const Rational& coeff(const GroupElt& g) const { return coeffs_[g.index()]; }
  const Rational& coeff_at(std::size_t index) const { return coeffs_[index]; }

  void add_term(const GroupElt& g, const Rational& c);

  bool is_zero() const;
  bool is_integral() const;
  /// Sum of coefficients.
  Rational augmentation() const;
  /// Same value tagged Z. Throws std::domain_error on a fractional coefficient.
  RingElt as_integral() const;
  /// Same value tagged Q.
  RingElt as_rational() const;
  /// Integer coefficient vector (requires integral coefficients).
  IntVector integer_coefficients() const;

  /// g * this, a relabelling of coefficients.
  RingElt shifted(const GroupElt& g) const;

  RingElt operator-() const;
  RingElt& operator+=(const RingElt& other);
  RingElt& operator-=(const RingElt& other);
  friend RingElt operator+(RingElt a, const RingElt& b) { return a += b; }
  friend RingElt operator-(RingElt a, const RingElt& b) { return a -= b; }
  friend RingElt operator*(const RingElt& a, const RingElt& b);
  friend RingElt operator*(const RingElt& a, const Rational& s);
  friend RingElt operator*(const Rational& s, const RingElt& a) { return a * s; }

  friend bool operator==(const RingElt& a, const RingElt& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void check_same_group(const RingElt& other) const;

  FinAbGroup group_;
  RatVector coeffs_;
  Domain domain_;
};

enum class RingOp { Add, Neg, Mul, Scale };

/// Dispatch form of the ring operations; `v` is ignored for Neg, `scalar`
/// is used only for Scale.
RingElt ring_arithmetic(RingOp op, const RingElt& u, const RingElt* v = nullptr,
                        const Rational& scalar = 0);

/// N = sum of all group elements.
RingElt group_sum(const FinAbGroup& group);
/// P_i = e + p_i + ... + p_i^{m_i - 1} (0-based i).
RingElt axis_sum(const FinAbGroup& group, std::size_t i);
/// Q_i = product of P_j over j != i (0-based i).
RingElt complement_sum(const FinAbGroup& group, std::size_t i);
/// e - g
RingElt one_minus(const GroupElt& g);

enum class SpecialKind { N, P, Q };
RingElt special_element(const FinAbGroup& group, SpecialKind kind, std::size_t i = 0);

/// Integral coboundary coefficients over a generating family S.
///
/// For a target g it returns s_a with sum_a (e - S_a) s_a = e - g, obtained
/// by telescoping e - g_1 g_2 ... g_k = (e - g_1) + g_1 (e - g_2 ... g_k)
/// along a shortest word in S. Words come from one breadth-first search
/// over G (generators tried in S order), done at construction.
class CoboundarySolver {
 public:
  CoboundarySolver(FinAbGroup group, std::vector<GroupElt> generators);

  const FinAbGroup& group() const { return group_; }
  const std::vector<GroupElt>& generators() const { return gens_; }

  /// Indices into the generator list, in word order.
  std::vector<std::size_t> word(const GroupElt& target) const;
  std::vector<RingElt> solve(const GroupElt& target) const;

 private:
  FinAbGroup group_;
  std::vector<GroupElt> gens_;
  std::vector<std::size_t> parent_;     // element index of predecessor
  std::vector<std::size_t> last_gen_;   // generator used to reach element
  std::vector<char> reached_;
};

/// One-shot form of CoboundarySolver. Throws std::invalid_argument when S
/// does not generate G.
std::vector<RingElt> solve_coboundary(std::span<const GroupElt> generators, const GroupElt& target);

}  // namespace coinv

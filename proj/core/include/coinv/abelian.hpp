#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coinv/numeric.hpp"

namespace coinv {

class GroupElt;

/// Finite abelian group Z_{m_1} x ... x Z_{m_n} in product form.
///
/// Moduli are kept in the order given; factors Z_1 are dropped on
/// construction, so an empty modulus list is the trivial group. Copies are
/// cheap (the modulus list is shared).
///
/// Elements are enumerated in mixed radix with the first factor most
/// significant: index(k_1..k_n) = ((k_1 m_2 + k_2) m_3 + k_3) ... . This is
/// the "canonical enumeration" every dense structure in the library uses.
class FinAbGroup {
 public:
  FinAbGroup();
  explicit FinAbGroup(std::vector<std::int64_t> moduli);

  /// Parses a comma-separated moduli literal such as "2,2" or "6, 4".
  /// An empty string or "1" gives the trivial group.
  static FinAbGroup parse(std::string_view text);

  const std::vector<std::int64_t>& moduli() const { return *moduli_; }
  std::size_t rank() const { return moduli_->size(); }
  std::int64_t modulus(std::size_t i) const { return moduli_->at(i); }

  /// Group order. Throws std::overflow_error beyond 2^40 elements.
  std::size_t order() const;
  bool is_trivial() const { return moduli_->empty(); }

  GroupElt identity() const;
  /// The distinguished generator p_i (0-based).
  GroupElt generator(std::size_t i) const;
  GroupElt element(std::vector<std::int64_t> exponents) const;
  GroupElt element_at(std::size_t index) const;
  std::vector<GroupElt> elements() const;

  /// The subgroup Z_{m_{first}} x ... dropping the first `count` factors.
  FinAbGroup drop_front(std::size_t count) const;

  std::string to_string() const;  // "2,2"; "1" for the trivial group

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
    return a.moduli_ == b.moduli_ || *a.moduli_ == *b.moduli_;
  }

 private:
  std::shared_ptr<const std::vector<std::int64_t>> moduli_;
};

/// An element p_1^{k_1} ... p_n^{k_n}, stored as its reduced exponent vector.
class GroupElt {
 public:
  GroupElt(FinAbGroup group, std::vector<std::int64_t> exponents);

  const FinAbGroup& group() const { return group_; }
  const std::vector<std::int64_t>& exponents() const { return exps_; }
  std::size_t index() const;
  bool is_identity() const;

  GroupElt operator*(const GroupElt& other) const;
  GroupElt inverse() const;
  GroupElt pow(std::int64_t k) const;
  std::int64_t order() const;

  std::string to_string() const;  // "(1,0)"; "()" in the trivial group

  friend bool operator==(const GroupElt& a, const GroupElt& b) {
    return a.group_ == b.group_ && a.exps_ == b.exps_;
  }

 private:
  FinAbGroup group_;
  std::vector<std::int64_t> exps_;
};

enum class GroupOp { Mul, Inv, Pow };

/// Dispatch form of the element operations. `y` is ignored for Inv; for Pow
/// only `power` is used.
GroupElt element_arithmetic(GroupOp op, const GroupElt& x, const GroupElt* y = nullptr,
                            std::int64_t power = 0);

/// Parses an exponent tuple "(1,0)" (parentheses optional) into an element of G.
GroupElt parse_element(const FinAbGroup& group, std::string_view text);

/// True iff the subgroup generated by `gens` is all of G. Closure is grown
/// breadth first; the empty set generates only the trivial group.
bool generates(std::span<const GroupElt> gens, const FinAbGroup& group);

/// The closure itself, in discovery order, starting at e.
std::vector<GroupElt> subgroup_closure(std::span<const GroupElt> gens, const FinAbGroup& group);

/// Invariant factors of the direct product of Z_{gcd(m_i, m_j)} over i < j,
/// i.e. of the wedge square G ^ G. Empty for cyclic or trivial groups.
InvariantFactors predicted_torsion(const FinAbGroup& group);

}  // namespace coinv

#include "coinv/abelian.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "coinv/zlinalg.hpp"

namespace coinv {

namespace {

constexpr std::size_t kMaxOrder = std::size_t{1} << 40;

std::vector<std::int64_t> parse_int_list(std::string_view text, char sep) {
  std::vector<std::int64_t> out;
  std::string token;
  auto flush = [&]() {
    std::size_t b = token.find_first_not_of(" \t");
    std::size_t e = token.find_last_not_of(" \t");
    if (b == std::string::npos) {
      token.clear();
      return false;
    }
    std::string t = token.substr(b, e - b + 1);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + t + "'");
    }
    if (used != t.size()) throw std::invalid_argument("not an integer: '" + t + "'");
    out.push_back(v);
    token.clear();
    return true;
  };
  for (char c : text) {
    if (c == sep) {
      if (!flush()) throw std::invalid_argument("empty entry in list '" + std::string(text) + "'");
    } else {
      token += c;
    }
  }
  if (!flush() && !out.empty())
    throw std::invalid_argument("trailing separator in '" + std::string(text) + "'");
  return out;
}

}  // namespace

FinAbGroup::FinAbGroup() : moduli_(std::make_shared<const std::vector<std::int64_t>>()) {}

FinAbGroup::FinAbGroup(std::vector<std::int64_t> moduli) {
  std::vector<std::int64_t> kept;
  for (std::int64_t m : moduli) {
    if (m < 1) throw std::invalid_argument("group modulus must be positive, got " + std::to_string(m));
    if (m > 1) kept.push_back(m);
  }
  moduli_ = std::make_shared<const std::vector<std::int64_t>>(std::move(kept));
}

FinAbGroup FinAbGroup::parse(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '['))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == ']' ||
                              trimmed.back() == '\n'))
    trimmed.remove_suffix(1);
  return FinAbGroup(parse_int_list(trimmed, ','));
}

std::size_t FinAbGroup::order() const {
  std::size_t n = 1;
  for (std::int64_t m : *moduli_) {
    if (n > kMaxOrder / static_cast<std::size_t>(m))
      throw std::overflow_error("group " + to_string() + " is too large to enumerate");
    n *= static_cast<std::size_t>(m);
  }
  return n;
}

GroupElt FinAbGroup::identity() const {
  return GroupElt(*this, std::vector<std::int64_t>(rank(), 0));
}

GroupElt FinAbGroup::generator(std::size_t i) const {
  if (i >= rank())
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range for group " +
                            to_string());
  std::vector<std::int64_t> e(rank(), 0);
  e[i] = 1;
  return GroupElt(*this, std::move(e));
}

GroupElt FinAbGroup::element(std::vector<std::int64_t> exponents) const {
  return GroupElt(*this, std::move(exponents));
}

GroupElt FinAbGroup::element_at(std::size_t index) const {
  if (index >= order()) throw std::out_of_range("element index out of range");
  std::vector<std::int64_t> e(rank(), 0);
  for (std::size_t i = rank(); i-- > 0;) {
    auto m = static_cast<std::size_t>((*moduli_)[i]);
    e[i] = static_cast<std::int64_t>(index % m);
    index /= m;
  }
  return GroupElt(*this, std::move(e));
}

std::vector<GroupElt> FinAbGroup::elements() const {
  std::vector<GroupElt> out;
  std::size_t n = order();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

FinAbGroup FinAbGroup::drop_front(std::size_t count) const {
  if (count > rank()) throw std::out_of_range("drop_front past the end of the factor list");
  return FinAbGroup(std::vector<std::int64_t>(moduli_->begin() + static_cast<std::ptrdiff_t>(count),
                                              moduli_->end()));
}

std::string FinAbGroup::to_string() const {
  if (moduli_->empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < moduli_->size(); ++i) {
    if (i) out += ",";
    out += std::to_string((*moduli_)[i]);
  }
  return out;
}

GroupElt::GroupElt(FinAbGroup group, std::vector<std::int64_t> exponents)
    : group_(std::move(group)), exps_(std::move(exponents)) {
  if (exps_.size() != group_.rank())
    throw std::invalid_argument("exponent vector of length " + std::to_string(exps_.size()) +
                                " does not fit group " + group_.to_string());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::int64_t m = group_.modulus(i);
    exps_[i] %= m;
    if (exps_[i] < 0) exps_[i] += m;
  }
}

std::size_t GroupElt::index() const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    idx = idx * static_cast<std::size_t>(group_.modulus(i)) + static_cast<std::size_t>(exps_[i]);
  return idx;
}

bool GroupElt::is_identity() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int64_t k) { return k == 0; });
}

GroupElt GroupElt::operator*(const GroupElt& other) const {
  if (!(group_ == other.group_))
    throw std::invalid_argument("group mismatch: " + group_.to_string() + " vs " +
                                other.group_.to_string());
  std::vector<std::int64_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = (exps_[i] + other.exps_[i]) % group_.modulus(i);
  return GroupElt(group_, std::move(e));
}

GroupElt GroupElt::inverse() const {
  std::vector<std::int64_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = (group_.modulus(i) - exps_[i]) % group_.modulus(i);
  return GroupElt(group_, std::move(e));
}

__extension__ typedef __int128 wide;

GroupElt GroupElt::pow(std::int64_t k) const {
  std::vector<std::int64_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::int64_t m = group_.modulus(i);
    std::int64_t kk = k % m;
    e[i] = static_cast<std::int64_t>((static_cast<wide>(exps_[i]) * kk) % m);
  }
  return GroupElt(group_, std::move(e));
}

std::int64_t GroupElt::order() const {
  std::int64_t n = 1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::int64_t m = group_.modulus(i);
    std::int64_t oi = m / std::gcd(m, exps_[i]);
    n = std::lcm(n, oi);
  }
  return n;
}

std::string GroupElt::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(exps_[i]);
  }
  return out + ")";
}

GroupElt element_arithmetic(GroupOp op, const GroupElt& x, const GroupElt* y, std::int64_t power) {
  switch (op) {
    case GroupOp::Mul:
      if (y == nullptr) throw std::invalid_argument("mul needs two operands");
      return x * *y;
    case GroupOp::Inv:
      return x.inverse();
    case GroupOp::Pow:
      return x.pow(power);
  }
  throw std::logic_error("unknown group operation");
}

GroupElt parse_element(const FinAbGroup& group, std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
  if (!t.empty() && t.front() == '(') {
    if (t.back() != ')') throw std::invalid_argument("unbalanced parenthesis in '" + std::string(text) + "'");
    t = t.substr(1, t.size() - 2);
  }
  std::vector<std::int64_t> e = parse_int_list(t, ',');
  if (e.size() != group.rank())
    throw std::invalid_argument("element '" + std::string(text) + "' has " + std::to_string(e.size()) +
                                " exponents; group " + group.to_string() + " needs " +
                                std::to_string(group.rank()));
  return GroupElt(group, std::move(e));
}

std::vector<GroupElt> subgroup_closure(std::span<const GroupElt> gens, const FinAbGroup& group) {
  for (const GroupElt& g : gens)
    if (!(g.group() == group)) throw std::invalid_argument("generator outside group " + group.to_string());
  std::vector<char> seen(group.order(), 0);
  std::vector<GroupElt> found;
  std::deque<GroupElt> queue;
  GroupElt e = group.identity();
  seen[e.index()] = 1;
  found.push_back(e);
  queue.push_back(e);
  while (!queue.empty()) {
    GroupElt h = queue.front();
    queue.pop_front();
    for (const GroupElt& s : gens) {
      GroupElt next = h * s;
      if (!seen[next.index()]) {
        seen[next.index()] = 1;
        found.push_back(next);
        queue.push_back(next);
      }
    }
  }
  return found;
}

bool generates(std::span<const GroupElt> gens, const FinAbGroup& group) {
  return subgroup_closure(gens, group).size() == group.order();
}

InvariantFactors predicted_torsion(const FinAbGroup& group) {
  std::vector<Integer> orders;
  const auto& m = group.moduli();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) orders.emplace_back(std::gcd(m[i], m[j]));
  return canonical_invariant_factors(orders);
}

}  // namespace coinv

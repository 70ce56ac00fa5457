#include "coinv/group_ring.hpp"

#include <deque>
#include <stdexcept>

namespace coinv {

namespace {

Domain join(Domain a, Domain b) { return (a == Domain::Q || b == Domain::Q) ? Domain::Q : Domain::Z; }

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

RingElt::RingElt(FinAbGroup group, Domain domain)
    : group_(std::move(group)), coeffs_(group_.order()), domain_(domain) {}

RingElt::RingElt(FinAbGroup group, RatVector coefficients, Domain domain)
    : group_(std::move(group)), coeffs_(std::move(coefficients)), domain_(domain) {
  if (coeffs_.size() != group_.order())
    throw std::invalid_argument("coefficient vector does not match group order");
  for (Rational& c : coeffs_) c.canonicalize();
  if (domain_ == Domain::Z && !is_integral())
    throw std::domain_error("fractional coefficient in an element tagged Z[G]");
}

RingElt RingElt::monomial(const GroupElt& g, const Rational& c) {
  RingElt out(g.group(), coinv::is_integral(c) ? Domain::Z : Domain::Q);
  out.coeffs_[g.index()] = c;
  return out;
}

RingElt RingElt::parse(const FinAbGroup& group, std::string_view text) {
  RingElt out(group, Domain::Q);
  std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty ring element");
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' in ring element '" + s + "'");
    }
    first = false;
    std::size_t end = pos;
    int depth = 0;
    while (end < s.size()) {
      char c = s[end];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && end > pos && (c == '+' || c == '-') && s[end - 1] != '*' && s[end - 1] != '/')
        break;
      ++end;
    }
    std::string term = trim(std::string_view(s).substr(pos, end - pos));
    pos = end;
    if (term.empty()) throw std::invalid_argument("empty term in ring element '" + s + "'");
    Rational coef = 1;
    std::string mono;
    if (std::size_t star = term.find('*'); star != std::string::npos) {
      coef = parse_rational(trim(term.substr(0, star)));
      mono = trim(term.substr(star + 1));
    } else if (term.front() == '(') {
      mono = term;
    } else {
      coef = parse_rational(term);
    }
    GroupElt g = mono.empty() ? group.identity() : parse_element(group, mono);
    out.add_term(g, sign * coef);
  }
  if (out.is_integral()) out.domain_ = Domain::Z;
  return out;
}

void RingElt::add_term(const GroupElt& g, const Rational& c) {
  if (!(g.group() == group_)) throw std::invalid_argument("group mismatch in add_term");
  coeffs_[g.index()] += c;
  if (!coinv::is_integral(c)) domain_ = Domain::Q;
}

bool RingElt::is_zero() const {
  for (const Rational& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool RingElt::is_integral() const {
  for (const Rational& c : coeffs_)
    if (!coinv::is_integral(c)) return false;
  return true;
}

Rational RingElt::augmentation() const {
  Rational s = 0;
  for (const Rational& c : coeffs_) s += c;
  return s;
}

RingElt RingElt::as_integral() const {
  if (!is_integral()) throw std::domain_error("element " + to_string() + " is not in Z[G]");
  RingElt out = *this;
  out.domain_ = Domain::Z;
  return out;
}

RingElt RingElt::as_rational() const {
  RingElt out = *this;
  out.domain_ = Domain::Q;
  return out;
}

IntVector RingElt::integer_coefficients() const {
  IntVector out;
  out.reserve(coeffs_.size());
  for (const Rational& c : coeffs_) {
    if (!coinv::is_integral(c)) throw std::domain_error("element " + to_string() + " is not in Z[G]");
    out.push_back(c.get_num());
  }
  return out;
}

RingElt RingElt::shifted(const GroupElt& g) const {
  if (!(g.group() == group_)) throw std::invalid_argument("group mismatch in shift");
  RingElt out(group_, domain_);
  const std::size_t n = coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    out.coeffs_[(group_.element_at(i) * g).index()] = coeffs_[i];
  }
  return out;
}

void RingElt::check_same_group(const RingElt& other) const {
  if (!(group_ == other.group_))
    throw std::invalid_argument("group mismatch: " + group_.to_string() + " vs " +
                                other.group_.to_string());
}

RingElt RingElt::operator-() const {
  RingElt out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

RingElt& RingElt::operator+=(const RingElt& other) {
  check_same_group(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  domain_ = join(domain_, other.domain_);
  return *this;
}

RingElt& RingElt::operator-=(const RingElt& other) {
  check_same_group(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  domain_ = join(domain_, other.domain_);
  return *this;
}

RingElt operator*(const RingElt& a, const RingElt& b) {
  a.check_same_group(b);
  const FinAbGroup& g = a.group_;
  const auto& mod = g.moduli();
  const std::size_t n = a.coeffs_.size();
  const std::size_t rank = mod.size();
  // exponent table for index arithmetic
  std::vector<std::int64_t> exps(n * rank);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t idx = i;
    for (std::size_t k = rank; k-- > 0;) {
      exps[i * rank + k] = static_cast<std::int64_t>(idx % static_cast<std::size_t>(mod[k]));
      idx /= static_cast<std::size_t>(mod[k]);
    }
  }
  RingElt out(g, join(a.domain_, b.domain_));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      std::size_t idx = 0;
      for (std::size_t k = 0; k < rank; ++k)
        idx = idx * static_cast<std::size_t>(mod[k]) +
              static_cast<std::size_t>((exps[i * rank + k] + exps[j * rank + k]) % mod[k]);
      out.coeffs_[idx] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

RingElt operator*(const RingElt& a, const Rational& s) {
  RingElt out = a;
  for (Rational& c : out.coeffs_) c *= s;
  if (!coinv::is_integral(s)) out.domain_ = Domain::Q;
  return out;
}

std::string RingElt::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    out += Rational(abs(c)).get_str() + "*" + group_.element_at(i).to_string();
  }
  return out.empty() ? "0" : out;
}

RingElt ring_arithmetic(RingOp op, const RingElt& u, const RingElt* v, const Rational& scalar) {
  switch (op) {
    case RingOp::Add:
      if (!v) throw std::invalid_argument("add needs two operands");
      return u + *v;
    case RingOp::Neg:
      return -u;
    case RingOp::Mul:
      if (!v) throw std::invalid_argument("mul needs two operands");
      return u * *v;
    case RingOp::Scale:
      return u * scalar;
  }
  throw std::logic_error("unknown ring operation");
}

RingElt group_sum(const FinAbGroup& group) {
  RatVector c(group.order(), Rational(1));
  return RingElt(group, std::move(c), Domain::Z);
}

RingElt axis_sum(const FinAbGroup& group, std::size_t i) {
  GroupElt p = group.generator(i);
  RingElt out(group, Domain::Z);
  for (std::int64_t k = 0; k < group.modulus(i); ++k) out.add_term(p.pow(k), 1);
  return out;
}

RingElt complement_sum(const FinAbGroup& group, std::size_t i) {
  if (i >= group.rank()) throw std::out_of_range("complement_sum index out of range");
  // Q_i is the indicator of the subgroup sum_{k_i = 0}.
  RingElt out(group, Domain::Z);
  for (std::size_t idx = 0; idx < group.order(); ++idx) {
    GroupElt g = group.element_at(idx);
    if (g.exponents()[i] == 0) out.add_term(g, 1);
  }
  return out;
}

RingElt one_minus(const GroupElt& g) {
  RingElt out = RingElt::one(g.group());
  out.add_term(g, -1);
  return out;
}

RingElt special_element(const FinAbGroup& group, SpecialKind kind, std::size_t i) {
  switch (kind) {
    case SpecialKind::N:
      return group_sum(group);
    case SpecialKind::P:
      return axis_sum(group, i);
    case SpecialKind::Q:
      return complement_sum(group, i);
  }
  throw std::logic_error("unknown special element");
}

CoboundarySolver::CoboundarySolver(FinAbGroup group, std::vector<GroupElt> generators)
    : group_(std::move(group)), gens_(std::move(generators)) {
  const std::size_t n = group_.order();
  parent_.assign(n, 0);
  last_gen_.assign(n, 0);
  reached_.assign(n, 0);
  for (const GroupElt& s : gens_)
    if (!(s.group() == group_)) throw std::invalid_argument("generator outside group " + group_.to_string());
  std::deque<std::size_t> queue;
  const std::size_t e = group_.identity().index();
  reached_[e] = 1;
  queue.push_back(e);
  std::size_t count = 1;
  while (!queue.empty()) {
    std::size_t h = queue.front();
    queue.pop_front();
    GroupElt hg = group_.element_at(h);
    for (std::size_t a = 0; a < gens_.size(); ++a) {
      std::size_t next = (hg * gens_[a]).index();
      if (reached_[next]) continue;
      reached_[next] = 1;
      parent_[next] = h;
      last_gen_[next] = a;
      queue.push_back(next);
      ++count;
    }
  }
  if (count != n)
    throw std::invalid_argument("coboundary generators do not generate G = " + group_.to_string());
}

std::vector<std::size_t> CoboundarySolver::word(const GroupElt& target) const {
  if (!(target.group() == group_)) throw std::invalid_argument("target outside group");
  std::vector<std::size_t> w;
  const std::size_t e = group_.identity().index();
  for (std::size_t cur = target.index(); cur != e; cur = parent_[cur]) w.push_back(last_gen_[cur]);
  return {w.rbegin(), w.rend()};
}

std::vector<RingElt> CoboundarySolver::solve(const GroupElt& target) const {
  std::vector<RingElt> s(gens_.size(), RingElt(group_, Domain::Z));
  GroupElt prefix = group_.identity();
  for (std::size_t a : word(target)) {
    s[a].add_term(prefix, 1);
    prefix = prefix * gens_[a];
  }
  return s;
}

std::vector<RingElt> solve_coboundary(std::span<const GroupElt> generators, const GroupElt& target) {
  return CoboundarySolver(target.group(), std::vector<GroupElt>(generators.begin(), generators.end()))
      .solve(target);
}

}  // namespace coinv

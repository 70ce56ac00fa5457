#include <stdexcept>

#include "coinv/presentation.hpp"

namespace coinv {

namespace {

// Base case over Z_m: coefficients s_0..s_{m-1} with sum s_j integral.
// c_0 = 0, c_j = frac(c_{j-1} + s_j) gives s_j - c_j + c_{j-1} integral for
// j >= 1, and at j = 0 the defect is sum s_j.
RatVector cyclic_solution(const RatVector& s) {
  RatVector c(s.size());
  for (std::size_t j = 1; j < s.size(); ++j) c[j] = fractional_part(c[j - 1] + s[j]);
  return c;
}

// Element of Q[G] supported on the p_1-graded piece k, from a vector over H.
void embed_slice(RatVector& out, const RatVector& h, std::size_t k) {
  const std::size_t hn = h.size();
  for (std::size_t i = 0; i < hn; ++i) out[k * hn + i] = h[i];
}

RatVector slice(const RatVector& v, std::size_t k, std::size_t hn) {
  return RatVector(v.begin() + static_cast<std::ptrdiff_t>(k * hn),
                   v.begin() + static_cast<std::ptrdiff_t>((k + 1) * hn));
}

RingElt solve_recursive(const FinAbGroup& G, const std::vector<RingElt>& r) {
  const std::size_t n = G.rank();
  if (n == 0) return RingElt(G, Domain::Q);
  const std::size_t m1 = static_cast<std::size_t>(G.modulus(0));
  if (n == 1) return RingElt(G, cyclic_solution(r[0].coefficients()), Domain::Q);

  const FinAbGroup H = G.drop_front(1);
  const std::size_t hn = H.order();

  // y = sum_k y_k p_1^k with y_k solving the problem for (r_{i,k})_{i >= 2} over H.
  RatVector y(G.order());
  for (std::size_t k = 0; k < m1; ++k) {
    std::vector<RingElt> rk;
    rk.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      rk.emplace_back(H, slice(r[i].coefficients(), k, hn), Domain::Q);
    embed_slice(y, solve_recursive(H, rk).coefficients(), k);
  }
  RingElt y_elt(G, std::move(y), Domain::Q);

  // w = r_1 - y (e - p_1) is congruent to s Q_1 modulo Z[G] with s in Q[G_1].
  RingElt w = r[0] - y_elt * one_minus(G.generator(0));
  const std::size_t e_h = H.identity().index();
  RatVector s(m1);
  for (std::size_t k = 0; k < m1; ++k) s[k] = w.coeff_at(k * hn + e_h);
  RatVector sq(G.order());
  for (std::size_t k = 0; k < m1; ++k)
    for (std::size_t i = 0; i < hn; ++i) sq[k * hn + i] = s[k];
  if (!(w - RingElt(G, sq, Domain::Q)).is_integral())
    throw std::logic_error("lemma_solution: r_1 - y(e - p_1) is not congruent to a multiple of Q_1");

  RatVector z = cyclic_solution(s);
  RatVector zq(G.order());
  for (std::size_t k = 0; k < m1; ++k)
    for (std::size_t i = 0; i < hn; ++i) zq[k * hn + i] = z[k];
  return y_elt + RingElt(G, std::move(zq), Domain::Q);
}

void check_count(const FinAbGroup& G, std::span<const RingElt> r, const char* who) {
  if (r.size() != G.rank())
    throw std::invalid_argument(std::string(who) + ": expected " + std::to_string(G.rank()) +
                                " elements, got " + std::to_string(r.size()));
  for (const RingElt& x : r)
    if (!(x.group() == G)) throw std::invalid_argument(std::string(who) + ": element outside Q[G]");
}

void check_pairs(const FinAbGroup& G, std::span<const RingElt> r, const char* who) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(r[i] * one_minus(G.generator(j)) - r[j] * one_minus(G.generator(i))).is_integral())
        throw std::invalid_argument(std::string(who) + ": r_" + std::to_string(i + 1) + "(e - p_" +
                                    std::to_string(j + 1) + ") - r_" + std::to_string(j + 1) + "(e - p_" +
                                    std::to_string(i + 1) + ") is not integral");
}

}  // namespace

RingElt lemma_solution(const FinAbGroup& group, std::span<const RingElt> r) {
  check_count(group, r, "lemma_solution");
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!(r[i] * axis_sum(group, i)).is_integral())
      throw std::invalid_argument("lemma_solution: r_" + std::to_string(i + 1) + " P_" + std::to_string(i + 1) +
                                  " is not integral");
  check_pairs(group, r, "lemma_solution");
  RingElt x = solve_recursive(group, std::vector<RingElt>(r.begin(), r.end()));
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!(r[i] - x * one_minus(group.generator(i))).is_integral())
      throw std::logic_error("lemma_solution: postcondition failed for i = " + std::to_string(i + 1));
  return x;
}

std::vector<RingElt> lemma_adjust(const FinAbGroup& group, std::span<const RingElt> r) {
  check_count(group, r, "lemma_adjust");
  check_pairs(group, r, "lemma_adjust");
  const std::size_t n = r.size();
  const RingElt N = group_sum(group);
  const std::size_t e = group.identity().index();
  std::vector<RingElt> s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RingElt rp = r[i] * axis_sum(group, i);
    Rational t = rp.coeff_at(e);
    if (!(rp - N * t).is_integral())
      throw std::invalid_argument("lemma_adjust: r_" + std::to_string(i + 1) + " P_" + std::to_string(i + 1) +
                                  " is not congruent to a multiple of N");
    s.push_back(r[i] - complement_sum(group, i) * t);
  }
  RingElt x = lemma_solution(group, s);
  std::vector<RingElt> u;
  u.reserve(n);
  for (std::size_t i = 0; i < n; ++i) u.push_back((s[i] - x * one_minus(group.generator(i))).as_integral());
  return u;
}

}  // namespace coinv

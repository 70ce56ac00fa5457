#include <numeric>
#include <stdexcept>

#include "coinv/presentation.hpp"

namespace coinv {

namespace {

// Columns: alpha(p_i)(h) at i |G| + h, beta(p_j)(h) at (n + j) |G| + h.
// Rows: one per coordinate (g, i, j) of M, in ModuleBasis order.
RatMatrix split_system(const FinAbGroup& G) {
  const std::size_t n = G.rank();
  const std::size_t order = G.order();
  ModuleBasis basis{order, n, n};
  RatMatrix m(basis.size(), 2 * n * order);
  std::vector<GroupElt> elems = G.elements();
  std::vector<std::size_t> back(n * order);  // index of g p_j^{-1}
  for (std::size_t j = 0; j < n; ++j) {
    GroupElt inv = G.generator(j).inverse();
    for (std::size_t g = 0; g < order; ++g) back[j * order + g] = (elems[g] * inv).index();
  }
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t row = basis.position(g, i, j);
        // alpha_i (e - p_j) at g: alpha_i(g) - alpha_i(g p_j^{-1})
        m(row, i * order + g) += 1;
        m(row, i * order + back[j * order + g]) -= 1;
        m(row, (n + j) * order + g) += 1;
        m(row, (n + j) * order + back[i * order + g]) -= 1;
      }
  return m;
}

}  // namespace

TorsionClassifier::TorsionClassifier(FinAbGroup group)
    : group_(group), data_(CocycleData::standard(group)), solver_(split_system(group)) {
  if (group_.rank() == 0) throw std::invalid_argument("torsion classifier needs a nontrivial group");
  nullspace_ = solver_.nullspace();
}

TorsionClassifier::Split TorsionClassifier::split(std::span<const Integer> r, const RatVector* shift) const {
  const std::size_t n = group_.rank();
  const std::size_t order = group_.order();
  if (r.size() != order * n * n)
    throw std::invalid_argument("vector length " + std::to_string(r.size()) + " does not match M(A,B) of rank " +
                                std::to_string(order * n * n));
  RatVector b(r.begin(), r.end());
  std::optional<RatVector> sol = solver_.solve(b);
  if (!sol) throw std::domain_error("class is not torsion: r is not in A_Q + B_Q");
  if (shift)
    for (std::size_t k = 0; k < sol->size(); ++k) (*sol)[k] += (*shift)[k];
  Split s;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    RatVector c(sol->begin() + static_cast<std::ptrdiff_t>(i * order),
                sol->begin() + static_cast<std::ptrdiff_t>((i + 1) * order));
    (i < n ? s.alpha : s.beta).emplace_back(group_, std::move(c), Domain::Q);
  }
  return s;
}

Integer TorsionClassifier::residue_from(const Split& s, std::size_t i, std::size_t j) const {
  RingElt kappa = (s.alpha[i] + s.beta[i]) * one_minus(group_.generator(j));
  const Rational t = kappa.coeff(group_.identity());
  for (const Rational& c : kappa.coefficients())
    if (!is_integral(c - t))
      throw std::logic_error("kappa - t N is not integral for pair (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")");
  const Integer d = std::gcd(group_.modulus(i), group_.modulus(j));
  Rational td = t * Rational(d);
  if (!is_integral(td))
    throw std::logic_error("t d is not integral for pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ")");
  return mod_floor(td.get_num(), d);
}

TorsionResidues TorsionClassifier::residues_from(const Split& s) const {
  TorsionResidues out;
  const std::size_t n = group_.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      out.pairs.emplace_back(i, j);
      out.moduli.push_back(Integer(std::gcd(group_.modulus(i), group_.modulus(j))));
      out.residues.push_back(residue_from(s, i, j));
    }
  return out;
}

TorsionResidues TorsionClassifier::classify(std::span<const Integer> r) const {
  return residues_from(split(r, nullptr));
}

TorsionResidues TorsionClassifier::classify_checked(std::span<const Integer> r, std::mt19937_64& rng) const {
  TorsionResidues first = classify(r);
  if (nullspace_.empty()) return first;
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 6);
  RatVector shift(solver_.unknowns());
  for (const RatVector& v : nullspace_) {
    Rational c(coef(rng), den(rng));
    c.canonicalize();
    for (std::size_t k = 0; k < shift.size(); ++k) shift[k] += c * v[k];
  }
  TorsionResidues second = residues_from(split(r, &shift));
  if (!(first == second)) throw std::logic_error("torsion residues depend on the choice of alpha, beta");
  return first;
}

Integer TorsionClassifier::pair_residue(std::span<const Integer> r, std::size_t i, std::size_t j) const {
  if (i >= group_.rank() || j >= group_.rank() || i == j) throw std::out_of_range("pair index out of range");
  return residue_from(split(r, nullptr), i, j);
}

TorsionResidues torsion_class_invariant(const FinAbGroup& group, std::span<const Integer> r) {
  return TorsionClassifier(group).classify(r);
}

}  // namespace coinv

#include "coinv/morphism.hpp"

#include <stdexcept>

namespace coinv {

namespace {

// table[x * n + y] = index of (element x) * (element y)
std::vector<std::size_t> product_table(const FinAbGroup& G) {
  const std::size_t n = G.order();
  std::vector<GroupElt> elems = G.elements();
  std::vector<std::size_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = (elems[x] * elems[y]).index();
  return table;
}

void check_same_group(const CocycleData& a, const CocycleData& b) {
  if (!(a.group() == b.group()))
    throw std::invalid_argument("transfer between different groups: " + a.group().to_string() + " vs " +
                                b.group().to_string());
}

}  // namespace

TransferMap transfer_from_coefficients(const CocycleData& source, const CocycleData& target,
                                       const std::vector<std::vector<RingElt>>& s,
                                       const std::vector<std::vector<RingElt>>& t) {
  check_same_group(source, target);
  const FinAbGroup& G = source.group();
  const std::size_t n = G.order();
  const std::size_t A = source.a_count(), B = source.b_count();
  const std::size_t C = target.a_count(), D = target.b_count();
  if (s.size() != A || t.size() != B) throw std::invalid_argument("coefficient tables do not match source labels");
  for (const auto& row : s)
    if (row.size() != C) throw std::invalid_argument("s table does not match target A labels");
  for (const auto& row : t)
    if (row.size() != D) throw std::invalid_argument("t table does not match target B labels");

  TransferMap map{build_presentation(source), build_presentation(target), IntMatrix()};
  const ModuleBasis& sb = map.source.basis;
  const ModuleBasis& tb = map.target.basis;
  map.matrix = IntMatrix(sb.size(), tb.size());
  const std::vector<std::size_t> mul = product_table(G);

  for (std::size_t a = 0; a < A; ++a)
    for (std::size_t b = 0; b < B; ++b)
      for (std::size_t c = 0; c < C; ++c)
        for (std::size_t d = 0; d < D; ++d) {
          IntVector st = (s[a][c] * t[b][d]).integer_coefficients();
          for (std::size_t x = 0; x < n; ++x) {
            if (st[x] == 0) continue;
            for (std::size_t g = 0; g < n; ++g)
              map.matrix(sb.position(g, a, b), tb.position(mul[g * n + x], c, d)) += st[x];
          }
        }
  return map;
}

TransferMap build_transfer(const CocycleData& source, const CocycleData& target) {
  check_same_group(source, target);
  CoboundarySolver over_a(source.group(), source.mu_a());
  CoboundarySolver over_b(source.group(), source.mu_b());
  // solve() returns coefficients indexed by source label; transpose into s[a][c].
  auto table = [](const CoboundarySolver& solver, const std::vector<GroupElt>& targets, std::size_t labels) {
    std::vector<std::vector<RingElt>> out(labels, std::vector<RingElt>(targets.size(), RingElt(solver.group())));
    for (std::size_t c = 0; c < targets.size(); ++c) {
      std::vector<RingElt> col = solver.solve(targets[c]);
      for (std::size_t a = 0; a < labels; ++a) out[a][c] = col[a];
    }
    return out;
  };
  return transfer_from_coefficients(source, target, table(over_a, target.mu_a(), source.a_count()),
                                    table(over_b, target.mu_b(), source.b_count()));
}

IntVector apply_transfer(const TransferMap& map, std::span<const Integer> x) { return row_times(x, map.matrix); }

ContainmentReport check_containment(const TransferMap& map) {
  const std::size_t ambient = map.target.basis.size();
  Quotient c(map.target.a_family(), ambient);
  Quotient d(map.target.b_family(), ambient);
  ContainmentReport r{true, true};
  for (const IntVector& row : map.source.a_family())
    if (!c.contains(apply_transfer(map, row))) {
      r.a_into_c = false;
      break;
    }
  for (const IntVector& row : map.source.b_family())
    if (!d.contains(apply_transfer(map, row))) {
      r.b_into_d = false;
      break;
    }
  return r;
}

TorsionIsoReport induced_torsion_iso_check(const TransferMap& map) {
  Quotient source(map.source.relation_rows, map.source.basis.size());
  Quotient target(map.target.relation_rows, map.target.basis.size());
  return induced_torsion_iso_check(map, source, target);
}

TorsionIsoReport induced_torsion_iso_check(const TransferMap& map, const Quotient& source,
                                           const Quotient& target) {
  for (std::size_t k = 0; k < map.source.relation_rows.size(); ++k)
    if (!target.contains(apply_transfer(map, map.source.relation_rows[k])))
      throw std::logic_error("transfer maps relation row " + std::to_string(k) + " outside the target relations");

  TorsionIsoReport report;
  report.source_factors = source.torsion_moduli();
  report.target_factors = target.torsion_moduli();
  const std::size_t ns = report.source_factors.size();
  const std::size_t nt = report.target_factors.size();
  report.induced = IntMatrix(ns, nt);
  for (std::size_t k = 0; k < ns; ++k) {
    IntVector y = apply_transfer(map, source.torsion_generators()[k]);
    if (!target.free_part_vanishes(y)) throw std::logic_error("image of a torsion class has a free component");
    IntVector coords = target.torsion_coordinates(y);
    for (std::size_t j = 0; j < nt; ++j) report.induced(k, j) = coords[j];
  }

  Integer source_order = 1, target_order = 1;
  for (const Integer& d : report.source_factors) source_order *= d;
  for (const Integer& d : report.target_factors) target_order *= d;
  if (source_order != target_order) return report;
  if (nt == 0) {
    report.is_iso = true;
    return report;
  }
  // Surjective iff rows of K together with d'_j e_j span Z^{nt}.
  std::vector<IntVector> rows = report.induced.row_vectors();
  for (std::size_t j = 0; j < nt; ++j) {
    IntVector r(nt);
    r[j] = report.target_factors[j];
    rows.push_back(std::move(r));
  }
  CokernelInvariants coker = cokernel_invariants(rows, nt);
  report.is_iso = coker.free_rank == 0 && coker.torsion_factors.empty();
  return report;
}

TransferMap compose(const TransferMap& first, const TransferMap& second) {
  if (first.target.basis.size() != second.source.basis.size() ||
      first.target.relation_rows != second.source.relation_rows)
    throw std::invalid_argument("transfers do not compose: intermediate modules differ");
  return TransferMap{first.source, second.target, first.matrix * second.matrix};
}

bool round_trip_fixes_torsion(const TransferMap& forth, const TransferMap& back) {
  return round_trip_fixes_torsion(forth, back, Quotient(forth.source.relation_rows, forth.source.basis.size()));
}

bool round_trip_fixes_torsion(const TransferMap& forth, const TransferMap& back, const Quotient& source) {
  if (forth.target.basis.size() != back.source.basis.size() ||
      back.target.basis.size() != forth.source.basis.size())
    throw std::invalid_argument("round trip needs maps X -> Y and Y -> X");
  for (const IntVector& x : source.torsion_generators()) {
    IntVector y = apply_transfer(back, apply_transfer(forth, x));
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= x[i];
    if (!source.contains(y)) return false;
  }
  return true;
}

}  // namespace coinv

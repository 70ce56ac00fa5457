#include "coinv/bv.hpp"

#include <map>
#include <stdexcept>

namespace coinv {

void OrderedBVDiagram::check_level(std::size_t level) const {
  if (level < 1 || level > level_count())
    throw std::out_of_range("level " + std::to_string(level) + " outside 1.." + std::to_string(level_count()));
}

OrderedBVDiagram OrderedBVDiagram::create(FinAbGroup group, std::vector<BaseTower> base,
                                          std::vector<std::vector<UpperTower>> upper) {
  if (base.empty()) throw std::invalid_argument("level 1 has no towers");
  OrderedBVDiagram d;
  d.group_ = std::move(group);
  auto register_names = [&](std::size_t level, const std::vector<std::string>& names) {
    std::map<std::string, std::size_t> seen;
    for (const std::string& n : names) {
      if (n.empty()) throw std::invalid_argument("empty tower name at level " + std::to_string(level));
      if (!seen.emplace(n, 0).second)
        throw std::invalid_argument("duplicate tower '" + n + "' at level " + std::to_string(level));
    }
    d.names_.push_back(names);
  };

  std::vector<std::string> names;
  for (const BaseTower& t : base) {
    if (t.cells.empty()) throw std::invalid_argument("tower '" + t.name + "' at level 1 has no cells");
    for (const GroupElt& g : t.cells)
      if (!(g.group() == d.group_))
        throw std::invalid_argument("cell label of tower '" + t.name + "' outside G = " + d.group_.to_string());
    names.push_back(t.name);
  }
  register_names(1, names);

  for (std::size_t li = 0; li < upper.size(); ++li) {
    const std::size_t level = li + 2;
    if (upper[li].empty()) throw std::invalid_argument("level " + std::to_string(level) + " has no towers");
    const std::vector<std::string>& below = d.names_.back();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < below.size(); ++i) index[below[i]] = i;
    std::vector<char> used(below.size(), 0);
    std::vector<std::vector<std::size_t>> idx;
    names.clear();
    for (const UpperTower& t : upper[li]) {
      if (t.traversal.empty())
        throw std::invalid_argument("tower '" + t.name + "' at level " + std::to_string(level) +
                                    " has an empty traversal");
      std::vector<std::size_t> seq;
      for (const std::string& n : t.traversal) {
        auto it = index.find(n);
        if (it == index.end())
          throw std::invalid_argument("tower '" + t.name + "' at level " + std::to_string(level) +
                                      " references unknown tower '" + n + "'");
        used[it->second] = 1;
        seq.push_back(it->second);
      }
      idx.push_back(std::move(seq));
      names.push_back(t.name);
    }
    for (std::size_t i = 0; i < below.size(); ++i)
      if (!used[i])
        throw std::invalid_argument("tower '" + below[i] + "' at level " + std::to_string(level - 1) +
                                    " is not used at level " + std::to_string(level));
    register_names(level, names);
    d.traversal_idx_.push_back(std::move(idx));
  }
  d.base_ = std::move(base);
  d.upper_ = std::move(upper);
  return d;
}

std::size_t OrderedBVDiagram::tower_count(std::size_t level) const { return names(level).size(); }

const std::vector<std::string>& OrderedBVDiagram::names(std::size_t level) const {
  check_level(level);
  return names_[level - 1];
}

std::size_t OrderedBVDiagram::index_of(std::size_t level, const std::string& name) const {
  const auto& n = names(level);
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] == name) return i;
  throw std::out_of_range("no tower '" + name + "' at level " + std::to_string(level));
}

const std::vector<UpperTower>& OrderedBVDiagram::upper(std::size_t level) const {
  check_level(level);
  if (level < 2) throw std::out_of_range("level 1 towers have no traversal");
  return upper_[level - 2];
}

const std::vector<std::size_t>& OrderedBVDiagram::traversal(std::size_t level, std::size_t v) const {
  check_level(level);
  if (level < 2) throw std::out_of_range("level 1 towers have no traversal");
  return traversal_idx_[level - 2].at(v);
}

DiagramStructure validate_diagram(const OrderedBVDiagram& d) {
  DiagramStructure s;
  std::vector<Integer> h;
  for (const BaseTower& t : d.base()) h.emplace_back(static_cast<unsigned long>(t.cells.size()));
  s.heights.push_back(std::move(h));
  for (std::size_t level = 2; level <= d.level_count(); ++level) {
    const std::size_t below = d.tower_count(level - 1), here = d.tower_count(level);
    IntMatrix a(below, here);
    std::vector<Integer> next(here);
    for (std::size_t v = 0; v < here; ++v)
      for (std::size_t u : d.traversal(level, v)) {
        a(u, v) += 1;
        next[v] += s.heights.back()[u];
      }
    s.incidence.push_back(std::move(a));
    s.heights.push_back(std::move(next));
  }
  return s;
}

CocycleProducts cocycle_products(const OrderedBVDiagram& d) {
  const FinAbGroup& G = d.group();
  CocycleProducts p;
  std::vector<GroupElt> total;
  std::vector<std::vector<GroupElt>> partials;
  for (const BaseTower& t : d.base()) {
    GroupElt c = G.identity();
    std::vector<GroupElt> part;
    for (const GroupElt& g : t.cells) {
      part.push_back(c);
      c = c * g;
    }
    total.push_back(c);
    partials.push_back(std::move(part));
  }
  p.total.push_back(std::move(total));
  p.partials.push_back(std::move(partials));
  for (std::size_t level = 2; level <= d.level_count(); ++level) {
    const std::vector<GroupElt>& below = p.total.back();
    std::vector<GroupElt> tot;
    std::vector<std::vector<GroupElt>> par;
    for (std::size_t v = 0; v < d.tower_count(level); ++v) {
      GroupElt c = G.identity();
      std::vector<GroupElt> part;
      for (std::size_t u : d.traversal(level, v)) {
        part.push_back(c);
        c = c * below[u];
      }
      tot.push_back(c);
      par.push_back(std::move(part));
    }
    p.total.push_back(std::move(tot));
    p.partials.push_back(std::move(par));
  }
  return p;
}

namespace {

void flatten(const OrderedBVDiagram& d, std::size_t level, std::size_t v, std::vector<GroupElt>& out) {
  if (level == 1) {
    const auto& cells = d.base()[v].cells;
    out.insert(out.end(), cells.begin(), cells.end());
    return;
  }
  for (std::size_t u : d.traversal(level, v)) flatten(d, level - 1, u, out);
}

}  // namespace

GroupElt flattened_product(const OrderedBVDiagram& d, std::size_t level, std::size_t v) {
  std::vector<GroupElt> cells;
  flatten(d, level, v, cells);
  GroupElt c = d.group().identity();
  for (const GroupElt& g : cells) c = c * g;
  return c;
}

NondegeneracyReport nondegeneracy_check(const OrderedBVDiagram& d) {
  CocycleProducts p = cocycle_products(d);
  NondegeneracyReport r;
  r.overall = true;
  for (const auto& level : p.total) {
    bool ok = generates(level, d.group());
    r.per_level.push_back(ok);
    r.overall = r.overall && ok;
  }
  return r;
}

std::vector<std::vector<RingElt>> connection_coefficients(const OrderedBVDiagram& d, std::size_t level) {
  return connection_coefficients(d, cocycle_products(d), level);
}

std::vector<std::vector<RingElt>> connection_coefficients(const OrderedBVDiagram& d, const CocycleProducts& p,
                                                          std::size_t level) {
  if (level < 1 || level >= d.level_count())
    throw std::out_of_range("connection coefficients need levels " + std::to_string(level) + " and " +
                            std::to_string(level + 1));
  const FinAbGroup& G = d.group();
  const std::size_t below = d.tower_count(level), above = d.tower_count(level + 1);
  std::vector<std::vector<RingElt>> s(below, std::vector<RingElt>(above, RingElt(G)));
  const auto& xi = p.total[level - 1];
  for (std::size_t w = 0; w < above; ++w) {
    const auto& seq = d.traversal(level + 1, w);
    const auto& part = p.partials[level][w];
    for (std::size_t k = 0; k < seq.size(); ++k) s[seq[k]][w].add_term(part[k].inverse(), 1);

    RingElt lhs(G);
    for (std::size_t v = 0; v < below; ++v) lhs += one_minus(xi[v].inverse()) * s[v][w];
    if (!(lhs == one_minus(p.total[level][w].inverse())))
      throw std::logic_error("connection identity fails for tower '" + d.names(level + 1)[w] + "' at level " +
                             std::to_string(level + 1));
  }
  return s;
}

CocycleData skew_stage(const OrderedBVDiagram& x, const OrderedBVDiagram& y, std::size_t level) {
  if (!(x.group() == y.group()))
    throw std::invalid_argument("diagrams over different groups: " + x.group().to_string() + " vs " +
                                y.group().to_string());
  if (level < 1 || level > x.level_count() || level > y.level_count())
    throw std::out_of_range("level " + std::to_string(level) + " missing from a diagram");
  CocycleProducts px = cocycle_products(x), py = cocycle_products(y);
  std::vector<GroupElt> mu_a, mu_b;
  for (const GroupElt& g : px.total[level - 1]) mu_a.push_back(g.inverse());
  for (const GroupElt& g : py.total[level - 1]) mu_b.push_back(g.inverse());
  if (!generates(mu_a, x.group()))
    throw DegenerateCocycle("cocycle on X is degenerate at level " + std::to_string(level), level);
  if (!generates(mu_b, y.group()))
    throw DegenerateCocycle("cocycle on Y is degenerate at level " + std::to_string(level), level);
  return CocycleData::create(x.group(), x.names(level), mu_a, y.names(level), mu_b);
}

TransferMap skew_connecting_matrix(const OrderedBVDiagram& x, const OrderedBVDiagram& y, std::size_t level) {
  CocycleData here = skew_stage(x, y, level);
  CocycleData next = skew_stage(x, y, level + 1);
  return transfer_from_coefficients(here, next, connection_coefficients(x, level), connection_coefficients(y, level));
}

ZSystemReport zsystem_coinvariants(const OrderedBVDiagram& d) {
  DiagramStructure s = validate_diagram(d);
  ZSystemReport r;
  for (std::size_t level = 1; level <= d.level_count(); ++level) r.ranks.push_back(d.tower_count(level));
  for (const IntMatrix& a : s.incidence) r.alpha.push_back(a.transpose());
  return r;
}

StabilizationReport torsion_stabilization(const OrderedBVDiagram& x, const OrderedBVDiagram& y,
                                          std::size_t max_level) {
  if (!(x.group() == y.group()))
    throw std::invalid_argument("diagrams over different groups: " + x.group().to_string() + " vs " +
                                y.group().to_string());
  if (max_level < 1 || max_level > x.level_count() || max_level > y.level_count())
    throw std::out_of_range("requested " + std::to_string(max_level) + " levels; diagrams have " +
                            std::to_string(x.level_count()) + " and " + std::to_string(y.level_count()));
  StabilizationReport report;
  report.group = x.group();
  report.predicted = predicted_torsion(report.group);
  report.assumptions = {
      "roof sets shrinking to a single point is not checkable on finite levels",
      "partitions generating the topology is not checkable on finite levels",
  };
  NondegeneracyReport ndx = nondegeneracy_check(x), ndy = nondegeneracy_check(y);
  CocycleProducts px = cocycle_products(x), py = cocycle_products(y);

  std::vector<std::optional<CocycleData>> data(max_level);
  std::vector<std::optional<Quotient>> quotients(max_level);
  for (std::size_t n = 1; n <= max_level; ++n) {
    StageReport st;
    st.level = n;
    st.nondegenerate_x = ndx.per_level[n - 1];
    st.nondegenerate_y = ndy.per_level[n - 1];
    try {
      data[n - 1] = skew_stage(x, y, n);
      Presentation p = build_presentation(*data[n - 1]);
      quotients[n - 1].emplace(p.relation_rows, p.basis.size());
      CokernelInvariants inv = quotients[n - 1]->invariants();
      st.free_rank = inv.free_rank;
      st.torsion = inv.torsion_factors;
      st.matches_predicted = inv.torsion_factors == report.predicted;
    } catch (const DegenerateCocycle& e) {
      st.error = e.what();
    }
    report.stages.push_back(std::move(st));
  }
  for (std::size_t n = 1; n < max_level; ++n) {
    if (!data[n - 1] || !data[n]) continue;
    TransferMap map = transfer_from_coefficients(*data[n - 1], *data[n], connection_coefficients(x, px, n),
                                                 connection_coefficients(y, py, n));
    report.stages[n - 1].iso_to_next = induced_torsion_iso_check(map, *quotients[n - 1], *quotients[n]).is_iso;
  }
  report.verdict = true;
  for (std::size_t n = 0; n < report.stages.size(); ++n) {
    const StageReport& st = report.stages[n];
    if (!st.matches_predicted) report.verdict = false;
    if (n + 1 < report.stages.size() && st.iso_to_next != true) report.verdict = false;
  }
  return report;
}

}  // namespace coinv

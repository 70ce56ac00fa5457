#include "coinv/presentation.hpp"

#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coinv {

namespace {

void check_labels(const std::vector<std::string>& labels, const char* which) {
  if (labels.empty()) throw std::invalid_argument(std::string("label list ") + which + " is empty");
  std::set<std::string> seen;
  for (const std::string& l : labels) {
    if (l.empty()) throw std::invalid_argument(std::string("empty label in ") + which);
    if (!seen.insert(l).second)
      throw std::invalid_argument(std::string("duplicate label '") + l + "' in " + which);
  }
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

CocycleData CocycleData::create(FinAbGroup group, std::vector<std::string> a_labels,
                                std::vector<GroupElt> mu_a, std::vector<std::string> b_labels,
                                std::vector<GroupElt> mu_b) {
  check_labels(a_labels, "A");
  check_labels(b_labels, "B");
  if (a_labels.size() != mu_a.size() || b_labels.size() != mu_b.size())
    throw std::invalid_argument("every label needs exactly one value of mu");
  for (const auto* family : {&mu_a, &mu_b})
    for (const GroupElt& g : *family)
      if (!(g.group() == group))
        throw std::invalid_argument("value of mu outside group " + group.to_string());
  if (!generates(mu_a, group))
    throw std::invalid_argument("mu(A) does not generate G = " + group.to_string());
  if (!generates(mu_b, group))
    throw std::invalid_argument("mu(B) does not generate G = " + group.to_string());
  CocycleData d;
  d.group_ = std::move(group);
  d.a_labels_ = std::move(a_labels);
  d.b_labels_ = std::move(b_labels);
  d.mu_a_ = std::move(mu_a);
  d.mu_b_ = std::move(mu_b);
  return d;
}

CocycleData CocycleData::standard(const FinAbGroup& group) {
  std::vector<std::string> labels;
  std::vector<GroupElt> values;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    labels.push_back("p" + std::to_string(i + 1));
    values.push_back(group.generator(i));
  }
  if (labels.empty()) {
    // The trivial group has no p_i; a single label mapped to e stands in.
    labels.push_back("e");
    values.push_back(group.identity());
  }
  return create(group, labels, values, labels, values);
}

bool CocycleData::is_standard() const {
  if (group_.rank() == 0) return a_count() == 1 && b_count() == 1;
  if (a_count() != group_.rank() || b_count() != group_.rank()) return false;
  for (std::size_t i = 0; i < group_.rank(); ++i)
    if (!(mu_a_[i] == group_.generator(i)) || !(mu_b_[i] == group_.generator(i))) return false;
  return true;
}

CocycleData parse_cocycle_fixture(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<FinAbGroup> group;
  std::vector<std::pair<std::string, std::string>> a_raw, b_raw;
  bool saw_a = false, saw_b = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("fixture line " + std::to_string(line_no) + ": expected 'key: value'");
    std::string key = trim(line.substr(0, colon));
    std::string rest = line.substr(colon + 1);
    if (key == "group") {
      group = FinAbGroup::parse(trim(rest));
      continue;
    }
    if (key != "A" && key != "B")
      throw std::invalid_argument("fixture line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    auto& out = key == "A" ? a_raw : b_raw;
    (key == "A" ? saw_a : saw_b) = true;
    std::size_t pos = 0;
    while (true) {
      while (pos < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
      if (pos >= rest.size()) break;
      std::size_t eq = rest.find('=', pos);
      if (eq == std::string::npos)
        throw std::invalid_argument("fixture line " + std::to_string(line_no) + ": expected label=(...)");
      std::string name = trim(rest.substr(pos, eq - pos));
      pos = eq + 1;
      while (pos < rest.size() && rest[pos] == ' ') ++pos;
      std::size_t end;
      if (pos < rest.size() && rest[pos] == '(') {
        end = rest.find(')', pos);
        if (end == std::string::npos)
          throw std::invalid_argument("fixture line " + std::to_string(line_no) + ": missing ')'");
        ++end;
      } else {
        end = pos;
        while (end < rest.size() && !std::isspace(static_cast<unsigned char>(rest[end]))) ++end;
      }
      out.emplace_back(name, rest.substr(pos, end - pos));
      pos = end;
    }
  }
  if (!group) throw std::invalid_argument("fixture has no 'group:' line");
  if (!saw_a || !saw_b) throw std::invalid_argument("fixture needs both 'A:' and 'B:' lines");
  auto split = [&](const auto& raw, std::vector<std::string>& labels, std::vector<GroupElt>& values) {
    for (const auto& [name, value] : raw) {
      labels.push_back(name);
      values.push_back(parse_element(*group, value));
    }
  };
  std::vector<std::string> al, bl;
  std::vector<GroupElt> av, bv;
  split(a_raw, al, av);
  split(b_raw, bl, bv);
  return CocycleData::create(*group, al, av, bl, bv);
}

std::string format_cocycle_fixture(const CocycleData& data) {
  std::string out = "group: " + data.group().to_string() + "\n";
  auto line = [&](const char* key, const auto& labels, const auto& values) {
    out += key;
    out += ":";
    for (std::size_t i = 0; i < labels.size(); ++i) out += " " + labels[i] + "=" + values[i].to_string();
    out += "\n";
  };
  line("A", data.a_labels(), data.mu_a());
  line("B", data.b_labels(), data.mu_b());
  return out;
}

CocycleData random_cocycle_data(const FinAbGroup& group, std::size_t max_labels, std::mt19937_64& rng) {
  if (max_labels < group.rank() || max_labels == 0)
    throw std::invalid_argument("max_labels too small to generate G = " + group.to_string());
  std::uniform_int_distribution<std::size_t> count(1, max_labels);
  std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);
  auto family = [&](const char* prefix, std::vector<std::string>& labels, std::vector<GroupElt>& values) {
    for (;;) {
      labels.clear();
      values.clear();
      std::size_t k = count(rng);
      for (std::size_t i = 0; i < k; ++i) {
        labels.push_back(prefix + std::to_string(i + 1));
        values.push_back(group.element_at(pick(rng)));
      }
      if (generates(values, group)) return;
    }
  };
  std::vector<std::string> al, bl;
  std::vector<GroupElt> av, bv;
  family("a", al, av);
  family("b", bl, bv);
  return CocycleData::create(group, al, av, bl, bv);
}

ModuleBasis::Triple ModuleBasis::triple(std::size_t position) const {
  if (position >= size()) throw std::out_of_range("module position out of range");
  Triple t{};
  t.b = position % b_count;
  position /= b_count;
  t.a = position % a_count;
  t.g = position / a_count;
  return t;
}

IntVector ModuleBasis::assemble(const std::vector<std::vector<RingElt>>& blocks) const {
  if (blocks.size() != a_count) throw std::invalid_argument("block rows do not match |A|");
  IntVector v(size());
  for (std::size_t a = 0; a < a_count; ++a) {
    if (blocks[a].size() != b_count) throw std::invalid_argument("block columns do not match |B|");
    for (std::size_t b = 0; b < b_count; ++b) {
      IntVector c = blocks[a][b].integer_coefficients();
      for (std::size_t g = 0; g < group_order; ++g) v[position(g, a, b)] = c[g];
    }
  }
  return v;
}

RingElt ModuleBasis::component(const FinAbGroup& group, std::span<const Integer> v, std::size_t a,
                               std::size_t b) const {
  if (v.size() != size()) throw std::invalid_argument("vector length does not match module basis");
  RatVector c(group_order);
  for (std::size_t g = 0; g < group_order; ++g) c[g] = Rational(v[position(g, a, b)]);
  return RingElt(group, std::move(c), Domain::Z);
}

std::vector<IntVector> Presentation::a_family() const {
  return {relation_rows.begin(), relation_rows.begin() + static_cast<std::ptrdiff_t>(a_family_size())};
}

std::vector<IntVector> Presentation::b_family() const {
  return {relation_rows.begin() + static_cast<std::ptrdiff_t>(a_family_size()), relation_rows.end()};
}

Presentation build_presentation(const CocycleData& data) {
  const FinAbGroup& G = data.group();
  ModuleBasis basis{G.order(), data.a_count(), data.b_count()};
  std::vector<GroupElt> elems = G.elements();
  Presentation p{basis, {}, data};
  p.relation_rows.reserve(basis.group_order * (basis.a_count + basis.b_count));
  for (std::size_t a = 0; a < basis.a_count; ++a)
    for (std::size_t g = 0; g < elems.size(); ++g) {
      IntVector row(basis.size());
      for (std::size_t b = 0; b < basis.b_count; ++b) {
        row[basis.position(g, a, b)] += 1;
        row[basis.position((elems[g] * data.mu_b()[b]).index(), a, b)] -= 1;
      }
      p.relation_rows.push_back(std::move(row));
    }
  for (std::size_t b = 0; b < basis.b_count; ++b)
    for (std::size_t g = 0; g < elems.size(); ++g) {
      IntVector row(basis.size());
      for (std::size_t a = 0; a < basis.a_count; ++a) {
        row[basis.position(g, a, b)] += 1;
        row[basis.position((elems[g] * data.mu_a()[a]).index(), a, b)] -= 1;
      }
      p.relation_rows.push_back(std::move(row));
    }
  return p;
}

CokernelInvariants torsion_of_N(const CocycleData& data) {
  Presentation p = build_presentation(data);
  return cokernel_invariants(p.relation_rows, p.basis.size());
}

bool is_torsion_class(const CocycleData& data, std::span<const Integer> r) {
  Presentation p = build_presentation(data);
  if (r.size() != p.basis.size())
    throw std::invalid_argument("vector length does not match M(A,B)");
  return Quotient(p.relation_rows, p.basis.size()).is_torsion(r);
}

IntVector surjectivity_witness(const FinAbGroup& group, std::size_t k, std::size_t l) {
  const std::size_t n = group.rank();
  if (!(k < l && l < n)) throw std::out_of_range("witness needs 0 <= k < l < rank(G)");
  const std::int64_t mk = group.modulus(k), ml = group.modulus(l);
  const std::int64_t d = std::gcd(mk, ml);
  if (d == 1)
    throw std::domain_error("gcd(m_k, m_l) = 1: no torsion in component (" + std::to_string(k + 1) + "," +
                            std::to_string(l + 1) + ")");
  RingElt comp = complement_sum(group, k) * Rational(mk / d) - complement_sum(group, l) * Rational(ml / d);
  ModuleBasis basis{group.order(), n, n};
  std::vector<std::vector<RingElt>> blocks(n, std::vector<RingElt>(n, RingElt(group)));
  blocks[k][l] = comp;
  return basis.assemble(blocks);
}

}  // namespace coinv

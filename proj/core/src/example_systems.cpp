#include "coinv/example_systems.hpp"

#include <stdexcept>

namespace coinv {

OrderedBVDiagram rotation_diagram(const RotationSpec& spec, const GroupElt& long_label,
                                  const GroupElt& short_label) {
  if (spec.levels < 1) throw std::invalid_argument("rotation diagram needs at least one level");
  if (spec.cf_digits.size() + 1 < spec.levels)
    throw std::invalid_argument(std::to_string(spec.levels) + " levels need " + std::to_string(spec.levels - 1) +
                                " digits, got " + std::to_string(spec.cf_digits.size()));
  for (std::int64_t a : spec.cf_digits)
    if (a < 1) throw std::invalid_argument("continued-fraction digits must be >= 1");
  if (!(long_label.group() == short_label.group()))
    throw std::invalid_argument("labels lie in different groups");

  std::vector<BaseTower> base{{"L", {long_label}}, {"S", {short_label}}};
  std::vector<std::vector<UpperTower>> upper;
  for (std::size_t n = 1; n < spec.levels; ++n) {
    std::int64_t repeats = n == 1 ? spec.cf_digits[0] - 1 : spec.cf_digits[n - 1];
    UpperTower l{"L", std::vector<std::string>(static_cast<std::size_t>(repeats), "L")};
    l.traversal.push_back("S");
    upper.push_back({l, UpperTower{"S", {"L"}}});
  }
  return OrderedBVDiagram::create(long_label.group(), std::move(base), std::move(upper));
}

std::vector<Integer> convergent_denominators(const std::vector<std::int64_t>& digits, std::size_t count) {
  if (count > digits.size() + 1) throw std::invalid_argument("not enough digits for the requested convergents");
  std::vector<Integer> q;
  Integer prev = 0, cur = 1;  // q_{-1}, q_0
  for (std::size_t n = 0; n < count; ++n) {
    q.push_back(cur);
    if (n < digits.size()) {
      Integer next = Integer(static_cast<long>(digits[n])) * cur + prev;
      prev = cur;
      cur = next;
    }
  }
  return q;
}

std::pair<OrderedBVDiagram, OrderedBVDiagram> octagonal_pair(std::size_t levels) {
  if (levels < 1) throw std::invalid_argument("octagonal pair needs at least one level");
  FinAbGroup G({2, 2});
  RotationSpec spec{std::vector<std::int64_t>(levels - 1, 2), levels};
  return {rotation_diagram(spec, G.element({1, 0}), G.element({0, 1})),
          rotation_diagram(spec, G.element({1, 1}), G.element({0, 1}))};
}

OrderedBVDiagram random_diagram(const FinAbGroup& group, const RandomDiagramSpec& spec, std::mt19937_64& rng) {
  if (spec.levels < 1 || spec.max_towers < 1 || spec.max_cells < 1 || spec.max_traversal < 1)
    throw std::invalid_argument("random diagram bounds must be positive");
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::vector<BaseTower> base;
  std::size_t count = uniform(1, spec.max_towers);
  for (std::size_t v = 0; v < count; ++v) {
    BaseTower t{"v" + std::to_string(v + 1), {}};
    std::size_t h = uniform(1, spec.max_cells);
    for (std::size_t k = 0; k < h; ++k) t.cells.push_back(group.element_at(uniform(0, group.order() - 1)));
    base.push_back(std::move(t));
  }
  std::vector<std::vector<UpperTower>> upper;
  std::size_t below = count;
  std::string below_prefix = "v";
  for (std::size_t level = 2; level <= spec.levels; ++level) {
    std::string prefix = std::string(1, static_cast<char>('a' + (level - 2) % 26)) + std::to_string(level);
    std::size_t here = uniform(1, spec.max_towers);
    std::vector<UpperTower> towers;
    std::vector<char> used(below, 0);
    for (std::size_t v = 0; v < here; ++v) {
      UpperTower t{prefix + "_" + std::to_string(v + 1), {}};
      std::size_t len = uniform(1, spec.max_traversal);
      for (std::size_t k = 0; k < len; ++k) {
        std::size_t u = uniform(0, below - 1);
        used[u] = 1;
        t.traversal.push_back(level == 2 ? "v" + std::to_string(u + 1)
                                         : below_prefix + "_" + std::to_string(u + 1));
      }
      towers.push_back(std::move(t));
    }
    for (std::size_t u = 0; u < below; ++u)
      if (!used[u])
        towers[uniform(0, here - 1)].traversal.push_back(level == 2 ? "v" + std::to_string(u + 1)
                                                                   : below_prefix + "_" + std::to_string(u + 1));
    upper.push_back(std::move(towers));
    below = here;
    below_prefix = prefix;
  }
  return OrderedBVDiagram::create(group, std::move(base), std::move(upper));
}

OrderedBVDiagram random_nondegenerate_diagram(const FinAbGroup& group, const RandomDiagramSpec& spec,
                                              std::mt19937_64& rng, std::size_t attempts) {
  for (std::size_t i = 0; i < attempts; ++i) {
    OrderedBVDiagram d = random_diagram(group, spec, rng);
    if (nondegeneracy_check(d).overall) return d;
  }
  throw std::runtime_error("no nondegenerate diagram found over G = " + group.to_string() + " in " +
                           std::to_string(attempts) + " attempts");
}

}  // namespace coinv

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "coinv/abelian.hpp"
#include "coinv/bv.hpp"

namespace coinv {

/// Partial quotients a_1, a_2, ... of a rotation number and a level count.
struct RotationSpec {
  std::vector<std::int64_t> cf_digits;
  std::size_t levels = 1;
};

/// Two towers per level, named "L" (long) and "S" (short).
///
/// Level 1 has L and S of height 1 with cells {long_label} and
/// {short_label}. Level 2 is built from a_1 as L = [L x (a_1 - 1), S],
/// S = [L]; level n + 1 (n >= 2) from a_n as L = [L x a_n, S], S = [L].
/// The long heights are then the convergent denominators q_0 = 1,
/// q_1 = a_1, q_n = a_n q_{n-1} + q_{n-2}, and the short ones lag by one.
/// Needs levels - 1 digits.
OrderedBVDiagram rotation_diagram(const RotationSpec& spec, const GroupElt& long_label, const GroupElt& short_label);

/// q_0, ..., q_{count-1} of the continued fraction [0; a_1, a_2, ...].
std::vector<Integer> convergent_denominators(const std::vector<std::int64_t>& digits, std::size_t count);

/// The translation by sqrt(2) (digits all 2) twice over Z_2 x Z_2. The
/// labels are one nondegenerate choice: X gets L -> (1,0), S -> (0,1) and
/// Y gets L -> (1,1), S -> (0,1). Every level of both diagrams is
/// nondegenerate because a_n = 2 swaps the two generators mod 2.
std::pair<OrderedBVDiagram, OrderedBVDiagram> octagonal_pair(std::size_t levels);

struct RandomDiagramSpec {
  std::size_t levels = 3;
  std::size_t max_towers = 4;      // towers per level
  std::size_t max_cells = 3;       // floors of a level-1 tower
  std::size_t max_traversal = 4;   // segments of a higher tower
};

/// Uniformly random labels and traversals; every tower below the top is
/// used at least once.
OrderedBVDiagram random_diagram(const FinAbGroup& group, const RandomDiagramSpec& spec, std::mt19937_64& rng);

/// Resamples random_diagram until every level is nondegenerate. Throws
/// std::runtime_error after `attempts` failures.
OrderedBVDiagram random_nondegenerate_diagram(const FinAbGroup& group, const RandomDiagramSpec& spec,
                                              std::mt19937_64& rng, std::size_t attempts = 10000);

}  // namespace coinv

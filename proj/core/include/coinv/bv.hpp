#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coinv/abelian.hpp"
#include "coinv/group_ring.hpp"
#include "coinv/int_matrix.hpp"
#include "coinv/morphism.hpp"
#include "coinv/presentation.hpp"

namespace coinv {

/// Raised when the values xi~(v) at some level fail to generate G.
class DegenerateCocycle : public std::domain_error {
 public:
  DegenerateCocycle(const std::string& what, std::size_t level) : std::domain_error(what), level_(level) {}
  std::size_t level() const { return level_; }

 private:
  std::size_t level_;
};

struct BaseTower {
  std::string name;
  std::vector<GroupElt> cells;  // cocycle label of each floor, bottom first
};

struct UpperTower {
  std::string name;
  std::vector<std::string> traversal;  // names of towers one level down, bottom first
};

/// An ordered Bratteli-Vershik diagram truncated to finitely many levels.
///
/// Levels are numbered from 1. Level 1 towers carry their cell labels;
/// a tower at level n+1 is the ordered concatenation of level-n towers.
/// Construction validates references, nonempty towers and that every tower
/// below the top is used at least once.
class OrderedBVDiagram {
 public:
  static OrderedBVDiagram create(FinAbGroup group, std::vector<BaseTower> base,
                                 std::vector<std::vector<UpperTower>> upper);

  const FinAbGroup& group() const { return group_; }
  std::size_t level_count() const { return 1 + upper_.size(); }
  std::size_t tower_count(std::size_t level) const;
  const std::vector<std::string>& names(std::size_t level) const;
  std::size_t index_of(std::size_t level, const std::string& name) const;

  const std::vector<BaseTower>& base() const { return base_; }
  /// Towers of level n >= 2.
  const std::vector<UpperTower>& upper(std::size_t level) const;
  /// Traversal of tower v at level n >= 2 as indices into level n - 1.
  const std::vector<std::size_t>& traversal(std::size_t level, std::size_t v) const;

 private:
  OrderedBVDiagram() = default;
  void check_level(std::size_t level) const;

  FinAbGroup group_;
  std::vector<BaseTower> base_;
  std::vector<std::vector<UpperTower>> upper_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<std::vector<std::size_t>>> traversal_idx_;  // [level - 2][v]
};

struct DiagramStructure {
  std::vector<std::vector<Integer>> heights;  // [level - 1][v]
  /// incidence[n - 1] = A_n, |V_n| x |V_{n+1}|, A_n(v, v') = multiplicity of v in v'.
  std::vector<IntMatrix> incidence;
};
DiagramStructure validate_diagram(const OrderedBVDiagram& d);

/// xi~(v) per tower and the running products xi~(v, k) at segment starts.
/// At level 1 there is one entry per floor; at higher levels one per
/// traversal segment (the floors where a level-(n-1) tower begins).
struct CocycleProducts {
  std::vector<std::vector<GroupElt>> total;                  // [level - 1][v]
  std::vector<std::vector<std::vector<GroupElt>>> partials;  // [level - 1][v][segment]
};
CocycleProducts cocycle_products(const OrderedBVDiagram& d);

/// xi~ of a tower computed from its full level-1 floor sequence.
GroupElt flattened_product(const OrderedBVDiagram& d, std::size_t level, std::size_t v);

struct NondegeneracyReport {
  std::vector<bool> per_level;
  bool overall = false;
};
NondegeneracyReport nondegeneracy_check(const OrderedBVDiagram& d);

/// s(v, v') for v in V_n, v' in V_{n+1}: sum over the segments of v' filled
/// by v of the inverse running product. Verifies
///   sum_v (e - xi~(v)^{-1}) s(v, v') = e - xi~(v')^{-1}
/// for every v' and throws std::logic_error otherwise.
std::vector<std::vector<RingElt>> connection_coefficients(const OrderedBVDiagram& d, std::size_t level);
std::vector<std::vector<RingElt>> connection_coefficients(const OrderedBVDiagram& d, const CocycleProducts& p,
                                                          std::size_t level);

/// Stage data: A = V_n, B = W_n, mu(v) = xi~(v)^{-1}, mu(w) = eta~(w)^{-1}.
/// Throws DegenerateCocycle if either family fails to generate G.
CocycleData skew_stage(const OrderedBVDiagram& x, const OrderedBVDiagram& y, std::size_t level);

/// pi_n : M(V_n, W_n) -> M(V_{n+1}, W_{n+1}).
TransferMap skew_connecting_matrix(const OrderedBVDiagram& x, const OrderedBVDiagram& y, std::size_t level);

/// The Z-system stages Z^{V_n} and alpha_n = A_n^T (column v is the image of v).
struct ZSystemReport {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> alpha;
};
ZSystemReport zsystem_coinvariants(const OrderedBVDiagram& d);

struct StageReport {
  std::size_t level = 0;
  bool nondegenerate_x = false;
  bool nondegenerate_y = false;
  std::optional<std::size_t> free_rank;
  std::optional<InvariantFactors> torsion;
  std::optional<bool> iso_to_next;  // unset on the last stage or when a side is degenerate
  bool matches_predicted = false;
  std::string error;
};

struct StabilizationReport {
  FinAbGroup group;
  InvariantFactors predicted;
  std::vector<StageReport> stages;
  bool verdict = false;  // every stage matches and every consecutive map is a torsion isomorphism
  std::vector<std::string> assumptions;  // hypotheses that finite data cannot confirm
};

/// Computes N(V_n, W_n) for n = 1..max_level and the torsion maps between
/// consecutive stages. Degenerate stages are recorded, not thrown.
StabilizationReport torsion_stabilization(const OrderedBVDiagram& x, const OrderedBVDiagram& y,
                                          std::size_t max_level);

/// JSON text form:
///   {"group": [2,2],
///    "levels": [[{"name": "L", "cells": [[1,0]]}, ...],
///               [{"name": "L", "traversal": ["L", "S"]}, ...], ...]}
OrderedBVDiagram parse_diagram(const std::string& json_text);
std::string serialize_diagram(const OrderedBVDiagram& d);

/// {"x": diagram, "y": diagram}
std::pair<OrderedBVDiagram, OrderedBVDiagram> parse_diagram_pair(const std::string& json_text);
std::string serialize_diagram_pair(const OrderedBVDiagram& x, const OrderedBVDiagram& y);

}  // namespace coinv

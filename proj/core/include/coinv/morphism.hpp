#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coinv/group_ring.hpp"
#include "coinv/int_matrix.hpp"
#include "coinv/presentation.hpp"
#include "coinv/zlinalg.hpp"

namespace coinv {

/// A homomorphism M(A,B) -> M(C,D) of the form
///   pi(r (x) a (x) b) = sum_{c,d} r s(a,c) t(b,d) (x) c (x) d.
/// Row k of `matrix` is the image of source basis vector k; x maps to x * matrix.
struct TransferMap {
  Presentation source;
  Presentation target;
  IntMatrix matrix;
};

/// Transfer with s(a,c) from the telescoping coboundary solver over mu(A)
/// (target nu(c)) and t(b,d) likewise over mu(B).
TransferMap build_transfer(const CocycleData& source, const CocycleData& target);

/// Transfer with caller-supplied coefficient tables s[a][c], t[b][d] in Z[G].
TransferMap transfer_from_coefficients(const CocycleData& source, const CocycleData& target,
                                       const std::vector<std::vector<RingElt>>& s,
                                       const std::vector<std::vector<RingElt>>& t);

IntVector apply_transfer(const TransferMap& map, std::span<const Integer> x);

/// pi(A) within the span of the C rows and pi(B) within the span of the D rows.
struct ContainmentReport {
  bool a_into_c = false;
  bool b_into_d = false;
  bool holds() const { return a_into_c && b_into_d; }
};
ContainmentReport check_containment(const TransferMap& map);

struct TorsionIsoReport {
  bool is_iso = false;
  InvariantFactors source_factors;
  InvariantFactors target_factors;
  /// Row k: target torsion coordinates of the image of source torsion generator k.
  IntMatrix induced;
};

/// Decides whether the map induces an isomorphism T(N(A,B)) -> T(N(C,D)).
///
/// Torsion generators and coordinates come from Smith coordinates on each
/// side. The induced map is bijective iff the orders agree and the image
/// together with the target moduli spans the whole coordinate lattice.
/// Throws std::logic_error if a source relation row is not mapped into the
/// target relation span.
TorsionIsoReport induced_torsion_iso_check(const TransferMap& map);
TorsionIsoReport induced_torsion_iso_check(const TransferMap& map, const Quotient& source,
                                           const Quotient& target);

/// second o first: source of `first`, target of `second`.
TransferMap compose(const TransferMap& first, const TransferMap& second);

/// True iff back(forth(x)) - x lies in the relation span of the source of
/// `forth` for every torsion generator x.
bool round_trip_fixes_torsion(const TransferMap& forth, const TransferMap& back);
bool round_trip_fixes_torsion(const TransferMap& forth, const TransferMap& back, const Quotient& source);

}  // namespace coinv

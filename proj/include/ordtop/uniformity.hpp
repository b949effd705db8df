#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "ordtop/report.hpp"
#include "ordtop/structures.hpp"

namespace ordtop {

using nlohmann::json;

// A quasi-uniformity on a finite carrier.  Every filter of entourages on a
// finite square is principal, so the whole filter is represented by its
// least member: the filter consists of exactly the supersets of `least`.
// The filter is a genuine quasi-uniformity precisely when `least` is
// reflexive (members contain the diagonal) and transitive (the composition
// axiom holds with the least member composing into itself).
struct QuasiUniformity {
  Rel least;

  QuasiUniformity dual() const { return {least.transpose()}; }
  // The coarsest uniformity refining both this filter and its dual.
  QuasiUniformity star() const { return {least.intersect(least.transpose())}; }

  json to_json() const;
};

// The principal filter spanned by finite intersections of the generators.
QuasiUniformity filter_from_generators(int n, const std::vector<Rel>& gens);

// The topology induced by a quasi-uniformity: a set is open when every one
// of its points has its least-entourage neighborhood inside the set.
FinTopology uniform_topology(const QuasiUniformity& u);

// The entourage "membership in u implies membership in v": all pairs (x, y)
// with x outside u, together with all pairs whose second point lies in v.
Rel arrow_entourage(int n, Mask u, Mask v);

// Way-below between two opens in the open-set frame, evaluated literally:
// every union of opens that covers v must cover u.  (Unions of opens are
// again opens, so quantifying over single opens replays the full family
// quantifier exactly.)
bool frame_way_below(const FinTopology& t, Mask u, Mask v);

// P5.5: every finite space is induced by exactly one quasi-uniformity, the
// principal filter of its specialization quasi-order.  The filter is
// generated by the entourages row(y) -> row(x) of the interior relation
// (which itself collapses to the specialization on a finite carrier); its
// least member is the specialization order, so the intersection of the
// filter is that order; the dual filter induces the weak lower topology,
// which equals the cocompact topology and the full lower-set topology; and
// the symmetrized filter induces the weak patch topology, which coincides
// with the strong patch topology.  Exhaustively cross-checked against every
// quasi-order on the same carrier: the induced topology matches exactly for
// the specialization order.
AuditReport audit_interior_uniformity(int n_bound);

// L5.4: on a finite (hence locally compact) space, way-below between opens
// is containment, replayed literally over unions of opens; the arrow
// entourages over way-below pairs of opens generate the unique inducing
// quasi-uniformity; the rows of the interior relation form a base in which
// every member is the union of the way-below members below it, and the
// arrow entourages over that base generate the same filter; the dual
// induces the cocompact topology and the symmetrization the patch topology.
AuditReport audit_arrow_uniformity(int n_bound);

}  // namespace ordtop

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ordtop/report.hpp"
#include "ordtop/structures.hpp"

namespace ordtop {

using nlohmann::json;

// x rho y iff y lies in the interior of the saturation of {x}.  For finite
// spaces the saturation is the core, which is already open, but the interior
// is still taken literally.
Rel interior_relation(const FinTopology& top);

// x <= y iff the approximants of x are among the approximants of y
// (columns compared).  Always a quasi-order.
FinQoset lower_quasiorder(const Rel& rho);

// Certification of the axioms for an approximating relation: idempotence,
// and columns that are ideals (nonempty directed lower sets) of the lower
// quasi-order.  c_order additionally asks the lower quasi-order to be
// antisymmetric.  On failure, `violation` names the broken law and
// `witness` pins down offending points (indices into the carrier).
struct CRelReport {
  bool c_quasi_order = false;
  bool c_order = false;
  std::string violation;
  json witness;
};
CRelReport validate_c_relation(const Rel& rho);

// Open sets induced by a certified relation: all unions of rows.
// Throws std::invalid_argument when rho fails certification.
FinTopology topology_from_relation(const Rel& rho);

// { rho[Y] : Y subseteq X }: the images of the saturation operator.
SetFamily rounded_sets(const Rel& rho);

// Least lower set with the given closed closure: the relational preimage
// of A under the interior relation.  Requires A closed.
Mask least_lower_set_with_closure(const FinTopology& top, Mask closed_a);

// Intersection of all principal ideals containing I (the whole carrier
// when I has no upper bound).
Mask cut_closure(const FinQoset& q, Mask ideal);

// Ideal extension: a family of nonempty directed lower sets containing
// every principal ideal.
struct IdealExtensionReport {
  bool ok = false;
  std::string violation;
  json witness;
};
IdealExtensionReport validate_ideal_extension(const FinQoset& q, const SetFamily& z);

// Sets U with: every member ideal whose cut closure meets U already meets
// U.  The raw family drops the upper-set restriction and need not be a
// topology; the restricted variant always is.
SetFamily scott_family_raw(const FinQoset& q, const SetFamily& z);
FinTopology scott_topology_z(const FinQoset& q, const SetFamily& z);

// T3.3-roundtrip: spaces and certified approximating relations determine
// each other (opens = unions of approximant rows, relation = interior
// relation), the lower quasi-order is the specialization order, closure is
// a bijection from rounded sets to closed sets (inverted by the relational
// preimage), irreducible closed sets are exactly closures of directed sets
// with a least generating ideal, every upper set of the specialization
// order is open, and the cocompact topology is the weak lower topology of
// the specialization order.  Relations are enumerated exhaustively up to 3
// points, topologies up to the bound.
AuditReport audit_relation_roundtrip(int n_bound);

// How strongly the extension approximates: locally (per ideal), globally
// (per point with one uniform witness), strongly (a global witness choice
// that interpolates through itself).
struct ApproximationReport {
  bool locally = false;
  bool globally = false;
  bool strongly = false;
  json witness;
};
ApproximationReport approximation_classes(const FinQoset& q, const SetFamily& z);

}  // namespace ordtop

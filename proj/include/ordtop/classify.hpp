#pragma once

#include "ordtop/report.hpp"
#include "ordtop/speclat.hpp"
#include "ordtop/structures.hpp"

namespace ordtop {

// Compactness and connectedness flags of one subset of a space.
struct SubsetProfile {
  bool strongly_connected = false;
  bool filtered = false;
  bool supercompact = false;
  bool hypercompact = false;
  bool irreducible_closed = false;

  json to_json() const;
};

// Each flag is evaluated along independent routes (set-cover definition vs
// specialization-order characterization); a mismatch aborts, since it can
// only mean a checker bug.
SubsetProfile subset_profile(const FinTopology& t, Mask y);
SubsetProfile subset_profile(const FinTopology& t, const FinQoset& spec_order,
                             Mask y);

// Space-level classification flags.
struct SpaceProfile {
  bool t0 = false;
  bool web = false;
  bool wide_web = false;
  bool c_space = false;
  bool locally_strongly_connected = false;
  bool has_dual_base = false;
  bool b_space = false;
  bool a_space = false;
  bool sober = false;
  bool d_space = false;
  bool supercompact_space = false;
  json route_agreement;  // flag -> list of independently computed values

  json to_json() const;
};

// Computes every flag along at least the pointwise definition; where the
// open-set lattice stays small enough, the lattice-law and auxiliary routes
// run as well.  Disagreeing routes abort the process.
SpaceProfile space_profile(const FinTopology& t);

// Open-set lattice ordered by inclusion, elements in ascending mask order.
FinLattice open_set_lattice(const FinTopology& t);

// Complements of compact saturated sets.  Finitely the compact saturated
// sets are exactly the upper sets of the specialization order, so the
// result is the lower-set topology; the subbase route {X minus a core} is
// computed independently and must agree.
FinTopology cocompact_topology(const FinTopology& t);

// Product topology via open boxes; point (x1, x2) maps to x1*n2 + x2.
FinTopology product_space(const FinTopology& t1, const FinTopology& t2);

// Binary products carry web / wide web / locally strongly connected / B / C
// exactly when both factors do, and their specialization order is the
// product order.
AuditReport audit_products(int n_bound);

// The pointwise web / wide web / C checks agree with the coframe / wide
// coframe / completely distributive lattice routes on every topology up to
// the bound, all flags collapse to true, and the dual-base chain holds.
AuditReport audit_route_agreement(int n_bound);

}  // namespace ordtop

#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "ordtop/report.hpp"
#include "ordtop/structures.hpp"

namespace ordtop {

using nlohmann::json;

// Way-below relation of a quasi-ordered carrier: x way below y iff every
// directed set possessing a join above y contains an element above x.  On a
// finite carrier a directed set contains a greatest element, so the relation
// collapses to the order itself; the literal definition is evaluated and
// compared on small carriers (n <= 12).
Rel way_below(const FinQoset& q);

// Basis of a poset: for every y, the basis elements way below y form a
// directed set whose join is y.
bool is_poset_basis(const FinPoset& p, Mask basis);

// Core basis of a space: for every open U and y in U, some approximant of y
// (a point whose core neighborhood witnesses y) lies in both the basis and U.
bool is_core_basis(const FinTopology& t, Mask basis);

// Interpolation through a subset: every related pair factors as
// x rho b rho y with b in the subset.
bool is_relation_dense(const Rel& rho, Mask basis);

// Cofinal reach: every related pair admits b in the subset with
// x below b (lower quasi-order) and b rho y.
bool is_relation_cofinal(const Rel& rho, Mask basis);

// Rounded-ideal completion of a certified approximating relation: the
// domain of all ideals I of the lower quasi-order with (relational preimage
// of I) = I, ordered by inclusion, with the embedding x -> (column of x).
// Throws std::invalid_argument when the relation fails certification.
// Carriers up to 16 points (the exhaustive ideal scan is exponential).
struct RoundedIdealCompletion {
  std::vector<Mask> ideals;    // ascending mask order
  FinPoset domain;             // inclusion order on `ideals`
  std::vector<int> embedding;  // point -> index of its column in `ideals`
  json to_json() const;
};
RoundedIdealCompletion rounded_ideal_completion(const Rel& rho);

// The five size invariants of a finite space that the weight chain equates:
// least cofinal subset of the interior relation, least base of the opens,
// of the closed sets, and of the weak patch topology, and least dense
// subset of the strong (Skula) patch.  Exact search; carriers up to 12.
struct SpaceMetrics {
  int rho_cofinality = 0;
  int weight = 0;
  int coweight = 0;
  int patch_weight = 0;
  int skula_density = 0;
  json to_json() const;
};
SpaceMetrics space_metrics(const FinTopology& t);

// L8.1: the bases of a poset are exactly the core bases of its space of
// upper sets (the topology of directed-join-inaccessible upper sets); on
// finite carriers the only basis is the whole carrier.
AuditReport audit_poset_bases(int n_bound);

// P8.2: certified relations are exactly the bases of continuous domains
// with the way-below relation: the rounded-ideal completion is a domain
// whose ideals are precisely the relation's columns, column inclusion is
// domain way-below via the interpolation criterion, and for strict
// relations the column map is an isomorphism; conversely the completion of
// a finite poset's own order returns that poset.
AuditReport audit_based_domains(int n_bound);

// P10.1: for every subset of every finite space, interpolation density,
// cofinal reach, being a core basis, density in the strong patch space, and
// join-density of the point closures in the closed-set lattice all agree;
// such subsets are dense in every patch space.
AuditReport audit_core_basis_equivalences(int n_bound);

// T10.3: the five size invariants of `space_metrics` coincide on every
// finite space; on tiny carriers the structural base counts are
// cross-checked against exhaustive minimal-base search.
AuditReport audit_weight_chain(int n_bound);

}  // namespace ordtop

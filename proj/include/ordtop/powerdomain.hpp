#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordtop/report.hpp"
#include "ordtop/structures.hpp"

namespace ordtop {

using nlohmann::json;

// Carrier of all nonempty subsets of a base carrier with the lifted
// relation: E related to F iff E lies inside the approximants of F and F
// inside the reach of E (preimage/image of the base relation).
struct LiftedRelation {
  int base_n = 0;
  std::vector<Mask> sets;  // nonempty subsets in ascending mask order
  Rel rel;                 // lifted relation on indices into `sets`
  int index_of(Mask e) const;
  json to_json() const;
};
LiftedRelation lift_relation(const Rel& rho);  // base carrier up to 4 points

// Semilattice operation on a certified relation obeying the continuity law
// col(x*y) = preimage of { u*v : u approximates x, v approximates y }.
struct CSemilatticeReport {
  bool certified = false;      // underlying relation certifies
  bool semilattice_op = false;

  bool continuity_law = false;
  bool ok = false;
  std::string violation;
  json witness;
};
CSemilatticeReport validate_c_semilattice(const Rel& rho, const std::vector<int>& op);

// Free topological semilattice over a space: the lifted interior relation,
// its induced topology on nonempty subsets, union as the operation, and the
// singleton embedding as unit.
struct FreeSemilattice {
  LiftedRelation lifted;
  FinTopology top;         // on indices into lifted.sets
  std::vector<int> unit;   // x -> index of {x}
  std::vector<int> op;     // m*m row-major union table
  json to_json() const;
};
FreeSemilattice free_c_semilattice(const FinTopology& t);  // up to 3 points

// Lower powerdomain: nonempty closed sets under inclusion with union,
// unit x -> closure of {x}.
struct HoarePowerdomain {
  std::vector<Mask> closeds;  // nonempty, ascending mask order
  FinPoset order;
  std::vector<int> op;        // m*m row-major union table
  std::vector<int> unit;
  json to_json() const;
};
HoarePowerdomain hoare_powerdomain(const FinTopology& t);

// Convex powerdomain of a poset: rounded ideals of the lifted way-below
// relation with the rounded union.  Each element is tagged by the unique
// inclusion-greatest member of its class, an order-convex subset.
struct PlotkinPowerdomain {
  std::vector<Mask> convexes;  // class representatives on the base carrier
  FinPoset order;
  std::vector<int> op;         // m*m row-major rounded-union table
  std::vector<int> unit;       // x -> index of the class of {x}
  json to_json() const;
};
PlotkinPowerdomain plotkin_powerdomain(const FinPoset& p);  // up to 4 points

// Map checks shared by the powerdomain audits and tests.
bool is_continuous_map(const FinTopology& a, const FinTopology& b,
                       const std::vector<int>& f);
bool is_relation_morphism(const Rel& rho_a, const Rel& rho_b,
                          const std::vector<int>& f);

// P9.1: the closed-set lattice of a finite space is distributive, its point
// closures are exactly the join-irreducible closed sets and join-generate
// every closed set, the closure-of-point map into the upper space of the
// lattice is continuous, and every continuous map into a finite lattice's
// upper space factors uniquely through it by a join-and-bottom-preserving
// continuous map (exhaustive uniqueness at micro sizes).
AuditReport audit_closed_lattice_reflection(int n_bound);

// L9.2: the lifted relation of a certified relation is again certified and
// carries union as an operation satisfying the continuity law; it is a
// strict relation exactly when distinct nonempty sets are separated by
// their (preimage, image) pairs, each class has a unique inclusion-greatest
// member (down-set intersect up-set), and the induced topology is T0
// exactly in the strict case.
AuditReport audit_lifted_relation(int n_bound);

// T9.3: the powerdomain adjunctions at exhaustive micro sizes: the
// singleton unit into the lifted relation is a relation morphism and every
// relation morphism into a semilattice-carrying relation extends uniquely
// to an operation-preserving relation morphism on nonempty subsets; the
// column unit into the rounded-ideal completion is an operation-preserving
// relation morphism and every such morphism into an isotone-semilattice
// poset extends uniquely to an isotone homomorphism on ideals; the
// continuity law for operations coincides with topological continuity with
// respect to the product topology; the topological free construction has
// the same universal property; and the T0 quotient of a space with
// continuous operation is again one, reached by a continuous quotient
// homomorphism.
AuditReport audit_powerdomain_adjunctions(int n_bound);

// C9.4: the convex powerdomain of a finite poset is carried by its
// nonempty order-convex subsets, ordered by (A inside down-set of B, B
// inside up-set of A), with class-of-union operation and unique extension
// of isotone maps into isotone-semilattice posets (exhaustive uniqueness at
// micro sizes).
AuditReport audit_convex_powerdomain(int n_bound);

}  // namespace ordtop

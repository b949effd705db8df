#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ordtop/report.hpp"
#include "ordtop/structures.hpp"

namespace ordtop {

using nlohmann::json;

// The three cotopology recipes used to rebuild a two-sided space from a
// one-sided one.  Each takes the specialization quasiorder of the input
// space and contributes open sets around its dual:
//   upsilon - weak topology: generated by complements of principal filters,
//   alpha   - Alexandroff topology: all lower sets,
//   sigma   - Scott topology of the dual order; on finite carriers every
//             directed set contains its own join-candidate, so this always
//             coincides with alpha (kept as a distinct name because callers
//             may ask for it explicitly).
enum class CoselectionKind { upsilon, alpha, sigma };

std::string to_string(CoselectionKind k);

// Parses "upsilon" / "alpha" / "sigma"; throws std::invalid_argument
// otherwise.
CoselectionKind coselection_from_string(const std::string& s);

// Open upper sets / open lower sets of an ordered space; both are
// topologies in their own right.
FinTopology upper_space(const OrderedSpace& t);
FinTopology lower_space(const OrderedSpace& t);

// Weak upper topology of a quasiorder: generated by the complements of
// principal down-sets.
FinTopology weak_upper_topology(const FinQoset& q);

// The selection evaluated at q itself (upper-style opens of q).
FinTopology selection_topology(const FinQoset& q, CoselectionKind k);

// The selection evaluated at the dual of the specialization order of s:
// a topology of lower sets whose specialization order is dual to that of s.
FinTopology coselection_topology(const FinTopology& s, CoselectionKind k);

// Patch space of s under the chosen coselection: the order is the
// specialization order of s, the topology is generated by s together with
// the coselection opens.
OrderedSpace patch_space(const FinTopology& s, CoselectionKind k);

// Lawson-style two-sided topology of a quasiorder: Alexandroff opens of q
// joined with the weak upper topology of the dual.
FinTopology lawson_topology(const FinQoset& q);

// Families of upper sets built from principal filters: all finite unions
// (including the empty union), all finite intersections (including the
// empty intersection = full carrier), and the sublattice generated by the
// principal filters together with the empty and full sets.
SetFamily principal_filter_unions(const FinQoset& q);
SetFamily principal_filter_intersections(const FinQoset& q);
SetFamily principal_filter_sublattice(const FinQoset& q);

// Exhaustive classification of one ordered space.  Every flag is computed
// from its definition; where a second independent route exists both are
// evaluated and compared (disagreement throws internal_error), with the
// route lists recorded in `route_agreement`.
//
// Expensive subset scans are skipped on carriers larger than
// kLargeCarrier points; the affected flags are then reported as absent in
// to_json() and `large_carrier_skips` is set.
struct OrderedSpaceProfile {
  // Order-separation axioms.
  bool lower_semi = false;       // every principal down-set closed
  bool upper_semi = false;       // every principal up-set closed
  bool semi_qospace = false;     // both halves semiclosed
  bool t1_ordered = false;       // semi-qospace with antisymmetric order
  bool qospace = false;          // order closed in the square
  bool pospace = false;          // qospace + antisymmetry
  bool t2_ordered = false;       // disjoint open upper/lower separation
  bool upper_regular = false;    // closed-upper interpolation inside upper opens
  bool upper_t3 = false;         // upper_regular + t1_ordered
  bool t1_plain = false;         // singletons closed
  bool t2_plain = false;         // Hausdorff (finite: discrete)

  // Convexity ladder.
  bool locally_convex = false;   // base of order-convex opens
  bool strongly_convex = false;  // topology generated by its two halves
  bool hyperconvex = false;      // base of sets (open upper) minus (finitely generated upper)
  bool upsilon_convex = false;   // topology generated by upper half + weak coselection
  bool alpha_convex = false;     // topology generated by upper half + Alexandroff coselection

  // Interior-operator stability.
  bool up_stable = false;        // up-closures of opens are open
  bool c_stable = false;         // up-closure of each open covered by interiors of principal filters
  bool d_stable = false;         // interiors of filtered sets covered via their lower closures
  bool alpha_stable = false;     // upper-interior distributes over arbitrary upper sets
  bool vee_stable = false;       // ... over finite unions of principal filters
  bool wedge_stable = false;     // ... over finite intersections of principal filters
  bool diamond_stable = false;   // ... over the principal-filter sublattice

  // Neighborhood structure.
  bool web_ordered = false;           // up-stable + neighborhood bases of webs
  bool locally_lower_bounded = false; // up-stable + shrinking with common lower bounds
  bool locally_filtered = false;      // up-stable + bases of filtered neighborhoods
  bool sector_space = false;          // up-stable semi-qospace + bases of sectors
  bool upsilon_sector_space = false;  // sectors with weak-coselection lower parts
  bool alpha_sector_space = false;    // sectors with Alexandroff lower parts
  bool fan_space = false;             // up-stable semi-qospace + bases of fans

  // Patch recognition.
  bool patch_of_upper = false;        // topology = upper half joined with some cotopology
  bool upsilon_patch_of_upper = false;  // equals the weak patch of its upper space
  bool alpha_patch_of_upper = false;    // equals the Alexandroff patch of its upper space

  // Order convergence.
  bool mc_ordered = false;       // every directed set has a join it converges to

  // Meet-semilattice block; meaningful only when `semilattice` holds.
  bool semilattice = false;             // antisymmetric with all binary meets
  bool compatible_semilattice = false;  // specialization order equals the order
  bool semitopological = false;         // unary meets continuous
  bool topological_semilattice = false; // binary meet jointly continuous
  bool small_semilattices = false;      // neighborhood bases of subsemilattices
  bool s_topological = false;           // topological + small semilattices

  bool large_carrier_skips = false;
  json route_agreement = json::object();

  json to_json() const;
};

// Carrier sizes above this skip the subset-enumeration flags
// (vee/wedge/diamond stability, mc convergence, small semilattices,
// the scan routes, and the sector variants that range over all lower sets).
inline constexpr int kLargeCarrier = 12;

OrderedSpaceProfile ordered_space_profile(const OrderedSpace& t);

// --- Exhaustive audits over all ordered spaces up to a carrier bound. ---

// Separation + convexity ladders with their finite collapses.
AuditReport audit_separation_chain(int n_bound);  // id "S2-chain"

// Strongly convex semi-qospaces = patch spaces of their upper spaces,
// and such spaces are web-ordered / locally lower bounded / locally
// filtered on finite carriers.
AuditReport audit_patch_spaces(int n_bound);  // id "P2.1"

// The patch constructions and the upper-space map are mutually inverse
// between finite spaces and patch-convex semi-qospaces.
AuditReport audit_patch_functor(int n_bound);  // id "L2.2"

// For each coselection the patch-convex semi-qospaces already carry webs,
// lower bounds, and filtered bases, and coincide with the patch images.
AuditReport audit_patch_classes(int n_bound);  // id "T2.3"

// d-stability from d-space lower halves (and unconditionally on finite
// carriers).
AuditReport audit_d_stability(int n_bound);  // id "L4.1-1"

// C-stability = up-stability + worldwide-web upper space, on semi-qospaces.
AuditReport audit_c_stability_split(int n_bound);  // id "L4.1-2"

// C-stability = upper regularity + local filteredness + d-stability, on
// semi-qospaces.
AuditReport audit_c_stability_parts(int n_bound);  // id "L4.1-3"

// Sector spaces: four equivalent descriptions, plus their coselection
// variants and the upper-T3 consequence for ordered sector spaces.
AuditReport audit_sector_spaces(int n_bound);  // id "P4.5"

// Fan spaces: weak patches of worldwide-web spaces = hyperconvex C-stable
// qospaces = hyperconvex upper-regular locally-filtered d-stable qospaces;
// includes the patch-and-recover sweep over all plain topologies.
AuditReport audit_fan_spaces(int n_bound);  // id "T5.3"

// Filter-family stability lemmas.
AuditReport audit_vee_stability(int n_bound);        // id "L6.1-1"
AuditReport audit_wedge_join_semilattice(int n_bound);  // id "L6.1-2"
AuditReport audit_wedge_ideal_columns(int n_bound);  // id "L6.1-3"
AuditReport audit_diamond_split(int n_bound);        // id "L6.1-4"
AuditReport audit_diamond_lattice(int n_bound);      // id "L6.1-5"
AuditReport audit_vee_lower_semi(int n_bound);       // id "L6.1-6"

// Lawson recognition: the five equivalent descriptions and the canonical
// topology they pin down.
AuditReport audit_lawson_recognition(int n_bound);  // id "T6.2"

// Four sufficient conditions for joint meet continuity.
AuditReport audit_meet_continuity(int n_bound);  // id "L7.1"

// Hyperconvex T1-semilattices: the nine recognition conditions hold, and
// the unconditional semilattice equivalences are verified.
AuditReport audit_patch_semilattices(int n_bound);  // id "T7.2"

// Locally filtered compact pospaces = compact Lawson spaces of continuous
// domains; on finite carriers both classes are the discrete posets.
AuditReport audit_lawson_semilattices(int n_bound);  // id "P7.4"

}  // namespace ordtop

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordtop/io.hpp"
#include "ordtop/report.hpp"
#include "ordtop/structures.hpp"

namespace ordtop {

using nlohmann::json;

// --- audit registry ---------------------------------------------------------
//
// Every exhaustive law check in the library is reachable through one stable
// id.  The id is part of the CLI contract (`ordtop audit <id>`); the summary
// restates the law being audited in one self-contained line.

struct AuditEntry {
  std::string id;
  std::string summary;
  int default_bound;  // carrier bound used when the caller passes none
  AuditReport (*run)(int n_bound);
};

const std::vector<AuditEntry>& audit_registry();

// nullptr when the id is unknown.
const AuditEntry* find_audit(const std::string& id);

// Runs a registry entry, stamping the report with the iso flag.  When
// `upto_iso` is set, the bulk enumerators feeding the audit yield one
// representative per isomorphism class; audits that sweep *pairs* of
// structures then cover representative pairs only (a sound but smaller
// sample, recorded via AuditReport::iso_reduced).
AuditReport run_audit(const AuditEntry& entry, int n_bound, bool upto_iso);

// --- structure kinds & predicates -------------------------------------------

enum class StructureKind { topology, poset, ordered_space, lattice };

std::string to_string(StructureKind k);
std::optional<StructureKind> kind_from_string(const std::string& s);

struct PredicateInfo {
  std::string name;
  std::string summary;
};

// The published predicate vocabulary for one structure kind.
const std::vector<PredicateInfo>& predicates_for(StructureKind k);

// Evaluates every predicate of the kind on a concrete structure and returns
// a flat name -> bool object.  Throws std::invalid_argument when the
// structure lacks the layers the kind needs (e.g. kind ordered_space on a
// bare topology) or the carrier exceeds the evaluation bound.
json evaluate_predicates(StructureKind k, const Structure& s);

// Bases of filtered neighborhoods, on its own: every neighborhood of every
// point contains a filtered neighborhood of that point.  This is the bare
// second component of C-stability; the ordered-space profile only exposes
// it conjoined with up-stability (locally_filtered), so the searcher keeps
// a separate evaluator.
bool filtered_neighborhood_bases(const OrderedSpace& s);

// --- witness search ----------------------------------------------------------

struct WitnessQuery {
  StructureKind kind = StructureKind::topology;
  std::vector<std::string> required;
  std::vector<std::string> forbidden;
  int size_bound = 4;
};

struct WitnessResult {
  bool found = false;
  bool complete = true;  // false when interrupted mid-scan
  std::optional<Structure> witness;
  json predicates;  // full predicate map of the witness
  // Candidates examined per carrier size (index 0 = size 1): labeled
  // structures scanned and isomorphism classes actually evaluated.
  std::vector<std::size_t> scanned_by_size;
  std::vector<std::size_t> classes_by_size;
  double wall_ms = 0.0;
  json to_json() const;
};

// Scans carriers of size 1, 2, ... up to the bound, evaluating predicates on
// one representative per isomorphism class.  Stops at the first size holding
// a match and returns the representative with the least canonical encoding
// (so the result is independent of thread count and chunking); otherwise
// reports exhaustion with per-size tallies.  Unknown predicate names throw
// std::invalid_argument.
WitnessResult witness_search(const WitnessQuery& q);

// --- description, gallery, diagrams ------------------------------------------

// Full derived profile of a parsed structure: one block per layer present
// (topology, order, relation) plus the ordered-space block when both a
// topology and an order are given.  Deterministic: equal structures yield
// byte-identical dumps.
json describe_structure(const Structure& s);

// GraphViz rendering of the structure's diagram: cover edges of the order
// (or of the specialization order of the topology), with quasi-order
// equivalence classes collapsed into one node; a bare relation layer is
// drawn edge-for-edge instead.
std::string dot_diagram(const Structure& s);

struct GalleryEntry {
  std::string name;
  std::string summary;
  Structure (*build)();
};

const std::vector<GalleryEntry>& gallery_registry();

// nullptr when the name is unknown.
const GalleryEntry* find_gallery(const std::string& name);

// The committed reference dump of a gallery entry: the canonical text
// rendering plus the full describe_structure profile.
json gallery_report(const GalleryEntry& entry);

}  // namespace ordtop

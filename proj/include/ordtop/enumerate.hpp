#pragma once

#include <functional>
#include <vector>

#include "ordtop/structures.hpp"

namespace ordtop {

// Exhaustive generators.  Every generator visits each structure exactly once
// in a fixed order that depends only on n, so runs are reproducible and
// chunked scans can be merged deterministically.
//
// Quasi-orders are scanned by their off-diagonal adjacency mask (ascending);
// partial orders by backtracking over up-set rows (lexicographic by row
// tuple).  Topologies ride on the quasi-order scan through the open-up-sets
// bijection.

void for_each_qoset(int n, const std::function<void(const FinQoset&)>& fn);
void for_each_poset(int n, const std::function<void(const FinPoset&)>& fn);

std::vector<FinQoset> all_qosets(int n);              // n <= 5
std::vector<FinPoset> all_posets(int n);              // n <= 7
std::vector<FinLattice> all_lattices(int n);          // n <= 7
std::vector<FinTopology> all_topologies(int n);       // n <= 5

// Process-wide switch consulted by the four materializers above: when set,
// they yield one canonical representative per isomorphism class instead of
// every labeled structure.  Audits are written against the materializers, so
// the switch reruns any audit up to iso without touching audit code.  Audits
// that sweep pairs of structures then cover representative pairs only — a
// sound but smaller sample.  Set it before launching an audit, not from
// worker threads.
bool iso_enumeration_mode();
void set_iso_enumeration_mode(bool on);

struct IsoModeGuard {
  bool prev;
  explicit IsoModeGuard(bool on) : prev(iso_enumeration_mode()) {
    set_iso_enumeration_mode(on);
  }
  ~IsoModeGuard() { set_iso_enumeration_mode(prev); }
};

// Representatives up to isomorphism: the structures equal to their own
// canonical form, in scan order.
std::vector<FinQoset> qosets_up_to_iso(int n);
std::vector<FinPoset> posets_up_to_iso(int n);
std::vector<FinLattice> lattices_up_to_iso(int n);
std::vector<FinTopology> topologies_up_to_iso(int n);

// Counting without materializing (used by audits for progress totals).
std::size_t count_qosets(int n);
std::size_t count_posets(int n);

}  // namespace ordtop

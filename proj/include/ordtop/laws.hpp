#pragma once

#include <vector>

#include "ordtop/report.hpp"
#include "ordtop/speclat.hpp"
#include "ordtop/structures.hpp"

namespace ordtop {

// Infinite distributive laws specialized to a finite lattice.  Every flag
// has its own definition-literal checker; the finite collapses between them
// (frame = coframe = completely distributive = plain distributive) are what
// the test suite asserts.
struct LawProfile {
  bool frame = false;
  bool coframe = false;
  bool wide_frame = false;
  bool wide_coframe = false;
  bool completely_distributive = false;
  bool spatial = false;
  bool weakly_atomic = false;
  bool superalgebraic = false;
  bool meet_continuous = false;
  bool continuous = false;
  json witnesses;  // law name -> counterexample, only for false flags

  json to_json() const;
};

LawProfile law_profile(const FinLattice& lat);

// Individual subset-quantified laws, exposed so the space classifier can
// run them as cross-routes against its pointwise checks.
bool frame_law(const FinLattice& lat, json* witness = nullptr);
bool coframe_law(const FinLattice& lat, json* witness = nullptr);
bool wide_frame_law(const FinLattice& lat, json* witness = nullptr);
bool wide_coframe_law(const FinLattice& lat, json* witness = nullptr);
// Complete distributivity through the single worst cover of each element.
bool completely_distributive_covers(const FinLattice& lat,
                                    json* witness = nullptr);

// Binary distributivity, checked directly (the independent oracle for the
// frame/coframe collapse).
bool distributive(const FinLattice& lat, json* witness = nullptr);

// Meets of joins against joins of intersections over every collection of
// lower sets.  Doubly exponential; cross-validation only.
bool completely_distributive_literal(const FinLattice& lat);

// Primes, coprimes, supercompact elements and covering pairs.
struct SpectralProfile {
  Mask primes = 0;
  Mask coprimes = 0;
  Mask supercompact = 0;
  std::vector<std::pair<int, int>> jumps;
  bool spatial = false;
  bool superalgebraic = false;

  json to_json(const Carrier& carrier) const;
};

SpectralProfile spectral_profile(const FinLattice& lat);

// Every enumerated frame must be weakly atomic and spatial; frames that are
// also coframes must be superalgebraic.
AuditReport audit_countable_frame_laws(int n_bound);

// Over distributive complete lattices, the weak upper space of L is a
// web / wide web / worldwide web space exactly when L is a frame / wide
// frame / completely distributive.  The non-distributive case is outside
// the law's hypothesis and is skipped.
AuditReport audit_weak_space_biconditionals(int n_bound);

// Subbase {L minus a principal ideal}: the weak upper topology.
FinTopology weak_upper_topology(const FinPoset& p);

}  // namespace ordtop

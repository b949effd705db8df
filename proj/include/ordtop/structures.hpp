#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordtop/base.hpp"
#include "ordtop/family.hpp"

namespace ordtop {

// Ordered list of point labels; indices are the working representation.
struct Carrier {
  std::vector<std::string> labels;

  Carrier() = default;
  explicit Carrier(std::vector<std::string> l) : labels(std::move(l)) {}

  static Carrier standard(int n, const std::string& prefix = "p") {
    Carrier c;
    for (int i = 0; i < n; ++i) c.labels.push_back(prefix + std::to_string(i));
    return c;
  }

  int size() const { return static_cast<int>(labels.size()); }

  std::optional<int> index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
      if (labels[i] == label) return i;
    return std::nullopt;
  }

  std::string render_set(Mask m) const {
    std::string out = "{";
    bool first = true;
    for_each_bit(m, [&](int i) {
      if (!first) out += ' ';
      out += labels[i];
      first = false;
    });
    return out + "}";
  }
};

// Witness for a family failing to be a topology.
struct TopologyIssue {
  enum Kind { out_of_range, missing_empty, missing_union, missing_intersection, missing_full };
  Kind kind;
  Mask a = 0, b = 0;

  std::string describe(const Carrier& c) const {
    switch (kind) {
      case out_of_range: return "set " + c.render_set(a) + " leaves the carrier";
      case missing_empty: return "empty set missing";
      case missing_union:
        return "union of " + c.render_set(a) + " and " + c.render_set(b) + " missing";
      case missing_intersection:
        return "intersection of " + c.render_set(a) + " and " + c.render_set(b) + " missing";
      case missing_full: return "full carrier missing";
    }
    return "unknown";
  }
};

// First failing witness in canonical scan order, or nullopt when fam is a
// topology on n points.  Scan order: range, empty set, unions, intersections,
// full set.
inline std::optional<TopologyIssue> validate_topology(int n, const SetFamily& fam) {
  const Mask X = full_mask(n);
  for (Mask m : fam)
    if (m & ~X) return TopologyIssue{TopologyIssue::out_of_range, m, 0};
  if (!fam.contains(0)) return TopologyIssue{TopologyIssue::missing_empty, 0, 0};
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if (!fam.contains(fam.sets[i] | fam.sets[j]))
        return TopologyIssue{TopologyIssue::missing_union, fam.sets[i], fam.sets[j]};
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if (!fam.contains(fam.sets[i] & fam.sets[j]))
        return TopologyIssue{TopologyIssue::missing_intersection, fam.sets[i], fam.sets[j]};
  if (!fam.contains(X)) return TopologyIssue{TopologyIssue::missing_full, 0, 0};
  return std::nullopt;
}

// Finite topology, stored in full.  Always valid once constructed.
struct FinTopology {
  int n = 0;
  SetFamily opens;

  FinTopology() = default;

  static FinTopology make(int n, SetFamily fam) {
    if (auto issue = validate_topology(n, fam))
      throw std::invalid_argument("not a topology: " +
                                  issue->describe(Carrier::standard(n)));
    FinTopology t;
    t.n = n;
    t.opens = std::move(fam);
    return t;
  }

  Mask full() const { return full_mask(n); }
  bool is_open(Mask m) const { return opens.contains(m); }
  bool is_closed(Mask m) const { return opens.contains(full() & ~m); }

  Mask interior(Mask a) const {
    Mask out = 0;
    for (Mask u : opens)
      if ((u & ~a) == 0) out |= u;
    return out;
  }

  Mask closure(Mask a) const { return full() & ~interior(full() & ~a); }

  // Least open neighborhood of x; open because the topology is finite.
  Mask core(int x) const {
    Mask out = full();
    for (Mask u : opens)
      if (has_bit(u, x)) out &= u;
    return out;
  }

  SetFamily closeds() const {
    SetFamily f;
    for (Mask u : opens) f.sets.push_back(full() & ~u);
    f.canonicalize();
    return f;
  }

  bool operator==(const FinTopology& o) const { return n == o.n && opens == o.opens; }
  bool operator<(const FinTopology& o) const { return opens < o.opens; }
};

// Quasiorder (reflexive + transitive).  up[x] = {y : x <= y}.
struct FinQoset {
  int n = 0;
  Rel rel;

  FinQoset() = default;

  static FinQoset make(Rel r) {
    if (!r.reflexive()) throw std::invalid_argument("quasiorder not reflexive");
    if (!r.transitive()) throw std::invalid_argument("quasiorder not transitive");
    FinQoset q;
    q.n = r.n;
    q.rel = std::move(r);
    return q;
  }

  bool le(int x, int y) const { return rel.at(x, y); }
  Mask up(int x) const { return rel.row[x]; }
  Mask down(int x) const { return rel.col(x); }
  Mask up_set(Mask y) const { return rel.image(y); }
  Mask down_set(Mask y) const { return rel.preimage(y); }
  bool is_upper(Mask y) const { return up_set(y) == y; }
  bool is_lower(Mask y) const { return down_set(y) == y; }
  bool antisymmetric() const { return rel.antisymmetric(); }

  FinQoset dual() const { return FinQoset::make(rel.transpose()); }

  // Common lower bounds of everything in f.
  Mask lower_bounds(Mask f) const {
    Mask out = full_mask(n);
    for_each_bit(f, [&](int i) { out &= down(i); });
    return out;
  }

  Mask upper_bounds(Mask f) const {
    Mask out = full_mask(n);
    for_each_bit(f, [&](int i) { out &= up(i); });
    return out;
  }

  // Nonempty and down-directed: every pair has a lower bound inside y.
  bool filtered(Mask y) const {
    if (!y) return false;
    std::vector<int> pts;
    for_each_bit(y, [&](int i) { pts.push_back(i); });
    for (int a : pts)
      for (int b : pts)
        if (!(lower_bounds((Mask(1) << a) | (Mask(1) << b)) & y)) return false;
    return true;
  }

  bool directed(Mask y) const {
    if (!y) return false;
    std::vector<int> pts;
    for_each_bit(y, [&](int i) { pts.push_back(i); });
    for (int a : pts)
      for (int b : pts)
        if (!(upper_bounds((Mask(1) << a) | (Mask(1) << b)) & y)) return false;
    return true;
  }

  bool operator==(const FinQoset& o) const { return rel == o.rel; }
};

// Partial order: quasiorder with antisymmetry.
struct FinPoset : FinQoset {
  static FinPoset make(Rel r) {
    if (!r.antisymmetric()) throw std::invalid_argument("order not antisymmetric");
    FinQoset q = FinQoset::make(std::move(r));
    FinPoset p;
    p.n = q.n;
    p.rel = std::move(q.rel);
    return p;
  }

  static FinPoset from_qoset(const FinQoset& q) {
    if (!q.antisymmetric()) throw std::invalid_argument("order not antisymmetric");
    FinPoset p;
    p.n = q.n;
    p.rel = q.rel;
    return p;
  }

  // Least upper bound when it exists.
  std::optional<int> join(Mask f) const {
    Mask ub = upper_bounds(f);
    int best = -1;
    for_each_bit(ub, [&](int z) {
      if (best == -1 && (ub & ~up(z)) == 0) best = z;
    });
    if (best < 0) return std::nullopt;
    return best;
  }

  std::optional<int> meet(Mask f) const {
    Mask lb = lower_bounds(f);
    int best = -1;
    for_each_bit(lb, [&](int z) {
      if (best == -1 && (lb & ~down(z)) == 0) best = z;
    });
    if (best < 0) return std::nullopt;
    return best;
  }

  std::optional<int> bottom() const { return meet(full_mask(n)); }
  std::optional<int> top() const { return join(full_mask(n)); }

  bool covers(int u, int v) const {  // u -< v: a jump
    if (u == v || !le(u, v)) return false;
    for (int w = 0; w < n; ++w)
      if (w != u && w != v && le(u, w) && le(w, v)) return false;
    return true;
  }
};

inline bool is_lattice(const FinPoset& p) {
  if (p.n == 0) return false;
  for (int a = 0; a < p.n; ++a)
    for (int b = a; b < p.n; ++b) {
      Mask f = (Mask(1) << a) | (Mask(1) << b);
      if (!p.meet(f) || !p.join(f)) return false;
    }
  return true;
}

// Lattice: poset with tabulated meets and joins.
struct FinLattice {
  FinPoset poset;
  std::vector<int> meet_tab, join_tab;  // n*n, row-major

  int n() const { return poset.n; }
  int meet(int a, int b) const { return meet_tab[a * n() + b]; }
  int join(int a, int b) const { return join_tab[a * n() + b]; }
  bool le(int a, int b) const { return poset.le(a, b); }

  int meet_of(Mask f) const {  // empty meet = top
    int acc = *poset.top();
    for_each_bit(f, [&](int i) { acc = meet(acc, i); });
    return acc;
  }

  int join_of(Mask f) const {  // empty join = bottom
    int acc = *poset.bottom();
    for_each_bit(f, [&](int i) { acc = join(acc, i); });
    return acc;
  }

  static FinLattice make(const FinPoset& p) {
    if (!is_lattice(p)) throw std::invalid_argument("poset is not a lattice");
    FinLattice l;
    l.poset = p;
    l.meet_tab.assign(p.n * p.n, 0);
    l.join_tab.assign(p.n * p.n, 0);
    for (int a = 0; a < p.n; ++a)
      for (int b = 0; b < p.n; ++b) {
        Mask f = (Mask(1) << a) | (Mask(1) << b);
        l.meet_tab[a * p.n + b] = *p.meet(f);
        l.join_tab[a * p.n + b] = *p.join(f);
      }
    return l;
  }
};

// Order and topology on a shared carrier, deliberately decoupled.
struct OrderedSpace {
  FinQoset order;
  FinTopology top;

  static OrderedSpace make(FinQoset q, FinTopology t) {
    if (q.n != t.n) throw std::invalid_argument("carrier size mismatch");
    return OrderedSpace{std::move(q), std::move(t)};
  }
};

// Alexandroff topology of a quasiorder: opens are the upper sets.
inline FinTopology alexandroff(const FinQoset& q) {
  SetFamily fam;
  for (Mask m = 0; m <= full_mask(q.n); ++m)
    if (q.is_upper(m)) fam.sets.push_back(m);
  FinTopology t;
  t.n = q.n;
  t.opens = std::move(fam);  // already sorted ascending
  return t;
}

// Specialization quasiorder: x <= y iff every open around x contains y,
// i.e. y lies in the core of x.
inline FinQoset specialization(const FinTopology& t) {
  Rel r(t.n);
  for (int x = 0; x < t.n; ++x) r.row[x] = t.core(x);
  FinQoset q;
  q.n = t.n;
  q.rel = std::move(r);
  return q;
}

// --- canonical forms under carrier relabeling -----------------------------

inline Rel canon_rel(const Rel& r) {
  Rel best = r;
  for (const auto& perm : all_permutations(r.n)) {
    Rel cand = r.relabel(perm);
    if (cand < best) best = cand;
  }
  return best;
}

inline FinQoset canon_qoset(const FinQoset& q) {
  FinQoset out;
  out.n = q.n;
  out.rel = canon_rel(q.rel);
  return out;
}

// Canonical topology: minimal specialization preorder representative.
// Finite topologies and preorders determine each other, so relabeling the
// preorder relabels the topology.
inline FinTopology canon_topology(const FinTopology& t) {
  return alexandroff(canon_qoset(specialization(t)));
}

// --- named lattices --------------------------------------------------------

inline FinPoset chain_poset(int n) {
  Rel r(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) r.set(i, j);
  return FinPoset::make(std::move(r));
}

inline FinPoset antichain_poset(int n) { return FinPoset::make(Rel::identity(n)); }

// 0, a, b, c, 1 with three incomparable atoms-coatoms.
inline FinLattice m3_lattice() {
  Rel r(5);
  for (int i = 0; i < 5; ++i) r.set(i, i);
  for (int m : {1, 2, 3}) {
    r.set(0, m);
    r.set(m, 4);
  }
  r.set(0, 4);
  return FinLattice::make(FinPoset::make(std::move(r)));
}

// 0 < a < c < 1 and 0 < b < 1 with a,b and c,b incomparable.
inline FinLattice n5_lattice() {
  Rel r(5);
  for (int i = 0; i < 5; ++i) r.set(i, i);
  r.set(0, 1);
  r.set(1, 2);
  r.set(0, 2);
  r.set(0, 3);
  r.set(1, 4);
  r.set(2, 4);
  r.set(3, 4);
  r.set(0, 4);
  return FinLattice::make(FinPoset::make(std::move(r)));
}

// Free distributive: 0 < a,b < 1.
inline FinLattice boolean4_lattice() {
  Rel r(4);
  for (int i = 0; i < 4; ++i) r.set(i, i);
  r.set(0, 1);
  r.set(0, 2);
  r.set(1, 3);
  r.set(2, 3);
  r.set(0, 3);
  return FinLattice::make(FinPoset::make(std::move(r)));
}

inline FinLattice chain_lattice(int n) { return FinLattice::make(chain_poset(n)); }

inline FinTopology sierpinski() {
  SetFamily fam;
  fam.sets = {0, 2, 3};  // {}, {1}, {0,1}: point 0 specializes below 1
  FinTopology t;
  t.n = 2;
  t.opens = std::move(fam);
  return t;
}

inline FinTopology discrete_topology(int n) {
  SetFamily fam;
  for (Mask m = 0; m <= full_mask(n); ++m) fam.sets.push_back(m);
  FinTopology t;
  t.n = n;
  t.opens = std::move(fam);
  return t;
}

inline FinTopology indiscrete_topology(int n) {
  FinTopology t;
  t.n = n;
  t.opens.sets = {0};
  if (n > 0) t.opens.insert(full_mask(n));
  return t;
}

}  // namespace ordtop

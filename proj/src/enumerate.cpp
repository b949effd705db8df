#include "ordtop/enumerate.hpp"

#include <algorithm>
#include <atomic>

namespace ordtop {

namespace {

// Off-diagonal pair list for the quasi-order scan, row-major.
struct PairTable {
  std::vector<std::pair<int, int>> pairs;
  explicit PairTable(int n) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y) pairs.emplace_back(x, y);
  }
};

Rel rel_from_offdiag(int n, const PairTable& pt, std::uint64_t bits) {
  Rel r = Rel::identity(n);
  for (std::size_t i = 0; i < pt.pairs.size(); ++i)
    if (bits >> i & 1) r.set(pt.pairs[i].first, pt.pairs[i].second);
  return r;
}

void poset_backtrack(int n, int cur, std::vector<Mask>& rows,
                     const std::function<void(const FinPoset&)>& fn) {
  if (cur == n) {
    Rel r(n);
    r.row = rows;
    fn(FinPoset::make(r));
    return;
  }
  const Mask self = Mask(1) << cur;
  for (Mask row = 0; row < (Mask(1) << n); ++row) {
    if (!(row & self)) continue;
    bool ok = true;
    for (int prev = 0; prev < cur && ok; ++prev) {
      if (has_bit(rows[prev], cur)) {
        // prev <= cur forces up(cur) inside up(prev) and forbids cur <= prev.
        if ((row & ~rows[prev]) != 0 || has_bit(row, prev)) ok = false;
      }
      if (ok && has_bit(row, prev)) {
        if ((rows[prev] & ~row) != 0) ok = false;
      }
    }
    if (!ok) continue;
    rows[cur] = row;
    poset_backtrack(n, cur + 1, rows, fn);
  }
}

}  // namespace

void for_each_qoset(int n, const std::function<void(const FinQoset&)>& fn) {
  require(n >= 1 && n <= 5, "quasi-order scan supports 1..5 points");
  PairTable pt(n);
  const std::uint64_t total = std::uint64_t(1) << pt.pairs.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Rel r = rel_from_offdiag(n, pt, bits);
    if (r.transitive()) fn(FinQoset::make(r));
  }
}

void for_each_poset(int n, const std::function<void(const FinPoset&)>& fn) {
  require(n >= 1 && n <= 7, "partial-order scan supports 1..7 points");
  std::vector<Mask> rows(n, 0);
  poset_backtrack(n, 0, rows, fn);
}

namespace {
std::atomic<bool> g_iso_mode{false};
}  // namespace

bool iso_enumeration_mode() { return g_iso_mode.load(std::memory_order_relaxed); }
void set_iso_enumeration_mode(bool on) { g_iso_mode.store(on, std::memory_order_relaxed); }

std::vector<FinQoset> all_qosets(int n) {
  if (iso_enumeration_mode()) return qosets_up_to_iso(n);
  std::vector<FinQoset> out;
  for_each_qoset(n, [&](const FinQoset& q) { out.push_back(q); });
  return out;
}

std::vector<FinPoset> all_posets(int n) {
  if (iso_enumeration_mode()) return posets_up_to_iso(n);
  std::vector<FinPoset> out;
  for_each_poset(n, [&](const FinPoset& p) { out.push_back(p); });
  return out;
}

std::vector<FinLattice> all_lattices(int n) {
  if (iso_enumeration_mode()) return lattices_up_to_iso(n);
  std::vector<FinLattice> out;
  for_each_poset(n, [&](const FinPoset& p) {
    if (is_lattice(p)) out.push_back(FinLattice::make(p));
  });
  return out;
}

std::vector<FinTopology> all_topologies(int n) {
  if (iso_enumeration_mode()) return topologies_up_to_iso(n);
  std::vector<FinTopology> out;
  for_each_qoset(n, [&](const FinQoset& q) { out.push_back(alexandroff(q)); });
  return out;
}

std::vector<FinQoset> qosets_up_to_iso(int n) {
  std::vector<FinQoset> out;
  for_each_qoset(n, [&](const FinQoset& q) {
    if (canon_rel(q.rel) == q.rel) out.push_back(q);
  });
  return out;
}

std::vector<FinPoset> posets_up_to_iso(int n) {
  std::vector<FinPoset> out;
  for_each_poset(n, [&](const FinPoset& p) {
    if (canon_rel(p.rel) == p.rel) out.push_back(p);
  });
  return out;
}

std::vector<FinLattice> lattices_up_to_iso(int n) {
  std::vector<FinLattice> out;
  for_each_poset(n, [&](const FinPoset& p) {
    if (is_lattice(p) && canon_rel(p.rel) == p.rel) out.push_back(FinLattice::make(p));
  });
  return out;
}

std::vector<FinTopology> topologies_up_to_iso(int n) {
  std::vector<FinTopology> out;
  for_each_qoset(n, [&](const FinQoset& q) {
    if (canon_rel(q.rel) == q.rel) out.push_back(alexandroff(q));
  });
  return out;
}

std::size_t count_qosets(int n) {
  std::size_t c = 0;
  for_each_qoset(n, [&](const FinQoset&) { ++c; });
  return c;
}

std::size_t count_posets(int n) {
  std::size_t c = 0;
  for_each_poset(n, [&](const FinPoset&) { ++c; });
  return c;
}

}  // namespace ordtop

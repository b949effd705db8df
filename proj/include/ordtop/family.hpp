#pragma once

#include <algorithm>
#include <vector>

#include "ordtop/base.hpp"

namespace ordtop {

// A finite family of subsets, kept sorted by mask value with duplicates
// removed.  This is the canonical on-disk and in-memory order.
struct SetFamily {
  std::vector<Mask> sets;

  SetFamily() = default;
  explicit SetFamily(std::vector<Mask> s) : sets(std::move(s)) { canonicalize(); }

  void canonicalize() {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  }

  bool contains(Mask m) const {
    return std::binary_search(sets.begin(), sets.end(), m);
  }

  void insert(Mask m) {
    auto it = std::lower_bound(sets.begin(), sets.end(), m);
    if (it == sets.end() || *it != m) sets.insert(it, m);
  }

  std::size_t size() const { return sets.size(); }
  bool empty() const { return sets.empty(); }
  bool operator==(const SetFamily& o) const { return sets == o.sets; }
  bool operator<(const SetFamily& o) const { return sets < o.sets; }

  auto begin() const { return sets.begin(); }
  auto end() const { return sets.end(); }
};

// Closes a family under the given binary set operations until a fixpoint.
// ops entries: '|' union, '&' intersection.
inline SetFamily close_under(SetFamily fam, const std::vector<char>& ops) {
  bool changed = true;
  while (changed) {
    changed = false;
    const auto snapshot = fam.sets;  // iterate over a stable copy
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i; j < snapshot.size(); ++j)
        for (char op : ops) {
          Mask m = op == '|' ? (snapshot[i] | snapshot[j])
                             : (snapshot[i] & snapshot[j]);
          if (!fam.contains(m)) {
            fam.insert(m);
            changed = true;
          }
        }
  }
  return fam;
}

// Topology generated by an arbitrary subbase: finite intersections
// (the empty intersection gives X), then arbitrary unions (the empty
// union gives the empty set).
inline SetFamily saturate_subbase(int n, SetFamily subbase) {
  subbase.insert(full_mask(n));
  SetFamily fam = close_under(std::move(subbase), {'&'});
  fam.insert(0);
  return close_under(std::move(fam), {'|'});
}

}  // namespace ordtop

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordtop {

// A subset of a carrier with at most kMaxPoints points, one bit per point.
using Mask = std::uint32_t;

inline constexpr int kMaxPoints = 20;

inline Mask full_mask(int n) { return n == 0 ? 0u : (Mask(1) << n) - 1u; }
inline bool has_bit(Mask m, int i) { return (m >> i) & 1u; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

template <typename F>
inline void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

// Visits every submask of m, including 0 and m itself.
template <typename F>
inline void for_each_submask(Mask m, F&& f) {
  Mask s = m;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

// Binary relation on {0,...,n-1}; row[x] holds {y : x R y}.
struct Rel {
  int n = 0;
  std::vector<Mask> row;

  Rel() = default;
  explicit Rel(int n_) : n(n_), row(n_, 0) {}

  bool at(int x, int y) const { return has_bit(row[x], y); }
  void set(int x, int y) { row[x] |= Mask(1) << y; }
  void clear(int x, int y) { row[x] &= ~(Mask(1) << y); }

  // {x : x R y}
  Mask col(int y) const {
    Mask c = 0;
    for (int x = 0; x < n; ++x)
      if (at(x, y)) c |= Mask(1) << x;
    return c;
  }

  bool operator==(const Rel& o) const { return n == o.n && row == o.row; }
  bool operator<(const Rel& o) const { return row < o.row; }

  bool reflexive() const {
    for (int x = 0; x < n; ++x)
      if (!at(x, x)) return false;
    return true;
  }

  bool transitive() const {
    for (int x = 0; x < n; ++x) {
      Mask r = row[x];
      Mask reach = r;
      for_each_bit(r, [&](int y) { reach |= row[y]; });
      if (reach != r) return false;
    }
    return true;
  }

  bool antisymmetric() const {
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (at(x, y) && at(y, x)) return false;
    return true;
  }

  // x (this o other) y  iff  exists z with x this z and z other y.
  Rel compose(const Rel& o) const {
    Rel r(n);
    for (int x = 0; x < n; ++x)
      for_each_bit(row[x], [&](int z) { r.row[x] |= o.row[z]; });
    return r;
  }

  Rel transpose() const {
    Rel r(n);
    for (int y = 0; y < n; ++y) r.row[y] = col(y);
    return r;
  }

  Rel intersect(const Rel& o) const {
    Rel r(n);
    for (int x = 0; x < n; ++x) r.row[x] = row[x] & o.row[x];
    return r;
  }

  Rel unite(const Rel& o) const {
    Rel r(n);
    for (int x = 0; x < n; ++x) r.row[x] = row[x] | o.row[x];
    return r;
  }

  static Rel identity(int n) {
    Rel r(n);
    for (int x = 0; x < n; ++x) r.set(x, x);
    return r;
  }

  static Rel full(int n) {
    Rel r(n);
    for (int x = 0; x < n; ++x) r.row[x] = full_mask(n);
    return r;
  }

  // Reflexive-transitive closure.
  Rel closure() const {
    Rel r = *this;
    for (int x = 0; x < n; ++x) r.set(x, x);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < n; ++x) {
        Mask reach = r.row[x];
        for_each_bit(r.row[x], [&](int y) { reach |= r.row[y]; });
        if (reach != r.row[x]) {
          r.row[x] = reach;
          changed = true;
        }
      }
    }
    return r;
  }

  // Image {y : exists x in s with x R y}.
  Mask image(Mask s) const {
    Mask out = 0;
    for_each_bit(s, [&](int x) { out |= row[x]; });
    return out;
  }

  // Preimage {x : exists y in s with x R y}.
  Mask preimage(Mask s) const {
    Mask out = 0;
    for (int x = 0; x < n; ++x)
      if (row[x] & s) out |= Mask(1) << x;
    return out;
  }

  // Applies a relabeling perm (point i becomes perm[i]).
  Rel relabel(const std::vector<int>& perm) const {
    Rel r(n);
    for (int x = 0; x < n; ++x)
      for_each_bit(row[x], [&](int y) { r.set(perm[x], perm[y]); });
    return r;
  }
};

inline Mask relabel_mask(Mask m, const std::vector<int>& perm) {
  Mask out = 0;
  for_each_bit(m, [&](int i) { out |= Mask(1) << perm[i]; });
  return out;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw internal_error(what);
}

}  // namespace ordtop

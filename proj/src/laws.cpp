#include "ordtop/laws.hpp"

#include "ordtop/classify.hpp"
#include "ordtop/enumerate.hpp"
#include "ordtop/family.hpp"
#include "ordtop/parallel.hpp"

namespace ordtop {

namespace {

// All nonempty down-directed lower sets.  In a finite lattice these are the
// principal ideals, but the laws quantify over ideals, so they are collected
// by definition rather than by that collapse.
std::vector<Mask> ideal_masks(const FinPoset& p) {
  std::vector<Mask> out;
  for (Mask m = 1; m < (Mask(1) << p.n); ++m)
    if (p.is_lower(m) && p.directed(m)) out.push_back(m);
  return out;
}

// Joins and meets of every subset of the carrier, tabulated once so the
// subset-quantified laws stay near-linear per subset.
struct SubsetTables {
  std::vector<int> join, meet;

  explicit SubsetTables(const FinLattice& lat) {
    const Mask count = Mask(1) << lat.n();
    join.resize(count);
    meet.resize(count);
    join[0] = *lat.poset.bottom();
    meet[0] = *lat.poset.top();
    for (Mask f = 1; f < count; ++f) {
      const int low = lowest_bit(f);
      join[f] = lat.join(join[f & (f - 1)], low);
      meet[f] = lat.meet(meet[f & (f - 1)], low);
    }
  }
};

// x essentially-below y: every subset whose join dominates y contains a
// bound above x.
bool below_every_join_cover(const FinLattice& lat, const SubsetTables& tab,
                            int x, int y) {
  const Mask above_x = lat.poset.up(x);
  for (Mask f = 0; f < (Mask(1) << lat.n()); ++f)
    if (lat.le(y, tab.join[f]) && !(f & above_x)) return false;
  return true;
}

bool above_every_meet_cover(const FinLattice& lat, const SubsetTables& tab,
                            int x, int y) {
  const Mask below_x = lat.poset.down(x);
  for (Mask g = 0; g < (Mask(1) << lat.n()); ++g)
    if (lat.le(tab.meet[g], y) && !(g & below_x)) return false;
  return true;
}

}  // namespace

bool frame_law(const FinLattice& lat, json* witness) {
  const int n = lat.n();
  const SubsetTables tab(lat);
  for (int x = 0; x < n; ++x)
    for (Mask y = 0; y < (Mask(1) << n); ++y) {
      Mask meets = 0;
      for_each_bit(y, [&](int s) { meets |= Mask(1) << lat.meet(x, s); });
      if (lat.meet(x, tab.join[y]) != tab.join[meets]) {
        if (witness)
          *witness = {{"element", x}, {"subset", static_cast<int>(y)}};
        return false;
      }
    }
  return true;
}

bool coframe_law(const FinLattice& lat, json* witness) {
  const int n = lat.n();
  const SubsetTables tab(lat);
  for (int x = 0; x < n; ++x)
    for (Mask y = 0; y < (Mask(1) << n); ++y) {
      Mask joins = 0;
      for_each_bit(y, [&](int s) { joins |= Mask(1) << lat.join(x, s); });
      if (lat.join(x, tab.meet[y]) != tab.meet[joins]) {
        if (witness)
          *witness = {{"element", x}, {"subset", static_cast<int>(y)}};
        return false;
      }
    }
  return true;
}

bool wide_coframe_law(const FinLattice& lat, json* witness) {
  const int n = lat.n();
  const SubsetTables tab(lat);
  for (int y = 0; y < n; ++y) {
    Mask below = 0;
    for (int x = 0; x < n; ++x)
      if (below_every_join_cover(lat, tab, x, y)) below |= Mask(1) << x;
    if (tab.join[below] != y) {
      if (witness) *witness = {{"element", y}};
      return false;
    }
  }
  return true;
}

bool wide_frame_law(const FinLattice& lat, json* witness) {
  const int n = lat.n();
  const SubsetTables tab(lat);
  for (int y = 0; y < n; ++y) {
    Mask above = 0;
    for (int x = 0; x < n; ++x)
      if (above_every_meet_cover(lat, tab, x, y)) above |= Mask(1) << x;
    if (tab.meet[above] != y) {
      if (witness) *witness = {{"element", y}};
      return false;
    }
  }
  return true;
}

bool completely_distributive_covers(const FinLattice& lat, json* witness) {
  const int n = lat.n();
  for (int y = 0; y < n; ++y) {
    Mask totally = 0;
    for (int x = 0; x < n; ++x) {
      // x is totally below y iff y escapes the worst cover {s : x not<= s}.
      Mask avoid = 0;
      for (int s = 0; s < n; ++s)
        if (!lat.le(x, s)) avoid |= Mask(1) << s;
      if (!lat.le(y, lat.join_of(avoid))) totally |= Mask(1) << x;
    }
    if (lat.join_of(totally) != y) {
      if (witness) *witness = {{"element", y}};
      return false;
    }
  }
  return true;
}

bool distributive(const FinLattice& lat, json* witness) {
  const int n = lat.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (lat.meet(a, lat.join(b, c)) !=
            lat.join(lat.meet(a, b), lat.meet(a, c))) {
          if (witness) *witness = {{"a", a}, {"b", b}, {"c", c}};
          return false;
        }
  return true;
}

bool completely_distributive_literal(const FinLattice& lat) {
  const int n = lat.n();
  require(n <= 4, "literal complete-distributivity check supports 4 elements");
  std::vector<Mask> lowers;
  for (Mask m = 0; m < (Mask(1) << n); ++m)
    if (lat.poset.is_lower(m)) lowers.push_back(m);
  const std::size_t k = lowers.size();
  for (std::uint64_t coll = 0; coll < (std::uint64_t(1) << k); ++coll) {
    Mask meet_args = 0;
    Mask common = full_mask(n);
    for (std::size_t i = 0; i < k; ++i)
      if (coll >> i & 1) {
        meet_args |= Mask(1) << lat.join_of(lowers[i]);
        common &= lowers[i];
      }
    if (lat.meet_of(meet_args) != lat.join_of(common)) return false;
  }
  return true;
}

SpectralProfile spectral_profile(const FinLattice& lat) {
  SpectralProfile sp;
  const int n = lat.n();
  const int top = *lat.poset.top();
  const int bot = *lat.poset.bottom();

  for (int p = 0; p < n; ++p) {
    if (p != top) {
      bool prime = true;
      for (int a = 0; a < n && prime; ++a)
        for (int b = 0; b < n; ++b)
          if (lat.le(lat.meet(a, b), p) && !lat.le(a, p) && !lat.le(b, p)) {
            prime = false;
            break;
          }
      if (prime) sp.primes |= Mask(1) << p;
    }
    if (p != bot) {
      bool coprime = true;
      for (int a = 0; a < n && coprime; ++a)
        for (int b = 0; b < n; ++b)
          if (lat.le(p, lat.join(a, b)) && !lat.le(p, a) && !lat.le(p, b)) {
            coprime = false;
            break;
          }
      if (coprime) sp.coprimes |= Mask(1) << p;
    }
    // Supercompact: the elements not above p form a principal ideal.
    Mask rest = full_mask(n) & ~lat.poset.up_set(Mask(1) << p);
    bool super = false;
    for_each_bit(rest, [&](int m) {
      if (rest == lat.poset.down(m)) super = true;
    });
    if (super) sp.supercompact |= Mask(1) << p;
  }

  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (lat.poset.covers(u, v)) sp.jumps.emplace_back(u, v);

  sp.spatial = true;
  for (int y = 0; y < n && sp.spatial; ++y)
    if (lat.meet_of(sp.primes & lat.poset.up(y)) != y) sp.spatial = false;
  sp.superalgebraic = true;
  for (int y = 0; y < n && sp.superalgebraic; ++y)
    if (lat.join_of(sp.supercompact & lat.poset.down(y)) != y)
      sp.superalgebraic = false;
  return sp;
}

json SpectralProfile::to_json(const Carrier& carrier) const {
  auto mask_labels = [&](Mask m) {
    json arr = json::array();
    for_each_bit(m, [&](int x) { arr.push_back(carrier.labels[x]); });
    return arr;
  };
  json jj = json::array();
  for (auto [u, v] : jumps) jj.push_back({carrier.labels[u], carrier.labels[v]});
  return {{"primes", mask_labels(primes)},
          {"coprimes", mask_labels(coprimes)},
          {"supercompact", mask_labels(supercompact)},
          {"jumps", jj},
          {"spatial", spatial},
          {"superalgebraic", superalgebraic}};
}

LawProfile law_profile(const FinLattice& lat) {
  LawProfile lp;
  lp.witnesses = json::object();
  const int n = lat.n();

  json w;
  lp.frame = frame_law(lat, &w);
  if (!lp.frame) lp.witnesses["frame"] = w;
  lp.coframe = coframe_law(lat, &w);
  if (!lp.coframe) lp.witnesses["coframe"] = w;

  lp.wide_coframe = wide_coframe_law(lat, &w);
  if (!lp.wide_coframe) lp.witnesses["wide_coframe"] = w;
  lp.wide_frame = wide_frame_law(lat, &w);
  if (!lp.wide_frame) lp.witnesses["wide_frame"] = w;
  lp.completely_distributive = completely_distributive_covers(lat, &w);
  if (!lp.completely_distributive) lp.witnesses["completely_distributive"] = w;

  std::vector<Mask> ideals = ideal_masks(lat.poset);
  lp.meet_continuous = true;
  for (int x = 0; x < n && lp.meet_continuous; ++x)
    for (Mask i : ideals) {
      Mask meets = 0;
      for_each_bit(i, [&](int s) { meets |= Mask(1) << lat.meet(x, s); });
      if (lat.meet(x, lat.join_of(i)) != lat.join_of(meets)) {
        lp.meet_continuous = false;
        lp.witnesses["meet_continuous"] = {{"element", x}, {"ideal", static_cast<int>(i)}};
        break;
      }
    }

  lp.continuous = true;
  const std::size_t k = ideals.size();
  require(k <= 20, "ideal-collection scan too large");
  for (std::uint64_t coll = 0; coll < (std::uint64_t(1) << k) && lp.continuous; ++coll) {
    Mask joins = 0;
    Mask common = full_mask(n);
    for (std::size_t i = 0; i < k; ++i)
      if (coll >> i & 1) {
        joins |= Mask(1) << lat.join_of(ideals[i]);
        common &= ideals[i];
      }
    if (lat.meet_of(joins) != lat.join_of(common)) {
      lp.continuous = false;
      lp.witnesses["continuous"] = {{"collection", coll}};
    }
  }

  SpectralProfile sp = spectral_profile(lat);
  lp.spatial = sp.spatial;
  lp.weakly_atomic = true;
  for (int x = 0; x < n && lp.weakly_atomic; ++x)
    for (int y = 0; y < n; ++y) {
      if (!lat.le(x, y) || x == y) continue;
      bool jump = false;
      for (int u = 0; u < n && !jump; ++u)
        for (int v = 0; v < n; ++v)
          if (lat.le(x, u) && lat.le(v, y) && lat.poset.covers(u, v)) {
            jump = true;
            break;
          }
      if (!jump) {
        lp.weakly_atomic = false;
        lp.witnesses["weakly_atomic"] = {{"from", x}, {"to", y}};
        break;
      }
    }
  lp.superalgebraic = sp.superalgebraic;
  if (!lp.spatial) lp.witnesses["spatial"] = json::object();
  if (!lp.superalgebraic) lp.witnesses["superalgebraic"] = json::object();
  return lp;
}

json LawProfile::to_json() const {
  return {{"frame", frame},
          {"coframe", coframe},
          {"wide_frame", wide_frame},
          {"wide_coframe", wide_coframe},
          {"completely_distributive", completely_distributive},
          {"spatial", spatial},
          {"weakly_atomic", weakly_atomic},
          {"superalgebraic", superalgebraic},
          {"meet_continuous", meet_continuous},
          {"continuous", continuous},
          {"witnesses", witnesses}};
}

FinTopology weak_upper_topology(const FinPoset& p) {
  SetFamily subbase;
  for (int x = 0; x < p.n; ++x)
    subbase.sets.push_back(full_mask(p.n) & ~p.down(x));
  subbase.canonicalize();
  return FinTopology::make(p.n, saturate_subbase(p.n, subbase));
}

AuditReport audit_countable_frame_laws(int n_bound) {
  AuditReport rep;
  rep.id = "L1.1";
  rep.statement =
      "finite frames are weakly atomic and spatial; frames that are also "
      "coframes are superalgebraic";
  rep.bound = n_bound;
  StopWatch sw;
  for (int n = 1; n <= n_bound; ++n) {
    for (const FinLattice& lat : all_lattices(n)) {
      LawProfile lp = law_profile(lat);
      if (!lp.frame) continue;
      ++rep.instances;
      if (!lp.weakly_atomic || !lp.spatial || (lp.coframe && !lp.superalgebraic))
        rep.record_violation({{"n", n},
                              {"order", lat.poset.rel.row},
                              {"weakly_atomic", lp.weakly_atomic},
                              {"spatial", lp.spatial},
                              {"superalgebraic", lp.superalgebraic}});
      if (interrupt_flag_set()) {
        rep.complete = false;
        break;
      }
    }
    if (!rep.complete) break;
  }
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_weak_space_biconditionals(int n_bound) {
  AuditReport rep;
  rep.id = "E1.1";
  rep.statement =
      "for distributive complete lattices: frame / wide frame / completely "
      "distributive iff the weak upper space is a web / wide web / worldwide "
      "web space";
  rep.bound = n_bound;
  StopWatch sw;
  for (int n = 1; n <= n_bound; ++n) {
    for (const FinLattice& lat : all_lattices(n)) {
      if (!distributive(lat)) continue;  // outside the law's hypothesis
      ++rep.instances;
      LawProfile lp = law_profile(lat);
      FinTopology upsilon = weak_upper_topology(lat.poset);
      SpaceProfile prof = space_profile(upsilon);
      if (lp.frame != prof.web || lp.wide_frame != prof.wide_web ||
          lp.completely_distributive != prof.c_space)
        rep.record_violation({{"n", n},
                              {"order", lat.poset.rel.row},
                              {"frame", lp.frame},
                              {"web", prof.web},
                              {"wide_frame", lp.wide_frame},
                              {"wide_web", prof.wide_web},
                              {"completely_distributive", lp.completely_distributive},
                              {"c_space", prof.c_space}});
      if (interrupt_flag_set()) {
        rep.complete = false;
        break;
      }
    }
    if (!rep.complete) break;
  }
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

}  // namespace ordtop

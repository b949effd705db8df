#include "ordtop/patchwork.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "ordtop/classify.hpp"
#include "ordtop/enumerate.hpp"
#include "ordtop/family.hpp"
#include "ordtop/parallel.hpp"

namespace ordtop {

namespace {

// Secondary brute-force routes that enumerate arbitrary subsets run only on
// carriers this small; the primary routes work at any supported size.
constexpr int kScanRouteMax = 6;

json mask_json(Mask m) { return json(static_cast<std::uint32_t>(m)); }

json opens_json(const FinTopology& t) {
  json arr = json::array();
  for (Mask m : t.opens) arr.push_back(mask_json(m));
  return arr;
}

json rel_json(const FinQoset& q) {
  json arr = json::array();
  for (int x = 0; x < q.n; ++x) arr.push_back(mask_json(q.rel.row[x]));
  return arr;
}

json space_json(const OrderedSpace& t) {
  return {{"n", t.top.n}, {"order_rows", rel_json(t.order)}, {"opens", opens_json(t.top)}};
}

bool settle(json& agreement, const std::string& name, const std::vector<bool>& routes) {
  json arr = json::array();
  for (bool b : routes) arr.push_back(b);
  agreement[name] = arr;
  for (bool b : routes)
    require(b == routes.front(), "route disagreement: " + name);
  return routes.front();
}

Mask bit(int x) { return Mask(1) << x; }

}  // namespace

std::string to_string(CoselectionKind k) {
  switch (k) {
    case CoselectionKind::upsilon: return "upsilon";
    case CoselectionKind::alpha: return "alpha";
    case CoselectionKind::sigma: return "sigma";
  }
  return "?";
}

CoselectionKind coselection_from_string(const std::string& s) {
  if (s == "upsilon") return CoselectionKind::upsilon;
  if (s == "alpha") return CoselectionKind::alpha;
  if (s == "sigma") return CoselectionKind::sigma;
  throw std::invalid_argument("unknown coselection: " + s +
                              " (expected upsilon, alpha, or sigma)");
}

FinTopology upper_space(const OrderedSpace& t) {
  SetFamily fam;
  for (Mask o : t.top.opens)
    if (t.order.is_upper(o)) fam.sets.push_back(o);
  // Upper sets are closed under union and intersection, so the filtered
  // family is again a topology.
  return FinTopology::make(t.top.n, std::move(fam));
}

FinTopology lower_space(const OrderedSpace& t) {
  SetFamily fam;
  for (Mask o : t.top.opens)
    if (t.order.is_lower(o)) fam.sets.push_back(o);
  return FinTopology::make(t.top.n, std::move(fam));
}

FinTopology weak_upper_topology(const FinQoset& q) {
  SetFamily sub;
  const Mask X = full_mask(q.n);
  for (int x = 0; x < q.n; ++x) sub.insert(X & ~q.down(x));
  return FinTopology::make(q.n, saturate_subbase(q.n, std::move(sub)));
}

FinTopology selection_topology(const FinQoset& q, CoselectionKind k) {
  switch (k) {
    case CoselectionKind::upsilon: return weak_upper_topology(q);
    case CoselectionKind::alpha: return alexandroff(q);
    case CoselectionKind::sigma: {
      // Opens inaccessible by directed joins.  A nonempty directed set in a
      // finite quasiordered carrier contains a greatest element m, and every
      // join s of the set satisfies s <= m, so an upper set containing s
      // already contains m: the condition is vacuous and the topology is the
      // Alexandroff one.  On small carriers the literal definition is still
      // evaluated and compared.
      FinTopology alex = alexandroff(q);
      if (q.n <= 10) {  // the self-check walks pairs of subsets
        SetFamily fam;
        const Mask X = full_mask(q.n);
        for (Mask u = 0; u <= X; ++u) {
          if (!q.is_upper(u)) continue;
          bool ok = true;
          for (Mask d = 1; d <= X && ok; ++d) {
            if (!q.directed(d)) continue;
            Mask ub = q.upper_bounds(d);
            bool join_in_u = false;
            for_each_bit(ub & u, [&](int s) {
              if ((ub & ~q.up(s)) == 0) join_in_u = true;
            });
            if (join_in_u && !(d & u)) ok = false;
          }
          if (ok) fam.sets.push_back(u);
        }
        fam.canonicalize();
        require(fam == alex.opens, "finite directed-join topology differs from Alexandroff");
      }
      return alex;
    }
  }
  throw std::invalid_argument("bad coselection kind");
}

FinTopology coselection_topology(const FinTopology& s, CoselectionKind k) {
  return selection_topology(specialization(s).dual(), k);
}

OrderedSpace patch_space(const FinTopology& s, CoselectionKind k) {
  FinTopology co = coselection_topology(s, k);
  SetFamily sub = s.opens;
  for (Mask m : co.opens) sub.insert(m);
  return OrderedSpace{specialization(s),
                      FinTopology::make(s.n, saturate_subbase(s.n, std::move(sub)))};
}

FinTopology lawson_topology(const FinQoset& q) {
  SetFamily sub = alexandroff(q).opens;
  for (Mask m : weak_upper_topology(q.dual()).opens) sub.insert(m);
  return FinTopology::make(q.n, saturate_subbase(q.n, std::move(sub)));
}

SetFamily principal_filter_unions(const FinQoset& q) {
  SetFamily fam;
  fam.insert(0);  // empty union
  for (int x = 0; x < q.n; ++x) fam.insert(q.up(x));
  return close_under(std::move(fam), {'|'});
}

SetFamily principal_filter_intersections(const FinQoset& q) {
  SetFamily fam;
  fam.insert(full_mask(q.n));  // empty intersection
  for (int x = 0; x < q.n; ++x) fam.insert(q.up(x));
  return close_under(std::move(fam), {'&'});
}

SetFamily principal_filter_sublattice(const FinQoset& q) {
  SetFamily fam;
  fam.insert(0);
  fam.insert(full_mask(q.n));
  for (int x = 0; x < q.n; ++x) fam.insert(q.up(x));
  return close_under(std::move(fam), {'|', '&'});
}

json OrderedSpaceProfile::to_json() const {
  json j = json::object();
  auto emit = [&](const char* name, bool v) {
    auto it = route_agreement.find(name);
    if (it != route_agreement.end() && it->is_string())
      return;  // skipped on a large carrier: report the flag as absent
    j[name] = v;
  };
  emit("lower_semi", lower_semi);
  emit("upper_semi", upper_semi);
  emit("semi_qospace", semi_qospace);
  emit("t1_ordered", t1_ordered);
  emit("qospace", qospace);
  emit("pospace", pospace);
  emit("t2_ordered", t2_ordered);
  emit("upper_regular", upper_regular);
  emit("upper_t3", upper_t3);
  emit("t1_plain", t1_plain);
  emit("t2_plain", t2_plain);
  emit("locally_convex", locally_convex);
  emit("strongly_convex", strongly_convex);
  emit("hyperconvex", hyperconvex);
  emit("upsilon_convex", upsilon_convex);
  emit("alpha_convex", alpha_convex);
  emit("up_stable", up_stable);
  emit("c_stable", c_stable);
  emit("d_stable", d_stable);
  emit("alpha_stable", alpha_stable);
  emit("vee_stable", vee_stable);
  emit("wedge_stable", wedge_stable);
  emit("diamond_stable", diamond_stable);
  emit("web_ordered", web_ordered);
  emit("locally_lower_bounded", locally_lower_bounded);
  emit("locally_filtered", locally_filtered);
  emit("sector_space", sector_space);
  emit("upsilon_sector_space", upsilon_sector_space);
  emit("alpha_sector_space", alpha_sector_space);
  emit("fan_space", fan_space);
  emit("patch_of_upper", patch_of_upper);
  emit("upsilon_patch_of_upper", upsilon_patch_of_upper);
  emit("alpha_patch_of_upper", alpha_patch_of_upper);
  emit("mc_ordered", mc_ordered);
  emit("semilattice", semilattice);
  if (semilattice) {
    emit("compatible_semilattice", compatible_semilattice);
    emit("semitopological", semitopological);
    emit("topological_semilattice", topological_semilattice);
    emit("small_semilattices", small_semilattices);
    emit("s_topological", s_topological);
  }
  j["large_carrier_skips"] = large_carrier_skips;
  j["route_agreement"] = route_agreement;
  return j;
}

OrderedSpaceProfile ordered_space_profile(const OrderedSpace& t) {
  const int n = t.top.n;
  require(n == t.order.n, "carrier mismatch between order and topology");
  require(n >= 1 && n <= kMaxPoints, "carrier size out of range");
  const Mask X = full_mask(n);
  const FinQoset& q = t.order;
  const FinTopology& top = t.top;

  OrderedSpaceProfile p;
  const bool scan_routes = n <= kScanRouteMax;
  const bool big = n > kLargeCarrier;
  p.large_carrier_skips = big;
  auto skip = [&](const char* name) { p.route_agreement[name] = "skipped_large_carrier"; };

  const FinTopology upper = upper_space(t);
  const FinTopology lower = lower_space(t);
  const FinQoset spec_top = specialization(top);
  const FinQoset spec_upper = specialization(upper);
  const FinQoset spec_lower = specialization(lower);

  std::vector<Mask> core_int(n), upcore_int(n);
  for (int x = 0; x < n; ++x) {
    core_int[x] = top.interior(q.up(x));
    upcore_int[x] = upper.interior(q.up(x));
  }

  // --- separation axioms ---
  p.lower_semi = true;
  p.upper_semi = true;
  for (int x = 0; x < n; ++x) {
    if (!top.is_closed(q.down(x))) p.lower_semi = false;
    if (!top.is_closed(q.up(x))) p.upper_semi = false;
  }
  p.semi_qospace = p.lower_semi && p.upper_semi;
  p.t1_ordered = p.semi_qospace && q.antisymmetric();

  p.t1_plain = true;
  for (int x = 0; x < n; ++x)
    if (!top.is_closed(bit(x))) p.t1_plain = false;

  // The core of a point is its least open neighborhood, so any separating
  // pair of opens can be shrunk to the cores; testing the cores is exact.
  p.t2_plain = true;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (top.core(x) & top.core(y)) p.t2_plain = false;

  // The strong order-Hausdorff axiom presupposes a partial order (it sits
  // strictly between upper-T3 and pospace in the separation ladder).
  bool t2_sep = true;
  p.qospace = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (q.le(x, y)) continue;
      if (upper.core(x) & lower.core(y)) t2_sep = false;
      if (q.up_set(top.core(x)) & q.down_set(top.core(y))) p.qospace = false;
    }
  p.t2_ordered = t2_sep && q.antisymmetric();
  p.pospace = p.qospace && q.antisymmetric();

  {
    // Closed upper sets are exactly the complements of open lower sets, and
    // they are closed under intersection, so each open upper U has a least
    // closed upper superset.
    std::vector<Mask> closed_upper;
    for (Mask v : lower.opens) closed_upper.push_back(X & ~v);
    bool route_a = true;
    for (Mask o : upper.opens) {
      Mask good = 0;  // points x with an interpolating pair inside o
      for (Mask u : upper.opens) {
        if (!u || (u & ~o)) continue;
        Mask least = X;
        for (Mask b : closed_upper)
          if ((u & ~b) == 0) least &= b;
        if ((least & ~o) == 0) good |= u;
      }
      if (o & ~good) { route_a = false; break; }
    }
    // Equivalent form: every closed lower set and outside point are
    // separated by disjoint open upper / open lower sets.  The two forms
    // translate into each other by complementing the interpolating set.
    bool route_b = true;
    for (Mask o : upper.opens) {
      Mask a = X & ~o;  // generic closed lower set
      for (int x = 0; x < n && route_b; ++x) {
        if (!has_bit(o, x)) continue;
        bool found = false;
        for (Mask u : upper.opens) {
          if (!has_bit(u, x)) continue;
          Mask vstar = 0;
          for (Mask v : lower.opens)
            if (!(v & u)) vstar |= v;
          if ((a & ~vstar) == 0) { found = true; break; }
        }
        if (!found) route_b = false;
      }
      if (!route_b) break;
    }
    p.upper_regular = settle(p.route_agreement, "upper_regular", {route_a, route_b});
  }
  p.upper_t3 = p.upper_regular && p.t1_ordered;

  // --- convexity ladder ---
  {
    std::vector<Mask> convex_opens;
    for (Mask o : top.opens)
      if (o == (q.up_set(o) & q.down_set(o))) convex_opens.push_back(o);
    p.locally_convex = true;
    for (Mask o : top.opens) {
      Mask covered = 0;
      for (Mask w : convex_opens)
        if ((w & ~o) == 0) covered |= w;
      if (o & ~covered) { p.locally_convex = false; break; }
    }
  }
  {
    SetFamily sub = upper.opens;
    for (Mask m : lower.opens) sub.insert(m);
    p.strongly_convex = saturate_subbase(n, std::move(sub)) == top.opens;
  }
  if (big) {
    skip("hyperconvex");
  } else {
    // All fans, i.e. sets (open upper) minus (finitely generated upper).
    // The family is closed under intersection and contains the carrier, so
    // it generates the topology iff every fan is open and the fans form a
    // pointwise base.
    SetFamily vee = principal_filter_unions(q);
    SetFamily fans;
    for (Mask u : upper.opens)
      for (Mask w : vee.sets) fans.insert(u & ~w);
    bool generated;
    {
      SetFamily sub = fans;
      generated = saturate_subbase(n, std::move(sub)) == top.opens;
    }
    bool strict = true;
    for (Mask f : fans.sets)
      if (!top.is_open(f)) { strict = false; break; }
    if (strict) {
      for (Mask o : top.opens) {
        Mask covered = 0;
        for (Mask f : fans.sets)
          if ((f & ~o) == 0) covered |= f;
        if (o & ~covered) { strict = false; break; }
      }
    }
    p.hyperconvex = settle(p.route_agreement, "hyperconvex", {generated, strict});
  }
  {
    FinTopology co = coselection_topology(upper, CoselectionKind::upsilon);
    SetFamily sub = upper.opens;
    for (Mask m : co.opens) sub.insert(m);
    p.upsilon_convex = saturate_subbase(n, std::move(sub)) == top.opens;
  }
  FinTopology alpha_co;  // Alexandroff coselection of the upper space
  if (big) {
    skip("alpha_convex");
  } else {
    alpha_co = coselection_topology(upper, CoselectionKind::alpha);
    SetFamily sub = upper.opens;
    for (Mask m : alpha_co.opens) sub.insert(m);
    p.alpha_convex = saturate_subbase(n, std::move(sub)) == top.opens;
  }

  // --- interior-operator stability ---
  {
    bool u1 = true;
    for (Mask o : top.opens)
      if (!top.is_open(q.up_set(o))) u1 = false;
    SetFamily ups;
    for (Mask o : top.opens) ups.insert(q.up_set(o));
    bool u2 = ups == upper.opens;
    std::vector<bool> routes = {u1, u2};
    if (!big) {
      bool u3 = true;
      for (Mask y = 0; y <= X; ++y)
        if (q.is_upper(y) && top.interior(y) != upper.interior(y)) u3 = false;
      routes.push_back(u3);
    }
    p.up_stable = settle(p.route_agreement, "up_stable", routes);
  }
  {
    p.c_stable = true;
    for (Mask o : top.opens) {
      Mask cover = 0;
      for_each_bit(o, [&](int u) { cover |= core_int[u]; });
      if (q.up_set(o) != cover) { p.c_stable = false; break; }
    }
  }
  {
    // The sets B(x) = {y : x lies in the upper-interior of the filter of y}
    // are lower sets, so the largest upper set avoiding B(x) is its
    // complement; distribution over all upper sets reduces to checking it.
    bool fast = true;
    for (int x = 0; x < n; ++x) {
      Mask b = 0;
      for (int y = 0; y < n; ++y)
        if (has_bit(upcore_int[y], x)) b |= bit(y);
      if (has_bit(upper.interior(X & ~b), x)) fast = false;
    }
    std::vector<bool> routes = {fast};
    if (!big) {
      bool scan = true;
      for (Mask y = 0; y <= X && scan; ++y) {
        if (!q.is_upper(y)) continue;
        Mask cover = 0;
        for_each_bit(y, [&](int v) { cover |= upcore_int[v]; });
        if (upper.interior(y) & ~cover) scan = false;
      }
      routes.push_back(scan);
    }
    p.alpha_stable = settle(p.route_agreement, "alpha_stable", routes);
  }
  auto family_stable = [&](const SetFamily& fam) {
    for (Mask y : fam.sets) {
      Mask cover = 0;
      for_each_bit(y, [&](int v) { cover |= upcore_int[v]; });
      if (upper.interior(y) & ~cover) return false;
    }
    return true;
  };
  if (big) {
    skip("vee_stable");
    skip("wedge_stable");
    skip("diamond_stable");
  } else {
    p.vee_stable = family_stable(principal_filter_unions(q));
    p.wedge_stable = family_stable(principal_filter_intersections(q));
    p.diamond_stable = family_stable(principal_filter_sublattice(q));
  }
  {
    // A nonempty filtered set in a finite carrier has a least element m;
    // the set then sits inside the filter of m while m lies in every lower
    // closure of the set, so the covering condition always holds.
    std::vector<bool> routes = {true};
    if (!big) {
      bool scan = true;
      for (Mask d = 1; d <= X && scan; ++d) {
        if (!q.filtered(d)) continue;
        Mask cover = 0;
        for_each_bit(lower.closure(d), [&](int u) { cover |= core_int[u]; });
        if (top.interior(d) & ~cover) scan = false;
      }
      routes.push_back(scan);
    }
    p.d_stable = settle(p.route_agreement, "d_stable", routes);
  }

  // --- neighborhood structure ---
  {
    // Webs around x inside an open o are closed under union, so the greatest
    // one is the fixpoint of pruning points without a common lower bound
    // witness; x itself always survives.
    bool pointwise = true;
    for (Mask o : top.opens) {
      for_each_bit(o, [&](int x) {
        if (!pointwise) return;
        Mask w = o;
        bool changed = true;
        while (changed) {
          changed = false;
          Mask keep = 0;
          for_each_bit(w, [&](int y) {
            if (q.down(x) & q.down(y) & w) keep |= bit(y);
          });
          if (keep != w) { w = keep; changed = true; }
        }
        if (!has_bit(top.interior(w), x)) pointwise = false;
      });
      if (!pointwise) break;
    }
    std::vector<bool> routes = {pointwise};
    if (scan_routes) {
      bool scan = true;
      for (Mask o : top.opens) {
        for_each_bit(o, [&](int x) {
          if (!scan) return;
          bool found = false;
          for_each_submask(o, [&](Mask v) {
            if (found || !has_bit(v, x)) return;
            bool web = true;
            for_each_bit(v, [&](int y) {
              if (!(q.down(x) & q.down(y) & v)) web = false;
            });
            if (web && has_bit(top.interior(v), x)) found = true;
          });
          if (!found) scan = false;
        });
        if (!scan) break;
      }
      routes.push_back(scan);
    }
    bool base = settle(p.route_agreement, "web_base", routes);
    p.web_ordered = p.up_stable && base;
  }
  {
    // For a neighborhood v of x inside o: v is filtered iff it has a least
    // element m, and all finite subsets of v have a lower bound in o iff
    // some m in o bounds v from below.  Either way the largest candidate is
    // o intersected with the filter of m, so one scan over m settles both
    // conditions.
    bool fast = true;
    for (Mask o : top.opens) {
      for_each_bit(o, [&](int x) {
        if (!fast) return;
        bool found = false;
        for_each_bit(o, [&](int m) {
          if (!found && has_bit(top.interior(o & q.up(m)), x)) found = true;
        });
        if (!found) fast = false;
      });
      if (!fast) break;
    }
    std::vector<bool> filtered_routes = {fast};
    std::vector<bool> bounded_routes = {fast};
    if (scan_routes) {
      bool scan_f = true, scan_b = true;
      for (Mask o : top.opens) {
        for_each_bit(o, [&](int x) {
          bool found_f = false, found_b = false;
          for_each_submask(o, [&](Mask v) {
            if (!v || !has_bit(top.interior(v), x)) return;
            if (q.filtered(v)) found_f = true;
            if (q.lower_bounds(v) & o) found_b = true;
          });
          if (!found_f) scan_f = false;
          if (!found_b) scan_b = false;
        });
      }
      filtered_routes.push_back(scan_f);
      bounded_routes.push_back(scan_b);
    }
    bool filtered_base = settle(p.route_agreement, "filtered_base", filtered_routes);
    bool bounded_base = settle(p.route_agreement, "bounded_base", bounded_routes);
    p.locally_filtered = p.up_stable && filtered_base;
    p.locally_lower_bounded = p.up_stable && bounded_base;
  }
  auto sector_base = [&](const SetFamily& lower_parts) {
    for (Mask o : top.opens) {
      Mask covered = 0;
      for (int u = 0; u < n; ++u)
        for (Mask v : lower_parts.sets) {
          Mask s = q.up(u) & v;
          if (s && !(s & ~o)) covered |= top.interior(s);
        }
      if (o & ~covered) return false;
    }
    return true;
  };
  p.sector_space = p.up_stable && p.semi_qospace && sector_base(lower.opens);
  {
    FinTopology co = coselection_topology(upper, CoselectionKind::upsilon);
    p.upsilon_sector_space = p.up_stable && p.semi_qospace && sector_base(co.opens);
  }
  if (big) {
    skip("alpha_sector_space");
  } else {
    p.alpha_sector_space = p.up_stable && p.semi_qospace && sector_base(alpha_co.opens);
  }
  {
    // A fan inside o with apex u is largest when it removes exactly the
    // part of the filter of u that escapes o, so one apex scan suffices.
    bool fast = true;
    for (Mask o : top.opens) {
      Mask covered = 0;
      for (int u = 0; u < n; ++u) {
        Mask fan = q.up(u) & ~q.up_set(q.up(u) & ~o);
        covered |= top.interior(fan);
      }
      if (o & ~covered) { fast = false; break; }
    }
    std::vector<bool> routes = {fast};
    if (scan_routes) {
      bool scan = true;
      for (Mask o : top.opens) {
        Mask covered = 0;
        for (int u = 0; u < n; ++u)
          for (Mask f = 0; f <= X; ++f) {
            Mask fan = q.up(u) & ~q.up_set(f);
            if (fan && !(fan & ~o)) covered |= top.interior(fan);
          }
        if (o & ~covered) { scan = false; break; }
      }
      routes.push_back(scan);
    }
    bool base = settle(p.route_agreement, "fan_base", routes);
    p.fan_space = p.up_stable && p.semi_qospace && base;
  }

  // --- patch recognition ---
  // The topology splits over its upper space iff the order matches both
  // specialization halves and the two halves generate: any cotopology
  // witnessing a splitting consists of open lower sets, so the lower space
  // itself is the canonical witness.
  p.patch_of_upper = p.strongly_convex && spec_upper == q && spec_lower == q.dual();
  {
    OrderedSpace pa = patch_space(upper, CoselectionKind::upsilon);
    p.upsilon_patch_of_upper = pa.order == q && pa.top == top;
  }
  if (big) {
    skip("alpha_patch_of_upper");
  } else {
    OrderedSpace pa = patch_space(upper, CoselectionKind::alpha);
    p.alpha_patch_of_upper = pa.order == q && pa.top == top;
  }

  // --- order convergence ---
  if (big) {
    skip("mc_ordered");
  } else {
    p.mc_ordered = true;
    for (Mask d = 1; d <= X && p.mc_ordered; ++d) {
      if (!q.directed(d)) continue;
      int m = -1;
      for_each_bit(d, [&](int c) {
        if (m < 0 && (d & ~q.down(c)) == 0) m = c;
      });
      // A nonempty finite directed set has a greatest element, and the
      // minimal tail of the induced net is the part of the set equivalent
      // to it.
      require(m >= 0, "finite directed set without greatest element");
      Mask tail = d & q.up(m);
      Mask ub = q.upper_bounds(d);
      bool ok = false;
      for_each_bit(ub, [&](int s) {
        if (!ok && (ub & ~q.up(s)) == 0 && !(tail & ~top.core(s))) ok = true;
      });
      if (!ok) p.mc_ordered = false;
    }
  }

  // --- meet-semilattice block ---
  {
    p.semilattice = q.antisymmetric();
    std::vector<int> mt;
    if (p.semilattice) {
      FinPoset pos = FinPoset::make(q.rel);
      mt.assign(static_cast<std::size_t>(n) * n, -1);
      for (int x = 0; x < n && p.semilattice; ++x)
        for (int y = 0; y < n; ++y) {
          auto w = pos.meet(bit(x) | bit(y));
          if (!w) { p.semilattice = false; break; }
          mt[static_cast<std::size_t>(x) * n + y] = *w;
        }
    }
    if (!p.semilattice) {
      p.route_agreement["semilattice"] = false;
    } else {
      auto meet = [&](int a, int b) { return mt[static_cast<std::size_t>(a) * n + b]; };
      p.compatible_semilattice = spec_top == q;
      {
        bool literal = true;
        for (int x = 0; x < n && literal; ++x)
          for (Mask o : top.opens) {
            Mask pre = 0;
            for (int y = 0; y < n; ++y)
              if (has_bit(o, meet(x, y))) pre |= bit(y);
            if (!top.is_open(pre)) { literal = false; break; }
          }
        // Cores are least neighborhoods, so continuity at y of the unary
        // meet with x reduces to mapping the core of y into the core of
        // the value.
        bool cores = true;
        for (int x = 0; x < n && cores; ++x)
          for (int y = 0; y < n; ++y) {
            Mask img = 0;
            for_each_bit(top.core(y), [&](int v) { img |= bit(meet(x, v)); });
            if (img & ~top.core(meet(x, y))) { cores = false; break; }
          }
        p.semitopological = settle(p.route_agreement, "semitopological", {literal, cores});
      }
      {
        // Joint continuity likewise reduces to the product of cores, the
        // least basic box around a pair.
        bool cores = true;
        for (int x = 0; x < n && cores; ++x)
          for (int y = 0; y < n; ++y) {
            Mask img = 0;
            for_each_bit(top.core(x), [&](int u) {
              for_each_bit(top.core(y), [&](int v) { img |= bit(meet(u, v)); });
            });
            if (img & ~top.core(meet(x, y))) { cores = false; break; }
          }
        std::vector<bool> routes = {cores};
        if (scan_routes) {
          bool literal = true;
          for (int x = 0; x < n && literal; ++x)
            for (int y = 0; y < n && literal; ++y)
              for (Mask o : top.opens) {
                if (!has_bit(o, meet(x, y))) continue;
                bool found = false;
                for (Mask u : top.opens) {
                  if (!has_bit(u, x)) continue;
                  for (Mask v : top.opens) {
                    if (!has_bit(v, y)) continue;
                    Mask img = 0;
                    for_each_bit(u, [&](int a) {
                      for_each_bit(v, [&](int b) { img |= bit(meet(a, b)); });
                    });
                    if (!(img & ~o)) { found = true; break; }
                  }
                  if (found) break;
                }
                if (!found) { literal = false; break; }
              }
          routes.push_back(literal);
        }
        p.topological_semilattice =
            settle(p.route_agreement, "topological_semilattice", routes);
      }
      if (big) {
        skip("small_semilattices");
      } else {
        std::vector<Mask> int_tab(std::size_t(1) << n);
        std::vector<char> meet_closed(std::size_t(1) << n, 1);
        for (Mask m = 0; m <= X; ++m) {
          int_tab[m] = top.interior(m);
          bool ok = true;
          for_each_bit(m, [&](int a) {
            for_each_bit(m, [&](int b) {
              if (!has_bit(m, meet(a, b))) ok = false;
            });
          });
          meet_closed[m] = ok ? 1 : 0;
        }
        p.small_semilattices = true;
        for (Mask o : top.opens) {
          Mask covered = 0;
          for_each_submask(o, [&](Mask m) {
            if (meet_closed[m]) covered |= int_tab[m];
          });
          if (o & ~covered) { p.small_semilattices = false; break; }
        }
      }
      p.s_topological = p.topological_semilattice && p.small_semilattices;
    }
  }

  return p;
}

// ---------------------------------------------------------------------------
// Audits.
// ---------------------------------------------------------------------------

namespace {

// Runs `body(space, profile)` on every ordered space (every quasiorder paired
// with every topology) with 1..n_bound points, in enumeration order.
template <typename Body>
void sweep_ordered_spaces(AuditReport& rep, int n_bound, Body&& body) {
  for (int n = 1; n <= n_bound; ++n) {
    auto tops = all_topologies(n);
    for_each_qoset(n, [&](const FinQoset& q) {
      if (interrupt_flag_set()) { rep.complete = false; return; }
      for (const FinTopology& t : tops) {
        OrderedSpace s{q, t};
        ++rep.instances;
        body(s, ordered_space_profile(s));
      }
    });
    if (!rep.complete) break;
  }
}

AuditReport make_report(const std::string& id, const std::string& statement, int bound) {
  AuditReport rep;
  rep.id = id;
  rep.statement = statement;
  rep.bound = bound;
  return rep;
}

void check(AuditReport& rep, const OrderedSpace& s, bool ok, const std::string& what) {
  if (ok) return;
  json v = space_json(s);
  v["failed"] = what;
  rep.record_violation(std::move(v));
}

}  // namespace

AuditReport audit_separation_chain(int n_bound) {
  AuditReport rep = make_report(
      "S2-chain",
      "Separation ladder (upper-T3 => strongly-T2-ordered => pospace => "
      "T1-ordered; qospace => semi-qospace) with its finite collapses "
      "(pospace = strongly-T2-ordered = upper-T3; qospace = upper-regular "
      "semi-qospace), the convexity ladder (hyperconvex and both patch "
      "convexities => strongly convex => locally convex), T1-ordered spaces "
      "are T1, pospaces are discrete, and each semiclosed half pins the "
      "specialization order of its half-space.",
      n_bound);
  StopWatch sw;
  sweep_ordered_spaces(rep, n_bound, [&](const OrderedSpace& s, const OrderedSpaceProfile& p) {
    check(rep, s, !p.upper_t3 || p.t2_ordered, "upper_t3 => t2_ordered");
    check(rep, s, !p.t2_ordered || p.pospace, "t2_ordered => pospace");
    check(rep, s, !p.pospace || p.t1_ordered, "pospace => t1_ordered");
    check(rep, s, !p.qospace || p.semi_qospace, "qospace => semi_qospace");
    check(rep, s, !p.pospace || p.qospace, "pospace => qospace");
    check(rep, s, p.pospace == p.t2_ordered && p.t2_ordered == p.upper_t3,
          "finite collapse pospace = t2_ordered = upper_t3");
    check(rep, s, p.qospace == (p.upper_regular && p.semi_qospace),
          "finite collapse qospace = upper_regular semi-qospace");
    check(rep, s, !p.hyperconvex || p.strongly_convex, "hyperconvex => strongly_convex");
    check(rep, s, !p.upsilon_convex || p.strongly_convex, "upsilon_convex => strongly_convex");
    check(rep, s, !p.alpha_convex || p.strongly_convex, "alpha_convex => strongly_convex");
    check(rep, s, !p.strongly_convex || p.locally_convex, "strongly_convex => locally_convex");
    check(rep, s, !p.lower_semi || p.hyperconvex == p.upsilon_convex,
          "on lower semi-qospaces hyperconvexity = weak-patch convexity");
    check(rep, s, !p.t1_ordered || p.t1_plain, "t1_ordered => t1");
    check(rep, s, !p.pospace || p.t2_plain, "pospace => discrete");
    check(rep, s, !p.lower_semi || specialization(upper_space(s)) == s.order,
          "lower_semi pins specialization of upper space");
    check(rep, s, !p.upper_semi || specialization(lower_space(s)) == s.order.dual(),
          "upper_semi pins specialization of lower space");
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_patch_spaces(int n_bound) {
  AuditReport rep = make_report(
      "P2.1",
      "Strongly convex semi-qospaces are exactly the spaces splitting over "
      "their upper space (joined with a cotopology), verified against an "
      "exhaustive cotopology search on tiny carriers; on finite carriers "
      "every such space is web-ordered, locally lower bounded, and locally "
      "filtered.",
      n_bound);
  StopWatch sw;
  sweep_ordered_spaces(rep, n_bound, [&](const OrderedSpace& s, const OrderedSpaceProfile& p) {
    const bool headline = p.strongly_convex && p.semi_qospace;
    check(rep, s, headline == p.patch_of_upper,
          "strongly convex semi-qospace = patch of upper space");
    if (s.top.n <= 3) {
      // Independent route: search every topology as a candidate cotopology.
      bool found = false;
      FinTopology upper = upper_space(s);
      for (const FinTopology& c : all_topologies(s.top.n)) {
        if (!(specialization(c) == s.order.dual())) continue;
        SetFamily sub = upper.opens;
        for (Mask m : c.opens) sub.insert(m);
        if (saturate_subbase(s.top.n, std::move(sub)) == s.top.opens &&
            specialization(upper) == s.order) {
          found = true;
          break;
        }
      }
      check(rep, s, found == p.patch_of_upper, "cotopology search agrees with split test");
    }
    if (headline) {
      check(rep, s, p.web_ordered, "patch spaces are web-ordered");
      check(rep, s, p.locally_lower_bounded, "patch spaces are locally lower bounded");
      check(rep, s, p.locally_filtered, "patch spaces are locally filtered");
    }
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_patch_functor(int n_bound) {
  AuditReport rep = make_report(
      "L2.2",
      "For the weak-lower and lower-Alexandroff coselections the patch "
      "construction and the upper-space map are mutually inverse: recovering "
      "the opens after patching returns the original space, every patch is a "
      "patch-convex semi-qospace, and every patch-convex semi-qospace equals "
      "the patch of its own upper space; the Scott coselection coincides "
      "with the Alexandroff one on finite carriers.",
      n_bound);
  StopWatch sw;
  const std::array<CoselectionKind, 2> kinds = {CoselectionKind::upsilon,
                                                CoselectionKind::alpha};
  for (int n = 1; n <= n_bound; ++n) {
    for (const FinTopology& t : all_topologies(n)) {
      if (interrupt_flag_set()) { rep.complete = false; break; }
      ++rep.instances;
      OrderedSpace dummy{specialization(t), t};
      check(rep, dummy, coselection_topology(t, CoselectionKind::sigma) ==
                            coselection_topology(t, CoselectionKind::alpha),
            "sigma coselection collapses to alpha");
      for (CoselectionKind k : kinds) {
        OrderedSpace pa = patch_space(t, k);
        check(rep, pa, upper_space(pa) == t,
              "upper space recovers the patched space (" + to_string(k) + ")");
        OrderedSpaceProfile p = ordered_space_profile(pa);
        bool convex = k == CoselectionKind::upsilon ? p.upsilon_convex : p.alpha_convex;
        check(rep, pa, convex && p.semi_qospace,
              "patches are patch-convex semi-qospaces (" + to_string(k) + ")");
      }
    }
    if (!rep.complete) break;
  }
  sweep_ordered_spaces(rep, std::min(n_bound, 3), [&](const OrderedSpace& s,
                                                      const OrderedSpaceProfile& p) {
    for (CoselectionKind k : kinds) {
      bool convex = k == CoselectionKind::upsilon ? p.upsilon_convex : p.alpha_convex;
      if (convex && p.semi_qospace) {
        OrderedSpace pa = patch_space(upper_space(s), k);
        check(rep, s, pa.order == s.order && pa.top == s.top,
              "patch-convex semi-qospaces are patches of their upper spaces (" +
                  to_string(k) + ")");
      }
    }
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_patch_classes(int n_bound) {
  AuditReport rep = make_report(
      "T2.3",
      "For each coselection the patch-convex semi-qospaces coincide with the "
      "patch-convex web-ordered, patch-convex locally lower bounded, and "
      "patch-convex locally filtered semi-qospaces, and with the image of "
      "the patch construction on finite spaces.",
      n_bound);
  StopWatch sw;
  sweep_ordered_spaces(rep, n_bound, [&](const OrderedSpace& s, const OrderedSpaceProfile& p) {
    struct Row { bool convex; bool patch; CoselectionKind k; };
    const std::array<Row, 2> rows = {
        Row{p.upsilon_convex, p.upsilon_patch_of_upper, CoselectionKind::upsilon},
        Row{p.alpha_convex, p.alpha_patch_of_upper, CoselectionKind::alpha}};
    for (const Row& r : rows) {
      bool base = r.convex && p.semi_qospace;
      check(rep, s, base == r.patch,
            "patch-convex semi-qospace = image of patch construction (" +
                to_string(r.k) + ")");
      if (base) {
        check(rep, s, p.web_ordered && p.locally_lower_bounded && p.locally_filtered,
              "patch-convex semi-qospaces carry webs, lower bounds, filtered bases (" +
                  to_string(r.k) + ")");
      }
    }
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_d_stability(int n_bound) {
  AuditReport rep = make_report(
      "L4.1-1",
      "A semi-qospace whose lower space is a d-space is d-stable; on finite "
      "carriers every ordered space is d-stable outright.",
      n_bound);
  StopWatch sw;
  sweep_ordered_spaces(rep, n_bound, [&](const OrderedSpace& s, const OrderedSpaceProfile& p) {
    check(rep, s, p.d_stable, "finite ordered spaces are d-stable");
    if (p.semi_qospace) {
      SpaceProfile lp = space_profile(lower_space(s));
      check(rep, s, !lp.d_space || p.d_stable, "d-space lower half => d-stable");
    }
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_c_stability_split(int n_bound) {
  AuditReport rep = make_report(
      "L4.1-2",
      "A semi-qospace is C-stable iff it is up-stable and its upper space is "
      "a worldwide-web space (automatic on finite carriers, so C-stability "
      "and up-stability coincide there); outside the semi-qospace hypothesis "
      "the equivalence fails.",
      n_bound);
  StopWatch sw;
  std::size_t hypothesis_matters = 0;
  sweep_ordered_spaces(rep, n_bound, [&](const OrderedSpace& s, const OrderedSpaceProfile& p) {
    bool split = p.up_stable && space_profile(upper_space(s)).c_space;
    if (p.semi_qospace) {
      check(rep, s, p.c_stable == split, "C-stable = up-stable + worldwide-web upper");
    } else if (p.c_stable != split) {
      ++hypothesis_matters;
    }
  });
  require(n_bound < 2 || hypothesis_matters > 0,
          "expected witnesses that the semi-qospace hypothesis is needed");
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_c_stability_parts(int n_bound) {
  AuditReport rep = make_report(
      "L4.1-3",
      "A semi-qospace is C-stable iff it is upper regular, locally filtered, "
      "and d-stable.",
      n_bound);
  StopWatch sw;
  sweep_ordered_spaces(rep, n_bound, [&](const OrderedSpace& s, const OrderedSpaceProfile& p) {
    if (!p.semi_qospace) return;
    check(rep, s, p.c_stable == (p.upper_regular && p.locally_filtered && p.d_stable),
          "C-stable = upper regular + locally filtered + d-stable");
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_sector_spaces(int n_bound) {
  AuditReport rep = make_report(
      "P4.5",
      "Sector spaces are exactly the strongly convex C-stable semi-qospaces, "
      "the strongly convex upper-regular locally-filtered d-stable qospaces, "
      "and the patch spaces of worldwide-web spaces; the coselection "
      "variants hold verbatim, and ordered sector spaces are upper-T3.",
      n_bound);
  StopWatch sw;
  sweep_ordered_spaces(rep, n_bound, [&](const OrderedSpace& s, const OrderedSpaceProfile& p) {
    bool via_c = p.strongly_convex && p.c_stable && p.semi_qospace;
    bool via_parts = p.strongly_convex && p.upper_regular && p.locally_filtered &&
                     p.d_stable && p.qospace;
    bool via_patch = p.patch_of_upper && space_profile(upper_space(s)).c_space;
    check(rep, s, p.sector_space == via_c, "sector space = strongly convex C-stable semi-qospace");
    check(rep, s, p.sector_space == via_parts,
          "sector space = strongly convex upper-regular locally-filtered d-stable qospace");
    check(rep, s, p.sector_space == via_patch, "sector space = patch of worldwide-web space");
    struct Row { bool sector, convex, patch; const char* name; };
    const std::array<Row, 2> rows = {
        Row{p.upsilon_sector_space, p.upsilon_convex, p.upsilon_patch_of_upper, "upsilon"},
        Row{p.alpha_sector_space, p.alpha_convex, p.alpha_patch_of_upper, "alpha"}};
    for (const Row& r : rows) {
      check(rep, s, r.sector == (r.convex && p.c_stable && p.semi_qospace),
            std::string("coselection sector variant via C-stability (") + r.name + ")");
      check(rep, s,
            r.sector == (r.convex && p.upper_regular && p.locally_filtered && p.d_stable &&
                         p.qospace),
            std::string("coselection sector variant via parts (") + r.name + ")");
      check(rep, s, r.sector == (r.patch && p.semi_qospace),
            std::string("coselection sector variant = coselection patch (") + r.name + ")");
    }
    if (p.sector_space && s.order.antisymmetric())
      check(rep, s, p.upper_t3 && p.t2_ordered, "ordered sector spaces are upper-T3");
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_fan_spaces(int n_bound) {
  AuditReport rep = make_report(
      "T5.3",
      "Fan spaces are exactly the weak patch spaces of worldwide-web spaces, "
      "the hyperconvex C-stable qospaces, and the hyperconvex upper-regular "
      "locally-filtered d-stable qospaces; patching any finite space and "
      "taking upper opens recovers it, and the patch is a fan space.",
      n_bound);
  StopWatch sw;
  for (int n = 1; n <= n_bound; ++n) {
    for (const FinTopology& t : all_topologies(n)) {
      if (interrupt_flag_set()) { rep.complete = false; break; }
      ++rep.instances;
      OrderedSpace pa = patch_space(t, CoselectionKind::upsilon);
      check(rep, pa, upper_space(pa) == t, "upper space recovers the patched space");
      OrderedSpaceProfile p = ordered_space_profile(pa);
      check(rep, pa, p.fan_space, "weak patches are fan spaces");
      check(rep, pa, p.hyperconvex && p.c_stable && p.qospace,
            "weak patches are hyperconvex C-stable qospaces");
      check(rep, pa,
            p.hyperconvex && p.upper_regular && p.locally_filtered && p.d_stable && p.qospace,
            "weak patches are hyperconvex upper-regular locally-filtered d-stable qospaces");
      check(rep, pa, p.sector_space, "fan spaces are sector spaces");
      if (pa.order.antisymmetric())
        check(rep, pa, p.upper_t3, "ordered fan spaces are upper-T3");
    }
    if (!rep.complete) break;
  }
  sweep_ordered_spaces(rep, std::min(n_bound, 3), [&](const OrderedSpace& s,
                                                      const OrderedSpaceProfile& p) {
    bool via_patch = p.upsilon_patch_of_upper && space_profile(upper_space(s)).c_space &&
                     p.semi_qospace;
    bool via_c = p.hyperconvex && p.c_stable && p.qospace;
    bool via_parts = p.hyperconvex && p.upper_regular && p.locally_filtered && p.d_stable &&
                     p.qospace;
    check(rep, s, p.fan_space == via_patch, "fan space = weak patch of worldwide-web space");
    check(rep, s, p.fan_space == via_c, "fan space = hyperconvex C-stable qospace");
    check(rep, s, p.fan_space == via_parts,
          "fan space = hyperconvex upper-regular locally-filtered d-stable qospace");
    check(rep, s, p.fan_space == p.upsilon_sector_space,
          "fan space = weak-coselection sector space");
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_vee_stability(int n_bound) {
  AuditReport rep = make_report(
      "L6.1-1", "Web-ordered spaces distribute upper interiors over finite unions of "
                "principal filters (vee-stability).",
      n_bound);
  StopWatch sw;
  sweep_ordered_spaces(rep, n_bound, [&](const OrderedSpace& s, const OrderedSpaceProfile& p) {
    check(rep, s, !p.web_ordered || p.vee_stable, "web-ordered => vee-stable");
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_wedge_join_semilattice(int n_bound) {
  AuditReport rep = make_report(
      "L6.1-2",
      "If the order has all binary joins and a least element then every "
      "topology on it is wedge-stable.",
      n_bound);
  StopWatch sw;
  sweep_ordered_spaces(rep, n_bound, [&](const OrderedSpace& s, const OrderedSpaceProfile& p) {
    if (!s.order.antisymmetric()) return;
    FinPoset pos = FinPoset::make(s.order.rel);
    if (!pos.bottom()) return;
    for (int x = 0; x < s.top.n; ++x)
      for (int y = 0; y < s.top.n; ++y)
        if (!pos.join(bit(x) | bit(y))) return;
    check(rep, s, p.wedge_stable, "join-semilattice with bottom => wedge-stable");
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_wedge_ideal_columns(int n_bound) {
  AuditReport rep = make_report(
      "L6.1-3",
      "A quasi-ordered space is wedge-stable iff for every point y the set "
      "of x whose principal filter has y in its upper interior is an ideal "
      "(nonempty, directed, and a lower set).",
      n_bound);
  StopWatch sw;
  sweep_ordered_spaces(rep, n_bound, [&](const OrderedSpace& s, const OrderedSpaceProfile& p) {
    FinTopology up = upper_space(s);
    const FinQoset& q = s.order;
    bool ideals = true;
    for (int y = 0; y < s.top.n; ++y) {
      Mask col = 0;
      for (int x = 0; x < s.top.n; ++x)
        if (has_bit(up.interior(q.up(x)), y)) col |= bit(x);
      if (!col || !q.is_lower(col) || !q.directed(col)) { ideals = false; break; }
    }
    check(rep, s, p.wedge_stable == ideals, "wedge-stable = ideal approximation columns");
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_diamond_split(int n_bound) {
  AuditReport rep = make_report(
      "L6.1-4", "Diamond-stability is exactly vee-stability plus wedge-stability.",
      n_bound);
  StopWatch sw;
  sweep_ordered_spaces(rep, n_bound, [&](const OrderedSpace& s, const OrderedSpaceProfile& p) {
    check(rep, s, p.diamond_stable == (p.vee_stable && p.wedge_stable),
          "diamond = vee + wedge");
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_diamond_lattice(int n_bound) {
  AuditReport rep = make_report(
      "L6.1-5",
      "A lattice order with least element and continuous unary meets is "
      "diamond-stable.",
      n_bound);
  StopWatch sw;
  sweep_ordered_spaces(rep, n_bound, [&](const OrderedSpace& s, const OrderedSpaceProfile& p) {
    if (!p.semilattice || !p.semitopological) return;
    FinPoset pos = FinPoset::make(s.order.rel);
    if (!pos.bottom()) return;
    for (int x = 0; x < s.top.n; ++x)
      for (int y = 0; y < s.top.n; ++y)
        if (!pos.join(bit(x) | bit(y))) return;
    check(rep, s, p.diamond_stable,
          "lattice with bottom and continuous unary meets => diamond-stable");
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_vee_lower_semi(int n_bound) {
  AuditReport rep = make_report(
      "L6.1-6",
      "A lower semi-qospace is vee-stable precisely when its upper space is "
      "a worldwide-web space with the given specialization order; on finite "
      "carriers that right-hand side always holds, so lower semi-qospaces "
      "are vee-stable and upper-interior distribution extends to all upper "
      "sets.",
      n_bound);
  StopWatch sw;
  sweep_ordered_spaces(rep, n_bound, [&](const OrderedSpace& s, const OrderedSpaceProfile& p) {
    if (!p.lower_semi) return;
    FinTopology up = upper_space(s);
    bool rhs = space_profile(up).c_space && specialization(up) == s.order;
    check(rep, s, rhs, "finite lower semi-qospaces have worldwide-web upper spaces");
    check(rep, s, p.vee_stable == rhs, "vee-stability matches the upper-space description");
    check(rep, s, p.alpha_stable, "lower semi-qospaces distribute over all upper sets");
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_lawson_recognition(int n_bound) {
  AuditReport rep = make_report(
      "T6.2",
      "Five equivalent recognitions of two-sided domain spaces: fan space "
      "with sober upper space = hyperconvex C-stable pospace with d-space "
      "upper space = hyperconvex mc-ordered diamond-stable up-stable "
      "Hausdorff space (with strongly-T2-ordered and upper-T3 variants); "
      "when they hold, the upper opens are all upper sets and the topology "
      "is the two-sided topology of the order.",
      n_bound);
  StopWatch sw;
  sweep_ordered_spaces(rep, n_bound, [&](const OrderedSpace& s, const OrderedSpaceProfile& p) {
    SpaceProfile up = space_profile(upper_space(s));
    bool c3 = p.fan_space && up.sober;
    bool c4 = p.hyperconvex && p.c_stable && p.pospace && up.d_space;
    bool c5 = p.hyperconvex && p.mc_ordered && p.diamond_stable && p.up_stable && p.t2_plain;
    bool c5b = p.hyperconvex && p.mc_ordered && p.diamond_stable && p.t2_ordered;
    bool c5c = p.hyperconvex && p.mc_ordered && p.diamond_stable && p.upper_t3;
    check(rep, s, c3 == c4 && c4 == c5 && c5 == c5b && c5b == c5c,
          "the five recognitions agree");
    if (c3) {
      check(rep, s, s.order.antisymmetric(), "recognized spaces are ordered");
      check(rep, s, upper_space(s) == alexandroff(s.order),
            "upper opens are exactly the upper sets");
      check(rep, s, s.top == lawson_topology(s.order),
            "the topology is the two-sided topology of the order");
    }
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_meet_continuity(int n_bound) {
  AuditReport rep = make_report(
      "L7.1",
      "Each of four conditions forces joint continuity of the binary meet "
      "on a meet-semilattice-ordered space: compatibility plus local "
      "filteredness; a subbase of filter complements; carrying the weak "
      "topology of the dual order; hyperconvex locally filtered "
      "semi-pospace.",
      n_bound);
  StopWatch sw;
  sweep_ordered_spaces(rep, n_bound, [&](const OrderedSpace& s, const OrderedSpaceProfile& p) {
    if (!p.semilattice) return;
    const FinQoset& q = s.order;
    const int n = s.top.n;
    if (p.compatible_semilattice && p.locally_filtered)
      check(rep, s, p.topological_semilattice, "compatible + locally filtered => jointly continuous");
    {
      SetFamily sub;
      const Mask X = full_mask(n);
      for (Mask f = 1; f <= X; ++f)
        if (q.is_upper(f) && q.filtered(f) && s.top.is_open(X & ~f)) sub.insert(X & ~f);
      if (saturate_subbase(n, std::move(sub)) == s.top.opens)
        check(rep, s, p.topological_semilattice,
              "subbase of filter complements => jointly continuous");
    }
    if (s.top == weak_upper_topology(q.dual()))
      check(rep, s, p.topological_semilattice, "weak topology of dual order => jointly continuous");
    if (p.hyperconvex && p.locally_filtered && p.t1_ordered)
      check(rep, s, p.topological_semilattice,
            "hyperconvex locally filtered semi-pospace => jointly continuous");
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_patch_semilattices(int n_bound) {
  AuditReport rep = make_report(
      "T7.2",
      "Hyperconvex T1-semilattices are the weak patches of compatible "
      "semilattice-ordered spaces, and on finite carriers all nine "
      "recognition conditions hold for them (weak patch recovery with "
      "web/wide-web/worldwide-web upper space; web-ordered, locally "
      "filtered, C-stable pospace; semitopological, s-topological, "
      "s-topological with locally compact upper space); unconditionally, "
      "semitopological semilattices are web-ordered and compatible "
      "semilattice spaces are both; under up-stability and local convexity "
      "small semilattices = locally filtered = locally lower bounded.",
      n_bound);
  StopWatch sw;
  sweep_ordered_spaces(rep, n_bound, [&](const OrderedSpace& s, const OrderedSpaceProfile& p) {
    if (!p.semilattice) return;
    // One direction holds outright: continuous unary meets yield up-stability
    // and an open web (the meet preimage of each neighborhood) around every
    // point.  The converse needs a compatibility hypothesis; without it a
    // web-ordered semilattice space can have discontinuous unary meets.
    check(rep, s, !p.semitopological || p.web_ordered, "semitopological => web-ordered");
    if (p.compatible_semilattice)
      check(rep, s, p.semitopological && p.web_ordered,
            "compatible semilattice spaces are semitopological and web-ordered");
    // A neighborhood that is meet-closed has a least element, hence is
    // filtered; so small semilattices give filtered bases.  Turning filtered
    // neighborhoods back into meet-closed ones intersects a convex open with
    // a principal filter, which needs local convexity, and the locally
    // filtered notion embeds up-stability by definition.
    check(rep, s, !(p.small_semilattices && p.up_stable) || p.locally_filtered,
          "small semilattices + up-stable => locally filtered");
    if (p.locally_convex && p.up_stable) {
      check(rep, s, p.small_semilattices == p.locally_filtered,
            "small semilattices = locally filtered (up-stable locally convex case)");
      check(rep, s, p.locally_filtered == p.locally_lower_bounded,
            "locally filtered = locally lower bounded (up-stable locally convex case)");
    }
    const bool pre = p.hyperconvex && p.t1_ordered;
    {
      FinTopology up = upper_space(s);
      bool patch_form = specialization(up) == s.order && p.upsilon_patch_of_upper;
      check(rep, s, pre == patch_form,
            "hyperconvex T1-semilattice = weak patch of compatible semilattice space");
      if (s.top.n <= 3) {
        bool found = false;
        for (const FinTopology& c : all_topologies(s.top.n)) {
          if (!(specialization(c) == s.order)) continue;
          OrderedSpace pa = patch_space(c, CoselectionKind::upsilon);
          if (pa.top == s.top) { found = true; break; }
        }
        check(rep, s, pre == found, "exhaustive compatible-topology search agrees");
      }
    }
    if (!pre) return;
    SpaceProfile up = space_profile(upper_space(s));
    check(rep, s, p.upsilon_patch_of_upper && up.web, "(11) weak patch of a web space");
    check(rep, s, p.web_ordered, "(12) web-ordered");
    check(rep, s, p.semitopological, "(13) semitopological");
    check(rep, s, p.upsilon_patch_of_upper && up.wide_web, "(21) weak patch of a wide web space");
    check(rep, s, p.locally_filtered && p.locally_lower_bounded, "(22) locally filtered");
    check(rep, s, p.s_topological, "(23) s-topological");
    check(rep, s, p.upsilon_patch_of_upper && up.c_space,
          "(31) weak patch of a worldwide-web space");
    check(rep, s, p.c_stable && p.pospace && p.fan_space, "(32) C-stable pospace (fan space)");
    check(rep, s, p.s_topological, "(33) s-topological with locally compact upper space");
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_lawson_semilattices(int n_bound) {
  AuditReport rep = make_report(
      "P7.4",
      "Locally filtered compact pospaces are exactly the compact two-sided "
      "domain spaces; on finite carriers both classes consist of the "
      "discretely topologized posets.",
      n_bound);
  StopWatch sw;
  sweep_ordered_spaces(rep, n_bound, [&](const OrderedSpace& s, const OrderedSpaceProfile& p) {
    SpaceProfile up = space_profile(upper_space(s));
    bool lhs = p.locally_filtered && p.pospace;
    bool rhs = p.fan_space && up.sober;  // two-sided domain recognition
    check(rep, s, lhs == rhs, "locally filtered pospace = two-sided domain space");
    if (lhs) {
      check(rep, s, s.order.antisymmetric() &&
                        s.top.opens.size() == (std::size_t(1) << s.top.n),
            "finite instances are discrete posets");
    }
  });
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

}  // namespace ordtop

#include "ordtop/classify.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordtop/enumerate.hpp"
#include "ordtop/family.hpp"
#include "ordtop/laws.hpp"
#include "ordtop/parallel.hpp"

namespace ordtop {

namespace {

// Lattice-law cross-routes quantify over subsets of the open-set lattice;
// beyond this many opens they are skipped and the pointwise route stands.
constexpr std::size_t kLatticeRouteMax = 16;
// Submask-scanning cross-routes (locally supercompact, literal strong
// connectedness) are skipped on big product spaces.
constexpr std::size_t kScanRouteMax = 64;

json opens_json(const FinTopology& t) {
  json out = json::array();
  for (Mask u : t.opens) out.push_back(static_cast<int>(u));
  return out;
}

bool settle(json& agreement, const std::string& name,
            const std::vector<bool>& routes) {
  agreement[name] = routes;
  for (bool v : routes)
    require(v == routes.front(), "route disagreement: " + name);
  return routes.front();
}

// Nonempty, and no two opens cover y unless one of them alone does.
bool strongly_connected_by_covers(const FinTopology& t, Mask y) {
  if (y == 0) return false;
  for (Mask u : t.opens) {
    if ((y & ~u) == 0) continue;  // u alone suffices for any partner
    for (Mask v : t.opens)
      if ((y & ~(u | v)) == 0 && (y & ~v) != 0) return false;
  }
  return true;
}

// Union of all opens that do not contain y: the worst cover.  y is
// supercompact iff it escapes it (the empty set never does).
bool supercompact_by_worst_cover(const FinTopology& t, Mask y) {
  Mask worst = 0;
  for (Mask u : t.opens)
    if ((y & ~u) != 0) worst |= u;
  return (y & ~worst) != 0;
}

Mask saturation(const FinTopology& t, Mask y) {
  Mask out = t.full();
  for (Mask u : t.opens)
    if ((y & ~u) == 0) out &= u;
  return out;
}

bool irreducible_closed_by_covers(const FinTopology& t, Mask y) {
  if (y == 0 || !t.is_closed(y)) return false;
  const Mask X = t.full();
  for (Mask u : t.opens) {
    const Mask a = X & ~u;
    if ((y & ~a) == 0) continue;
    for (Mask v : t.opens) {
      const Mask b = X & ~v;
      if ((y & ~(a | b)) == 0 && (y & ~b) != 0) return false;
    }
  }
  return true;
}

}  // namespace

json SubsetProfile::to_json() const {
  return {{"strongly_connected", strongly_connected},
          {"filtered", filtered},
          {"supercompact", supercompact},
          {"hypercompact", hypercompact},
          {"irreducible_closed", irreducible_closed}};
}

SubsetProfile subset_profile(const FinTopology& t, const FinQoset& q,
                             Mask y) {
  require(q.n == t.n, "subset profile: carrier mismatch");
  require((y & ~t.full()) == 0, "subset profile: subset out of range");
  SubsetProfile p;

  const bool sc_cover = strongly_connected_by_covers(t, y);
  p.filtered = q.filtered(y);
  require(sc_cover == p.filtered, "routes differ: strongly_connected");
  p.strongly_connected = sc_cover;

  const Mask sat = saturation(t, y);
  require(sat == q.up_set(y), "saturation is not the up-closure");

  const bool sc_worst = supercompact_by_worst_cover(t, y);
  bool sc_core = false;
  for (int x = 0; x < t.n && !sc_core; ++x)
    if (sat == q.up(x)) sc_core = true;
  require(sc_worst == sc_core, "routes differ: supercompact");
  p.supercompact = sc_worst;

  // Saturation generated by a finite set; the scan is the definition, the
  // constant-true outcome on finite carriers is asserted by the tests.
  for_each_submask(sat, [&](Mask f) {
    if (q.up_set(f) == sat) p.hypercompact = true;
  });

  const bool irr_cover = irreducible_closed_by_covers(t, y);
  bool irr_directed = false;
  if (y != 0 && t.is_closed(y))
    for (Mask d = 1; d <= t.full() && !irr_directed; ++d)
      if (q.directed(d) && t.closure(d) == y) irr_directed = true;
  require(irr_cover == irr_directed, "routes differ: irreducible_closed");
  p.irreducible_closed = irr_cover;
  return p;
}

SubsetProfile subset_profile(const FinTopology& t, Mask y) {
  return subset_profile(t, specialization(t), y);
}

json SpaceProfile::to_json() const {
  return {{"t0", t0},
          {"web", web},
          {"wide_web", wide_web},
          {"c_space", c_space},
          {"locally_strongly_connected", locally_strongly_connected},
          {"has_dual_base", has_dual_base},
          {"b_space", b_space},
          {"a_space", a_space},
          {"sober", sober},
          {"d_space", d_space},
          {"supercompact_space", supercompact_space},
          {"route_agreement", route_agreement}};
}

SpaceProfile space_profile(const FinTopology& t) {
  SpaceProfile p;
  p.route_agreement = json::object();
  const FinQoset q = specialization(t);
  const int n = t.n;
  const Mask X = t.full();
  const bool lattice_routes = t.opens.size() <= kLatticeRouteMax;
  const bool scan_routes = t.opens.size() <= kScanRouteMax;

  FinLattice lat;
  if (lattice_routes) lat = open_set_lattice(t);

  // T0: pointwise separation vs antisymmetric specialization.
  {
    bool pointwise = true;
    for (int x = 0; x < n && pointwise; ++x)
      for (int y = x + 1; y < n && pointwise; ++y) {
        bool separated = false;
        for (Mask u : t.opens)
          if (has_bit(u, x) != has_bit(u, y)) separated = true;
        pointwise = separated;
      }
    p.t0 = settle(p.route_agreement, "t0", {pointwise, q.antisymmetric()});
  }

  // Web space: each open neighborhood contains an open V in which every
  // point shares a lower bound with x inside V.
  {
    auto web_around = [&](int x, Mask v) {
      bool ok = true;
      for_each_bit(v, [&](int y) {
        if (!(q.down(x) & q.down(y) & v)) ok = false;
      });
      return ok;
    };
    bool pointwise = true;
    for (int x = 0; x < n && pointwise; ++x)
      for (Mask u : t.opens) {
        if (!has_bit(u, x)) continue;
        bool found = false;
        for (Mask v : t.opens)
          if (has_bit(v, x) && (v & ~u) == 0 && web_around(x, v)) {
            found = true;
            break;
          }
        if (!found) {
          pointwise = false;
          break;
        }
      }
    std::vector<bool> routes{pointwise};
    if (lattice_routes) routes.push_back(coframe_law(lat));
    p.web = settle(p.route_agreement, "web", routes);
  }

  // Wide web space: every open U contains an open V around x all of whose
  // finite subsets have lower bounds in U.
  {
    auto bounded_in = [&](Mask v, Mask u) {
      bool ok = true;
      for_each_submask(v, [&](Mask f) {
        if (f != 0 && !(q.lower_bounds(f) & u)) ok = false;
      });
      return ok;
    };
    bool pointwise = true;
    for (int x = 0; x < n && pointwise; ++x)
      for (Mask u : t.opens) {
        if (!has_bit(u, x)) continue;
        bool found = false;
        for (Mask v : t.opens)
          if (has_bit(v, x) && (v & ~u) == 0 && bounded_in(v, u)) {
            found = true;
            break;
          }
        if (!found) {
          pointwise = false;
          break;
        }
      }
    std::vector<bool> routes{pointwise};
    if (lattice_routes) routes.push_back(wide_coframe_law(lat));
    p.wide_web = settle(p.route_agreement, "wide_web", routes);
  }

  // C-space: neighborhood bases of cores; cross-checked against complete
  // distributivity and against local supercompactness.
  {
    bool pointwise = true;
    for (int x = 0; x < n && pointwise; ++x)
      for (Mask u : t.opens) {
        if (!has_bit(u, x)) continue;
        bool found = false;
        for (int y = 0; y < n && !found; ++y) {
          const Mask core = q.up(y);
          if ((core & ~u) == 0 && has_bit(t.interior(core), x)) found = true;
        }
        if (!found) {
          pointwise = false;
          break;
        }
      }
    std::vector<bool> routes{pointwise};
    if (lattice_routes) routes.push_back(completely_distributive_covers(lat));
    if (scan_routes) {
      bool locally_sc = true;
      for (int x = 0; x < n && locally_sc; ++x)
        for (Mask u : t.opens) {
          if (!has_bit(u, x)) continue;
          bool found = false;
          for_each_submask(u, [&](Mask k) {
            if (!found && supercompact_by_worst_cover(t, k) &&
                has_bit(t.interior(k), x))
              found = true;
          });
          if (!found) {
            locally_sc = false;
            break;
          }
        }
      routes.push_back(locally_sc);
    }
    p.c_space = settle(p.route_agreement, "c_space", routes);
  }

  // Locally strongly connected: neighborhood bases of strongly connected
  // sets.  A finite filtered set is exactly one with a minimum, so the
  // fast route searches U ∩ ↑m over minima m ∈ U.
  {
    bool by_minimum = true;
    for (int x = 0; x < n && by_minimum; ++x)
      for (Mask u : t.opens) {
        if (!has_bit(u, x)) continue;
        bool found = false;
        for_each_bit(u, [&](int m) {
          if (has_bit(t.interior(u & q.up(m)), x)) found = true;
        });
        if (!found) {
          by_minimum = false;
          break;
        }
      }
    std::vector<bool> routes{by_minimum};
    if (scan_routes) {
      bool literal = true;
      for (int x = 0; x < n && literal; ++x)
        for (Mask u : t.opens) {
          if (!has_bit(u, x)) continue;
          bool found = false;
          for_each_submask(u, [&](Mask y) {
            if (!found && strongly_connected_by_covers(t, y) &&
                has_bit(t.interior(y), x))
              found = true;
          });
          if (!found) {
            literal = false;
            break;
          }
        }
      routes.insert(routes.begin(), literal);  // definition first
    }
    p.locally_strongly_connected =
        settle(p.route_agreement, "locally_strongly_connected", routes);
  }

  // Base of open strongly connected sets.
  {
    auto base_of = [&](auto&& connected) {
      for (int x = 0; x < n; ++x)
        for (Mask u : t.opens) {
          if (!has_bit(u, x)) continue;
          bool found = false;
          for (Mask v : t.opens)
            if (has_bit(v, x) && (v & ~u) == 0 && connected(v)) {
              found = true;
              break;
            }
          if (!found) return false;
        }
      return true;
    };
    std::vector<bool> routes;
    if (scan_routes)
      routes.push_back(
          base_of([&](Mask v) { return strongly_connected_by_covers(t, v); }));
    routes.push_back(base_of([&](Mask v) { return q.filtered(v); }));
    p.has_dual_base = settle(p.route_agreement, "has_dual_base", routes);
  }

  // B-space: the open cores form a base / every open is a union of its
  // open cores.
  {
    bool base = true;
    for (int x = 0; x < n && base; ++x)
      for (Mask u : t.opens) {
        if (!has_bit(u, x)) continue;
        bool found = false;
        for (int y = 0; y < n && !found; ++y) {
          const Mask core = q.up(y);
          if (t.is_open(core) && has_bit(core, x) && (core & ~u) == 0)
            found = true;
        }
        if (!found) {
          base = false;
          break;
        }
      }
    bool unions = true;
    for (Mask u : t.opens) {
      Mask covered = 0;
      for_each_bit(u, [&](int y) {
        const Mask core = q.up(y);
        if (t.is_open(core) && (core & ~u) == 0) covered |= core;
      });
      if (covered != u) {
        unions = false;
        break;
      }
    }
    p.b_space = settle(p.route_agreement, "b_space", {base, unions});
  }

  // A-space: every core open / the topology is the Alexandroff topology of
  // its specialization.
  {
    bool cores_open = true;
    for (int x = 0; x < n; ++x)
      if (!t.is_open(q.up(x))) cores_open = false;
    const bool is_alexandroff = t == alexandroff(q);
    p.a_space =
        settle(p.route_agreement, "a_space", {cores_open, is_alexandroff});
  }

  // Sober: T0 and the irreducible closed sets are point closures.  Finite
  // T0 spaces are always sober: a finite irreducible closed set C has a
  // specialization-maximal point m, irreducibility forces C ⊆ cl{m} (the
  // closed sets cl{m} and cl(C∖↑m) cover C, and the latter misses m), so
  // C = cl{m}.  Hence the T0 flag is the collapse route.
  {
    bool literal = p.t0;
    if (literal)
      for (Mask u : t.opens) {
        const Mask c = X & ~u;
        if (!irreducible_closed_by_covers(t, c)) continue;
        bool pointed = false;
        for (int x = 0; x < n && !pointed; ++x)
          if (t.closure(Mask(1) << x) == c) pointed = true;
        if (!pointed) {
          literal = false;
          break;
        }
      }
    p.sober = settle(p.route_agreement, "sober", {literal, p.t0});
  }

  // d-space: T0 and closures of directed sets are point closures; finitely
  // a directed set has a maximum, so this too collapses to T0.
  {
    bool literal = p.t0;
    if (literal)
      for (Mask d = 1; d <= X && literal; ++d) {
        if (!q.directed(d)) continue;
        const Mask c = t.closure(d);
        bool pointed = false;
        for (int x = 0; x < n && !pointed; ++x)
          if (t.closure(Mask(1) << x) == c) pointed = true;
        literal = pointed;
      }
    p.d_space = settle(p.route_agreement, "d_space", {literal, p.t0});
  }

  // Supercompact space: the whole carrier is a supercompact set / the
  // specialization order has a least element.
  {
    const bool whole = supercompact_by_worst_cover(t, X);
    bool least = false;
    for (int m = 0; m < n && !least; ++m)
      if (q.up(m) == X) least = true;
    p.supercompact_space =
        settle(p.route_agreement, "supercompact_space", {whole, least});
  }

  // Implication chain; a break can only be a checker bug.
  require(!p.a_space || p.b_space, "chain break: a_space without b_space");
  require(!p.b_space || p.c_space, "chain break: b_space without c_space");
  require(!p.c_space || p.wide_web, "chain break: c_space without wide_web");
  require(!p.wide_web || p.web, "chain break: wide_web without web");
  require(!p.has_dual_base || p.locally_strongly_connected,
          "chain break: dual base without local strong connectedness");
  require(!p.locally_strongly_connected || p.wide_web,
          "chain break: locally strongly connected without wide_web");
  return p;
}

FinLattice open_set_lattice(const FinTopology& t) {
  const std::size_t m = t.opens.size();
  require(m >= 1 && m <= 20, "open-set lattice too large");
  Rel r(static_cast<int>(m));
  for (int i = 0; i < static_cast<int>(m); ++i)
    for (int j = 0; j < static_cast<int>(m); ++j)
      if ((t.opens.sets[i] & ~t.opens.sets[j]) == 0) r.set(i, j);
  return FinLattice::make(FinPoset::make(r));
}

FinTopology cocompact_topology(const FinTopology& t) {
  const FinQoset q = specialization(t);
  // Compact saturated sets of a finite space are exactly the upper sets of
  // the specialization order, so their complements are the lower sets.
  SetFamily lowers;
  for (Mask m = 0; m <= t.full(); ++m)
    if (q.is_lower(m)) lowers.sets.push_back(m);
  FinTopology out = FinTopology::make(t.n, std::move(lowers));

  // Weak lower topology route: subbase of complements of cores.
  SetFamily subbase;
  for (int x = 0; x < t.n; ++x)
    subbase.sets.push_back(t.full() & ~q.up(x));
  subbase.canonicalize();
  FinTopology weak_lower =
      FinTopology::make(t.n, saturate_subbase(t.n, std::move(subbase)));
  require(out == weak_lower, "cocompact topology is not the weak lower one");
  return out;
}

FinTopology product_space(const FinTopology& a, const FinTopology& b) {
  if (a.n <= 0 || b.n <= 0 || a.n * b.n > kMaxPoints)
    throw std::invalid_argument("product carrier must have 1..20 points");
  SetFamily boxes;
  for (Mask u : a.opens)
    for (Mask v : b.opens) {
      Mask box = 0;
      for_each_bit(u, [&](int x1) {
        for_each_bit(v, [&](int x2) { box |= Mask(1) << (x1 * b.n + x2); });
      });
      boxes.sets.push_back(box);
    }
  boxes.canonicalize();
  return FinTopology::make(a.n * b.n, close_under(std::move(boxes), {'|'}));
}

AuditReport audit_products(int n_bound) {
  AuditReport rep;
  rep.id = "P1.3";
  rep.statement =
      "a binary product is a web / wide web / locally strongly connected / "
      "B- / C-space exactly when both factors are, and its specialization "
      "is the product order";
  rep.bound = n_bound;
  StopWatch watch;

  std::vector<std::vector<FinTopology>> tops(n_bound + 1);
  std::vector<std::vector<SpaceProfile>> profs(n_bound + 1);
  for (int n = 1; n <= n_bound; ++n) {
    tops[n] = all_topologies(n);
    for (const FinTopology& t : tops[n]) profs[n].push_back(space_profile(t));
  }

  for (int n1 = 1; n1 <= n_bound && rep.complete; ++n1)
    for (int n2 = 1; n2 <= n_bound && rep.complete; ++n2) {
      if (n1 * n2 > kMaxPoints) continue;
      for (std::size_t i = 0; i < tops[n1].size(); ++i) {
        if (interrupt_flag_set()) {
          rep.complete = false;
          break;
        }
        const FinTopology& t1 = tops[n1][i];
        const SpaceProfile& p1 = profs[n1][i];
        for (std::size_t j = 0; j < tops[n2].size(); ++j) {
          const FinTopology& t2 = tops[n2][j];
          const SpaceProfile& p2 = profs[n2][j];
          const FinTopology prod = product_space(t1, t2);
          const SpaceProfile pp = space_profile(prod);
          ++rep.instances;

          const std::vector<std::array<bool, 3>> checks = {
              {pp.web, p1.web, p2.web},
              {pp.wide_web, p1.wide_web, p2.wide_web},
              {pp.locally_strongly_connected, p1.locally_strongly_connected,
               p2.locally_strongly_connected},
              {pp.b_space, p1.b_space, p2.b_space},
              {pp.c_space, p1.c_space, p2.c_space}};
          static const char* const names[] = {
              "web", "wide_web", "locally_strongly_connected", "b_space",
              "c_space"};
          for (std::size_t i = 0; i < checks.size(); ++i)
            if (checks[i][0] != (checks[i][1] && checks[i][2]))
              rep.record_violation({{"flag", names[i]},
                                    {"left", opens_json(t1)},
                                    {"right", opens_json(t2)}});

          // Specialization of the product is the product order.
          const FinQoset q1 = specialization(t1);
          const FinQoset q2 = specialization(t2);
          const FinQoset qp = specialization(prod);
          bool order_ok = true;
          for (int x1 = 0; x1 < n1 && order_ok; ++x1)
            for (int x2 = 0; x2 < n2 && order_ok; ++x2)
              for (int y1 = 0; y1 < n1 && order_ok; ++y1)
                for (int y2 = 0; y2 < n2; ++y2)
                  if (qp.le(x1 * n2 + x2, y1 * n2 + y2) !=
                      (q1.le(x1, y1) && q2.le(x2, y2))) {
                    order_ok = false;
                    break;
                  }
          if (!order_ok)
            rep.record_violation({{"flag", "specialization"},
                                  {"left", opens_json(t1)},
                                  {"right", opens_json(t2)}});
        }
      }
    }
  rep.wall_ms = watch.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_route_agreement(int n_bound) {
  AuditReport rep;
  rep.id = "P3.1-routes";
  rep.statement =
      "pointwise web / wide web / C classifications match the coframe / "
      "wide coframe / completely distributive laws of the open-set lattice; "
      "on finite spaces the whole A-to-web chain collapses to true";
  rep.bound = n_bound;
  StopWatch watch;

  for (int n = 1; n <= n_bound && rep.complete; ++n) {
    const auto all = all_topologies(n);
    for (const FinTopology& t : all) {
      if (interrupt_flag_set()) {
        rep.complete = false;
        break;
      }
      ++rep.instances;
      const SpaceProfile p = space_profile(t);  // settles all routes
      if (!(p.web && p.wide_web && p.c_space && p.b_space && p.a_space &&
            p.locally_strongly_connected && p.has_dual_base))
        rep.record_violation(
            {{"opens", opens_json(t)}, {"profile", p.to_json()}});
      cocompact_topology(t);  // asserts the weak-lower-topology identity

      const FinQoset q = specialization(t);
      for (Mask y = 0; y <= t.full(); ++y) {
        const SubsetProfile sp = subset_profile(t, q, y);
        if (!sp.hypercompact)
          rep.record_violation({{"opens", opens_json(t)},
                                {"subset", static_cast<int>(y)},
                                {"flag", "hypercompact"}});
      }
    }
  }
  rep.wall_ms = watch.elapsed_ms();
  rep.finish();
  return rep;
}

}  // namespace ordtop

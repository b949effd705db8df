#include "ordtop/uniformity.hpp"

#include <string>
#include <utility>
#include <vector>

#include "ordtop/classify.hpp"
#include "ordtop/enumerate.hpp"
#include "ordtop/family.hpp"
#include "ordtop/parallel.hpp"
#include "ordtop/patchwork.hpp"
#include "ordtop/speclat.hpp"

namespace ordtop {
namespace {


json mask_json(Mask m) {
  json a = json::array();
  for_each_bit(m, [&](int i) { a.push_back(i); });
  return a;
}

json family_json(const SetFamily& f) {
  json a = json::array();
  for (Mask m : f.sets) a.push_back(mask_json(m));
  return a;
}

json topology_json(const FinTopology& t) {
  return {{"n", t.n}, {"opens", family_json(t.opens)}};
}

json relation_json(const Rel& r) {
  json rows = json::array();
  for (int x = 0; x < r.n; ++x) rows.push_back(mask_json(r.row[x]));
  return {{"n", r.n}, {"rows", rows}};
}

AuditReport start_report(std::string id, std::string statement, int bound) {
  AuditReport rep;
  rep.id = std::move(id);
  rep.statement = std::move(statement);
  rep.bound = bound;
  return rep;
}

void check(AuditReport& rep, const json& subject, bool ok, const std::string& what) {
  if (!ok) rep.record_violation({{"subject", subject}, {"failed", what}});
}

// All quasi-orders on n points together with their induced uniform
// topologies, for the exhaustive uniqueness sweep.
std::vector<std::pair<Rel, FinTopology>> qoset_topologies(int n) {
  std::vector<std::pair<Rel, FinTopology>> out;
  for_each_qoset(n, [&](const FinQoset& q) {
    out.emplace_back(q.rel, uniform_topology({q.rel}));
  });
  return out;
}

}  // namespace

json QuasiUniformity::to_json() const { return {{"least", relation_json(least)}}; }

QuasiUniformity filter_from_generators(int n, const std::vector<Rel>& gens) {
  Rel least = Rel::full(n);
  for (const Rel& g : gens) {
    require(g.n == n, "generator on the wrong carrier");
    least = least.intersect(g);
  }
  return {least};
}

FinTopology uniform_topology(const QuasiUniformity& u) {
  const int n = u.least.n;
  require(n >= 1 && n <= kLargeCarrier, "uniform topology capped at 12 points");
  SetFamily fam;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    bool open = true;
    for_each_bit(m, [&](int x) {
      if (open && (u.least.row[static_cast<std::size_t>(x)] & ~m)) open = false;
    });
    if (open) fam.sets.push_back(m);
  }
  FinTopology t;
  t.n = n;
  t.opens = fam;
  return t;
}

Rel arrow_entourage(int n, Mask u, Mask v) {
  Rel r(n);
  for (int x = 0; x < n; ++x)
    r.row[static_cast<std::size_t>(x)] = has_bit(u, x) ? v : full_mask(n);
  return r;
}

bool frame_way_below(const FinTopology& t, Mask u, Mask v) {
  for (Mask w : t.opens)
    if ((v & ~w) == 0 && (u & ~w) != 0) return false;
  return true;
}

namespace {

// Cocompact topology computed by a route independent of the one in the
// classification module: saturation is evaluated literally as the
// intersection of open supersets, and the complements of the (all compact)
// saturated sets are closed into a topology.
FinTopology literal_cocompact(const FinTopology& t) {
  const int n = t.n;
  require(n >= 1 && n <= kLargeCarrier, "cocompact route capped at 12 points");
  SetFamily sub;
  for (Mask s = 0; s <= full_mask(n); ++s) {
    Mask sat = full_mask(n);
    for (Mask o : t.opens)
      if ((s & ~o) == 0) sat &= o;
    if (sat == s) sub.sets.push_back(full_mask(n) & ~s);
  }
  sub.canonicalize();
  FinTopology out;
  out.n = n;
  out.opens = saturate_subbase(n, sub);
  return out;
}

}  // namespace

AuditReport audit_interior_uniformity(int n_bound) {
  AuditReport rep = start_report(
      "P5.5",
      "every finite space is induced by exactly one quasi-uniformity: the "
      "principal filter of its specialization quasi-order, generated by the "
      "entourages row(y) -> row(x) over interior-relation pairs; the "
      "interior relation is the specialization quasi-order, the least "
      "entourage (= the intersection of the filter) is that order, the dual "
      "filter induces the weak lower topology = the cocompact topology = "
      "all lower sets, and the symmetrized filter induces the weak patch "
      "topology, which equals the strong patch topology",
      n_bound);
  StopWatch sw;
  for (int n = 1; n <= n_bound && rep.complete; ++n) {
    const auto candidates = qoset_topologies(n);
    for (const FinTopology& t : all_topologies(n)) {
      if (interrupt_flag_set()) {
        rep.complete = false;
        break;
      }
      ++rep.instances;
      json subject = {{"space", topology_json(t)}};
      const FinQoset spec = specialization(t);
      const Rel rho = interior_relation(t);
      check(rep, subject, rho == spec.rel,
            "interior relation is the specialization quasi-order");

      std::vector<Rel> gens;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (rho.at(x, y))
            gens.push_back(arrow_entourage(
                n, rho.row[static_cast<std::size_t>(y)],
                rho.row[static_cast<std::size_t>(x)]));
      const QuasiUniformity u = filter_from_generators(n, gens);
      check(rep, subject, u.least == spec.rel,
            "relational entourages intersect to the specialization order");
      check(rep, subject, u.least.reflexive() && u.least.transitive(),
            "least entourage is a quasi-order, so the filter axioms hold");
      check(rep, subject, uniform_topology(u) == t,
            "the filter induces the space");

      const FinTopology dual_top = uniform_topology(u.dual());
      check(rep, subject,
            dual_top == selection_topology(spec.dual(), CoselectionKind::upsilon),
            "dual filter induces the weak lower topology");
      check(rep, subject, dual_top == alexandroff(spec.dual()),
            "dual filter induces the full lower-set topology");
      check(rep, subject, dual_top == cocompact_topology(t),
            "dual filter induces the cocompact topology");
      check(rep, subject, dual_top == literal_cocompact(t),
            "literal-saturation route agrees with the cocompact topology");

      const FinTopology star_top = uniform_topology(u.star());
      const FinTopology weak_patch = patch_space(t, CoselectionKind::upsilon).top;
      const FinTopology strong_patch = patch_space(t, CoselectionKind::alpha).top;
      check(rep, subject, star_top == weak_patch,
            "symmetrized filter induces the weak patch topology");
      check(rep, subject, weak_patch == strong_patch,
            "weak and strong patch topologies coincide on a finite carrier");

      int inducing = 0;
      bool only_spec = true;
      for (const auto& [qrel, qtop] : candidates)
        if (qtop == t) {
          ++inducing;
          if (!(qrel == spec.rel)) only_spec = false;
        }
      check(rep, subject, inducing == 1 && only_spec,
            "exactly one quasi-order induces the space uniformly");
    }
  }
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_arrow_uniformity(int n_bound) {
  AuditReport rep = start_report(
      "L5.4",
      "on a finite (hence locally compact) space, way-below between opens in "
      "the open-set frame is containment, replayed literally over unions of "
      "opens; the arrow entourages over way-below pairs of opens generate "
      "the unique inducing quasi-uniformity; the interior-relation rows form "
      "a base whose members are unions of the way-below base members below "
      "them, and the arrow entourages over that base generate the same "
      "filter; the dual induces the cocompact topology and the "
      "symmetrization the patch topology",
      n_bound);
  StopWatch sw;
  for (int n = 1; n <= n_bound && rep.complete; ++n) {
    for (const FinTopology& t : all_topologies(n)) {
      if (interrupt_flag_set()) {
        rep.complete = false;
        break;
      }
      ++rep.instances;
      json subject = {{"space", topology_json(t)}};
      const FinQoset spec = specialization(t);

      bool wb_is_containment = true;
      for (Mask a : t.opens)
        for (Mask b : t.opens)
          if (frame_way_below(t, a, b) != ((a & ~b) == 0)) wb_is_containment = false;
      check(rep, subject, wb_is_containment,
            "way-below in the finite open-set frame is containment");

      std::vector<Rel> open_gens;
      for (Mask a : t.opens)
        for (Mask b : t.opens)
          if (frame_way_below(t, a, b)) open_gens.push_back(arrow_entourage(n, a, b));
      const QuasiUniformity u = filter_from_generators(n, open_gens);
      check(rep, subject, u.least == spec.rel,
            "open-arrow entourages intersect to the specialization order");
      check(rep, subject, uniform_topology(u) == t, "the filter induces the space");

      const Rel rho = interior_relation(t);
      bool base_condition = true;
      for (int x = 0; x < n; ++x) {
        const Mask c = rho.row[static_cast<std::size_t>(x)];
        Mask cover = 0;
        for (int y = 0; y < n; ++y) {
          const Mask b = rho.row[static_cast<std::size_t>(y)];
          if (frame_way_below(t, b, c)) cover |= b;
        }
        if (cover != c) base_condition = false;
      }
      check(rep, subject, base_condition,
            "every base row is the union of the way-below rows beneath it");

      std::vector<Rel> row_gens;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (frame_way_below(t, rho.row[static_cast<std::size_t>(y)],
                              rho.row[static_cast<std::size_t>(x)]))
            row_gens.push_back(arrow_entourage(
                n, rho.row[static_cast<std::size_t>(y)],
                rho.row[static_cast<std::size_t>(x)]));
      check(rep, subject, filter_from_generators(n, row_gens).least == u.least,
            "the base rows generate the same filter as all way-below pairs");

      check(rep, subject, uniform_topology(u.dual()) == cocompact_topology(t),
            "dual filter induces the cocompact topology");
      check(rep, subject,
            uniform_topology(u.star()) == patch_space(t, CoselectionKind::upsilon).top,
            "symmetrized filter induces the patch topology");
    }
  }
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

}  // namespace ordtop

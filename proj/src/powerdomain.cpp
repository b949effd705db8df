#include "ordtop/powerdomain.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ordtop/classify.hpp"
#include "ordtop/completion.hpp"
#include "ordtop/enumerate.hpp"
#include "ordtop/family.hpp"
#include "ordtop/parallel.hpp"
#include "ordtop/patchwork.hpp"
#include "ordtop/speclat.hpp"

namespace ordtop {
namespace {

Mask bit(int x) { return Mask(1) << x; }

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

// The continuity law for a binary operation table against a relation:
// col(x*y) = preimage of { u*v : u approximates x, v approximates y }.
bool relational_continuity(const Rel& rho, const std::vector<int>& op) {
  const int n = rho.n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Mask lhs = rho.col(op[static_cast<std::size_t>(x * n + y)]);
      Mask rhs = 0;
      for_each_bit(rho.col(x), [&](int u) {
        for_each_bit(rho.col(y), [&](int v) {
          rhs |= rho.col(op[static_cast<std::size_t>(u * n + v)]);
        });
      });
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_semilattice_table(int n, const std::vector<int>& op) {
  for (int x = 0; x < n; ++x) {
    if (op[static_cast<std::size_t>(x * n + x)] != x) return false;
    for (int y = 0; y < n; ++y) {
      if (op[static_cast<std::size_t>(x * n + y)] !=
          op[static_cast<std::size_t>(y * n + x)])
        return false;
      for (int z = 0; z < n; ++z)
        if (op[static_cast<std::size_t>(op[static_cast<std::size_t>(x * n + y)] * n + z)] !=
            op[static_cast<std::size_t>(x * n + op[static_cast<std::size_t>(y * n + z)])])
          return false;
    }
  }
  return true;
}

// All idempotent commutative associative operation tables on n points.
std::vector<std::vector<int>> semilattice_ops(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::vector<int>> out;
  std::vector<int> choice(pairs.size(), 0);
  while (true) {
    std::vector<int> op(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) op[static_cast<std::size_t>(i * n + i)] = i;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      op[static_cast<std::size_t>(pairs[k].first * n + pairs[k].second)] = choice[k];
      op[static_cast<std::size_t>(pairs[k].second * n + pairs[k].first)] = choice[k];
    }
    if (is_semilattice_table(n, op)) out.push_back(op);
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == n) {
      choice[k] = 0;
      ++k;
    }
    if (k == choice.size()) break;
  }
  return out;
}

template <typename Fn>
void for_each_map(int from, int to, Fn&& fn) {
  std::vector<int> f(static_cast<std::size_t>(from), 0);
  while (true) {
    fn(f);
    std::size_t k = 0;
    while (k < f.size() && ++f[k] == to) {
      f[k] = 0;
      ++k;
    }
    if (k == f.size()) break;
  }
}

template <typename Fn>
void for_each_certified(int n, Fn&& fn) {
  const std::uint64_t codes = std::uint64_t(1) << (n * n);
  for (std::uint64_t code = 0; code < codes; ++code) {
    Rel rho(n);
    for (int x = 0; x < n; ++x)
      rho.row[x] = static_cast<Mask>((code >> (x * n)) & full_mask(n));
    if (validate_c_relation(rho).c_quasi_order) fn(rho);
  }
}

struct RelSemilattice {
  Rel rho;
  std::vector<int> op;
};

// All certified relations with a law-abiding semilattice operation.
std::vector<RelSemilattice> relation_semilattices(int n) {
  std::vector<RelSemilattice> out;
  const auto ops = semilattice_ops(n);
  for_each_certified(n, [&](const Rel& rho) {
    for (const auto& op : ops)
      if (relational_continuity(rho, op)) out.push_back({rho, op});
  });
  return out;
}

struct PosetSemilattice {
  FinPoset poset;
  std::vector<int> op;
};

bool isotone_table(const FinPoset& p, const std::vector<int>& op) {
  for (int x = 0; x < p.n; ++x)
    for (int x2 = 0; x2 < p.n; ++x2) {
      if (!p.le(x, x2)) continue;
      for (int y = 0; y < p.n; ++y)
        if (!p.le(op[static_cast<std::size_t>(x * p.n + y)],
                  op[static_cast<std::size_t>(x2 * p.n + y)]))
          return false;
    }
  return true;
}

// All posets with an isotone semilattice operation (operations preserving
// directed joins on a finite carrier are exactly the isotone ones).
std::vector<PosetSemilattice> poset_semilattices(int n) {
  std::vector<PosetSemilattice> out;
  const auto ops = semilattice_ops(n);
  for_each_poset(n, [&](const FinPoset& p) {
    for (const auto& op : ops)
      if (isotone_table(p, op)) out.push_back({p, op});
  });
  return out;
}

}  // namespace

int LiftedRelation::index_of(Mask e) const {
  require(e >= 1 && e <= full_mask(base_n), "set outside the lifted carrier");
  return static_cast<int>(e) - 1;  // sets are the nonempty masks in order
}

json LiftedRelation::to_json() const {
  json ss = json::array();
  for (Mask m : sets) ss.push_back(mask_json(m));
  return {{"base_n", base_n}, {"sets", ss}, {"relation", relation_json(rel)}};
}

LiftedRelation lift_relation(const Rel& rho) {
  require(rho.n >= 1 && rho.n <= 4, "lifted relation capped at 4 base points");
  LiftedRelation out;
  out.base_n = rho.n;
  for (Mask e = 1; e <= full_mask(rho.n); ++e) out.sets.push_back(e);
  const int m = static_cast<int>(out.sets.size());
  out.rel = Rel(m);
  for (int i = 0; i < m; ++i) {
    const Mask e = out.sets[static_cast<std::size_t>(i)];
    const Mask reach = rho.image(e);
    for (int j = 0; j < m; ++j) {
      const Mask f = out.sets[static_cast<std::size_t>(j)];
      if ((e & ~rho.preimage(f)) == 0 && (f & ~reach) == 0) out.rel.set(i, j);
    }
  }
  return out;
}

CSemilatticeReport validate_c_semilattice(const Rel& rho, const std::vector<int>& op) {
  CSemilatticeReport rep;
  const int n = rho.n;
  require(static_cast<int>(op.size()) == n * n, "operation table size mismatch");
  const CRelReport cert = validate_c_relation(rho);
  rep.certified = cert.c_quasi_order;
  if (!rep.certified) {
    rep.violation = "relation fails certification: " + cert.violation;
    rep.witness = cert.witness;
    return rep;
  }
  for (int x = 0; x < n; ++x) {
    if (op[static_cast<std::size_t>(x * n + x)] != x) {
      rep.violation = "operation not idempotent";
      rep.witness = {{"x", x}};
      return rep;
    }
    for (int y = 0; y < n; ++y) {
      if (op[static_cast<std::size_t>(x * n + y)] !=
          op[static_cast<std::size_t>(y * n + x)]) {
        rep.violation = "operation not commutative";
        rep.witness = {{"x", x}, {"y", y}};
        return rep;
      }
      for (int z = 0; z < n; ++z)
        if (op[static_cast<std::size_t>(op[static_cast<std::size_t>(x * n + y)] * n + z)] !=
            op[static_cast<std::size_t>(x * n + op[static_cast<std::size_t>(y * n + z)])]) {
          rep.violation = "operation not associative";
          rep.witness = {{"x", x}, {"y", y}, {"z", z}};
          return rep;
        }
    }
  }
  rep.semilattice_op = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Mask lhs = rho.col(op[static_cast<std::size_t>(x * n + y)]);
      Mask rhs = 0;
      for_each_bit(rho.col(x), [&](int u) {
        for_each_bit(rho.col(y), [&](int v) {
          rhs |= rho.col(op[static_cast<std::size_t>(u * n + v)]);
        });
      });
      if (lhs != rhs) {
        rep.violation = "continuity law fails";
        rep.witness = {{"x", x}, {"y", y}};
        return rep;
      }
    }
  rep.continuity_law = true;
  rep.ok = true;
  return rep;
}

json FreeSemilattice::to_json() const {
  return {{"lifted", lifted.to_json()},
          {"opens", family_json(top.opens)},
          {"unit", unit},
          {"op", op}};
}

FreeSemilattice free_c_semilattice(const FinTopology& t) {
  require(t.n >= 1 && t.n <= 3, "free semilattice construction capped at 3 points");
  FreeSemilattice out;
  out.lifted = lift_relation(interior_relation(t));
  out.top = topology_from_relation(out.lifted.rel);
  const int m = static_cast<int>(out.lifted.sets.size());
  for (int x = 0; x < t.n; ++x) out.unit.push_back(out.lifted.index_of(bit(x)));
  out.op.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out.op[static_cast<std::size_t>(i * m + j)] = out.lifted.index_of(
          out.lifted.sets[static_cast<std::size_t>(i)] |
          out.lifted.sets[static_cast<std::size_t>(j)]);
  return out;
}

json HoarePowerdomain::to_json() const {
  json cl = json::array();
  for (Mask m : closeds) cl.push_back(mask_json(m));
  return {{"closeds", cl},
          {"order_rows", relation_json(order.rel)},
          {"op", op},
          {"unit", unit}};
}

HoarePowerdomain hoare_powerdomain(const FinTopology& t) {
  HoarePowerdomain out;
  for (Mask m : t.closeds())
    if (m) out.closeds.push_back(m);
  const int m = static_cast<int>(out.closeds.size());
  require(m >= 1 && m <= kMaxPoints, "carrier too large for the powerdomain representation");
  auto index_of = [&](Mask c) {
    const auto it = std::lower_bound(out.closeds.begin(), out.closeds.end(), c);
    require(it != out.closeds.end() && *it == c, "set is not a nonempty closed set");
    return static_cast<int>(it - out.closeds.begin());
  };
  Rel incl(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if ((out.closeds[static_cast<std::size_t>(i)] &
           ~out.closeds[static_cast<std::size_t>(j)]) == 0)
        incl.set(i, j);
  out.order = FinPoset::make(std::move(incl));
  out.op.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out.op[static_cast<std::size_t>(i * m + j)] =
          index_of(out.closeds[static_cast<std::size_t>(i)] |
                   out.closeds[static_cast<std::size_t>(j)]);
  for (int x = 0; x < t.n; ++x) out.unit.push_back(index_of(t.closure(bit(x))));
  return out;
}

json PlotkinPowerdomain::to_json() const {
  json cv = json::array();
  for (Mask m : convexes) cv.push_back(mask_json(m));
  return {{"convexes", cv},
          {"order_rows", relation_json(order.rel)},
          {"op", op},
          {"unit", unit}};
}

PlotkinPowerdomain plotkin_powerdomain(const FinPoset& p) {
  require(p.n >= 1 && p.n <= 4, "convex powerdomain capped at 4 points");
  const Rel wb = way_below(p);
  const LiftedRelation lifted = lift_relation(wb);
  const RoundedIdealCompletion comp = rounded_ideal_completion(lifted.rel);
  const int fx = static_cast<int>(lifted.sets.size());
  const int m = comp.domain.n;

  PlotkinPowerdomain out;
  out.order = comp.domain;
  for (int k = 0; k < m; ++k) {
    const Mask ideal = comp.ideals[static_cast<std::size_t>(k)];
    Mask rep = 0;
    bool rep_is_member = false;
    for (int i = 0; i < fx; ++i)
      if (lifted.rel.col(i) == ideal) rep |= lifted.sets[static_cast<std::size_t>(i)];
    for (int i = 0; i < fx; ++i)
      if (lifted.rel.col(i) == ideal && lifted.sets[static_cast<std::size_t>(i)] == rep)
        rep_is_member = true;
    require(rep_is_member, "class has no inclusion-greatest member");
    out.convexes.push_back(rep);
  }
  out.op.assign(static_cast<std::size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Mask unions = 0;
      for_each_bit(comp.ideals[static_cast<std::size_t>(a)], [&](int i) {
        for_each_bit(comp.ideals[static_cast<std::size_t>(b)], [&](int j) {
          unions |= bit(lifted.index_of(lifted.sets[static_cast<std::size_t>(i)] |
                                        lifted.sets[static_cast<std::size_t>(j)]));
        });
      });
      const Mask rounded = lifted.rel.preimage(unions);
      int idx = -1;
      for (int k = 0; k < m; ++k)
        if (comp.ideals[static_cast<std::size_t>(k)] == rounded) {
          idx = k;
          break;
        }
      require(idx >= 0, "rounded union leaves the ideal domain");
      out.op[static_cast<std::size_t>(a * m + b)] = idx;
    }
  for (int x = 0; x < p.n; ++x)
    out.unit.push_back(
        comp.embedding[static_cast<std::size_t>(lifted.index_of(bit(x)))]);
  return out;
}

bool is_continuous_map(const FinTopology& a, const FinTopology& b,
                       const std::vector<int>& f) {
  require(static_cast<int>(f.size()) == a.n, "map size mismatch");
  for (Mask v : b.opens) {
    Mask pre = 0;
    for (int x = 0; x < a.n; ++x)
      if (has_bit(v, f[static_cast<std::size_t>(x)])) pre |= bit(x);
    if (!a.is_open(pre)) return false;
  }
  return true;
}

bool is_relation_morphism(const Rel& rho_a, const Rel& rho_b,
                          const std::vector<int>& f) {
  require(static_cast<int>(f.size()) == rho_a.n, "map size mismatch");
  for (int y = 0; y < rho_a.n; ++y) {
    const Mask lhs = rho_b.col(f[static_cast<std::size_t>(y)]);
    Mask rhs = 0;
    for_each_bit(rho_a.col(y),
                 [&](int z) { rhs |= rho_b.col(f[static_cast<std::size_t>(z)]); });
    if (lhs != rhs) return false;
  }
  return true;
}

AuditReport audit_closed_lattice_reflection(int n_bound) {
  AuditReport rep = start_report(
      "P9.1",
      "the closed sets of a finite space form a distributive lattice whose "
      "join-irreducible members are exactly the point closures and which "
      "join-generate every closed set; the closure-of-point map into the "
      "upper space of that lattice is continuous, and every continuous map "
      "into the upper space of a finite lattice extends along it to a unique "
      "continuous join-and-bottom-preserving map (uniqueness exhausted at "
      "micro sizes); the nonempty closed sets with union form an isotone "
      "semilattice with continuous unit",
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
      const SetFamily cl = t.closeds();
      const int cn = static_cast<int>(cl.size());
      auto cindex = [&](Mask c) {
        const auto it = std::lower_bound(cl.sets.begin(), cl.sets.end(), c);
        require(it != cl.sets.end() && *it == c, "not a closed set");
        return static_cast<int>(it - cl.sets.begin());
      };
      Rel incl(cn);
      for (int i = 0; i < cn; ++i)
        for (int j = 0; j < cn; ++j)
          if ((cl.sets[static_cast<std::size_t>(i)] &
               ~cl.sets[static_cast<std::size_t>(j)]) == 0)
            incl.set(i, j);
      const FinPoset cpos = FinPoset::make(std::move(incl));
      check(rep, subject, is_lattice(cpos), "closed sets form a lattice");
      if (!is_lattice(cpos)) continue;
      const FinLattice L = FinLattice::make(cpos);

      bool distributive = true;
      for (int a = 0; a < cn && distributive; ++a)
        for (int b = 0; b < cn && distributive; ++b)
          for (int c = 0; c < cn; ++c)
            if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) {
              distributive = false;
              break;
            }
      check(rep, subject, distributive, "closed-set lattice is distributive");

      std::set<int> irreducibles, point_closures;
      for (int k = 0; k < cn; ++k) {
        Mask strictly_below = 0;
        for (int l = 0; l < cn; ++l)
          if (l != k && L.le(l, k)) strictly_below |= bit(l);
        if (L.join_of(strictly_below) != k) irreducibles.insert(k);
      }
      for (int x = 0; x < n; ++x) point_closures.insert(cindex(t.closure(bit(x))));
      check(rep, subject, irreducibles == point_closures,
            "join-irreducible closed sets are exactly the point closures");

      bool generated = true;
      for (Mask c : cl) {
        Mask cover = 0;
        for_each_bit(c, [&](int x) { cover |= t.closure(bit(x)); });
        if (cover != c) generated = false;
      }
      check(rep, subject, generated, "point closures join-generate every closed set");

      const FinTopology sigma_cl = selection_topology(cpos, CoselectionKind::sigma);
      std::vector<int> eta;
      for (int x = 0; x < n; ++x) eta.push_back(cindex(t.closure(bit(x))));
      check(rep, subject, is_continuous_map(t, sigma_cl, eta),
            "closure-of-point map is continuous into the lattice's upper space");

      const int lat_max = n <= 2 ? 4 : 3;
      for (int k = 1; k <= lat_max; ++k) {
        for (const FinLattice& C : all_lattices(k)) {
          const FinTopology sigma_c = selection_topology(C.poset, CoselectionKind::sigma);
          for_each_map(n, k, [&](const std::vector<int>& f) {
            if (!is_continuous_map(t, sigma_c, f)) return;
            std::vector<int> h;
            for (int a = 0; a < cn; ++a) {
              Mask img = 0;
              for_each_bit(cl.sets[static_cast<std::size_t>(a)],
                           [&](int x) { img |= bit(f[static_cast<std::size_t>(x)]); });
              h.push_back(C.join_of(img));
            }
            json fsubject = {{"space", topology_json(t)},
                             {"lattice_rows", relation_json(C.poset.rel)},
                             {"map", f}};
            bool triangle = true;
            for (int x = 0; x < n; ++x)
              if (h[static_cast<std::size_t>(eta[static_cast<std::size_t>(x)])] !=
                  f[static_cast<std::size_t>(x)])
                triangle = false;
            check(rep, fsubject, triangle, "join extension restricts to the map");
            bool joins = h[static_cast<std::size_t>(cindex(0))] == *C.poset.bottom();
            for (int a = 0; a < cn && joins; ++a)
              for (int b = 0; b < cn; ++b)
                if (h[static_cast<std::size_t>(L.join(a, b))] !=
                    C.join(h[static_cast<std::size_t>(a)], h[static_cast<std::size_t>(b)])) {
                  joins = false;
                  break;
                }
            check(rep, fsubject, joins, "join extension preserves finite joins and bottom");
            check(rep, fsubject, is_continuous_map(sigma_cl, sigma_c, h),
                  "join extension is continuous");
            const bool exhaust_uniqueness = (n <= 2) || (k <= 2);
            if (exhaust_uniqueness) {
              int found = 0;
              bool matches = false;
              for_each_map(cn, k, [&](const std::vector<int>& h2) {
                bool tri = true;
                for (int x = 0; x < n; ++x)
                  if (h2[static_cast<std::size_t>(eta[static_cast<std::size_t>(x)])] !=
                      f[static_cast<std::size_t>(x)])
                    tri = false;
                if (!tri) return;
                if (h2[static_cast<std::size_t>(cindex(0))] != *C.poset.bottom()) return;
                for (int a = 0; a < cn; ++a)
                  for (int b = 0; b < cn; ++b)
                    if (h2[static_cast<std::size_t>(L.join(a, b))] !=
                        C.join(h2[static_cast<std::size_t>(a)],
                               h2[static_cast<std::size_t>(b)]))
                      return;
                if (!is_continuous_map(sigma_cl, sigma_c, h2)) return;
                ++found;
                if (h2 == h) matches = true;
              });
              check(rep, fsubject, found == 1 && matches,
                    "join extension is the unique factorization");
            }
          });
        }
      }

      const HoarePowerdomain hp = hoare_powerdomain(t);
      bool closeds_match = static_cast<int>(hp.closeds.size()) == cn - 1;
      for (Mask c : hp.closeds)
        if (!t.is_closed(c) || !c) closeds_match = false;
      check(rep, subject, closeds_match,
            "lower powerdomain carries exactly the nonempty closed sets");
      check(rep, subject,
            is_semilattice_table(hp.order.n, hp.op) && isotone_table(hp.order, hp.op),
            "lower powerdomain union is an isotone semilattice operation");
      check(rep, subject,
            is_continuous_map(t, selection_topology(hp.order, CoselectionKind::sigma),
                              hp.unit),
            "lower powerdomain unit is continuous");
    }
  }
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_lifted_relation(int n_bound) {
  AuditReport rep = start_report(
      "L9.2",
      "lifting a certified relation to nonempty subsets (E below F iff E "
      "inside the approximants of F and F inside the reach of E) yields a "
      "certified relation for which union obeys the continuity law; two sets "
      "share a column exactly when they share their (approximants, reach) "
      "pair, each class has a unique inclusion-greatest member, the "
      "intersection of approximants and reach; the lifted relation is strict "
      "exactly when that pair map is injective, which the induced topology "
      "mirrors as the T0 axiom (strictness can fail even over a strict "
      "relation: the 3-chain identifies {0,2} with {0,1,2})",
      n_bound);
  StopWatch sw;
  bool seen_strict = false, seen_nonstrict = false;
  const int bound = std::min(n_bound, 3);
  for (int n = 1; n <= bound && rep.complete; ++n) {
    for_each_certified(n, [&](const Rel& rho) {
      if (interrupt_flag_set()) {
        rep.complete = false;
        return;
      }
      ++rep.instances;
      json subject = {{"relation", relation_json(rho)}};
      const LiftedRelation lifted = lift_relation(rho);
      const int fx = static_cast<int>(lifted.sets.size());
      const CRelReport cert = validate_c_relation(lifted.rel);
      check(rep, subject, cert.c_quasi_order, "the lifted relation certifies");
      if (!cert.c_quasi_order) return;

      bool injective = true;
      for (int i = 0; i < fx; ++i)
        for (int j = i + 1; j < fx; ++j) {
          const Mask ei = lifted.sets[static_cast<std::size_t>(i)];
          const Mask ej = lifted.sets[static_cast<std::size_t>(j)];
          const bool same_pair = rho.preimage(ei) == rho.preimage(ej) &&
                                 rho.image(ei) == rho.image(ej);
          const bool same_col = lifted.rel.col(i) == lifted.rel.col(j);
          check(rep, subject, same_pair == same_col,
                "columns coincide exactly on equal (approximants, reach) pairs");
          if (same_col) injective = false;
        }
      check(rep, subject, cert.c_order == injective,
            "strictness of the lifted relation matches pair separation");
      (cert.c_order ? seen_strict : seen_nonstrict) = true;

      for (int i = 0; i < fx; ++i) {
        Mask rep_mask = 0;
        for (int j = 0; j < fx; ++j)
          if (lifted.rel.col(j) == lifted.rel.col(i))
            rep_mask |= lifted.sets[static_cast<std::size_t>(j)];
        const Mask hull = rho.preimage(lifted.sets[static_cast<std::size_t>(i)]) &
                          rho.image(lifted.sets[static_cast<std::size_t>(i)]);
        check(rep, subject, rep_mask == hull,
              "class maximum is approximants intersected with reach");
        check(rep, subject,
              lifted.rel.col(lifted.index_of(hull)) == lifted.rel.col(i),
              "the hull lies in the class it bounds");
      }

      std::vector<int> union_op(static_cast<std::size_t>(fx) * fx, 0);
      for (int i = 0; i < fx; ++i)
        for (int j = 0; j < fx; ++j)
          union_op[static_cast<std::size_t>(i * fx + j)] = lifted.index_of(
              lifted.sets[static_cast<std::size_t>(i)] |
              lifted.sets[static_cast<std::size_t>(j)]);
      const CSemilatticeReport sem = validate_c_semilattice(lifted.rel, union_op);
      check(rep, subject, sem.ok,
            "union on the lifted relation obeys the continuity law: " + sem.violation);

      const FinTopology ft = topology_from_relation(lifted.rel);
      const FinQoset spec = specialization(ft);
      check(rep, subject, spec == lower_quasiorder(lifted.rel),
            "specialization of the induced topology is the lower quasi-order");
      check(rep, subject, spec.antisymmetric() == cert.c_order,
            "the induced topology is T0 exactly in the strict case");
    });
  }
  if (bound >= 3 && rep.complete) {
    check(rep, json{{"note", "witness coverage"}}, seen_strict && seen_nonstrict,
          "both strict and non-strict lifted relations occur");
  }
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_powerdomain_adjunctions(int n_bound) {
  AuditReport rep = start_report(
      "T9.3",
      "exhaustive micro-size adjunction checks: the singleton unit into the "
      "lifted relation is a relation morphism, and every relation morphism "
      "into a relation carrying a law-abiding semilattice operation extends "
      "uniquely to an operation-preserving relation morphism on nonempty "
      "subsets; the column unit into the rounded-ideal completion is an "
      "operation-preserving relation morphism, the induced ideal operation "
      "is an isotone semilattice operation, and every operation-preserving "
      "relation morphism into an isotone-semilattice poset extends uniquely "
      "to an isotone homomorphism on ideals via directed joins; the "
      "continuity law for operations coincides with topological continuity "
      "for the product topology; the free construction is topologically "
      "free; and the T0 quotient of a space with continuous operation is "
      "the reflection into T0 spaces with continuous operation",
      n_bound);
  StopWatch sw;

  std::vector<RelSemilattice> cqs3;
  std::vector<PosetSemilattice> cds3;
  for (int k = 1; k <= 3; ++k) {
    const auto rs = relation_semilattices(k);
    cqs3.insert(cqs3.end(), rs.begin(), rs.end());
    const auto ps = poset_semilattices(k);
    cds3.insert(cds3.end(), ps.begin(), ps.end());
  }

  // Free-semilattice adjunction on the relation side.
  for (int n = 1; n <= std::min(n_bound, 2) && rep.complete; ++n) {
    for_each_certified(n, [&](const Rel& rho) {
      if (interrupt_flag_set()) {
        rep.complete = false;
        return;
      }
      ++rep.instances;
      json subject = {{"relation", relation_json(rho)}};
      const LiftedRelation lifted = lift_relation(rho);
      const int fx = static_cast<int>(lifted.sets.size());
      std::vector<int> unit;
      for (int x = 0; x < n; ++x) unit.push_back(lifted.index_of(bit(x)));
      check(rep, subject, is_relation_morphism(rho, lifted.rel, unit),
            "singleton unit is a relation morphism");
      std::vector<int> union_op(static_cast<std::size_t>(fx) * fx, 0);
      for (int i = 0; i < fx; ++i)
        for (int j = 0; j < fx; ++j)
          union_op[static_cast<std::size_t>(i * fx + j)] = lifted.index_of(
              lifted.sets[static_cast<std::size_t>(i)] |
              lifted.sets[static_cast<std::size_t>(j)]);

      for (const RelSemilattice& target : cqs3) {
        const int tn = target.rho.n;
        for_each_map(n, tn, [&](const std::vector<int>& f) {
          if (!is_relation_morphism(rho, target.rho, f)) return;
          std::vector<int> fbar;
          for (int i = 0; i < fx; ++i) {
            int acc = -1;
            for_each_bit(lifted.sets[static_cast<std::size_t>(i)], [&](int x) {
              const int v = f[static_cast<std::size_t>(x)];
              acc = acc < 0 ? v : target.op[static_cast<std::size_t>(acc * tn + v)];
            });
            fbar.push_back(acc);
          }
          json fsubject = {{"relation", relation_json(rho)},
                           {"target", relation_json(target.rho)},
                           {"target_op", target.op},
                           {"map", f}};
          bool hom = true;
          for (int i = 0; i < fx; ++i)
            for (int j = 0; j < fx; ++j)
              if (fbar[static_cast<std::size_t>(
                      union_op[static_cast<std::size_t>(i * fx + j)])] !=
                  target.op[static_cast<std::size_t>(
                      fbar[static_cast<std::size_t>(i)] * tn +
                      fbar[static_cast<std::size_t>(j)])])
                hom = false;
          bool triangle = true;
          for (int x = 0; x < n; ++x)
            if (fbar[static_cast<std::size_t>(unit[static_cast<std::size_t>(x)])] !=
                f[static_cast<std::size_t>(x)])
              triangle = false;
          check(rep, fsubject, hom, "product extension preserves the operation");
          check(rep, fsubject, triangle, "product extension restricts to the map");
          check(rep, fsubject, is_relation_morphism(lifted.rel, target.rho, fbar),
                "product extension is a relation morphism");
          int found = 0;
          bool matches = false;
          for_each_map(fx, tn, [&](const std::vector<int>& h) {
            for (int i = 0; i < fx; ++i)
              for (int j = 0; j < fx; ++j)
                if (h[static_cast<std::size_t>(
                        union_op[static_cast<std::size_t>(i * fx + j)])] !=
                    target.op[static_cast<std::size_t>(
                        h[static_cast<std::size_t>(i)] * tn +
                        h[static_cast<std::size_t>(j)])])
                  return;
            for (int x = 0; x < n; ++x)
              if (h[static_cast<std::size_t>(unit[static_cast<std::size_t>(x)])] !=
                  f[static_cast<std::size_t>(x)])
                return;
            if (!is_relation_morphism(lifted.rel, target.rho, h)) return;
            ++found;
            if (h == fbar) matches = true;
          });
          check(rep, fsubject, found == 1 && matches,
                "product extension is the unique factorization");
        });
      }
    });
  }

  // Rounded-ideal adjunction for operation-carrying relations.
  for (const RelSemilattice& s : cqs3) {
    if (interrupt_flag_set()) {
      rep.complete = false;
      break;
    }
    const int n = s.rho.n;
    if (n > std::min(n_bound, 3)) continue;
    ++rep.instances;
    json subject = {{"relation", relation_json(s.rho)}, {"op", s.op}};
    const RoundedIdealCompletion comp = rounded_ideal_completion(s.rho);
    const int m = comp.domain.n;
    std::vector<int> ideal_op(static_cast<std::size_t>(m) * m, -1);
    bool op_closed = true;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        Mask prods = 0;
        for_each_bit(comp.ideals[static_cast<std::size_t>(a)], [&](int x) {
          for_each_bit(comp.ideals[static_cast<std::size_t>(b)], [&](int y) {
            prods |= bit(s.op[static_cast<std::size_t>(x * n + y)]);
          });
        });
        const Mask rounded = s.rho.preimage(prods);
        int idx = -1;
        for (int k = 0; k < m; ++k)
          if (comp.ideals[static_cast<std::size_t>(k)] == rounded) {
            idx = k;
            break;
          }
        if (idx < 0) op_closed = false;
        ideal_op[static_cast<std::size_t>(a * m + b)] = idx < 0 ? 0 : idx;
      }
    check(rep, subject, op_closed, "rounded products stay inside the ideal domain");
    if (!op_closed) continue;
    check(rep, subject,
          is_semilattice_table(m, ideal_op) && isotone_table(comp.domain, ideal_op),
          "ideal operation is an isotone semilattice operation");
    bool unit_hom = true;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (comp.embedding[static_cast<std::size_t>(
                s.op[static_cast<std::size_t>(x * n + y)])] !=
            ideal_op[static_cast<std::size_t>(
                comp.embedding[static_cast<std::size_t>(x)] * m +
                comp.embedding[static_cast<std::size_t>(y)])])
          unit_hom = false;
    check(rep, subject, unit_hom, "column unit preserves the operation");
    check(rep, subject, is_relation_morphism(s.rho, comp.domain.rel, comp.embedding),
          "column unit is a relation morphism into the completion");

    for (const PosetSemilattice& t : cds3) {
      const int tn = t.poset.n;
      for_each_map(n, tn, [&](const std::vector<int>& f) {
        bool hom = true;
        for (int x = 0; x < n && hom; ++x)
          for (int y = 0; y < n; ++y)
            if (f[static_cast<std::size_t>(s.op[static_cast<std::size_t>(x * n + y)])] !=
                t.op[static_cast<std::size_t>(f[static_cast<std::size_t>(x)] * tn +
                                              f[static_cast<std::size_t>(y)])]) {
              hom = false;
              break;
            }
        if (!hom || !is_relation_morphism(s.rho, t.poset.rel, f)) return;
        json fsubject = {{"relation", relation_json(s.rho)},
                         {"op", s.op},
                         {"target_rows", relation_json(t.poset.rel)},
                         {"target_op", t.op},
                         {"map", f}};
        std::vector<int> h;
        bool joins_exist = true;
        for (int a = 0; a < m; ++a) {
          Mask img = 0;
          for_each_bit(comp.ideals[static_cast<std::size_t>(a)],
                       [&](int x) { img |= bit(f[static_cast<std::size_t>(x)]); });
          const auto j = t.poset.join(img);
          if (!j) {
            joins_exist = false;
            h.push_back(0);
          } else {
            h.push_back(*j);
          }
        }
        check(rep, fsubject, joins_exist, "directed images have joins");
        if (!joins_exist) return;
        bool triangle = true;
        for (int x = 0; x < n; ++x)
          if (h[static_cast<std::size_t>(comp.embedding[static_cast<std::size_t>(x)])] !=
              f[static_cast<std::size_t>(x)])
            triangle = false;
        check(rep, fsubject, triangle, "join extension restricts to the map");
        bool hom2 = true, isotone = true;
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) {
            if (h[static_cast<std::size_t>(ideal_op[static_cast<std::size_t>(a * m + b)])] !=
                t.op[static_cast<std::size_t>(h[static_cast<std::size_t>(a)] * tn +
                                              h[static_cast<std::size_t>(b)])])
              hom2 = false;
            if (comp.domain.le(a, b) &&
                !t.poset.le(h[static_cast<std::size_t>(a)], h[static_cast<std::size_t>(b)]))
              isotone = false;
          }
        check(rep, fsubject, hom2 && isotone,
              "join extension is an isotone homomorphism");
        int found = 0;
        bool matches = false;
        for_each_map(m, tn, [&](const std::vector<int>& h2) {
          for (int x = 0; x < n; ++x)
            if (h2[static_cast<std::size_t>(
                    comp.embedding[static_cast<std::size_t>(x)])] !=
                f[static_cast<std::size_t>(x)])
              return;
          for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
              if (h2[static_cast<std::size_t>(
                      ideal_op[static_cast<std::size_t>(a * m + b)])] !=
                  t.op[static_cast<std::size_t>(h2[static_cast<std::size_t>(a)] * tn +
                                                h2[static_cast<std::size_t>(b)])])
                return;
              if (comp.domain.le(a, b) &&
                  !t.poset.le(h2[static_cast<std::size_t>(a)],
                              h2[static_cast<std::size_t>(b)]))
                return;
            }
          ++found;
          if (h2 == h) matches = true;
        });
        check(rep, fsubject, found == 1 && matches,
              "join extension is the unique factorization");
      });
    }
  }

  // Relational continuity coincides with topological continuity (micro).
  for (int n = 1; n <= std::min(n_bound, 2) && rep.complete; ++n) {
    for (const FinTopology& t : all_topologies(n)) {
      if (interrupt_flag_set()) {
        rep.complete = false;
        break;
      }
      ++rep.instances;
      const Rel rho = interior_relation(t);
      const FinTopology prod = product_space(t, t);
      for_each_map(n * n, n, [&](const std::vector<int>& op) {
        bool literal = true;
        for (Mask o : t.opens) {
          Mask pre = 0;
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
              if (has_bit(o, op[static_cast<std::size_t>(x * n + y)]))
                pre |= bit(x * n + y);
          if (!prod.is_open(pre)) {
            literal = false;
            break;
          }
        }
        check(rep,
              json{{"space", topology_json(t)}, {"op", op}},
              relational_continuity(rho, op) == literal,
              "continuity law matches topological continuity on the product");
      });
    }
  }

  // Topological free construction and the T0 reflection.
  for (int n = 1; n <= std::min(n_bound, 2) && rep.complete; ++n) {
    for (const FinTopology& t : all_topologies(n)) {
      if (interrupt_flag_set()) {
        rep.complete = false;
        break;
      }
      ++rep.instances;
      json subject = {{"space", topology_json(t)}};
      const FreeSemilattice fs = free_c_semilattice(t);
      const int fx = static_cast<int>(fs.lifted.sets.size());
      check(rep, subject, is_continuous_map(t, fs.top, fs.unit),
            "free-semilattice unit is continuous");
      const FinTopology prod = product_space(fs.top, fs.top);
      bool op_cont = true;
      for (Mask o : fs.top.opens) {
        Mask pre = 0;
        for (int i = 0; i < fx; ++i)
          for (int j = 0; j < fx; ++j)
            if (has_bit(o, fs.op[static_cast<std::size_t>(i * fx + j)]))
              pre |= bit(i * fx + j);
        if (!prod.is_open(pre)) op_cont = false;
      }
      check(rep, subject, op_cont, "free-semilattice union is continuous");

      for (const RelSemilattice& target : cqs3) {
        if (target.rho.n > 3) continue;
        const int tn = target.rho.n;
        const FinTopology tt = topology_from_relation(target.rho);
        for_each_map(n, tn, [&](const std::vector<int>& f) {
          if (!is_continuous_map(t, tt, f)) return;
          std::vector<int> fbar;
          for (int i = 0; i < fx; ++i) {
            int acc = -1;
            for_each_bit(fs.lifted.sets[static_cast<std::size_t>(i)], [&](int x) {
              const int v = f[static_cast<std::size_t>(x)];
              acc = acc < 0 ? v : target.op[static_cast<std::size_t>(acc * tn + v)];
            });
            fbar.push_back(acc);
          }
          json fsubject = {{"space", topology_json(t)},
                           {"target", relation_json(target.rho)},
                           {"map", f}};
          int found = 0;
          bool matches = false;
          for_each_map(fx, tn, [&](const std::vector<int>& h) {
            for (int i = 0; i < fx; ++i)
              for (int j = 0; j < fx; ++j)
                if (h[static_cast<std::size_t>(fs.op[static_cast<std::size_t>(i * fx + j)])] !=
                    target.op[static_cast<std::size_t>(
                        h[static_cast<std::size_t>(i)] * tn +
                        h[static_cast<std::size_t>(j)])])
                  return;
            for (int x = 0; x < n; ++x)
              if (h[static_cast<std::size_t>(fs.unit[static_cast<std::size_t>(x)])] !=
                  f[static_cast<std::size_t>(x)])
                return;
            if (!is_continuous_map(fs.top, tt, h)) return;
            ++found;
            if (h == fbar) matches = true;
          });
          check(rep, fsubject, found == 1 && matches,
                "topological free extension exists uniquely and folds the operation");
        });
      }

      // T0 reflection with a continuous operation.
      const FinQoset spec = specialization(t);
      for_each_map(n * n, n, [&](const std::vector<int>& op) {
        if (!relational_continuity(interior_relation(t), op)) return;
        if (!is_semilattice_table(n, op)) return;
        std::vector<int> cls(static_cast<std::size_t>(n), -1);
        std::vector<int> reps;
        for (int x = 0; x < n; ++x) {
          for (int r = 0; r < static_cast<int>(reps.size()); ++r)
            if (spec.le(x, reps[static_cast<std::size_t>(r)]) &&
                spec.le(reps[static_cast<std::size_t>(r)], x))
              cls[static_cast<std::size_t>(x)] = r;
          if (cls[static_cast<std::size_t>(x)] < 0) {
            cls[static_cast<std::size_t>(x)] = static_cast<int>(reps.size());
            reps.push_back(x);
          }
        }
        const int qn = static_cast<int>(reps.size());
        json qsubject = {{"space", topology_json(t)}, {"op", op}};
        bool descends = true;
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            const int via_reps =
                cls[static_cast<std::size_t>(op[static_cast<std::size_t>(
                    reps[static_cast<std::size_t>(cls[static_cast<std::size_t>(x)])] * n +
                    reps[static_cast<std::size_t>(cls[static_cast<std::size_t>(y)])])])];
            if (cls[static_cast<std::size_t>(op[static_cast<std::size_t>(x * n + y)])] !=
                via_reps)
              descends = false;
          }
        check(rep, qsubject, descends, "continuous operation descends to the T0 quotient");
        if (!descends) return;
        SetFamily qopens;
        for (Mask u : t.opens) {
          Mask qu = 0;
          for_each_bit(u, [&](int x) { qu |= bit(cls[static_cast<std::size_t>(x)]); });
          qopens.sets.push_back(qu);
        }
        qopens.canonicalize();
        FinTopology qt;
        qt.n = qn;
        qt.opens = qopens;
        check(rep, qsubject, specialization(qt).antisymmetric(), "the quotient is T0");
        check(rep, qsubject, is_continuous_map(t, qt, cls),
              "the quotient map is continuous");
      });
    }
  }

  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

AuditReport audit_convex_powerdomain(int n_bound) {
  AuditReport rep = start_report(
      "C9.4",
      "the convex powerdomain of a finite poset is carried by its nonempty "
      "order-convex subsets ordered by (A inside the down-set of B, B inside "
      "the up-set of A), its operation is the convex hull of the union, its "
      "unit sends a point to its singleton class, and every isotone map into "
      "an isotone-semilattice poset extends uniquely to an isotone "
      "homomorphism (uniqueness exhausted at micro sizes)",
      n_bound);
  StopWatch sw;
  std::vector<PosetSemilattice> cds3;
  for (int k = 1; k <= 3; ++k) {
    const auto ps = poset_semilattices(k);
    cds3.insert(cds3.end(), ps.begin(), ps.end());
  }
  for (int n = 1; n <= n_bound && rep.complete; ++n) {
    for_each_poset(n, [&](const FinPoset& p) {
      if (interrupt_flag_set()) {
        rep.complete = false;
        return;
      }
      ++rep.instances;
      json subject = {{"order_rows", relation_json(p.rel)}};
      const PlotkinPowerdomain pd = plotkin_powerdomain(p);
      const int m = static_cast<int>(pd.convexes.size());

      std::set<Mask> expected;
      for (Mask c = 1; c <= full_mask(n); ++c)
        if ((p.down_set(c) & p.up_set(c)) == c) expected.insert(c);
      check(rep, subject,
            std::set<Mask>(pd.convexes.begin(), pd.convexes.end()) == expected &&
                static_cast<int>(expected.size()) == m,
            "powerdomain carriers are exactly the nonempty order-convex sets");

      bool order_ok = true;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          const Mask a = pd.convexes[static_cast<std::size_t>(i)];
          const Mask b = pd.convexes[static_cast<std::size_t>(j)];
          const bool em = (a & ~p.down_set(b)) == 0 && (b & ~p.up_set(a)) == 0;
          if (pd.order.le(i, j) != em) order_ok = false;
        }
      check(rep, subject, order_ok,
            "powerdomain order is the down-set/up-set containment order");

      bool op_ok = true;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          const Mask u = pd.convexes[static_cast<std::size_t>(i)] |
                         pd.convexes[static_cast<std::size_t>(j)];
          const Mask hull = p.down_set(u) & p.up_set(u);
          if (pd.convexes[static_cast<std::size_t>(
                  pd.op[static_cast<std::size_t>(i * m + j)])] != hull)
            op_ok = false;
        }
      check(rep, subject, op_ok, "powerdomain operation is the hull of the union");
      check(rep, subject,
            is_semilattice_table(m, pd.op) && isotone_table(pd.order, pd.op),
            "powerdomain operation is an isotone semilattice operation");

      bool unit_ok = true;
      for (int x = 0; x < n; ++x)
        if (pd.convexes[static_cast<std::size_t>(pd.unit[static_cast<std::size_t>(x)])] !=
            bit(x))
          unit_ok = false;
      check(rep, subject, unit_ok, "unit sends points to singleton classes");
      bool unit_iso = true;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (p.le(x, y) != pd.order.le(pd.unit[static_cast<std::size_t>(x)],
                                        pd.unit[static_cast<std::size_t>(y)]))
            unit_iso = false;
      check(rep, subject, unit_iso, "unit is an order embedding");

      if (n <= 2) {
        for (const PosetSemilattice& t : cds3) {
          const int tn = t.poset.n;
          for_each_map(n, tn, [&](const std::vector<int>& f) {
            bool isotone = true;
            for (int x = 0; x < n; ++x)
              for (int y = 0; y < n; ++y)
                if (p.le(x, y) && !t.poset.le(f[static_cast<std::size_t>(x)],
                                              f[static_cast<std::size_t>(y)]))
                  isotone = false;
            if (!isotone) return;
            std::vector<int> h;
            for (int k = 0; k < m; ++k) {
              int acc = -1;
              for_each_bit(pd.convexes[static_cast<std::size_t>(k)], [&](int x) {
                const int v = f[static_cast<std::size_t>(x)];
                acc = acc < 0 ? v : t.op[static_cast<std::size_t>(acc * tn + v)];
              });
              h.push_back(acc);
            }
            json fsubject = {{"order_rows", relation_json(p.rel)},
                             {"target_rows", relation_json(t.poset.rel)},
                             {"target_op", t.op},
                             {"map", f}};
            int found = 0;
            bool matches = false;
            for_each_map(m, tn, [&](const std::vector<int>& h2) {
              for (int x = 0; x < n; ++x)
                if (h2[static_cast<std::size_t>(pd.unit[static_cast<std::size_t>(x)])] !=
                    f[static_cast<std::size_t>(x)])
                  return;
              for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                  if (h2[static_cast<std::size_t>(
                          pd.op[static_cast<std::size_t>(a * m + b)])] !=
                      t.op[static_cast<std::size_t>(h2[static_cast<std::size_t>(a)] * tn +
                                                    h2[static_cast<std::size_t>(b)])])
                    return;
                  if (pd.order.le(a, b) &&
                      !t.poset.le(h2[static_cast<std::size_t>(a)],
                                  h2[static_cast<std::size_t>(b)]))
                    return;
                }
              ++found;
              if (h2 == h) matches = true;
            });
            check(rep, fsubject, found == 1 && matches,
                  "fold extension is the unique isotone homomorphic factorization");
          });
        }
      }
    });
  }
  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

}  // namespace ordtop

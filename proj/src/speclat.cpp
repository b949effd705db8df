#include "ordtop/speclat.hpp"

#include <functional>
#include <stdexcept>

#include "ordtop/classify.hpp"
#include "ordtop/enumerate.hpp"
#include "ordtop/family.hpp"
#include "ordtop/parallel.hpp"
#include "ordtop/patchwork.hpp"

namespace ordtop {

Rel interior_relation(const FinTopology& top) {
  const int n = top.n;
  Rel rho(n);
  for (int x = 0; x < n; ++x) rho.row[x] = top.interior(top.core(x));
  return rho;
}

FinQoset lower_quasiorder(const Rel& rho) {
  const int n = rho.n;
  std::vector<Mask> cols(n);
  for (int y = 0; y < n; ++y) cols[y] = rho.col(y);
  Rel le(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((cols[x] & ~cols[y]) == 0) le.set(x, y);
  return FinQoset::make(le);
}

CRelReport validate_c_relation(const Rel& rho) {
  CRelReport rep;
  const int n = rho.n;
  FinQoset le = lower_quasiorder(rho);

  Rel sq = rho.compose(rho);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (rho.at(x, y) && !sq.at(x, y)) {
        rep.violation = "no interpolant";
        rep.witness = {{"from", x}, {"to", y}};
        return rep;
      }
      if (!rho.at(x, y) && sq.at(x, y)) {
        rep.violation = "not transitive";
        rep.witness = {{"from", x}, {"to", y}};
        return rep;
      }
    }

  for (int y = 0; y < n; ++y) {
    Mask approx = rho.col(y);
    if (approx == 0) {
      rep.violation = "no approximants";
      rep.witness = {{"point", y}};
      return rep;
    }
    // Lower set of the lower quasi-order.
    bool bad = false;
    int bad_lo = -1, bad_hi = -1;
    for_each_bit(approx, [&](int x) {
      if (bad) return;
      Mask below = le.down(x) & ~approx;
      if (below) {
        bad = true;
        bad_lo = lowest_bit(below);
        bad_hi = x;
      }
    });
    if (bad) {
      rep.violation = "approximants not a lower set";
      rep.witness = {{"point", y}, {"inside", bad_hi}, {"outside", bad_lo}};
      return rep;
    }
    // Directedness: common upper bounds inside the column.
    int bad_a = -1, bad_b = -1;
    for_each_bit(approx, [&](int a) {
      for_each_bit(approx, [&](int b) {
        if (bad_a >= 0) return;
        Mask common = approx & le.up(a) & le.up(b);
        if (common == 0) {
          bad_a = a;
          bad_b = b;
        }
      });
    });
    if (bad_a >= 0) {
      rep.violation = "approximants not directed";
      rep.witness = {{"point", y}, {"left", bad_a}, {"right", bad_b}};
      return rep;
    }
  }

  rep.c_quasi_order = true;
  rep.c_order = true;
  for (int x = 0; x < n && rep.c_order; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && le.le(x, y) && le.le(y, x)) {
        rep.c_order = false;
        rep.violation = "lower quasi-order not antisymmetric";
        rep.witness = {{"left", x}, {"right", y}};
        break;
      }
  return rep;
}

FinTopology topology_from_relation(const Rel& rho) {
  CRelReport rep = validate_c_relation(rho);
  if (!rep.c_quasi_order)
    throw std::invalid_argument("relation is not approximating: " + rep.violation);
  SetFamily fam;
  fam.sets.push_back(0);
  for (int x = 0; x < rho.n; ++x) fam.sets.push_back(rho.row[x]);
  fam.canonicalize();
  fam = close_under(fam, {'|'});
  return FinTopology::make(rho.n, fam);
}

SetFamily rounded_sets(const Rel& rho) {
  const int n = rho.n;
  std::vector<Mask> cols(n);
  for (int y = 0; y < n; ++y) cols[y] = rho.col(y);
  std::vector<Mask> image(std::size_t(1) << n, 0);
  for (Mask y = 1; y < (Mask(1) << n); ++y) {
    int low = lowest_bit(y);
    image[y] = image[y & (y - 1)] | cols[low];
  }
  SetFamily fam;
  fam.sets.assign(image.begin(), image.end());
  fam.canonicalize();
  return fam;
}

Mask least_lower_set_with_closure(const FinTopology& top, Mask closed_a) {
  require(top.is_closed(closed_a), "least_lower_set_with_closure needs a closed set");
  return interior_relation(top).preimage(closed_a);
}

Mask cut_closure(const FinQoset& q, Mask ideal) {
  Mask ub = q.upper_bounds(ideal);
  if (ub == 0) return full_mask(q.n);
  Mask cut = full_mask(q.n);
  for_each_bit(ub, [&](int z) { cut &= q.down(z); });
  return cut;
}

IdealExtensionReport validate_ideal_extension(const FinQoset& q, const SetFamily& z) {
  IdealExtensionReport rep;
  for (Mask i : z.sets) {
    if (i == 0) {
      rep.violation = "empty member";
      rep.witness = json::object();
      return rep;
    }
    if (!q.is_lower(i)) {
      rep.violation = "member not a lower set";
      rep.witness = {{"member", static_cast<int>(i)}};
      return rep;
    }
    if (!q.directed(i)) {
      rep.violation = "member not directed";
      rep.witness = {{"member", static_cast<int>(i)}};
      return rep;
    }
  }
  for (int x = 0; x < q.n; ++x)
    if (!z.contains(q.down(x))) {
      rep.violation = "missing principal ideal";
      rep.witness = {{"point", x}};
      return rep;
    }
  rep.ok = true;
  return rep;
}

SetFamily scott_family_raw(const FinQoset& q, const SetFamily& z) {
  const int n = q.n;
  std::vector<Mask> cuts;
  cuts.reserve(z.sets.size());
  for (Mask i : z.sets) cuts.push_back(cut_closure(q, i));
  SetFamily fam;
  for (Mask u = 0; u < (Mask(1) << n); ++u) {
    bool ok = true;
    for (std::size_t k = 0; k < z.sets.size() && ok; ++k)
      if ((cuts[k] & u) != 0 && (z.sets[k] & u) == 0) ok = false;
    if (ok) fam.sets.push_back(u);
  }
  fam.canonicalize();
  return fam;
}

FinTopology scott_topology_z(const FinQoset& q, const SetFamily& z) {
  SetFamily raw = scott_family_raw(q, z);
  SetFamily upper;
  for (Mask u : raw.sets)
    if (q.is_upper(u)) upper.sets.push_back(u);
  upper.canonicalize();
  return FinTopology::make(q.n, upper);
}

namespace {

// sup J = x in a quasi-ordered set: x bounds J and sits below every bound.
bool is_sup(const FinQoset& q, Mask j, int x) {
  Mask ub = q.upper_bounds(j);
  return has_bit(ub, x) && (ub & ~q.up(x)) == 0;
}

}  // namespace

namespace {

json topology_json(const FinTopology& t) {
  json arr = json::array();
  for (Mask m : t.opens) arr.push_back(static_cast<std::uint32_t>(m));
  return {{"n", t.n}, {"opens", arr}};
}

json relation_json(const Rel& r) {
  json arr = json::array();
  for (int x = 0; x < r.n; ++x) arr.push_back(static_cast<std::uint32_t>(r.row[x]));
  return {{"n", r.n}, {"rows", arr}};
}

void roundtrip_check(AuditReport& rep, const json& subject, bool ok, const std::string& what) {
  if (ok) return;
  json v = subject;
  v["failed"] = what;
  rep.record_violation(std::move(v));
}

// The space-side checks of the correspondence, run on every topology.
void audit_space_side(AuditReport& rep, const FinTopology& t) {
  const int n = t.n;
  const Mask X = full_mask(n);
  const json subject = topology_json(t);
  const Rel rho = interior_relation(t);
  const FinQoset spec = specialization(t);
  CRelReport cert = validate_c_relation(rho);

  roundtrip_check(rep, subject, cert.c_quasi_order,
                  "interior relation certifies as approximating");
  if (!cert.c_quasi_order) return;
  roundtrip_check(rep, subject, cert.c_order == spec.antisymmetric(),
                  "strict certification matches T0");
  roundtrip_check(rep, subject, topology_from_relation(rho) == t,
                  "row unions regenerate the opens");
  roundtrip_check(rep, subject, lower_quasiorder(rho) == spec,
                  "lower quasi-order is the specialization order");

  // Closure is a bijection from rounded sets onto closed sets, inverted by
  // the relational preimage.
  SetFamily rounded = rounded_sets(rho);
  SetFamily closeds = t.closeds();
  {
    SetFamily closures;
    bool inverse_ok = true;
    for (Mask y : rounded.sets) {
      Mask c = t.closure(y);
      closures.insert(c);
      if (rho.preimage(c) != y) inverse_ok = false;
    }
    roundtrip_check(rep, subject, closures == closeds && rounded.size() == closeds.size(),
                    "closure maps rounded sets onto closed sets bijectively");
    roundtrip_check(rep, subject, inverse_ok,
                    "relational preimage inverts closure on rounded sets");
  }
  for (Mask a : closeds.sets) {
    Mask m = least_lower_set_with_closure(t, a);
    bool least = spec.is_lower(m) && t.closure(m) == a;
    for (Mask l = 0; l <= X && least; ++l)
      if (spec.is_lower(l) && t.closure(l) == a && (m & ~l)) least = false;
    roundtrip_check(rep, subject, least,
                    "relational preimage of a closed set is the least lower set with that closure");
  }

  // Irreducible closed sets are exactly the closures of directed sets, and
  // the relational preimage is the least ideal with that closure.
  for (Mask c : closeds.sets) {
    if (c == 0) continue;
    bool irreducible = true;
    for (Mask a : closeds.sets) {
      if (a == c) continue;
      for (Mask b : closeds.sets)
        if (b != c && (a | b) == c) { irreducible = false; break; }
      if (!irreducible) break;
    }
    bool directed_closure = false;
    for (Mask d = 1; d <= X && !directed_closure; ++d)
      if (spec.directed(d) && t.closure(d) == c) directed_closure = true;
    roundtrip_check(rep, subject, irreducible == directed_closure,
                    "irreducible closed sets are the closures of directed sets");
    if (!irreducible) continue;
    Mask i = rho.preimage(c);
    bool least_ideal =
        i != 0 && spec.is_lower(i) && spec.directed(i) && t.closure(i) == c;
    for (Mask j = 1; j <= X && least_ideal; ++j)
      if (spec.is_lower(j) && spec.directed(j) && t.closure(j) == c && (i & ~j))
        least_ideal = false;
    roundtrip_check(rep, subject, least_ideal,
                    "the relational preimage of an irreducible closed set is the least ideal with that closure");
  }

  // The topology refines the Scott topology of the specialization order
  // (all upper sets, on a finite carrier: cores are open).
  {
    bool finer = true;
    for (Mask u : alexandroff(spec).opens)
      if (!t.is_open(u)) finer = false;
    roundtrip_check(rep, subject, finer,
                    "every upper set of the specialization order is open");
  }

  // The cocompact topology is the weak lower topology of the specialization
  // order, and joining it back on yields the weak patch space.
  roundtrip_check(rep, subject,
                  cocompact_topology(t) == weak_upper_topology(spec.dual()),
                  "cocompact topology is the weak lower topology");
  {
    SetFamily sub = t.opens;
    for (Mask m : cocompact_topology(t).opens) sub.insert(m);
    roundtrip_check(rep, subject,
                    FinTopology::make(n, saturate_subbase(n, std::move(sub))) ==
                        patch_space(t, CoselectionKind::upsilon).top,
                    "cocompact patch is the weak patch");
  }
}

}  // namespace

AuditReport audit_relation_roundtrip(int n_bound) {
  AuditReport rep;
  rep.id = "T3.3-roundtrip";
  rep.statement =
      "Finite spaces and certified approximating relations determine each "
      "other: unions of approximant rows regenerate the opens, the interior "
      "relation regenerates the rows, the lower quasi-order is the "
      "specialization order, and strict certification matches T0; closure "
      "carries rounded sets bijectively onto closed sets with the "
      "relational preimage as inverse; irreducible closed sets are exactly "
      "closures of directed sets, generated by a least ideal; upper sets "
      "are open; the cocompact topology is the weak lower topology and "
      "patches to the weak patch.";
  rep.bound = n_bound;
  StopWatch sw;

  // Relation side: every binary relation on up to three points.
  for (int n = 1; n <= std::min(n_bound, 3); ++n) {
    const std::uint64_t cells = std::uint64_t(1) << (n * n);
    for (std::uint64_t code = 0; code < cells; ++code) {
      if (interrupt_flag_set()) { rep.complete = false; break; }
      Rel rho(n);
      for (int x = 0; x < n; ++x)
        rho.row[x] = static_cast<Mask>((code >> (x * n)) & (full_mask(n)));
      CRelReport cert = validate_c_relation(rho);
      if (!cert.c_quasi_order) continue;
      ++rep.instances;
      const json subject = relation_json(rho);
      roundtrip_check(rep, subject, cert.c_order == lower_quasiorder(rho).antisymmetric(),
                      "strict certification matches antisymmetry");
      FinTopology t = topology_from_relation(rho);
      roundtrip_check(rep, subject, interior_relation(t) == rho,
                      "interior relation regenerates the rows");
      roundtrip_check(rep, subject, specialization(t) == lower_quasiorder(rho),
                      "specialization matches the lower quasi-order");
    }
    if (!rep.complete) break;
  }

  // Space side: every topology up to the bound.
  for (int n = 1; n <= n_bound && rep.complete; ++n) {
    for (const FinTopology& t : all_topologies(n)) {
      if (interrupt_flag_set()) { rep.complete = false; break; }
      ++rep.instances;
      audit_space_side(rep, t);
    }
  }

  rep.wall_ms = sw.elapsed_ms();
  rep.finish();
  return rep;
}

ApproximationReport approximation_classes(const FinQoset& q, const SetFamily& z) {
  ApproximationReport rep;
  const int n = q.n;
  std::vector<Mask> cuts;
  for (Mask i : z.sets) cuts.push_back(cut_closure(q, i));

  rep.locally = true;
  for (std::size_t k = 0; k < z.sets.size() && rep.locally; ++k) {
    for_each_bit(cuts[k], [&](int x) {
      if (!rep.locally) return;
      bool found = false;
      for (Mask j : z.sets)
        if ((j & ~z.sets[k]) == 0 && is_sup(q, j, x)) {
          found = true;
          break;
        }
      if (!found) {
        rep.locally = false;
        rep.witness = {{"ideal", static_cast<int>(z.sets[k])}, {"point", x}};
      }
    });
  }

  // Per-point candidates for a uniform witness.
  std::vector<std::vector<Mask>> candidates(n);
  rep.globally = true;
  for (int x = 0; x < n; ++x) {
    for (Mask j : z.sets) {
      if (!is_sup(q, j, x)) continue;
      bool uniform = true;
      for (std::size_t k = 0; k < z.sets.size() && uniform; ++k)
        if (has_bit(cuts[k], x) && (j & ~z.sets[k]) != 0) uniform = false;
      if (uniform) candidates[x].push_back(j);
    }
    if (candidates[x].empty() && rep.globally) {
      rep.globally = false;
      rep.witness = {{"point", x}};
    }
  }
  if (!rep.globally) return rep;

  // Strong: a choice that interpolates through itself.
  std::vector<Mask> choice(n, 0);
  std::function<bool(int)> pick = [&](int x) -> bool {
    if (x == n) {
      for (int zpt = 0; zpt < n; ++zpt)
        for (int xx = 0; xx < n; ++xx) {
          bool inside = has_bit(choice[zpt], xx);
          bool through = false;
          for_each_bit(choice[zpt], [&](int y) {
            if (has_bit(choice[y], xx)) through = true;
          });
          if (inside != through) return false;
        }
      return true;
    }
    for (Mask j : candidates[x]) {
      choice[x] = j;
      if (pick(x + 1)) return true;
    }
    return false;
  };
  rep.strongly = pick(0);
  if (rep.strongly) {
    json arr = json::array();
    for (int x = 0; x < n; ++x) arr.push_back(static_cast<int>(choice[x]));
    rep.witness = {{"choice", arr}};
  }
  return rep;
}

}  // namespace ordtop

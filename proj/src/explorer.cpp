#include "ordtop/explorer.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "ordtop/classify.hpp"
#include "ordtop/completion.hpp"
#include "ordtop/enumerate.hpp"
#include "ordtop/laws.hpp"
#include "ordtop/parallel.hpp"
#include "ordtop/patchwork.hpp"
#include "ordtop/powerdomain.hpp"
#include "ordtop/speclat.hpp"
#include "ordtop/uniformity.hpp"

namespace ordtop {

// --- audit registry ----------------------------------------------------------

const std::vector<AuditEntry>& audit_registry() {
  static const std::vector<AuditEntry> table = {
      // relation <-> space dictionary
      {"T3.3-roundtrip",
       "finite spaces and certified approximating relations determine each "
       "other: unions of approximant rows regenerate the opens and the "
       "interior relation regenerates the rows",
       4, &audit_relation_roundtrip},
      // open-set lattice laws
      {"L1.1",
       "finite frames are weakly atomic and spatial; frames that are also "
       "coframes are superalgebraic",
       5, &audit_countable_frame_laws},
      {"E1.1",
       "distributive complete lattices are frames / wide frames / completely "
       "distributive exactly when their weak upper space is a web / wide web "
       "/ worldwide web space",
       5, &audit_weak_space_biconditionals},
      // classification
      {"P1.3",
       "binary products preserve and reflect the web, wide-web, locally "
       "strongly connected, B- and C-space classes, with product "
       "specialization order",
       3, &audit_products},
      {"P3.1-routes",
       "pointwise web / wide-web / worldwide-web classification agrees with "
       "the coframe / wide-coframe / completely-distributive laws of the "
       "open-set lattice; finitely the whole chain collapses to true",
       4, &audit_route_agreement},
      // ordered spaces and patches
      {"S2-chain",
       "separation ladder of ordered spaces with its finite collapses, the "
       "convexity ladder, and the patch-topology comparisons",
       3, &audit_separation_chain},
      {"P2.1",
       "strongly convex semi-qospaces are exactly the spaces splitting over "
       "their upper space joined with a cotopology",
       3, &audit_patch_spaces},
      {"L2.2",
       "patching and taking upper opens are mutually inverse for the "
       "weak-lower and lower-Alexandroff coselections",
       3, &audit_patch_functor},
      {"T2.3",
       "patch-convex semi-qospaces coincide with their web-ordered, locally "
       "lower bounded, and locally filtered refinements and with the image "
       "of the patch construction",
       3, &audit_patch_classes},
      {"L4.1-1",
       "a semi-qospace whose lower space is a d-space is d-stable; finitely "
       "every ordered space is d-stable outright",
       3, &audit_d_stability},
      {"L4.1-2",
       "a semi-qospace is C-stable iff it is up-stable with a worldwide-web "
       "upper space (automatic finitely)",
       3, &audit_c_stability_split},
      {"L4.1-3",
       "a semi-qospace is C-stable iff it is upper regular, locally "
       "filtered, and d-stable",
       3, &audit_c_stability_parts},
      {"P4.5",
       "sector spaces are exactly the strongly convex C-stable "
       "semi-qospaces and the patch spaces of worldwide-web spaces",
       3, &audit_sector_spaces},
      {"T5.3",
       "fan spaces are exactly the weak patch spaces of worldwide-web "
       "spaces and the hyperconvex C-stable qospaces",
       3, &audit_fan_spaces},
      {"L6.1-1",
       "web-ordered spaces distribute upper interiors over finite unions of "
       "principal filters (vee-stability)",
       3, &audit_vee_stability},
      {"L6.1-2",
       "join-semilattice orders with a least element make every topology "
       "wedge-stable",
       3, &audit_wedge_join_semilattice},
      {"L6.1-3",
       "wedge-stability holds iff each point's upper-interior filter "
       "column is an ideal",
       3, &audit_wedge_ideal_columns},
      {"L6.1-4",
       "diamond-stability is exactly vee-stability plus wedge-stability",
       3, &audit_diamond_split},
      {"L6.1-5",
       "lattice orders with continuous unary meets are diamond-stable",
       3, &audit_diamond_lattice},
      {"L6.1-6",
       "lower semi-qospaces are vee-stable, and upper-interior distribution "
       "extends to all upper sets",
       3, &audit_vee_lower_semi},
      {"T6.2",
       "five equivalent recognitions of two-sided domain spaces (fan space "
       "with sober upper space, hyperconvex C-stable pospace, and variants)",
       3, &audit_lawson_recognition},
      {"L7.1",
       "four conditions each force joint continuity of the binary meet on a "
       "meet-semilattice-ordered space",
       3, &audit_meet_continuity},
      {"T7.2",
       "hyperconvex T1-semilattices are the weak patches of compatible "
       "semilattice-ordered spaces, with all nine finite recognitions",
       3, &audit_patch_semilattices},
      {"P7.4",
       "locally filtered compact pospaces are exactly the compact two-sided "
       "domain spaces; finitely, the discretely topologized posets",
       3, &audit_lawson_semilattices},
      // bases and completions
      {"L8.1",
       "poset bases coincide with core bases of the directed-join space; "
       "finitely the only basis is the whole carrier",
       4, &audit_poset_bases},
      {"P8.2",
       "certified relations are the bases of domains: the rounded-ideal "
       "completion has the columns as ideals, inclusion as way-below, and "
       "the interpolation criterion",
       3, &audit_based_domains},
      {"P10.1",
       "five agreeing descriptions of approximating subsets: dense, "
       "cofinal, core basis, patch-dense, and closure-join-dense",
       3, &audit_core_basis_equivalences},
      {"T10.3",
       "five size invariants of a finite space coincide: least cofinal "
       "subset of the approximation relation and the least bases of the "
       "opens, closeds, weak patch, and strong patch",
       4, &audit_weight_chain},
      // powerdomains
      {"P9.1",
       "closed sets form a distributive lattice join-generated by point "
       "closures, and closure-of-point is the unit of a reflection into "
       "finite lattices",
       3, &audit_closed_lattice_reflection},
      {"L9.2",
       "lifting a certified relation to nonempty subsets yields a certified "
       "relation whose union operation obeys the continuity law",
       3, &audit_lifted_relation},
      {"T9.3",
       "unit maps into the lifted relation and the rounded-ideal completion "
       "extend uniquely to operation-preserving morphisms (free-object "
       "triangles at micro sizes)",
       3, &audit_powerdomain_adjunctions},
      {"C9.4",
       "the convex powerdomain of a finite poset is its nonempty "
       "order-convex subsets with the hull-of-union operation and the "
       "two-sided embedding order",
       4, &audit_convex_powerdomain},
      // quasi-uniformities
      {"P5.5",
       "every finite space is induced by exactly one quasi-uniformity, the "
       "principal filter of its specialization order; dual and symmetric "
       "topologies are the weak lower and weak patch",
       4, &audit_interior_uniformity},
      {"L5.4",
       "way-below between opens is containment, and the arrow entourages "
       "over way-below pairs generate the unique inducing quasi-uniformity",
       4, &audit_arrow_uniformity},
  };
  return table;
}

const AuditEntry* find_audit(const std::string& id) {
  for (const AuditEntry& e : audit_registry())
    if (e.id == id) return &e;
  return nullptr;
}

AuditReport run_audit(const AuditEntry& entry, int n_bound, bool upto_iso) {
  IsoModeGuard guard(upto_iso);
  AuditReport rep = entry.run(n_bound);
  rep.iso_reduced = upto_iso;
  return rep;
}

// --- structure kinds ----------------------------------------------------------

std::string to_string(StructureKind k) {
  switch (k) {
    case StructureKind::topology: return "topology";
    case StructureKind::poset: return "poset";
    case StructureKind::ordered_space: return "ordered_space";
    case StructureKind::lattice: return "lattice";
  }
  return "unknown";
}

std::optional<StructureKind> kind_from_string(const std::string& s) {
  if (s == "topology") return StructureKind::topology;
  if (s == "poset") return StructureKind::poset;
  if (s == "ordered_space") return StructureKind::ordered_space;
  if (s == "lattice") return StructureKind::lattice;
  return std::nullopt;
}

// --- predicates ----------------------------------------------------------------

bool filtered_neighborhood_bases(const OrderedSpace& s) {
  const FinQoset& q = s.order;
  const FinTopology& top = s.top;
  // A finite filtered set has a least element m (up to equivalence), so the
  // largest filtered candidate inside an open o is o intersected with the
  // filter of m; scanning m settles the condition.
  for (Mask o : top.opens) {
    bool all = true;
    for_each_bit(o, [&](int x) {
      if (!all) return;
      bool found = false;
      for_each_bit(o, [&](int m) {
        if (!found && has_bit(top.interior(o & q.up(m)), x)) found = true;
      });
      if (!found) all = false;
    });
    if (!all) return false;
  }
  return true;
}

namespace {

json topology_predicates(const FinTopology& t) {
  json j = space_profile(t).to_json();
  j.erase("route_agreement");
  return j;
}

json poset_predicates(const FinPoset& p) {
  const int n = p.n;
  bool meets = true, joins = true, chain = true, antichain = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mask f = (Mask(1) << a) | (Mask(1) << b);
      if (!p.meet(f)) meets = false;
      if (!p.join(f)) joins = false;
      if (!p.le(a, b) && !p.le(b, a)) chain = false;
      if (a != b && (p.le(a, b) || p.le(b, a))) antichain = false;
    }
  const bool bot = p.bottom().has_value(), top = p.top().has_value();
  return {{"lattice", is_lattice(p)},
          {"meet_semilattice", meets},
          {"join_semilattice", joins},
          {"has_bottom", bot},
          {"has_top", top},
          {"bounded", bot && top},
          {"chain", chain},
          {"antichain", antichain}};
}

json lattice_predicates(const FinLattice& l) {
  json j = law_profile(l).to_json();
  j.erase("witnesses");
  j["distributive"] = distributive(l);
  return j;
}

json ordered_predicates(const OrderedSpace& s, const OrderedSpaceProfile& p) {
  const bool c2 = filtered_neighborhood_bases(s);
  return {{"lower_semi", p.lower_semi},
          {"upper_semi", p.upper_semi},
          {"semi_qospace", p.semi_qospace},
          {"t1_ordered", p.t1_ordered},
          {"qospace", p.qospace},
          {"pospace", p.pospace},
          {"t2_ordered", p.t2_ordered},
          {"upper_regular", p.upper_regular},
          {"upper_t3", p.upper_t3},
          {"t1_plain", p.t1_plain},
          {"t2_plain", p.t2_plain},
          {"locally_convex", p.locally_convex},
          {"strongly_convex", p.strongly_convex},
          {"hyperconvex", p.hyperconvex},
          {"upsilon_convex", p.upsilon_convex},
          {"alpha_convex", p.alpha_convex},
          {"up_stable", p.up_stable},
          {"c_stable", p.c_stable},
          {"d_stable", p.d_stable},
          {"alpha_stable", p.alpha_stable},
          {"vee_stable", p.vee_stable},
          {"wedge_stable", p.wedge_stable},
          {"diamond_stable", p.diamond_stable},
          {"web_ordered", p.web_ordered},
          {"locally_lower_bounded", p.locally_lower_bounded},
          {"locally_filtered", p.locally_filtered},
          {"sector_space", p.sector_space},
          {"upsilon_sector_space", p.upsilon_sector_space},
          {"alpha_sector_space", p.alpha_sector_space},
          {"fan_space", p.fan_space},
          {"patch_of_upper", p.patch_of_upper},
          {"upsilon_patch_of_upper", p.upsilon_patch_of_upper},
          {"alpha_patch_of_upper", p.alpha_patch_of_upper},
          {"mc_ordered", p.mc_ordered},
          {"semilattice", p.semilattice},
          {"compatible_semilattice", p.semilattice && p.compatible_semilattice},
          {"semitopological", p.semilattice && p.semitopological},
          {"topological_semilattice", p.semilattice && p.topological_semilattice},
          {"s_topological", p.semilattice && p.s_topological},
          {"filtered_neighborhood_bases", c2},
          {"c1", p.upper_regular},
          {"c2", c2},
          {"c3", p.up_stable},
          {"c4", p.d_stable}};
}

json ordered_predicates(const OrderedSpace& s) {
  return ordered_predicates(s, ordered_space_profile(s));
}

std::vector<PredicateInfo> infos_from(const json& sample,
                                      const std::map<std::string, std::string>& notes) {
  std::vector<PredicateInfo> out;
  for (auto it = sample.begin(); it != sample.end(); ++it) {
    auto n = notes.find(it.key());
    out.push_back({it.key(), n == notes.end() ? "" : n->second});
  }
  return out;
}

}  // namespace

const std::vector<PredicateInfo>& predicates_for(StructureKind k) {
  static const std::vector<PredicateInfo> topo = infos_from(
      topology_predicates(sierpinski()),
      {{"t0", "distinct points have distinct core filters"},
       {"web", "every point has a neighborhood base of webs"},
       {"wide_web", "every neighborhood contains one whose finite subsets "
                    "are bounded below in it"},
       {"c_space", "every point has a neighborhood base of cores"},
       {"locally_strongly_connected",
        "neighborhood bases of strongly connected open sets"},
       {"has_dual_base", "the closed sets in the dual sense form a base"},
       {"b_space", "neighborhood bases of supercompact open sets"},
       {"a_space", "open cores (finitely: always)"},
       {"sober", "every irreducible closed set is one point closure"},
       {"d_space", "directed closures have greatest points"},
       {"supercompact_space", "the whole carrier is supercompact"}});
  static const std::vector<PredicateInfo> pos = infos_from(
      poset_predicates(chain_poset(2)),
      {{"lattice", "all binary meets and joins exist"},
       {"meet_semilattice", "all binary meets exist"},
       {"join_semilattice", "all binary joins exist"},
       {"has_bottom", "least element exists"},
       {"has_top", "greatest element exists"},
       {"bounded", "least and greatest elements exist"},
       {"chain", "any two elements comparable"},
       {"antichain", "no two distinct elements comparable"}});
  static const std::vector<PredicateInfo> lat = infos_from(
      lattice_predicates(chain_lattice(2)),
      {{"frame", "finite meets distribute over arbitrary joins"},
       {"coframe", "finite joins distribute over arbitrary meets"},
       {"wide_frame", "the distribution law restricted to finitely "
                      "generated lower sets"},
       {"wide_coframe", "the dual restricted law"},
       {"completely_distributive", "arbitrary meets distribute over "
                                   "arbitrary joins"},
       {"distributive", "binary meets distribute over binary joins"},
       {"spatial", "embeds in the open-set lattice of its prime spectrum"},
       {"weakly_atomic", "every proper interval contains a jump"},
       {"superalgebraic", "supercompact elements join-generate"},
       {"meet_continuous", "binary meets preserve directed joins"},
       {"continuous", "way-below approximates every element"}});
  static const std::vector<PredicateInfo> osp = [] {
    OrderedSpace s{FinQoset::make(Rel::identity(1)), discrete_topology(1)};
    return infos_from(
        ordered_predicates(s),
        {{"c1", "upper regular (alias upper_regular)"},
         {"c2", "bases of filtered neighborhoods, on its own (alias "
                "filtered_neighborhood_bases)"},
         {"c3", "up-closures of opens are open (alias up_stable)"},
         {"c4", "interiors of filtered sets covered by interiors of cores "
                "(alias d_stable)"},
         {"semi_qospace", "principal down-sets and up-sets closed"},
         {"qospace", "the order is closed in the square"},
         {"pospace", "closed partial order"},
         {"hyperconvex", "upper opens minus finitely many filters form a "
                         "base"},
         {"strongly_convex", "opens generated by upper opens and lower "
                             "opens"},
         {"locally_filtered", "up-stable with bases of filtered "
                              "neighborhoods"},
         {"web_ordered", "up-stable with bases of webs"},
         {"sector_space", "up-stable semi-qospace with sector bases"},
         {"fan_space", "up-stable semi-qospace with fan bases"}});
  }();
  switch (k) {
    case StructureKind::topology: return topo;
    case StructureKind::poset: return pos;
    case StructureKind::lattice: return lat;
    case StructureKind::ordered_space: return osp;
  }
  return topo;
}

json evaluate_predicates(StructureKind k, const Structure& s) {
  switch (k) {
    case StructureKind::topology: {
      if (!s.topology) throw std::invalid_argument("structure has no topology layer");
      if (s.topology->n > kLargeCarrier)
        throw std::invalid_argument("carrier too large for predicate evaluation");
      return topology_predicates(*s.topology);
    }
    case StructureKind::poset: {
      if (!s.order) throw std::invalid_argument("structure has no order layer");
      if (!s.order->antisymmetric())
        throw std::invalid_argument("order layer is not antisymmetric");
      return poset_predicates(FinPoset::make(s.order->rel));
    }
    case StructureKind::lattice: {
      if (!s.order) throw std::invalid_argument("structure has no order layer");
      if (!s.order->antisymmetric())
        throw std::invalid_argument("order layer is not antisymmetric");
      FinPoset p = FinPoset::make(s.order->rel);
      if (!is_lattice(p)) throw std::invalid_argument("order layer is not a lattice");
      return lattice_predicates(FinLattice::make(p));
    }
    case StructureKind::ordered_space: {
      if (!s.topology || !s.order)
        throw std::invalid_argument("structure needs both a topology and an order layer");
      if (s.topology->n > kLargeCarrier)
        throw std::invalid_argument("carrier too large for predicate evaluation");
      return ordered_predicates(OrderedSpace::make(*s.order, *s.topology));
    }
  }
  throw std::invalid_argument("unknown structure kind");
}

// --- witness search -------------------------------------------------------------

namespace {

// Packs the rows of a relation with row 0 in the most significant bits, so
// integer comparison of keys is the row-lexicographic order used by the
// canonical forms.  Needs n*n <= 64.
std::uint64_t pack_rel(const Rel& r) {
  std::uint64_t key = 0;
  for (int x = 0; x < r.n; ++x) key = (key << r.n) | std::uint64_t(r.row[x]);
  return key;
}

Rel unpack_rel(int n, std::uint64_t key) {
  Rel r(n);
  for (int x = n - 1; x >= 0; --x) {
    r.row[x] = Mask(key & full_mask(n));
    key >>= n;
  }
  return r;
}

bool matches(const json& preds, const std::vector<std::string>& required,
             const std::vector<std::string>& forbidden) {
  for (const std::string& name : required) {
    auto it = preds.find(name);
    if (it == preds.end() || !it->is_boolean() || !it->get<bool>()) return false;
  }
  for (const std::string& name : forbidden) {
    auto it = preds.find(name);
    if (it != preds.end() && it->is_boolean() && it->get<bool>()) return false;
  }
  return true;
}

struct SizeScan {
  std::size_t scanned = 0;
  std::vector<std::uint64_t> keys;               // single-relation kinds
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pair_keys;  // ordered spaces
};

}  // namespace

json WitnessResult::to_json() const {
  json j{{"found", found},
         {"complete", complete},
         {"scanned_by_size", scanned_by_size},
         {"classes_by_size", classes_by_size},
         {"wall_ms", wall_ms}};
  if (found && witness) {
    j["witness"] = json::parse(serialize_json(*witness));
    j["witness_text"] = serialize_text(*witness);
    j["predicates"] = predicates;
  }
  return j;
}

WitnessResult witness_search(const WitnessQuery& q) {
  const auto& vocab = predicates_for(q.kind);
  std::set<std::string> known;
  for (const PredicateInfo& p : vocab) known.insert(p.name);
  for (const std::string& name : q.required)
    if (!known.count(name)) throw std::invalid_argument("unknown predicate: " + name);
  for (const std::string& name : q.forbidden)
    if (!known.count(name)) throw std::invalid_argument("unknown predicate: " + name);
  const bool relational = q.kind == StructureKind::topology ||
                          q.kind == StructureKind::ordered_space;
  const int cap = relational ? 5 : 7;
  if (q.size_bound < 1 || q.size_bound > cap)
    throw std::invalid_argument("size bound for " + to_string(q.kind) +
                                " searches must lie in 1.." + std::to_string(cap));

  StopWatch sw;
  WitnessResult res;

  auto build_witness = [&](int n, std::uint64_t key,
                           std::optional<std::uint64_t> tkey) -> Structure {
    Structure s;
    s.carrier = Carrier::standard(n);
    switch (q.kind) {
      case StructureKind::topology:
        s.topology = alexandroff(FinQoset::make(unpack_rel(n, key)));
        break;
      case StructureKind::poset:
      case StructureKind::lattice:
        s.order = FinQoset::make(unpack_rel(n, key));
        break;
      case StructureKind::ordered_space:
        s.order = FinQoset::make(unpack_rel(n, key));
        s.topology = alexandroff(FinQoset::make(unpack_rel(n, *tkey)));
        break;
    }
    return s;
  };

  for (int n = 1; n <= q.size_bound && !res.found; ++n) {
    if (interrupt_flag_set()) {
      res.complete = false;
      break;
    }

    // Phase A: enumerate this size and reduce to one key per isomorphism
    // class.  The key order is the canonical structure order, so the least
    // matching key below is the canonical least witness.
    SizeScan scan;
    if (q.kind == StructureKind::ordered_space) {
      const auto qreps = qosets_up_to_iso(n);
      const auto tops = all_topologies(n);
      const auto perms = all_permutations(n);
      for (const FinQoset& qr : qreps) {
        std::vector<const std::vector<int>*> stab;
        for (const auto& perm : perms)
          if (qr.rel.relabel(perm) == qr.rel) stab.push_back(&perm);
        const std::uint64_t qkey = pack_rel(qr.rel);
        std::set<std::uint64_t> seen;
        for (const FinTopology& t : tops) {
          ++scan.scanned;
          const Rel sp = specialization(t).rel;
          std::uint64_t best = ~std::uint64_t(0);
          for (const auto* perm : stab)
            best = std::min(best, pack_rel(sp.relabel(*perm)));
          seen.insert(best);
        }
        for (std::uint64_t u : seen) scan.pair_keys.emplace_back(qkey, u);
        if (interrupt_flag_set()) break;
      }
      std::sort(scan.pair_keys.begin(), scan.pair_keys.end());
    } else if (q.kind == StructureKind::topology) {
      for_each_qoset(n, [&](const FinQoset& qq) {
        ++scan.scanned;
        if (canon_rel(qq.rel) == qq.rel) scan.keys.push_back(pack_rel(qq.rel));
      });
      std::sort(scan.keys.begin(), scan.keys.end());
    } else {
      for_each_poset(n, [&](const FinPoset& p) {
        if (q.kind == StructureKind::lattice && !is_lattice(p)) return;
        ++scan.scanned;
        if (canon_rel(p.rel) == p.rel) scan.keys.push_back(pack_rel(p.rel));
      });
      std::sort(scan.keys.begin(), scan.keys.end());
    }
    if (interrupt_flag_set()) {
      res.complete = false;
      break;
    }

    const std::size_t classes =
        q.kind == StructureKind::ordered_space ? scan.pair_keys.size() : scan.keys.size();
    res.scanned_by_size.push_back(scan.scanned);
    res.classes_by_size.push_back(classes);

    // Phase B: evaluate the class representatives in parallel chunks and
    // keep the least matching key.  Keys are pre-sorted, so per-chunk minima
    // reduce to a global minimum independent of thread count.
    if (q.kind == StructureKind::ordered_space) {
      using Hit = std::optional<std::pair<std::uint64_t, std::uint64_t>>;
      auto hits = parallel_map_chunks<Hit>(
          scan.pair_keys.size(), [&](std::size_t lo, std::size_t hi) -> Hit {
            for (std::size_t i = lo; i < hi; ++i) {
              if (interrupt_flag_set()) return std::nullopt;
              const auto [qk, tk] = scan.pair_keys[i];
              OrderedSpace os{FinQoset::make(unpack_rel(n, qk)),
                              alexandroff(FinQoset::make(unpack_rel(n, tk)))};
              if (matches(ordered_predicates(os), q.required, q.forbidden))
                return scan.pair_keys[i];
            }
            return std::nullopt;
          });
      Hit best;
      for (const Hit& h : hits)
        if (h && (!best || *h < *best)) best = h;
      if (best) {
        res.found = true;
        res.witness = build_witness(n, best->first, best->second);
      }
    } else {
      using Hit = std::optional<std::uint64_t>;
      auto eval_key = [&](std::uint64_t key) -> json {
        const Rel r = unpack_rel(n, key);
        switch (q.kind) {
          case StructureKind::topology:
            return topology_predicates(alexandroff(FinQoset::make(r)));
          case StructureKind::poset:
            return poset_predicates(FinPoset::make(r));
          default:
            return lattice_predicates(FinLattice::make(FinPoset::make(r)));
        }
      };
      auto hits = parallel_map_chunks<Hit>(
          scan.keys.size(), [&](std::size_t lo, std::size_t hi) -> Hit {
            for (std::size_t i = lo; i < hi; ++i) {
              if (interrupt_flag_set()) return std::nullopt;
              if (matches(eval_key(scan.keys[i]), q.required, q.forbidden))
                return scan.keys[i];
            }
            return std::nullopt;
          });
      Hit best;
      for (const Hit& h : hits)
        if (h && (!best || *h < *best)) best = h;
      if (best) {
        res.found = true;
        res.witness = build_witness(n, *best, std::nullopt);
      }
    }
    if (interrupt_flag_set()) {
      res.complete = false;
      break;
    }
  }

  if (res.found && res.witness)
    res.predicates = evaluate_predicates(q.kind, *res.witness);
  res.wall_ms = sw.elapsed_ms();
  return res;
}

// --- structure description --------------------------------------------------------

namespace {

// An open set that is a web around one of its points yet is not of the form
// (principal filter) intersect (open lower set).  Returns the first such
// open in family order, if any.
std::optional<Mask> open_web_not_sector(const OrderedSpace& s) {
  const FinQoset& q = s.order;
  const FinTopology& top = s.top;
  std::set<Mask> sectors;
  const SetFamily lows = lower_space(s).opens;
  for (int u = 0; u < q.n; ++u)
    for (Mask v : lows)
      if (Mask sec = q.up(u) & v) sectors.insert(sec);
  for (Mask o : top.opens) {
    if (!o || sectors.count(o)) continue;
    bool web = false;
    for_each_bit(o, [&](int x) {
      if (web) return;
      bool all = true;
      for_each_bit(o, [&](int w) {
        if (all && !(q.down(x) & q.down(w) & o)) all = false;
      });
      if (all) web = true;
    });
    if (web) return o;
  }
  return std::nullopt;
}

}  // namespace

json describe_structure(const Structure& s) {
  const Carrier& c = s.carrier;
  auto set_labels = [&](Mask m) {
    json a = json::array();
    for_each_bit(m, [&](int i) { a.push_back(c.labels[i]); });
    return a;
  };
  auto family_labels = [&](const SetFamily& f) {
    json a = json::array();
    for (Mask m : f) a.push_back(set_labels(m));
    return a;
  };
  auto rel_rows = [&](const Rel& r) {
    json o = json::object();
    for (int x = 0; x < r.n; ++x) o[c.labels[x]] = set_labels(r.row[x]);
    return o;
  };

  json out;
  out["carrier"] = {{"size", c.size()}, {"labels", c.labels}};

  if (s.topology) {
    const FinTopology& t = *s.topology;
    json b;
    b["opens"] = family_labels(t.opens);
    b["specialization"] = rel_rows(specialization(t).rel);
    if (t.n <= kLargeCarrier) {
      b["space_profile"] = space_profile(t).to_json();
      b["metrics"] = space_metrics(t).to_json();
    }
    if (t.opens.size() <= 16) b["lower_powerdomain"] = hoare_powerdomain(t).to_json();
    out["topology"] = std::move(b);
  }

  if (s.order) {
    const FinQoset& q = *s.order;
    json b;
    b["rows"] = rel_rows(q.rel);
    b["antisymmetric"] = q.antisymmetric();
    if (q.antisymmetric()) {
      const FinPoset p = FinPoset::make(q.rel);
      json pb = poset_predicates(p);
      json cov = json::array();
      for (int u = 0; u < p.n; ++u)
        for (int v = 0; v < p.n; ++v)
          if (p.covers(u, v)) cov.push_back({c.labels[u], c.labels[v]});
      pb["covers"] = std::move(cov);
      b["poset"] = std::move(pb);
      if (is_lattice(p)) {
        const FinLattice l = FinLattice::make(p);
        b["law_profile"] = law_profile(l).to_json();
        b["spectral_profile"] = spectral_profile(l).to_json(c);
      }
      if (p.n <= 4) b["convex_powerdomain"] = plotkin_powerdomain(p).to_json();
    }
    out["order"] = std::move(b);
  }

  if (s.topology && s.order) {
    const OrderedSpace os = OrderedSpace::make(*s.order, *s.topology);
    json b;
    if (os.top.n <= kLargeCarrier) {
      const OrderedSpaceProfile p = ordered_space_profile(os);
      b["profile"] = ordered_predicates(os, p);
      if (auto w = open_web_not_sector(os))
        b["open_web_not_sector"] = set_labels(*w);
    }
    out["ordered_space"] = std::move(b);
  }

  if (s.relation) {
    const Rel& r = *s.relation;
    json b;
    b["rows"] = rel_rows(r);
    const CRelReport cr = validate_c_relation(r);
    b["c_quasi_order"] = cr.c_quasi_order;
    b["c_order"] = cr.c_order;
    if (!cr.c_quasi_order) {
      b["violation"] = cr.violation;
      b["violation_witness"] = cr.witness;
    } else {
      b["induced_opens"] = family_labels(topology_from_relation(r).opens);
      b["rounded_ideal_completion"] = rounded_ideal_completion(r).to_json();
      if (r.n <= 4) {
        const LiftedRelation lifted = lift_relation(r);
        b["lifted_certifies_strictly"] = validate_c_relation(lifted.rel).c_order;
      }
    }
    out["relation"] = std::move(b);
  }

  return out;
}

std::string dot_diagram(const Structure& s) {
  const Carrier& c = s.carrier;
  std::string dot = "digraph structure {\n  rankdir=BT;\n  node [shape=box];\n";
  auto quoted = [&](const std::string& l) { return "\"" + l + "\""; };

  if (s.order || s.topology) {
    const FinQoset q = s.order ? *s.order : specialization(*s.topology);
    // Collapse quasi-order equivalence classes; one node per class.
    std::vector<int> leader(q.n);
    for (int x = 0; x < q.n; ++x) {
      leader[x] = x;
      for (int y = 0; y < x; ++y)
        if (q.le(x, y) && q.le(y, x)) {
          leader[x] = leader[y];
          break;
        }
    }
    std::vector<int> reps;
    for (int x = 0; x < q.n; ++x)
      if (leader[x] == x) reps.push_back(x);
    auto class_label = [&](int rep) {
      std::string l;
      for (int x = 0; x < q.n; ++x)
        if (leader[x] == rep) {
          if (!l.empty()) l += " ";
          l += c.labels[x];
        }
      return l;
    };
    Rel quot(static_cast<int>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j)
        if (q.le(reps[i], reps[j])) quot.set(static_cast<int>(i), static_cast<int>(j));
    const FinPoset qp = FinPoset::make(quot);
    for (std::size_t i = 0; i < reps.size(); ++i)
      dot += "  " + quoted(class_label(reps[i])) + ";\n";
    for (int u = 0; u < qp.n; ++u)
      for (int v = 0; v < qp.n; ++v)
        if (qp.covers(u, v))
          dot += "  " + quoted(class_label(reps[u])) + " -> " +
                 quoted(class_label(reps[v])) + ";\n";
  } else if (s.relation) {
    const Rel& r = *s.relation;
    for (int x = 0; x < r.n; ++x) dot += "  " + quoted(c.labels[x]) + ";\n";
    for (int x = 0; x < r.n; ++x)
      for_each_bit(r.row[x], [&](int y) {
        if (x != y) dot += "  " + quoted(c.labels[x]) + " -> " + quoted(c.labels[y]) + ";\n";
      });
  } else {
    throw std::invalid_argument("structure has no layer to draw");
  }
  dot += "}\n";
  return dot;
}

// --- gallery -------------------------------------------------------------------------

namespace {

Structure make_topology(int n, FinTopology t, std::vector<std::string> labels = {}) {
  Structure s;
  s.carrier = labels.empty() ? Carrier::standard(n) : Carrier(std::move(labels));
  s.topology = std::move(t);
  return s;
}

Structure make_order(Rel r, std::vector<std::string> labels = {}) {
  Structure s;
  s.carrier = labels.empty() ? Carrier::standard(r.n) : Carrier(std::move(labels));
  s.order = FinQoset::make(std::move(r));
  return s;
}

Structure g_sierpinski() { return make_topology(2, sierpinski()); }
Structure g_discrete3() { return make_topology(3, discrete_topology(3)); }
Structure g_indiscrete2() { return make_topology(2, indiscrete_topology(2)); }
Structure g_chain2() { return make_order(chain_poset(2).rel); }
Structure g_antichain2() { return make_order(Rel::identity(2)); }
Structure g_chain4() { return make_order(chain_poset(4).rel); }
Structure g_boolean4() {
  return make_order(boolean4_lattice().poset.rel, {"bot", "a", "b", "top"});
}
Structure g_m3() {
  return make_order(m3_lattice().poset.rel, {"bot", "a", "b", "c", "top"});
}
Structure g_n5() {
  return make_order(n5_lattice().poset.rel, {"bot", "a", "c", "b", "top"});
}

Structure g_chain3_relation() {
  Structure s;
  s.carrier = Carrier::standard(3);
  s.relation = chain_poset(3).rel;
  return s;
}

Structure g_grid3x3_fan() {
  // 3x3 grid order (componentwise product of two 3-chains) with the weak
  // upper topology: opens are generated by complements of principal
  // down-sets.  The punctured carrier (everything above the bottom corner)
  // is an open web around the top corner but not a sector.
  Rel r(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = i; a < 3; ++a)
        for (int b = j; b < 3; ++b) r.set(3 * i + j, 3 * a + b);
  FinQoset q = FinQoset::make(std::move(r));
  Structure s;
  std::vector<std::string> labels;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      labels.push_back("g" + std::to_string(i) + std::to_string(j));
  s.carrier = Carrier(std::move(labels));
  s.topology = weak_upper_topology(q);
  s.order = std::move(q);
  return s;
}

Structure g_sierpinski_patch() {
  OrderedSpace os = patch_space(sierpinski(), CoselectionKind::upsilon);
  Structure s;
  s.carrier = Carrier::standard(2);
  s.order = os.order;
  s.topology = os.top;
  return s;
}

Structure g_no_up_stability() {
  // Canonical least ordered space that is upper regular with filtered
  // neighborhood bases and d-stable, yet not up-stable (frozen from the
  // witness search): the up-closure of the open {p2} is {p0 p2}, which is
  // not open.
  Rel r = Rel::identity(3);
  r.set(1, 0);
  r.set(2, 0);
  SetFamily fam;
  fam.sets = {0, 2, 3, 4, 6, 7};
  Structure s;
  s.carrier = Carrier::standard(3);
  s.order = FinQoset::make(std::move(r));
  s.topology = FinTopology::make(3, std::move(fam));
  return s;
}

}  // namespace

const std::vector<GalleryEntry>& gallery_registry() {
  static const std::vector<GalleryEntry> table = {
      {"sierpinski", "two points, one open singleton: the smallest non-discrete T0 space",
       &g_sierpinski},
      {"discrete3", "three isolated points", &g_discrete3},
      {"indiscrete2", "two points with only the trivial opens", &g_indiscrete2},
      {"chain2", "two-element chain poset with its convex powerdomain", &g_chain2},
      {"antichain2", "two incomparable points with their convex powerdomain",
       &g_antichain2},
      {"chain4", "four-element chain lattice", &g_chain4},
      {"boolean4", "four-element Boolean lattice: the free distributive bounded "
                   "lattice on two atoms",
       &g_boolean4},
      {"m3", "diamond lattice of three incomparable atoms: modular, not "
             "distributive, so not a frame",
       &g_m3},
      {"n5", "pentagon lattice: the smallest non-modular lattice", &g_n5},
      {"chain3-relation", "the 3-chain order as an approximating relation: "
                          "certified, but its subset lift collapses classes",
       &g_chain3_relation},
      {"grid3x3-fan", "3x3 grid order under the weak upper topology: carries an "
                      "open web that is not a sector",
       &g_grid3x3_fan},
      {"sierpinski-patch", "weak patch space of the two-point T0 space: the "
                           "smallest nontrivial fan space",
       &g_sierpinski_patch},
      {"no-up-stability", "an ordered space that is upper regular with filtered "
                          "neighborhood bases and d-stable, yet not up-stable",
       &g_no_up_stability},
  };
  return table;
}

const GalleryEntry* find_gallery(const std::string& name) {
  for (const GalleryEntry& e : gallery_registry())
    if (e.name == name) return &e;
  return nullptr;
}

json gallery_report(const GalleryEntry& entry) {
  const Structure s = entry.build();
  return {{"name", entry.name},
          {"summary", entry.summary},
          {"structure", json::parse(serialize_json(s))},
          {"text", serialize_text(s)},
          {"profile", describe_structure(s)}};
}

}  // namespace ordtop

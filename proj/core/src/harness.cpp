#include "holescope/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "holescope/generators.hpp"

namespace holescope {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// splitmix64; corpus derivation only (instance internals draw their own)
struct Stream {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HOLESCOPE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

/// Worker pool over [0, count); fn must not throw.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  threads = std::min<std::size_t>(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
    });
  for (std::thread& t : pool) t.join();
}

/// Ascending k-subsets of 1..n; fn returning false stops the scan.
template <class Fn>
void for_each_subset(int n, int k, Fn fn) {
  if (k > n || k <= 0) return;
  std::vector<VertexId> s(k);
  std::iota(s.begin(), s.end(), 1);
  while (true) {
    if (!fn(static_cast<const std::vector<VertexId>&>(s))) return;
    int i = k - 1;
    while (i >= 0 && s[i] == n - (k - 1 - i)) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

// ── Corpus materialization ──────────────────────────────────────────────

struct CorpusItem {
  std::string family;
  std::string label;
  int n{};  // from the plan, available even when generation failed
  std::optional<Drawing> drawing;
  std::string error;                    // generation / parse failure
  std::vector<std::string> violations;  // validate() findings
  bool convex_family{};                 // participates in the convex-corpus claims
  std::optional<ConvexityVerdict> convexity;
};

struct ItemPlan {
  std::string family;
  std::string label;
  int n{};
  std::uint64_t seed{};
  std::string path;  // point files
};

std::vector<ItemPlan> plan_corpus(const CorpusSpec& corpus) {
  std::vector<ItemPlan> plans;
  for (const CorpusSpec::Family& f : corpus.families) {
    if (f.family == "random-convex") {
      Stream s{f.seed};
      const int span = f.n_max - f.n_min + 1;
      for (int i = 0; i < f.count; ++i) {
        ItemPlan p;
        p.family = f.family;
        p.n = f.n_min + static_cast<int>(s.next() % static_cast<unsigned>(span));
        p.seed = s.next();
        p.label = "R_" + std::to_string(p.n) + "_s" + std::to_string(p.seed);
        plans.push_back(std::move(p));
      }
      continue;
    }
    const char* prefix = f.family == "convex"          ? "C_"
                         : f.family == "twisted"       ? "T_"
                         : f.family == "twisted-prime" ? "T'_"
                         : f.family == "dn"            ? "D_"
                                                       : nullptr;
    if (!prefix)
      throw std::invalid_argument("unknown corpus family: " + f.family);
    for (int n : f.n_values) {
      ItemPlan p;
      p.family = f.family;
      p.n = n;
      p.label = prefix + std::to_string(n);
      plans.push_back(std::move(p));
    }
  }
  for (const std::string& path : corpus.point_files) {
    ItemPlan p;
    p.family = "points";
    p.label = path;
    p.path = corpus.base_dir.empty() || path.front() == '/'
                 ? path
                 : corpus.base_dir + "/" + path;
    plans.push_back(std::move(p));
  }
  return plans;
}

CorpusItem materialize_one(const ItemPlan& plan) {
  CorpusItem item;
  item.family = plan.family;
  item.label = plan.label;
  item.n = plan.n;
  item.convex_family = plan.family == "convex" ||
                       plan.family == "random-convex" ||
                       plan.family == "points";
  try {
    if (plan.family == "convex")
      item.drawing = convex_gon(plan.n);
    else if (plan.family == "twisted")
      item.drawing = twisted(plan.n);
    else if (plan.family == "twisted-prime")
      item.drawing = twisted_prime(plan.n);
    else if (plan.family == "dn")
      item.drawing = dn_family(plan.n);
    else if (plan.family == "random-convex")
      item.drawing = random_convex_instance(plan.n, plan.seed);
    else if (plan.family == "points") {
      DrawingDocument doc = load_document(plan.path);
      item.drawing = std::move(doc.drawing);
    }
  } catch (const std::exception& e) {
    item.error = e.what();
    return item;
  }
  item.label = item.drawing->label().empty() ? plan.label
                                             : item.drawing->label();
  item.n = item.drawing->n();
  item.violations = validate(*item.drawing);
  if (item.violations.empty() && item.convex_family)
    item.convexity = is_convex_drawing(*item.drawing);
  return item;
}

// ── Claim implementations ───────────────────────────────────────────────
// Each body receives a validated drawing and fills verdict + witness.

void claim_c1(const CorpusItem& it, ClaimResult& r) {
  const Drawing& d = *it.drawing;
  const long long expected = 2LL * d.n() - 4;
  const long long got = static_cast<long long>(empty_triangles(d).size());
  r.witness["empty_triangles"] = got;
  r.witness["expected"] = expected;
  r.verdict = got == expected ? "pass" : "fail";
}

void claim_c2(const CorpusItem& it, ClaimResult& r) {
  const Drawing& d = *it.drawing;
  const int n = d.n();
  long long subsets = 0;
  std::optional<std::vector<VertexId>> five_gon;
  for_each_subset(n, 5, [&](const std::vector<VertexId>& s) {
    ++subsets;
    if (auto g = is_k_gon(d, s)) {
      five_gon = g->order;
      return false;
    }
    return true;
  });
  if (five_gon) {
    r.witness["five_gon"] = *five_gon;
    r.verdict = "fail";
    return;
  }
  r.witness["five_subsets_checked"] = subsets;
  auto g = is_k_gon(d, {1, 2, n - 1, n});
  if (!g) {
    r.witness["error"] = "{1,2,n-1,n} is not a 4-gon";
    r.verdict = "fail";
    return;
  }
  auto interior = interior_vertices(d, *g);
  if (!interior.empty()) {
    r.witness["four_gon"] = g->order;
    r.witness["interior"] = interior;
    r.verdict = "fail";
    return;
  }
  r.witness["four_hole"] = g->order;
  r.verdict = "pass";
}

void claim_c3(const CorpusItem& it, ClaimResult& r) {
  const Drawing& d = *it.drawing;
  const long long expected = binom(d.n(), 4);
  const long long got = static_cast<long long>(d.crossings().size());
  r.witness["crossings"] = got;
  r.witness["expected"] = expected;
  r.verdict = got == expected ? "pass" : "fail";
}

void claim_c4(const CorpusItem& it, ClaimResult& r) {
  const Drawing& d = *it.drawing;
  long long checked = 0;
  std::optional<std::vector<VertexId>> found;
  for_each_subset(d.n(), 4, [&](const std::vector<VertexId>& s) {
    const std::vector<VertexId> arrangements[3] = {
        {s[0], s[1], s[2], s[3]},
        {s[0], s[1], s[3], s[2]},
        {s[0], s[2], s[1], s[3]}};
    for (const auto& cycle : arrangements) {
      ++checked;
      if (is_empty_4_triangulation(d, cycle)) {
        found = cycle;
        return false;
      }
    }
    return true;
  });
  r.witness["cycles_checked"] = checked;
  if (found) {
    r.witness["empty_4_triangulation"] = *found;
    r.verdict = "fail";
  } else {
    r.witness["empty_4_triangulations"] = 0;
    r.verdict = "pass";
  }
}

void claim_c5(const CorpusItem& it, ClaimResult& r) {
  const Drawing& d = *it.drawing;
  const int n = d.n();
  std::set<std::vector<VertexId>> distinct;
  for (VertexId v = 1; v <= n; ++v) {
    CycleWitness w = empty_4cycle_through(d, v);  // throws on failure
    distinct.insert(w.cycle);
  }
  r.witness["vertices"] = n;
  r.witness["distinct_empty_4cycles"] = distinct.size();
  // every witness covers 4 vertices, so n covered vertices force >= n/4 cycles
  r.verdict = 4 * static_cast<long long>(distinct.size()) >= n ? "pass" : "fail";
}

bool require_convex(const CorpusItem& it, ClaimResult& r) {
  if (it.convexity && it.convexity->convex) return true;
  r.verdict = "fail";
  r.witness["error"] = "not a convex drawing";
  if (it.convexity && it.convexity->counterexample)
    r.witness["triangle"] = *it.convexity->counterexample;
  return false;
}

void claim_c6(const CorpusItem& it, ClaimResult& r) {
  if (!require_convex(it, r)) return;
  const Drawing& d = *it.drawing;
  const int n = d.n();
  int crossed = 0;
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b) {
      Edge e = make_edge(a, b);
      if (d.crossing_degree(e) == 0) continue;
      ++crossed;
      HoleRecord h = chord_4hole_for_edge(d, e);  // throws if none exists
      if (!h.interior.empty())
        throw std::runtime_error("4-hole witness has interior vertices");
    }
  const long long holes = static_cast<long long>(enumerate_k_holes(d, 4).size());
  r.witness["crossed_edges"] = crossed;
  r.witness["four_holes"] = holes;
  r.witness["bound_times_four"] = static_cast<long long>(n - 1) * (n - 4);
  r.verdict = 4 * holes >= static_cast<long long>(n - 1) * (n - 4) ? "pass"
                                                                   : "fail";
}

void claim_c7(const CorpusItem& it, ClaimResult& r) {
  if (!require_convex(it, r)) return;
  const Drawing& d = *it.drawing;
  if (auto m4 = minimal_k_gon(d, 4)) {
    auto interior = interior_vertices(d, *m4);
    if (!interior.empty()) {
      r.witness["minimal_4gon"] = m4->order;
      r.witness["interior"] = interior;
      r.verdict = "fail";
      return;
    }
    r.witness["minimal_4hole"] = m4->order;
  }
  for (int k = 5; k <= 6; ++k) {
    if (d.n() < k) continue;
    auto mk = minimal_k_gon(d, k);
    if (!mk) continue;
    const std::vector<VertexId>& o = mk->order;
    auto interior = interior_vertices(d, *mk);
    std::set<VertexId> interior_set(interior.begin(), interior.end());
    // no interior vertex inside the side of a boundary triple that faces
    // away from the rest of the gon
    for (int i = 0; i < k; ++i) {
      const std::vector<VertexId> tri{o[i], o[(i + 1) % k], o[(i + 2) % k]};
      SideClassification sc = classify_sides(d, tri);
      std::set<VertexId> rest(o.begin(), o.end());
      for (VertexId t : tri) rest.erase(t);
      int in_a = 0, in_b = 0;
      for (VertexId v : sc.class_a) in_a += rest.count(v);
      for (VertexId v : sc.class_b) in_b += rest.count(v);
      if (in_a > 0 && in_b > 0) {
        r.witness["minimal_gon"] = o;
        r.witness["triangle"] = tri;
        r.witness["error"] = "gon vertices split across triangle sides";
        r.verdict = "fail";
        return;
      }
      const std::vector<VertexId>& ear = in_a > 0 ? sc.class_b : sc.class_a;
      for (VertexId v : ear)
        if (interior_set.count(v)) {
          r.witness["minimal_gon"] = o;
          r.witness["triangle"] = tri;
          r.witness["interior_vertex_in_ear"] = v;
          r.verdict = "fail";
          return;
        }
    }
    auto violations = check_inner_side_convexity(d, *mk);
    if (!violations.empty()) {
      r.witness["minimal_gon"] = o;
      r.witness["violation"] = to_json(violations.front());
      r.verdict = "fail";
      return;
    }
    r.witness["minimal_" + std::to_string(k) + "gon"] = o;
  }
  r.verdict = "pass";
}

void claim_c8(const CorpusItem& it, ClaimResult& r) {
  const Drawing& d = *it.drawing;
  const int n = d.n();
  const long long expected_crossings = binom(n, 4);
  r.witness["crossings"] = d.crossings().size();
  if (static_cast<long long>(d.crossings().size()) != expected_crossings) {
    r.witness["expected_crossings"] = expected_crossings;
    r.verdict = "fail";
    return;
  }
  std::optional<std::array<VertexId, 4>> bad;
  for_each_subset(n, 4, [&](const std::vector<VertexId>& s) {
    if (k4_crossing_index(d, {s[0], s[1], s[2], s[3]}) < 0) {
      bad = {s[0], s[1], s[2], s[3]};
      return false;
    }
    return true;
  });
  if (bad) {
    r.witness["quad_without_single_crossing"] = *bad;
    r.verdict = "fail";
    return;
  }
  std::set<std::array<VertexId, 4>> got;
  for (const CycleWitness& w : enumerate_empty_cycles(d, 4)) {
    std::array<VertexId, 4> s{w.cycle[0], w.cycle[1], w.cycle[2], w.cycle[3]};
    std::sort(s.begin(), s.end());
    got.insert(s);
  }
  auto expected_list = dn_expected_empty_4cycles(n);
  std::set<std::array<VertexId, 4>> expected(expected_list.begin(),
                                             expected_list.end());
  if (got != expected) {
    ordered_json missing = ordered_json::array();
    for (const auto& s : expected)
      if (!got.count(s) && missing.size() < 20) missing.push_back(s);
    ordered_json extra = ordered_json::array();
    for (const auto& s : got)
      if (!expected.count(s) && extra.size() < 20) extra.push_back(s);
    r.witness["missing"] = std::move(missing);
    r.witness["unexpected"] = std::move(extra);
    r.verdict = "fail";
    return;
  }
  long long block_pairs = 0;
  for (const auto& s : got)
    if (s[0] % 2 == 1 && s[1] == s[0] + 1 && s[2] % 2 == 1 && s[3] == s[2] + 1)
      ++block_pairs;
  r.witness["empty_4cycles"] = got.size();
  r.witness["block_pairs"] = block_pairs;
  r.witness["expected_block_pairs"] = binom(n / 2, 2);
  r.verdict = block_pairs == binom(n / 2, 2) ? "pass" : "fail";
}

void claim_c9(const CorpusItem& it, ClaimResult& r) {
  if (!require_convex(it, r)) return;
  const Drawing& d = *it.drawing;
  if (!d.has_rotations()) {
    r.verdict = "skip";
    r.witness["reason"] = "rotations absent";
    return;
  }
  long long gons = 0, checks = 0;
  std::optional<ordered_json> bad;
  for (int k = 4; k <= 5 && !bad; ++k) {
    if (k == 5 && d.n() > 12) break;  // keep the exhaustive scan bounded
    for_each_subset(d.n(), k, [&](const std::vector<VertexId>& s) {
      auto g = is_k_gon(d, s);
      if (!g) return true;
      ++gons;
      for (VertexId u : interior_vertices(d, *g)) {
        ++checks;
        if (!interior_rotation_consistent(d, *g, u)) {
          ordered_json w;
          w["gon"] = g->order;
          w["vertex"] = u;
          bad = std::move(w);
          return false;
        }
      }
      return true;
    });
  }
  if (bad) {
    r.witness["counterexample"] = *bad;
    r.verdict = "fail";
    return;
  }
  r.witness["gons_checked"] = gons;
  r.witness["interior_checks"] = checks;
  r.verdict = "pass";
}

void claim_c10(const CorpusItem& it, ClaimResult& r) {
  const Drawing& d = *it.drawing;
  const int n = d.n();
  int uncrossed = 0;
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b)
      if (d.crossing_degree(make_edge(a, b)) == 0) ++uncrossed;
  r.witness["uncrossed"] = uncrossed;
  r.witness["bound"] = 2 * n - 2;
  r.verdict = uncrossed <= 2 * n - 2 ? "pass" : "fail";
}

ClaimResult claim_c11(const SampledSpec& spec, std::uint64_t seed) {
  ClaimResult r{"C11",
                "R_" + std::to_string(spec.n) + "_s" + std::to_string(seed),
                "", ordered_json::object(), 0};
  try {
    Drawing d = random_convex_instance(spec.n, seed);
    auto h = first_k_hole(d, 6);
    if (!h) {
      r.verdict = "fail";
      r.witness["error"] = "no 6-hole";
      return r;
    }
    r.witness["six_hole"] = h->gon.order;
    r.verdict = "consistent (sampled)";
  } catch (const std::exception& e) {
    r.verdict = "fail";
    r.witness["error"] = e.what();
  }
  return r;
}

ClaimResult claim_c12(const SampledSpec& spec, std::uint64_t inst_seed,
                      std::uint64_t color_seed) {
  ClaimResult r{
      "C12",
      "R_" + std::to_string(spec.n) + "_s" + std::to_string(inst_seed),
      "", ordered_json::object(), 0};
  try {
    Drawing d = random_convex_instance(spec.n, inst_seed);
    Coloring col;
    Stream cs{color_seed};
    col.color.resize(spec.n);
    for (int i = 0; i < spec.n; ++i) col.color[i] = cs.next() & 1;
    auto witnesses = monochromatic_4_triangulations(d, col);
    r.witness["coloring"] = col.color;
    if (witnesses.empty()) {
      r.verdict = "fail";
      r.witness["error"] = "no monochromatic empty 4-triangulation";
      return r;
    }
    r.witness["cycle"] = witnesses.front().cycle;
    r.witness["color"] = witnesses.front().color;
    r.witness["total"] = witnesses.size();
    r.verdict = "consistent (sampled)";
  } catch (const std::exception& e) {
    r.verdict = "fail";
    r.witness["error"] = e.what();
  }
  return r;
}

// ── Registry ────────────────────────────────────────────────────────────

using ItemClaimFn = void (*)(const CorpusItem&, ClaimResult&);

struct ClaimDef {
  const char* id;
  bool sampled;
  ItemClaimFn fn;  // null for sampled claims
  bool (*applies)(const CorpusItem&);
};

bool on_twisted_1(const CorpusItem& it) {
  return it.family == "twisted" && it.n >= 4 && it.n <= 12;
}
bool on_twisted_2(const CorpusItem& it) {
  return it.family == "twisted" && it.n >= 5 && it.n <= 12;
}
bool on_tprime_all(const CorpusItem& it) {
  return it.family == "twisted-prime" && it.n >= 6 && it.n <= 12;
}
bool on_tprime_small(const CorpusItem& it) {
  return it.family == "twisted-prime" && it.n >= 6 && it.n <= 11;
}
bool on_all(const CorpusItem& it) {
  return !it.error.empty() || it.n >= 4;  // failures always surface
}
bool on_convex(const CorpusItem& it) { return it.convex_family; }
bool on_dn(const CorpusItem& it) { return it.family == "dn"; }

const ClaimDef kClaims[] = {
    {"C1", false, claim_c1, on_twisted_1},
    {"C2", false, claim_c2, on_twisted_2},
    {"C3", false, claim_c3, on_tprime_all},
    {"C4", false, claim_c4, on_tprime_small},
    {"C5", false, claim_c5, on_all},
    {"C6", false, claim_c6, on_convex},
    {"C7", false, claim_c7, on_convex},
    {"C8", false, claim_c8, on_dn},
    {"C9", false, claim_c9, on_convex},
    {"C10", false, claim_c10, on_all},
    {"C11", true, nullptr, nullptr},
    {"C12", true, nullptr, nullptr},
};

const ClaimDef* find_claim(const std::string& id) {
  for (const ClaimDef& c : kClaims)
    if (id == c.id) return &c;
  return nullptr;
}

ClaimResult run_item_claim(const ClaimDef& def, const CorpusItem& it) {
  ClaimResult r{def.id, it.label, "", ordered_json::object(), 0};
  if (!it.error.empty()) {
    r.verdict = "fail";
    r.witness["error"] = it.error;
    return r;
  }
  if (!it.violations.empty()) {
    r.verdict = "skip";
    r.witness["reason"] = "validation failed";
    ordered_json v = ordered_json::array();
    for (const std::string& s : it.violations) {
      v.push_back(s);
      if (v.size() == 5) break;
    }
    r.witness["violations"] = std::move(v);
    return r;
  }
  try {
    def.fn(it, r);
  } catch (const std::exception& e) {
    r.verdict = "fail";
    r.witness = ordered_json::object();
    r.witness["error"] = e.what();
  }
  return r;
}

}  // namespace

// ── Public surface ──────────────────────────────────────────────────────

const std::vector<std::string>& known_claims() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const ClaimDef& c : kClaims) v.push_back(c.id);
    return v;
  }();
  return ids;
}

CorpusSpec default_corpus() {
  CorpusSpec c;
  auto range = [](int lo, int hi) {
    std::vector<int> v(hi - lo + 1);
    std::iota(v.begin(), v.end(), lo);
    return v;
  };
  c.families.push_back({"convex", range(4, 12), 0, 0, 0, 0});
  c.families.push_back({"twisted", range(4, 12), 0, 0, 0, 0});
  c.families.push_back({"twisted-prime", range(6, 12), 0, 0, 0, 0});
  c.families.push_back({"dn", {5, 7, 9, 11}, 0, 0, 0, 0});
  c.families.push_back({"random-convex", {}, 50, 8, 30, 1770});
  c.hole6 = {20, 30, 2061};
  c.colorings = {10, 30, 2063};
  return c;
}

CorpusSpec corpus_from_json(const nlohmann::json& j, std::string base_dir) {
  if (!j.is_object()) throw std::invalid_argument("corpus is not an object");
  CorpusSpec c;
  c.base_dir = std::move(base_dir);
  for (const auto& f : j.value("families", json::array())) {
    CorpusSpec::Family fam;
    if (!f.contains("family"))
      throw std::invalid_argument("family entry without a name");
    fam.family = f["family"].get<std::string>();
    if (fam.family == "random-convex") {
      fam.count = f.value("count", 0);
      fam.n_min = f.value("n_min", 0);
      fam.n_max = f.value("n_max", 0);
      fam.seed = f.value("seed", std::uint64_t{0});
      if (fam.count <= 0 || fam.n_min < 3 || fam.n_max < fam.n_min)
        throw std::invalid_argument("bad random-convex range");
    } else {
      if (!f.contains("n") || !f["n"].is_array())
        throw std::invalid_argument("family entry without size list");
      for (const auto& v : f["n"]) fam.n_values.push_back(v.get<int>());
    }
    c.families.push_back(std::move(fam));
  }
  for (const auto& p : j.value("point_files", json::array()))
    c.point_files.push_back(p.get<std::string>());
  if (j.contains("sampled")) {
    const json& s = j["sampled"];
    auto spec = [](const json& v) {
      return SampledSpec{v.value("count", 0), v.value("n", 0),
                         v.value("seed", std::uint64_t{0})};
    };
    if (s.contains("hole6")) c.hole6 = spec(s["hole6"]);
    if (s.contains("colorings")) c.colorings = spec(s["colorings"]);
  }
  return c;
}

nlohmann::ordered_json corpus_to_json(const CorpusSpec& c) {
  ordered_json j;
  ordered_json fams = ordered_json::array();
  for (const CorpusSpec::Family& f : c.families) {
    ordered_json e;
    e["family"] = f.family;
    if (f.family == "random-convex") {
      e["count"] = f.count;
      e["n_min"] = f.n_min;
      e["n_max"] = f.n_max;
      e["seed"] = f.seed;
    } else {
      e["n"] = f.n_values;
    }
    fams.push_back(std::move(e));
  }
  j["families"] = std::move(fams);
  j["point_files"] = c.point_files;
  ordered_json sampled;
  auto spec = [](const SampledSpec& s) {
    ordered_json v;
    v["count"] = s.count;
    v["n"] = s.n;
    v["seed"] = s.seed;
    return v;
  };
  sampled["hole6"] = spec(c.hole6);
  sampled["colorings"] = spec(c.colorings);
  j["sampled"] = std::move(sampled);
  return j;
}

std::vector<ClaimResult> run_claims(const CorpusSpec& corpus,
                                    const HarnessOptions& opt) {
  // resolve the filter against the registry
  std::vector<const ClaimDef*> selected;
  if (opt.claims.empty()) {
    for (const ClaimDef& c : kClaims) selected.push_back(&c);
  } else {
    std::set<std::string> wanted;
    for (const std::string& id : opt.claims) {
      if (!find_claim(id))
        throw std::invalid_argument("unknown claim id: " + id);
      wanted.insert(id);
    }
    for (const ClaimDef& c : kClaims)
      if (wanted.count(c.id)) selected.push_back(&c);
  }
  const bool explicit_filter = !opt.claims.empty();
  const int threads = resolve_threads(opt.threads);

  // materialize the corpus
  std::vector<ItemPlan> plans = plan_corpus(corpus);
  std::vector<CorpusItem> items(plans.size());
  parallel_for(plans.size(), threads,
               [&](std::size_t i) { items[i] = materialize_one(plans[i]); });

  // expand (claim, item) tasks in report order
  struct Task {
    const ClaimDef* def;
    int item{-1};
    int sample{-1};
  };
  std::vector<Task> tasks;
  std::vector<ClaimResult> fixed;  // pre-resolved skip rows
  std::vector<std::uint64_t> hole6_seeds;
  {
    Stream s{corpus.hole6.seed};
    for (int i = 0; i < corpus.hole6.count; ++i) hole6_seeds.push_back(s.next());
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> coloring_seeds;
  {
    Stream s{corpus.colorings.seed};
    for (int i = 0; i < corpus.colorings.count; ++i) {
      std::uint64_t a = s.next(), b = s.next();
      coloring_seeds.emplace_back(a, b);
    }
  }
  std::vector<ClaimResult> results;
  std::vector<std::pair<bool, std::size_t>> layout;  // (is_task, index)
  for (const ClaimDef* def : selected) {
    if (def->sampled) {
      if (!opt.include_sampled) {
        if (explicit_filter) {
          ClaimResult r{def->id, "-", "skip", ordered_json::object(), 0};
          r.witness["reason"] = "sampled claim; pass --include-sampled";
          layout.emplace_back(false, fixed.size());
          fixed.push_back(std::move(r));
        }
        continue;
      }
      const int count = std::string(def->id) == "C11" ? corpus.hole6.count
                                                      : corpus.colorings.count;
      for (int i = 0; i < count; ++i) {
        layout.emplace_back(true, tasks.size());
        tasks.push_back({def, -1, i});
      }
    } else {
      for (std::size_t i = 0; i < items.size(); ++i)
        if (def->applies(items[i])) {
          layout.emplace_back(true, tasks.size());
          tasks.push_back({def, static_cast<int>(i), -1});
        }
    }
  }

  std::vector<ClaimResult> slots(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    const Task& t = tasks[i];
    const auto start = std::chrono::steady_clock::now();
    ClaimResult r;
    if (t.sample >= 0) {
      r = std::string(t.def->id) == "C11"
              ? claim_c11(corpus.hole6, hole6_seeds[t.sample])
              : claim_c12(corpus.colorings, coloring_seeds[t.sample].first,
                          coloring_seeds[t.sample].second);
    } else {
      r = run_item_claim(*t.def, items[t.item]);
    }
    if (opt.timings)
      r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    slots[i] = std::move(r);
  });

  results.reserve(layout.size());
  for (const auto& [is_task, idx] : layout)
    results.push_back(is_task ? std::move(slots[idx]) : std::move(fixed[idx]));
  return results;
}

std::vector<CensusRow> census_empty_cycles(const std::string& family,
                                           const std::vector<int>& sizes,
                                           int k) {
  std::vector<CensusRow> rows;
  for (int n : sizes) {
    std::optional<Drawing> d;
    if (family == "convex" && n >= 3)
      d = convex_gon(n);
    else if (family == "twisted" && n >= 3)
      d = twisted(n);
    else if (family == "twisted-prime" && n >= 6)
      d = twisted_prime(n);
    else if (family == "dn" && n >= 5 && n % 2 == 1)
      d = dn_family(n);
    else if (family != "convex" && family != "twisted" &&
             family != "twisted-prime" && family != "dn")
      throw std::invalid_argument("unknown census family: " + family);
    if (!d || d->n() < k) continue;
    rows.push_back(
        {family, n, k,
         static_cast<long long>(enumerate_empty_cycles(*d, k).size())});
  }
  return rows;
}

nlohmann::ordered_json report_document(const CorpusSpec& corpus,
                                       const HarnessOptions& opt,
                                       const std::vector<ClaimResult>& results,
                                       const std::vector<CensusRow>& census) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = kToolVersion;
  j["corpus"] = corpus_to_json(corpus);
  ordered_json o;
  o["claims"] = opt.claims.empty()
                    ? ordered_json::array({"all"})
                    : ordered_json(opt.claims);
  o["include_sampled"] = opt.include_sampled;
  o["timings"] = opt.timings;
  j["options"] = std::move(o);
  ordered_json rs = ordered_json::array();
  long long pass = 0, fail = 0, skip = 0, sampled = 0;
  for (const ClaimResult& r : results) {
    ordered_json e;
    e["claim"] = r.claim_id;
    e["item"] = r.corpus_item;
    e["verdict"] = r.verdict;
    e["witness"] = r.witness;
    e["runtime_ms"] = r.runtime_ms;
    rs.push_back(std::move(e));
    if (r.verdict == "pass")
      ++pass;
    else if (r.verdict == "fail")
      ++fail;
    else if (r.verdict == "skip")
      ++skip;
    else
      ++sampled;
  }
  j["results"] = std::move(rs);
  ordered_json sum;
  sum["total"] = results.size();
  sum["pass"] = pass;
  sum["fail"] = fail;
  sum["skip"] = skip;
  sum["consistent_sampled"] = sampled;
  j["summary"] = std::move(sum);
  ordered_json cs = ordered_json::array();
  for (const CensusRow& row : census) {
    ordered_json e;
    e["family"] = row.family;
    e["n"] = row.n;
    e["k"] = row.k;
    e["count"] = row.count;
    cs.push_back(std::move(e));
  }
  j["census"] = std::move(cs);
  return j;
}

}  // namespace holescope

// Acceptance gate: twelve go/no-go criteria over the claim harness and the
// subdrawing machinery, each with a wall-clock budget. One line per
// criterion; exit status 0 only when all twelve hold.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "holescope/generators.hpp"
#include "holescope/geometry.hpp"
#include "holescope/harness.hpp"
#include "holescope/plane_sub.hpp"

using namespace holescope;

namespace {

struct Outcome {
  bool ok{};
  std::string detail;
};

CorpusSpec family_corpus(const std::string& family, std::vector<int> sizes) {
  CorpusSpec c;
  CorpusSpec::Family f;
  f.family = family;
  f.n_values = std::move(sizes);
  c.families.push_back(std::move(f));
  return c;
}

// run one claim over a corpus and demand `want` results of verdict `verdict`
Outcome expect_verdicts(const CorpusSpec& corpus, const std::string& claim,
                        size_t want, const char* verdict,
                        bool include_sampled = false) {
  HarnessOptions opt;
  opt.claims = {claim};
  opt.include_sampled = include_sampled;
  std::vector<ClaimResult> results = run_claims(corpus, opt);
  size_t hits = 0;
  for (const ClaimResult& r : results) {
    if (r.verdict == verdict) {
      ++hits;
      continue;
    }
    return {false, claim + " on " + r.corpus_item + ": " + r.verdict + " — " +
                       r.witness.dump()};
  }
  if (hits != want)
    return {false, claim + ": expected " + std::to_string(want) + " " +
                       verdict + " results, saw " + std::to_string(hits)};
  return {true, std::to_string(hits) + " " + verdict};
}

Outcome star_tree_gate() {
  std::vector<Drawing> drawings = {convex_gon(8),  convex_gon(12),
                                   twisted(8),     twisted(12),
                                   dn_family(9),   dn_family(11),
                                   random_convex_instance(16, 2),
                                   random_convex_instance(24, 3)};
  int witnesses = 0;
  for (const Drawing& d : drawings) {
    const size_t n = (size_t)d.n();
    for (VertexId v = 1; v <= d.n(); ++v) {
      PlaneSubdrawing p = find_plane_star_tree(d, v);  // self-validating
      if (p.star_edges.size() + p.tree_edges.size() != 2 * n - 3)
        return {false, d.label() + " v=" + std::to_string(v) +
                           ": edge count != 2n-3"};
      if (p.faces.size() != n - 1)
        return {false, d.label() + " v=" + std::to_string(v) +
                           ": face count != n-1"};
      ++witnesses;
    }
  }
  return {true, std::to_string(witnesses) + " witnesses, all 2n-3 edges / n-1 faces"};
}

Outcome determinism_gate() {
  HarnessOptions opt;  // all claims, deterministic subset
  CorpusSpec corpus = default_corpus();
  auto render = [&] {
    std::vector<ClaimResult> results = run_claims(corpus, opt);
    return report_document(corpus, opt, results).dump(2);
  };
  std::string first = render();
  std::string second = render();
  if (first != second) return {false, "reports differ between runs"};
  return {true, "two runs, byte-identical (" +
                    std::to_string(first.size()) + " bytes)"};
}

struct Criterion {
  const char* id;
  const char* what;
  double budget_s;  // 0 = untimed
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const CorpusSpec full = default_corpus();

  const std::vector<Criterion> gates = {
      {"A1", "empty-triangle count of nested drawings is 2n-4, n=4..12", 5,
       [&] { return expect_verdicts(family_corpus("twisted", {4, 5, 6, 7, 8, 9, 10, 11, 12}), "C1", 9, "pass"); }},
      {"A2", "nested drawings: no 5-gon, extreme pairs form a 4-hole, n=5..12", 10,
       [&] { return expect_verdicts(family_corpus("twisted", {5, 6, 7, 8, 9, 10, 11, 12}), "C2", 8, "pass"); }},
      {"A3", "rerouted drawings carry one crossing per 4-subset, n=6..12", 1,
       [&] { return expect_verdicts(family_corpus("twisted-prime", {6, 7, 8, 9, 10, 11, 12}), "C3", 7, "pass"); }},
      {"A4", "rerouted drawings admit no empty 4-triangulation, n=6..11", 60,
       [&] { return expect_verdicts(family_corpus("twisted-prime", {6, 7, 8, 9, 10, 11}), "C4", 6, "pass"); }},
      {"A5", "empty 4-cycle through every vertex, aggregate >= n/4, whole corpus", 120,
       [&] { return expect_verdicts(full, "C5", 79, "pass"); }},
      {"A6", "convex corpus: crossed edges are 4-hole chords, count >= ceil(n^2/4 - 5n/4 + 1)", 180,
       [&] { return expect_verdicts(full, "C6", 59, "pass"); }},
      {"A7", "minimal 4-gons are 4-holes; minimal 5/6-gons have convex inner sides", 180,
       [&] { return expect_verdicts(full, "C7", 59, "pass"); }},
      {"A8", "recursive family: crossing-maximal, census set equality, n=5,7,9,11", 60,
       [&] { return expect_verdicts(family_corpus("dn", {5, 7, 9, 11}), "C8", 4, "pass"); }},
      {"A9", "star+tree witnesses: 2n-3 edges, n-1 faces, crossing-free", 30,
       [&] { return star_tree_gate(); }},
      {"A10", "uncrossed edges never exceed 2n-2, whole corpus", 5,
       [&] { return expect_verdicts(full, "C10", 79, "pass"); }},
      {"A11", "20 random 30-point instances each contain a 6-hole (sampled)", 300,
       [&] { return expect_verdicts(full, "C11", 20, "consistent (sampled)", true); }},
      {"A12", "full verification reports are byte-identical across runs", 0,
       [&] { return determinism_gate(); }},
  };

  int failures = 0;
  for (const Criterion& g : gates) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = g.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool in_budget = g.budget_s == 0 || secs <= g.budget_s;
    bool ok = out.ok && in_budget;
    if (!ok) ++failures;

    std::string timing = g.budget_s == 0
                             ? ""
                             : (out.ok && !in_budget ? "OVER BUDGET " : "");
    std::printf("%s: %s  %s — %s  (%.2fs", g.id, ok ? "PASS" : "FAIL", g.what,
                (timing + out.detail).c_str(), secs);
    if (g.budget_s > 0) std::printf(" / %gs", g.budget_s);
    std::printf(")\n");
  }

  if (failures) std::printf("acceptance: %d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}

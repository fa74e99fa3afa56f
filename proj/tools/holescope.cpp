// Command-line front end: drawing-family generation, single-drawing analyses,
// the claim harness, and census tables. Exit codes: 0 success/pass, 1 claim
// or validation failure, 2 usage/input error.

#include <array>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holescope/generators.hpp"
#include "holescope/harness.hpp"

namespace {

using holescope::Drawing;
using holescope::DrawingDocument;
using holescope::VertexId;
using nlohmann::ordered_json;

std::string cycle_str(const std::vector<VertexId>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  auto pos = text.find("..");
  if (pos != std::string::npos) {
    int lo = std::stoi(text.substr(0, pos));
    int hi = std::stoi(text.substr(pos + 2));
    if (hi < lo) throw std::invalid_argument("bad size range: " + text);
    for (int n = lo; n <= hi; ++n) sizes.push_back(n);
    return sizes;
  }
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (!tok.empty()) sizes.push_back(std::stoi(tok));
  }
  if (sizes.empty()) throw std::invalid_argument("bad size list: " + text);
  return sizes;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path);
  out << content;
  if (!out) throw std::invalid_argument("write failed: " + path);
}

// ── generate ────────────────────────────────────────────────────────────

int cmd_generate(const std::string& family, int n, std::uint64_t seed,
                 const std::string& from_points, const std::string& out) {
  DrawingDocument doc = [&]() -> DrawingDocument {
    if (!from_points.empty()) {
      std::ifstream in(from_points);
      if (!in) throw std::invalid_argument("cannot open " + from_points);
      holescope::PointConfig cfg = holescope::parse_points(in);
      Drawing d = holescope::from_points(cfg);
      return {std::move(d), std::move(cfg)};
    }
    if (n <= 0) throw std::invalid_argument("--n is required");
    if (family == "convex") return {holescope::convex_gon(n), std::nullopt};
    if (family == "twisted") return {holescope::twisted(n), std::nullopt};
    if (family == "twisted-prime")
      return {holescope::twisted_prime(n), std::nullopt};
    if (family == "dn") return {holescope::dn_family(n), std::nullopt};
    if (family == "random-convex")
      return {holescope::random_convex_instance(n, seed),
              holescope::random_points(n, seed)};
    throw std::invalid_argument("unknown family: " + family);
  }();
  if (out.empty()) {
    std::cout << holescope::serialize_document(doc);
    std::cerr << doc.drawing.label() << ": " << doc.drawing.crossings().size()
              << " crossings\n";
  } else {
    holescope::save_document(doc, out);
    std::cout << doc.drawing.label() << ": " << doc.drawing.crossings().size()
              << " crossings\n";
  }
  return 0;
}

// ── analyze ─────────────────────────────────────────────────────────────

int cmd_analyze(const std::string& analysis, const std::string& file, int k,
                int through, bool deep, bool as_json, const std::string& svg) {
  DrawingDocument doc = holescope::load_document(file);
  const Drawing& d = doc.drawing;
  ordered_json j;
  std::ostringstream text;
  int exit_code = 0;

  if (analysis == "summary") {
    text << d.label() << ": n=" << d.n() << ", " << d.crossings().size()
         << " crossings, rotations "
         << (d.has_rotations() ? "present" : "absent") << ", points "
         << (doc.points ? "present" : "absent") << "\n";
    j["label"] = d.label();
    j["n"] = d.n();
    j["crossings"] = d.crossings().size();
    j["rotations"] = d.has_rotations();
    j["points"] = doc.points.has_value();
  } else if (analysis == "holes") {
    auto holes = holescope::enumerate_k_holes(d, k);
    text << k << "-holes: " << holes.size() << "\n";
    ordered_json arr = ordered_json::array();
    for (const auto& h : holes) {
      text << "  " << cycle_str(h.gon.order) << "\n";
      arr.push_back(holescope::to_json(h));
    }
    j["k"] = k;
    j["holes"] = std::move(arr);
  } else if (analysis == "empty-triangles") {
    auto tris = holescope::empty_triangles(d);
    text << "empty triangles: " << tris.size() << "\n";
    ordered_json arr = ordered_json::array();
    for (const auto& t : tris) {
      text << "  (" << t.vertices[0] << "," << t.vertices[1] << ","
           << t.vertices[2] << ") side " << to_string(t.empty_side_tag)
           << "\n";
      arr.push_back(holescope::to_json(t));
    }
    j["empty_triangles"] = std::move(arr);
  } else if (analysis == "empty-cycles") {
    auto cycles = holescope::enumerate_empty_cycles(d, k);
    text << "empty " << k << "-cycles: " << cycles.size() << "\n";
    ordered_json arr = ordered_json::array();
    for (const auto& w : cycles) {
      text << "  " << cycle_str(w.cycle) << " side "
           << to_string(w.empty_side_tag) << "\n";
      arr.push_back(holescope::to_json(w));
    }
    j["k"] = k;
    j["empty_cycles"] = std::move(arr);
  } else if (analysis == "convexity") {
    auto v = holescope::is_convex_drawing(d);
    if (v.convex) {
      text << "convex\n";
    } else {
      text << "not convex, triangle (" << (*v.counterexample)[0] << ","
           << (*v.counterexample)[1] << "," << (*v.counterexample)[2]
           << ") has no convex side\n";
    }
    j["convex"] = v.convex;
    if (v.counterexample) j["triangle"] = *v.counterexample;
  } else if (analysis == "empty4") {
    ordered_json arr = ordered_json::array();
    std::vector<VertexId> targets;
    if (through > 0)
      targets.push_back(through);
    else
      for (VertexId v = 1; v <= d.n(); ++v) targets.push_back(v);
    for (VertexId v : targets) {
      auto w = holescope::empty_4cycle_through(d, v);
      text << "through " << v << ": " << cycle_str(w.cycle) << " side "
           << to_string(w.empty_side_tag) << "\n";
      ordered_json e = holescope::to_json(w);
      e["through"] = v;
      arr.push_back(std::move(e));
    }
    j["empty_4cycles"] = std::move(arr);
  } else if (analysis == "validate") {
    std::vector<std::string> violations = holescope::validate(d);
    if (deep) {
      auto deep_v = holescope::rotation_consistency_violations(d);
      violations.insert(violations.end(), deep_v.begin(), deep_v.end());
      if (doc.points) {
        try {
          Drawing geo = holescope::from_points(*doc.points);
          if (geo.crossings() != d.crossings())
            violations.push_back("crossings do not match the point set");
        } catch (const std::exception& e) {
          violations.push_back(std::string("point set invalid: ") + e.what());
        }
      }
    }
    if (violations.empty()) {
      text << "valid\n";
    } else {
      for (const auto& v : violations) text << v << "\n";
      exit_code = 1;
    }
    j["valid"] = violations.empty();
    j["violations"] = violations;
  } else {
    throw std::invalid_argument("unknown analysis: " + analysis);
  }

  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text.str();
  if (!svg.empty()) write_file(svg, holescope::render_svg(doc));
  return exit_code;
}

// ── verify ──────────────────────────────────────────────────────────────

int cmd_verify(const std::string& claims_arg, const std::string& corpus_file,
               const std::string& report_file, bool include_sampled,
               bool timings, int threads) {
  holescope::CorpusSpec corpus;
  if (corpus_file.empty()) {
    corpus = holescope::default_corpus();
  } else {
    std::ifstream in(corpus_file);
    if (!in) throw std::invalid_argument("cannot open " + corpus_file);
    nlohmann::json cj;
    try {
      cj = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("bad corpus JSON: ") + e.what());
    }
    auto slash = corpus_file.find_last_of('/');
    corpus = holescope::corpus_from_json(
        cj, slash == std::string::npos ? "" : corpus_file.substr(0, slash));
  }

  holescope::HarnessOptions opt;
  if (!claims_arg.empty() && claims_arg != "all") {
    std::istringstream in(claims_arg);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
      while (!tok.empty() && tok.back() == ' ') tok.pop_back();
      if (!tok.empty()) opt.claims.push_back(tok);
    }
  }
  opt.include_sampled = include_sampled;
  opt.timings = timings;
  opt.threads = threads;

  auto results = holescope::run_claims(corpus, opt);
  auto report = holescope::report_document(corpus, opt, results);
  if (!report_file.empty()) write_file(report_file, report.dump(2) + "\n");

  // aggregate per claim, registry order
  std::map<std::string, std::array<long, 4>> agg;  // pass fail skip sampled
  for (const auto& r : results) {
    auto& a = agg[r.claim_id];
    if (r.verdict == "pass")
      ++a[0];
    else if (r.verdict == "fail")
      ++a[1];
    else if (r.verdict == "skip")
      ++a[2];
    else
      ++a[3];
  }
  for (const std::string& id : holescope::known_claims()) {
    auto it = agg.find(id);
    if (it == agg.end()) continue;
    const auto& a = it->second;
    std::cout << id << ": " << a[0] << " pass";
    if (a[1]) std::cout << ", " << a[1] << " fail";
    if (a[2]) std::cout << ", " << a[2] << " skip";
    if (a[3]) std::cout << ", " << a[3] << " consistent (sampled)";
    std::cout << "\n";
  }
  long fails = 0;
  int shown = 0;
  for (const auto& r : results) {
    if (r.verdict != "fail") continue;
    ++fails;
    if (shown < 10) {
      std::cout << "  FAIL " << r.claim_id << " " << r.corpus_item << ": "
                << r.witness.dump() << "\n";
      ++shown;
    }
  }
  if (fails > shown)
    std::cout << "  (" << (fails - shown) << " more failures in the report)\n";
  std::cout << (fails ? "FAIL" : "PASS") << " (" << results.size()
            << " results)\n";
  return fails ? 1 : 0;
}

// ── census ──────────────────────────────────────────────────────────────

int cmd_census(const std::string& what, const std::string& family,
               const std::string& sizes_arg, int k, bool csv,
               const std::string& report_file) {
  if (what != "empty-cycles")
    throw std::invalid_argument("unknown census table: " + what);
  auto rows = holescope::census_empty_cycles(family, parse_sizes(sizes_arg), k);
  if (csv) {
    std::cout << "family,n,k,count\n";
    for (const auto& r : rows)
      std::cout << r.family << "," << r.n << "," << r.k << "," << r.count
                << "\n";
  } else {
    std::cout << "family  n   k  count\n";
    for (const auto& r : rows) {
      std::cout << r.family;
      for (std::size_t i = r.family.size(); i < 8; ++i) std::cout << ' ';
      std::string n = std::to_string(r.n);
      std::cout << n;
      for (std::size_t i = n.size(); i < 4; ++i) std::cout << ' ';
      std::string ks = std::to_string(r.k);
      std::cout << ks;
      for (std::size_t i = ks.size(); i < 3; ++i) std::cout << ' ';
      std::cout << r.count << "\n";
    }
  }
  if (!report_file.empty()) {
    auto report = holescope::report_document(holescope::CorpusSpec{},
                                             holescope::HarnessOptions{}, {},
                                             rows);
    write_file(report_file, report.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simple drawings of K_n: families, holes, and claim checks"};
  app.set_version_flag("--version", holescope::kToolVersion);
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "generate a drawing family member");
  std::string g_family, g_points, g_out;
  int g_n = 0;
  std::uint64_t g_seed = 0;
  gen->add_option("--family", g_family,
                  "convex | twisted | twisted-prime | dn | random-convex");
  gen->add_option("--n", g_n, "vertex count");
  gen->add_option("--seed", g_seed, "instance seed (random-convex)");
  gen->add_option("--from-points", g_points, "compile an 'x y' point file");
  gen->add_option("--out", g_out, "output path (default: stdout)");

  auto* an = app.add_subcommand("analyze", "analyze a drawing file");
  std::string a_analysis, a_file, a_svg;
  int a_k = 4, a_through = 0;
  bool a_deep = false, a_json = false;
  an->add_option("analysis", a_analysis,
                 "summary | holes | empty-triangles | empty-cycles | "
                 "convexity | empty4 | validate")
      ->required();
  an->add_option("file", a_file, "drawing JSON file")->required();
  an->add_option("--k", a_k, "gon / cycle size (default 4)");
  an->add_option("--through", a_through, "restrict empty4 to one vertex");
  an->add_flag("--deep", a_deep, "validate: also check rotations vs crossings");
  an->add_flag("--json", a_json, "machine-readable output");
  an->add_option("--svg", a_svg, "write a figure (geometric drawings only)");

  auto* ver = app.add_subcommand("verify", "run the claim harness");
  std::string v_claims = "all", v_corpus, v_report;
  bool v_sampled = false, v_timings = false;
  int v_threads = 0;
  ver->add_option("--claims", v_claims, "comma-separated claim ids, or 'all'");
  ver->add_option("--corpus", v_corpus, "corpus spec JSON (default: built-in)");
  ver->add_option("--report", v_report, "write the JSON report here");
  ver->add_flag("--include-sampled", v_sampled,
                "also run the sampled consistency claims");
  ver->add_flag("--timings", v_timings, "record per-claim runtimes");
  ver->add_option("--threads", v_threads,
                  "worker threads (default: HOLESCOPE_THREADS, then hardware)");

  auto* cen = app.add_subcommand("census", "tabulate counts across sizes");
  std::string c_what, c_family, c_sizes, c_report;
  int c_k = 4;
  bool c_csv = false;
  cen->add_option("what", c_what, "empty-cycles")->required();
  cen->add_option("--family", c_family, "drawing family")->required();
  cen->add_option("--n", c_sizes, "sizes: '5..11' or '5,7,9'")->required();
  cen->add_option("--k", c_k, "cycle length (default 4)");
  cen->add_flag("--csv", c_csv, "CSV instead of a table");
  cen->add_option("--report", c_report, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems exit 2
  }

  try {
    if (gen->parsed())
      return cmd_generate(g_family, g_n, g_seed, g_points, g_out);
    if (an->parsed())
      return cmd_analyze(a_analysis, a_file, a_k, a_through, a_deep, a_json,
                         a_svg);
    if (ver->parsed())
      return cmd_verify(v_claims, v_corpus, v_report, v_sampled, v_timings,
                        v_threads);
    return cmd_census(c_what, c_family, c_sizes, c_k, c_csv, c_report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

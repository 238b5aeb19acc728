// acceptance.cpp -- end-to-end acceptance suite. Each criterion prints
// one PASS/FAIL line; the exit code is the number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "subwin/classify.hpp"
#include "subwin/config.hpp"
#include "subwin/grammar.hpp"
#include "subwin/lexstats.hpp"
#include "subwin/profile.hpp"
#include "subwin/report.hpp"
#include "subwin/sterm.hpp"
#include "subwin/window.hpp"

namespace fs = std::filesystem;
using namespace subwin;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
  std::cout << "C" << number << " " << name << ": " << (pass ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " - " << detail;
  std::cout << "\n";
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

long double choose_exact(unsigned n, unsigned k) {
  long double c = 1.0L;
  for (unsigned i = 0; i < k; ++i) c = c * (long double)(n - i) / (long double)(i + 1);
  return c;
}

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  double u01() { return double(engine() >> 11) * 0x1p-53; }
};

Document doc_of(const std::string& id, const std::vector<std::string>& words) {
  Document d;
  d.id = id;
  TokenSeq seq;
  seq.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) seq.push_back(Token{words[i], {}, i});
  d.fields[FieldName::fulltext] = std::move(seq);
  return d;
}

ResolvedSystem fixed_terms(std::unordered_set<std::string> terms) {
  STermSet s;
  s.label = "fixture";
  s.terms = std::move(terms);
  return ResolvedSystem::fixed(std::move(s));
}

// ---------------------------------------------------------------------
// C1: pmf against direct factorial evaluation; tails sum correctly.
void criterion_1() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (std::size_t omega = 1; omega <= 8; ++omega) {
    for (double p : {0.0, 0.1, 0.5, 0.9, 1.0}) {
      long double tail_acc = 0.0L;
      for (std::size_t r = omega + 1; r-- > 0;) {
        const long double expect =
            choose_exact(unsigned(omega), unsigned(r)) * powl((long double)p, (long double)r) *
            powl(1.0L - (long double)p, (long double)(omega - r));
        worst = std::max(worst, std::fabs(binomial_pmf(r, omega, p) - double(expect)));
        tail_acc += expect;
        worst = std::max(worst, std::fabs(binomial_tail(r, omega, p) - double(tail_acc)));
      }
      worst = std::max(worst, std::fabs(binomial_tail(0, omega, p) - 1.0));
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "max abs error " << worst << ", " << elapsed << " s";
  report(1, "binomial oracle", worst <= 1e-12 && elapsed < 1.0, detail.str());
}

// C2: seeded Monte-Carlo false-positive bound through the simulate path.
void criterion_2() {
  const auto start = Clock::now();
  const SimulateResult res = simulate_false_positives(100000, 3, 0.1, 0.03, 42);
  bool cli_ok = true;
#ifdef SUBWIN_CLI_PATH
  const std::string cmd = std::string(SUBWIN_CLI_PATH) +
                          " simulate --windows 100000 --p 0.1 --seed 42 > /dev/null";
  cli_ok = std::system(cmd.c_str()) == 0;
#endif
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "fraction " << res.fraction << " vs bound " << res.bound << ", cli "
         << (cli_ok ? "ok" : "failed") << ", " << elapsed << " s";
  report(2, "false-positive bound", res.within_bound && cli_ok && elapsed < 10.0, detail.str());
}

// C3: sc*|S| == wwd*|P| == |S and P| and q == sc*wwd on every analyzed
// corpus/system pair of the bundled data.
void criterion_3() {
  RunConfig config;
  config.pretagged = true;
  config.dictionary_path = std::string(SUBWIN_DATA_DIR) + "/dictionary.txt";
  const std::string base = std::string(SUBWIN_DATA_DIR) + "/corpora/";
  const auto corpora = load_inputs(
      config, {base + "synmed.json", base + "synexp.json", base + "syntheo.json",
               base + "synling.json"});
  const Corpus combined = combined_corpus(corpora);

  std::size_t checked = 0;
  bool ok = true;
  std::string first_bad;
  for (const Corpus& corpus : corpora) {
    for (const std::string& name : default_system_names(corpus, config, true)) {
      const ResolvedSystem sys = resolve_named_system(name, corpus, &combined, config, false);
      const SWProfile prof = sw_profile(corpus, sys, config.window_spec());
      const bool numerators =
          (prof.s_positions == 0 ||
           std::llround(prof.sc * double(prof.s_positions)) ==
               (long long)prof.overlap_positions) &&
          (prof.covered_positions == 0 ||
           std::llround(prof.wwd * double(prof.covered_positions)) ==
               (long long)prof.overlap_positions);
      const bool q_ok = std::fabs(prof.q - prof.sc * prof.wwd) <= 1e-12;
      if (!(numerators && q_ok) && first_bad.empty())
        first_bad = corpus.name + "/" + name;
      ok = ok && numerators && q_ok;
      ++checked;
    }
  }
  std::ostringstream detail;
  detail << checked << " corpus/system pairs";
  if (!first_bad.empty()) detail << ", first failure " << first_bad;
  report(3, "SC/WWD shared numerator", ok && checked >= 20, detail.str());
}

// C4: arithmetic consistency of the published reference triples (SC, WWD,
// Q) and the 25 published delta rows, at the stated tolerances.
void criterion_4() {
  struct Triple {
    const char* row;
    double sc, wwd, q;
  };
  // 24 triples from the size-3 window table, 14 from its stopword-free
  // variant, read left to right.
  const std::vector<Triple> triples = {
      {"t2 title a", .69, .34, .23},    {"t2 title b", .59, .29, .17},
      {"t2 title c", .87, .41, .36},    {"t2 title d", .56, .29, .16},
      {"t2 abstract a", .26, .15, .04}, {"t2 abstract b", .24, .14, .03},
      {"t2 abstract c", .32, .19, .06}, {"t2 abstract d", .34, .21, .07},
      {"t2 citation a", .39, .22, .09}, {"t2 citation b", .35, .17, .06},
      {"t2 citation c", .36, .20, .07}, {"t2 sechdr a", .51, .28, .15},
      {"t2 sechdr b", .63, .32, .20},   {"t2 sechdr c", .60, .30, .18},
      {"t2 mesh d", .98, .54, .53},     {"t2 dict d", .42, .23, .10},
      {"t2 bi a", .98, .43, .42},       {"t2 bi b", .99, .45, .45},
      {"t2 bi c", .95, .47, .45},       {"t2 bi d", .92, .43, .43},
      {"t2 idf a", .38, .18, .07},      {"t2 idf b", .38, .19, .07},
      {"t2 idf c", .37, .22, .08},      {"t2 idf d", .36, .20, .08},
      {"t3 title a", .99, .51, .51},    {"t3 title b", .99, .52, .51},
      {"t3 title c", .99, .55, .55},    {"t3 title d", .96, .49, .47},
      {"t3 abstract a", .75, .41, .31}, {"t3 abstract b", .73, .40, .29},
      {"t3 abstract c", .85, .45, .38}, {"t3 abstract d", .55, .31, .17},
      {"t3 citation a", .97, .49, .47}, {"t3 citation b", .94, .52, .49},
      {"t3 citation c", .78, .41, .32}, {"t3 sechdr a", .96, .49, .47},
      {"t3 sechdr b", .98, .49, .48},   {"t3 sechdr c", .99, .50, .50},
  };
  std::size_t bad_triples = 0;
  double worst_triple = 0.0;
  for (const Triple& t : triples) {
    const double diff = std::fabs(t.q - t.sc * t.wwd);
    worst_triple = std::max(worst_triple, diff);
    if (diff > 0.005 + 1e-12) ++bad_triples;
  }

  struct DeltaRow {
    double cf, hepex, hepth, cmpling, delta;
  };
  // The 25 published four-corpus rows with their printed delta values.
  const std::vector<DeltaRow> deltas = {
      {1.28, 0.28, 1.25, -3.71, 4.02},   {1.40, 1.22, 0.35, -1.27, 3.54},
      {1.02, 1.44, -0.82, -0.25, 3.53},  {2.10, 0.67, -0.98, 0.37, 3.38},
      {1.62, 1.32, -0.69, 0.41, 3.22},   {1.01, 1.00, -0.53, -0.65, 3.19},
      {2.01, 1.34, -0.30, 0.69, 2.96},   {1.52, 1.57, 0.01, 0.16, 2.92},
      {1.24, 0.93, 0.21, -0.90, 2.86},   {-0.86, -1.14, -2.77, -2.09, 2.85},
      {1.19, 1.10, 0.00, -0.50, 2.80},   {2.21, 1.52, 1.35, -0.39, 2.77},
      {1.44, 0.14, -0.93, -0.22, 2.74},  {-0.58, 0.24, 1.52, 1.45, -3.32},
      {1.41, 1.69, 3.48, 3.07, -3.45},   {-0.17, -0.06, 1.46, 1.86, -3.55},
      {-0.25, -0.51, 0.35, 2.73, -3.84}, {-0.97, -1.08, 1.54, 0.34, -3.94},
      {-2.33, -2.66, -0.53, -0.51, -3.95}, {-1.44, -2.08, 0.51, 0.00, -4.03},
      {-0.33, 0.23, 2.14, 1.96, -4.20},  {0.17, -3.40, 0.97, 0.06, -4.26},
      {1.67, 0.05, 1.35, 4.75, -4.37},   {0.90, -1.33, 2.55, 2.44, -5.43},
      {-1.54, -1.16, 1.15, 1.65, -5.50},
  };
  std::size_t bad_deltas = 0;
  double worst_delta = 0.0;
  for (const DeltaRow& row : deltas) {
    const double recomputed = row.cf + row.hepex - row.hepth - row.cmpling;
    const double diff = std::fabs(row.delta - recomputed);
    worst_delta = std::max(worst_delta, diff);
    if (diff > 0.01 + 1e-12) ++bad_deltas;
  }

  std::ostringstream detail;
  detail << bad_triples << "/38 triples exceed 0.005 (worst " << worst_triple << "); "
         << bad_deltas << "/25 delta rows exceed 0.01 (worst " << worst_delta << ")";
  report(4, "reference-table arithmetic", bad_triples == 0 && bad_deltas == 0, detail.str());
}

// C5: overlap matrices against brute-force ratios on five fixtures.
void criterion_5() {
  auto keys = [](std::initializer_list<int> starts) {
    std::vector<WindowKey> v;
    for (int s : starts) v.emplace_back("d", std::size_t(s));
    return v;
  };
  bool ok = true;
  std::string detail;

  auto brute_check = [&](const OverlapMatrix& m, const std::vector<std::vector<WindowKey>>& sets,
                         const std::string& label) {
    for (std::size_t r = 0; r < m.systems.size(); ++r) {
      for (std::size_t c = 0; c < m.systems.size(); ++c) {
        std::size_t inter = 0;
        for (const WindowKey& a : sets[r])
          for (const WindowKey& b : sets[c])
            if (a == b) ++inter;
        const double expect = double(inter) / double(sets[c].size());
        if (m.cells[r][c] != expect) {
          ok = false;
          if (detail.empty()) detail = label + " cell mismatch";
        }
      }
    }
  };

  // 1: j strictly inside k.
  {
    const auto j = keys({0, 10, 20, 30});
    const auto k = keys({0, 10, 20, 30, 40, 50, 60, 70});
    const OverlapMatrix m = overlap_from_sets({"j", "k"}, {j, k});
    brute_check(m, {j, k}, "subset");
    if (m.cells[1][0] != 1.0) { ok = false; detail = "Pr(k|j) != 1"; }
    if (!(m.column_marks[0] == +1 && m.row_marks[0] == -1 && m.column_marks[1] == -1 &&
          m.row_marks[1] == +1)) {
      ok = false;
      if (detail.empty()) detail = "subset marks";
    }
  }
  // 2: identical systems.
  {
    const auto a = keys({1, 2, 3});
    const OverlapMatrix m = overlap_from_sets({"x", "y"}, {a, a});
    brute_check(m, {a, a}, "identical");
    if (m.cells[0][1] != 1.0 || m.cells[1][0] != 1.0) { ok = false; detail = "identical cells"; }
    if (m.column_marks[0] != 0 || m.row_marks[1] != 0) { ok = false; detail = "identical marks"; }
  }
  // 3: disjoint systems.
  {
    const auto a = keys({0, 2, 4});
    const auto b = keys({1, 3});
    const OverlapMatrix m = overlap_from_sets({"a", "b"}, {a, b});
    brute_check(m, {a, b}, "disjoint");
    if (m.cells[0][1] != 0.0 || m.cells[1][0] != 0.0) { ok = false; detail = "disjoint cells"; }
    if (m.column_marks[0] != 0) { ok = false; detail = "disjoint marks"; }
  }
  // 4: three systems with hand-computed ratios and marks.
  {
    const auto A = keys({0, 2, 4, 6, 8, 10});
    const auto B = keys({0, 2, 4, 12, 14});
    const auto C = keys({4, 6, 12, 20});
    const OverlapMatrix m = overlap_from_sets({"A", "B", "C"}, {A, B, C});
    brute_check(m, {A, B, C}, "triple");
    // Hand derivation: column C dominates (0.5 > 1/3 and 0.5 > 0.4);
    // column A is dominated (0.5 < 0.6 and 1/3 < 0.5).
    if (!(m.column_marks[2] == +1 && m.row_marks[2] == -1 && m.column_marks[0] == -1 &&
          m.row_marks[0] == +1 && m.column_marks[1] == 0)) {
      ok = false;
      if (detail.empty()) detail = "triple marks";
    }
  }
  // 5: nested chain with an absent system.
  {
    const auto P = keys({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    const auto Q = keys({1, 2, 3, 4, 5});
    const auto R = keys({1, 2});
    const OverlapMatrix m = overlap_from_sets({"P", "Q", "R", "E"}, {P, Q, R, {}});
    brute_check(m, {P, Q, R}, "chain");
    if (m.absent != std::vector<std::string>{"E"}) { ok = false; detail = "absent list"; }
    if (!(m.column_marks[2] == +1 && m.row_marks[0] == +1)) {
      ok = false;
      if (detail.empty()) detail = "chain marks";
    }
  }
  report(5, "overlap oracle", ok, detail.empty() ? "5 fixtures exact" : detail);
}

// C6: location-curve shape recovery.
void criterion_6() {
  bool ok = true;
  std::string detail;

  // Packed: S tokens confined to the final 20% of every fulltext.
  {
    std::vector<Document> docs;
    for (int d = 0; d < 5; ++d) {
      std::vector<std::string> words(100, "f");
      for (std::size_t pos : {80u, 82u, 84u, 86u, 88u, 90u}) words[pos] = "s";
      words[96] = words[97] = words[98] = words[99] = "s";
      docs.push_back(doc_of("d" + std::to_string(d), words));
    }
    Corpus corpus;
    corpus.name = "packed";
    corpus.documents = docs;
    WindowSpec spec;
    spec.omega = 2;
    const LocationCurve curve = location_curve(corpus, fixed_terms({"s"}), spec);
    double max_rate = -1.0, max_pos = -1.0;
    for (const CurvePoint& pt : curve.points) {
      if (pt.position <= 0.6 && pt.rate >= 1.0) {
        ok = false;
        detail = "early rate >= 1";
      }
      if (pt.rate > max_rate) {
        max_rate = pt.rate;
        max_pos = pt.position;
      }
    }
    if (max_pos != 1.0) {
      ok = false;
      if (detail.empty()) detail = "max not at final point";
    }
  }

  // Uniform: seeded random placement must come out flat.
  std::size_t windows = 0;
  double ratio = 0.0;
  {
    Rng rng(20240607);
    std::vector<Document> docs;
    for (int d = 0; d < 600; ++d) {
      std::vector<std::string> words(2000);
      for (auto& w : words) w = rng.u01() < 0.15 ? "s" : "f";
      docs.push_back(doc_of("d" + std::to_string(d), words));
    }
    Corpus corpus;
    corpus.name = "uniform";
    corpus.documents = docs;
    WindowSpec spec;
    spec.omega = 2;
    const LocationCurve curve = location_curve(corpus, fixed_terms({"s"}), spec);
    double lo = 1e9, hi = 0.0;
    for (const CurvePoint& pt : curve.points) {
      windows += pt.windows;
      lo = std::min(lo, pt.rate);
      hi = std::max(hi, pt.rate);
    }
    ratio = lo > 0.0 ? hi / lo : 1e9;
    if (windows < 10000) {
      ok = false;
      detail = "too few windows";
    }
    if (ratio >= 1.5) {
      ok = false;
      if (detail.empty()) detail = "uniform max/min ratio too large";
    }
  }
  std::ostringstream extra;
  extra << "uniform ratio " << ratio << " over " << windows << " binned windows";
  report(6, "location-curve shapes", ok, detail.empty() ? extra.str() : detail);
}

// C7: TTR values and a two-group ANOVA with hand-computed F.
void criterion_7() {
  bool ok = true;
  std::string detail;

  TokenSeq abc, aaaa;
  for (std::size_t i = 0; i < 3; ++i) abc.push_back(Token{std::string(1, char('a' + i)), {}, i});
  for (std::size_t i = 0; i < 4; ++i) aaaa.push_back(Token{"a", {}, i});
  if (ttr(abc) != 1.0) { ok = false; detail = "ttr(abc)"; }
  if (ttr(aaaa) != 0.25) { ok = false; detail = "ttr(aaaa)"; }

  // Two 20-document groups, means 0.20 and 0.29, sd 0.01 by alternating
  // +-0.01 exactly.
  std::vector<double> lo, hi;
  for (int i = 0; i < 20; ++i) {
    lo.push_back(0.20 + (i % 2 ? 0.01 : -0.01));
    hi.push_back(0.29 + (i % 2 ? 0.01 : -0.01));
  }
  const AnovaResult res = anova_ttr({{"lo", lo}, {"hi", hi}});

  // Hand computation: group means 0.20 and 0.29, grand mean 0.245,
  // SSB = 20*(0.045^2)*2 = 0.081, SSW = 40*(0.01^2) = 0.004,
  // F = 0.081 / (0.004/38) = 769.5.
  const double hand_f = 0.081 / (0.004 / 38.0);
  if (std::fabs(res.f - hand_f) > 1e-6 * hand_f) { ok = false; detail = "F vs hand"; }
  if (!res.significant_01) { ok = false; detail = "not significant at .01"; }

  std::ostringstream extra;
  extra << "F " << res.f << " (hand " << hand_f << "), p " << res.p_value;
  report(7, "ttr and anova", ok, detail.empty() ? extra.str() : detail);
}

// C8: cubic recovery to 1e-8 relative coefficient error.
void criterion_8() {
  const std::vector<double> coef = {12.0, -3.5, 0.25, 0.0625};
  std::vector<double> x, y;
  for (int i = 1; i <= 30; ++i) {
    const double xi = double(i) * 20.0;
    x.push_back(xi);
    y.push_back(coef[0] + coef[1] * xi + coef[2] * xi * xi + coef[3] * xi * xi * xi);
  }
  const PolyFit fit = polyfit(x, y, 3);
  double worst = 0.0;
  for (int k = 0; k < 4; ++k)
    worst = std::max(worst, std::fabs(fit.coefficients[k] - coef[k]) / std::fabs(coef[k]));
  std::ostringstream detail;
  detail << "worst relative coefficient error " << worst;
  report(8, "cubic-fit recovery", worst <= 1e-8, detail.str());
}

// C9: BI antisymmetry over a 100-point grid; IDF exact at 1/16.
void criterion_9() {
  double worst = 0.0;
  for (int i = 1; i <= 10; ++i)
    for (int j = 1; j <= 10; ++j) {
      const double p = i / 11.0, q = j / 11.0;
      worst = std::max(worst, std::fabs(bi_weight(p, q) + bi_weight(q, p)));
    }
  const bool idf_exact = idf_weight(1.0 / 16.0) == 4.0;
  std::ostringstream detail;
  detail << "max |w(p,q)+w(q,p)| " << worst << ", idf(1/16) "
         << (idf_exact ? "== 4 exactly" : "inexact");
  report(9, "weight laws", worst <= 1e-12 && idf_exact, detail.str());
}

// C10: grammar pipeline on the 200-token hand-tagged fixture.
void criterion_10() {
  bool ok = true;
  std::string detail;

  auto motif_doc = [](const std::string& id, std::size_t repeats) {
    Document d;
    d.id = id;
    TokenSeq seq;
    for (std::size_t r = 0; r < repeats; ++r) {
      seq.push_back(Token{"s", "noun", seq.size()});
      seq.push_back(Token{"f", "noun", seq.size()});
      seq.push_back(Token{"f", "adj", seq.size()});
      seq.push_back(Token{"s", "adj", seq.size()});
    }
    d.fields[FieldName::fulltext] = std::move(seq);
    return d;
  };

  Corpus corpus;
  corpus.name = "fixture";
  corpus.documents = {motif_doc("d", 50)};  // 200 tokens
  WindowSpec spec;
  spec.alpha = 0.6;  // length-1 SWs at S tokens, length-2 SWs at s,s pairs

  const GramTable table =
      construct_counts(corpus, fixed_terms({"s"}), spec, {1, 2}, 1);

  // Manual enumeration of the periodic fixture.
  const std::map<std::string, std::pair<std::size_t, std::size_t>> expected = {
      {"noun", {100, 50}},    {"adj", {100, 50}},     {"noun noun", {50, 0}},
      {"noun adj", {50, 0}},  {"adj adj", {50, 0}},   {"adj noun", {49, 49}},
  };
  std::size_t matched = 0;
  for (const GramStat& stat : table.stats) {
    auto it = expected.find(stat.construct.str());
    if (it == expected.end()) {
      ok = false;
      detail = "unexpected construct " + stat.construct.str();
      continue;
    }
    if (stat.n != it->second.first || stat.n_sw != it->second.second) {
      ok = false;
      detail = "counts for " + stat.construct.str();
    }
    ++matched;
  }
  if (matched != expected.size()) {
    ok = false;
    if (detail.empty()) detail = "missing constructs";
  }

  // Proportionally distributed constructs carry no evidence.
  for (const GramStat& stat : table.stats)
    if (stat.construct.str() == "noun" || stat.construct.str() == "adj")
      if (std::fabs(stat.m_g) > 0.01) { ok = false; detail = "proportional m_g"; }

  // Orientation swap negates delta exactly.
  Corpus other;
  other.name = "other";
  other.documents = {motif_doc("o", 45)};
  const GramTable table_b =
      construct_counts(other, fixed_terms({"s"}), spec, {1, 2}, 1);
  const DeltaTPTable fwd = delta_tp(
      {{"fixture", &table}, {"other", &table_b}},
      {{"fixture", Orientation::practice}, {"other", Orientation::theory}});
  const DeltaTPTable rev = delta_tp(
      {{"fixture", &table}, {"other", &table_b}},
      {{"fixture", Orientation::theory}, {"other", Orientation::practice}});
  for (const TheoryPracticeRow& row : fwd.rows)
    for (const TheoryPracticeRow& mirrored : rev.rows)
      if (mirrored.construct == row.construct && mirrored.delta_tp != -row.delta_tp) {
        ok = false;
        detail = "delta antisymmetry";
      }

  report(10, "grammar pipeline oracle", ok,
         detail.empty() ? "counts, m_g, and antisymmetry verified" : detail);
}

// C11: report-all determinism through the CLI binary.
void criterion_11(Clock::time_point suite_start) {
  bool ok = true;
  std::string detail;
#ifdef SUBWIN_CLI_PATH
  const fs::path root = fs::temp_directory_path() / "subwin-acceptance";
  fs::remove_all(root);
  fs::create_directories(root);
  const std::string data = SUBWIN_DATA_DIR;
  const std::string inputs = data + "/corpora/synmed.json " + data + "/corpora/synexp.json " +
                             data + "/corpora/syntheo.json " + data + "/corpora/synling.json";
  const std::string flags =
      " report-all --pretagged --dictionary " + data + "/dictionary.txt --stoplist " + data +
      "/stoplist.txt --tagmap " + data + "/tagmap.tsv ";
  const std::string run1 = std::string(SUBWIN_CLI_PATH) + flags + "--out " +
                           (root / "run1").string() + " " + inputs;
  const std::string run2 = std::string(SUBWIN_CLI_PATH) + flags + "--out " +
                           (root / "run2").string() + " " + inputs;
  if (std::system(run1.c_str()) != 0 || std::system(run2.c_str()) != 0) {
    ok = false;
    detail = "report-all exited nonzero";
  } else {
    auto slurp_tree = [](const fs::path& base) {
      std::map<std::string, std::string> tree;
      for (const auto& entry : fs::recursive_directory_iterator(base)) {
        if (!entry.is_regular_file()) continue;
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        tree[fs::relative(entry.path(), base).string()] = buf.str();
      }
      return tree;
    };
    const auto tree1 = slurp_tree(root / "run1");
    const auto tree2 = slurp_tree(root / "run2");
    if (tree1.empty() || tree1.size() != tree2.size()) {
      ok = false;
      detail = "output trees differ in file count";
    } else {
      for (const auto& [rel, content] : tree1) {
        auto it = tree2.find(rel);
        if (it == tree2.end() || it->second != content) {
          ok = false;
          detail = "byte difference in " + rel;
          break;
        }
      }
    }
    if (ok) {
      std::ostringstream extra;
      extra << tree1.size() << " files byte-identical";
      detail = extra.str();
    }
  }
  fs::remove_all(root);
#else
  ok = false;
  detail = "CLI path not configured";
#endif
  const double elapsed = seconds_since(suite_start);
  std::ostringstream extra;
  extra << detail << ", suite elapsed " << elapsed << " s";
  report(11, "report-all determinism", ok && elapsed < 60.0, extra.str());
}

}  // namespace

int main() {
  const auto suite_start = Clock::now();
  try {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11(suite_start);
  } catch (const std::exception& e) {
    std::cout << "acceptance suite aborted: " << e.what() << "\n";
    return 99;
  }
  std::cout << "ACCEPTANCE: " << (11 - failures) << "/11 criteria passed\n";
  return failures;
}

// window.cpp -- binomial significance testing of fulltext windows.
#include "subwin/window.hpp"

#include "subwin/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "subwin/stats.hpp"

namespace subwin {

double binomial_pmf(std::size_t r, std::size_t omega, double p) {
  if (r > omega) throw Error("binomial_pmf: r exceeds omega");
  if (!(p >= 0.0 && p <= 1.0)) throw Error("binomial_pmf: p outside [0,1]");
  if (p == 0.0) return r == 0 ? 1.0 : 0.0;
  if (p == 1.0) return r == omega ? 1.0 : 0.0;
  const double log_pmf = log_binomial_coefficient(omega, r) + double(r) * std::log(p) +
                         double(omega - r) * std::log1p(-p);
  return std::exp(log_pmf);
}

double binomial_tail(std::size_t r, std::size_t omega, double p) {
  if (r > omega) throw Error("binomial_tail: r exceeds omega");
  if (!(p >= 0.0 && p <= 1.0)) throw Error("binomial_tail: p outside [0,1]");
  if (r == 0) return 1.0;
  // Sum the upper tail from the largest term downward.
  double sum = 0.0;
  for (std::size_t k = omega + 1; k-- > r;) sum += binomial_pmf(k, omega, p);
  return std::min(sum, 1.0);
}

std::size_t count_s_tokens(const TokenSeq& tokens, const STermSet& s) {
  std::size_t n = 0;
  for (const Token& t : tokens)
    if (s.contains(t.surface)) ++n;
  return n;
}

std::vector<Window> significant_windows(const Document& doc, const STermSet& s,
                                        const WindowSpec& spec,
                                        std::optional<double> p_override) {
  if (spec.omega == 0) throw Error("significant_windows: omega must be >= 1");
  if (!(spec.alpha > 0.0 && spec.alpha < 1.0))
    throw Error("significant_windows: alpha must lie in (0,1)");
  const TokenSeq& ft = doc.fulltext();
  const std::size_t len = ft.size();
  if (len < spec.omega)
    throw Error("document '" + doc.id + "' is shorter than the window size");

  std::vector<bool> is_s(len);
  std::size_t s_count = 0;
  for (std::size_t i = 0; i < len; ++i) {
    is_s[i] = s.contains(ft[i].surface);
    if (is_s[i]) ++s_count;
  }
  const double p = p_override ? *p_override : double(s_count) / double(len);
  const bool degenerate = !(p > 0.0 && p < 1.0);

  // Tail probabilities depend only on r; precompute all omega+1 of them.
  std::vector<double> tails(spec.omega + 1, 1.0);
  if (!degenerate)
    for (std::size_t r = 0; r <= spec.omega; ++r) tails[r] = binomial_tail(r, spec.omega, p);

  std::vector<Window> out;
  out.reserve(len - spec.omega + 1);
  std::size_t r = 0;
  for (std::size_t i = 0; i < spec.omega; ++i) r += is_s[i] ? 1 : 0;
  for (std::size_t start = 0;; ++start) {
    Window w;
    w.doc_id = doc.id;
    w.start = start;
    w.omega = spec.omega;
    w.r = r;
    w.tail_prob = tails[r];
    w.significant = !degenerate && w.tail_prob < spec.alpha;
    out.push_back(std::move(w));
    if (start + spec.omega >= len) break;
    r += is_s[start + spec.omega] ? 1 : 0;
    r -= is_s[start] ? 1 : 0;
  }
  return out;
}

double corpus_s_probability(const Corpus& corpus, const ResolvedSystem& system) {
  std::size_t s_tokens = 0, tokens = 0;
  for (const Document& d : corpus.documents) {
    const STermSet& s = system.for_doc(d);
    const TokenSeq& ft = d.fulltext();
    tokens += ft.size();
    s_tokens += count_s_tokens(ft, s);
  }
  return tokens == 0 ? 0.0 : double(s_tokens) / double(tokens);
}

CorpusScan scan_corpus(const Corpus& corpus, const ResolvedSystem& system,
                       const WindowSpec& spec) {
  CorpusScan scan;
  std::optional<double> pooled;
  if (spec.p_scope == WindowSpec::PScope::per_corpus) {
    scan.pooled_p = corpus_s_probability(corpus, system);
    pooled = scan.pooled_p;
  }
  for (const Document& d : corpus.documents) {
    if (d.fulltext().size() < spec.omega) {
      ++scan.skipped_short;
      continue;
    }
    auto windows = significant_windows(d, system.for_doc(d), spec, pooled);
    scan.windows.insert(scan.windows.end(), std::make_move_iterator(windows.begin()),
                        std::make_move_iterator(windows.end()));
  }
  std::stable_sort(scan.windows.begin(), scan.windows.end(),
                   [](const Window& a, const Window& b) {
                     if (a.doc_id != b.doc_id) return a.doc_id < b.doc_id;
                     return a.start < b.start;
                   });
  scan.total_windows = scan.windows.size();
  for (const Window& w : scan.windows)
    if (w.significant) ++scan.significant;
  return scan;
}

void write_window_csv(std::ostream& out, const std::vector<Window>& windows) {
  out << "doc_id,start,omega,r,tail_prob,significant\r\n";
  char buf[128];
  for (const Window& w : windows) {
    std::snprintf(buf, sizeof(buf), ",%zu,%zu,%zu,%.6f,%s", w.start, w.omega, w.r, w.tail_prob,
                  w.significant ? "true" : "false");
    out << csv_field(w.doc_id) << buf << "\r\n";
  }
}

SimulateResult simulate_false_positives(std::size_t n_windows, std::size_t omega, double p,
                                        double alpha, std::uint64_t seed) {
  if (omega == 0) throw Error("simulate: omega must be >= 1");
  if (!(p > 0.0 && p < 1.0)) throw Error("simulate: p must lie in (0,1)");
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error("simulate: alpha must lie in (0,1)");

  std::vector<double> tails(omega + 1);
  for (std::size_t r = 0; r <= omega; ++r) tails[r] = binomial_tail(r, omega, p);

  // 53-bit uniforms straight from the engine; portable across stdlibs.
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() { return double(rng() >> 11) * 0x1p-53; };

  SimulateResult res;
  res.windows = n_windows;
  res.alpha = alpha;
  for (std::size_t w = 0; w < n_windows; ++w) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < omega; ++i)
      if (uniform() < p) ++r;
    if (tails[r] < alpha) ++res.significant;
  }
  res.fraction = n_windows == 0 ? 0.0 : double(res.significant) / double(n_windows);
  res.sigma = n_windows == 0 ? 0.0 : std::sqrt(alpha * (1.0 - alpha) / double(n_windows));
  res.bound = alpha + 3.0 * res.sigma;
  res.within_bound = res.fraction <= res.bound;
  return res;
}

}  // namespace subwin

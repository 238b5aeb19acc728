// window.hpp -- fulltext window enumeration and the cumulative binomial
// significance test.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "subwin/corpus.hpp"
#include "subwin/sterm.hpp"

namespace subwin {

// C(omega, r) p^r (1-p)^(omega-r); log-space so large omega stays stable.
double binomial_pmf(std::size_t r, std::size_t omega, double p);

// P(X >= r) for X ~ Binomial(omega, p): the probability a window has as
// many S terms as observed, or more.
double binomial_tail(std::size_t r, std::size_t omega, double p);

struct WindowSpec {
  enum class PScope { per_document, per_corpus };
  std::size_t omega = 3;
  double alpha = 0.03;  // strict inequality: tail < alpha
  PScope p_scope = PScope::per_document;
};

struct Window {
  std::string doc_id;
  std::size_t start = 0;  // 0-based fulltext offset
  std::size_t omega = 0;
  std::size_t r = 0;  // S-token positions inside (repeats each count)
  double tail_prob = 1.0;
  bool significant = false;

  double center() const { return double(start) + double(omega - 1) / 2.0; }
};

std::size_t count_s_tokens(const TokenSeq& tokens, const STermSet& s);

// One window per start offset 0..len-omega (stride 1). p defaults to the
// document's own S-token fraction; pass p_override for corpus-pooled
// scope. Degenerate p (0 or 1) marks nothing significant.
std::vector<Window> significant_windows(const Document& doc, const STermSet& s,
                                        const WindowSpec& spec,
                                        std::optional<double> p_override = std::nullopt);

// Fraction of fulltext token positions (over the whole corpus) whose
// surface belongs to the system's S set for their document.
double corpus_s_probability(const Corpus& corpus, const ResolvedSystem& system);

struct CorpusScan {
  std::vector<Window> windows;  // ordered by (doc_id, start)
  double pooled_p = 0.0;        // set when p_scope == per_corpus
  std::size_t skipped_short = 0;
  std::size_t total_windows = 0;
  std::size_t significant = 0;
};

// Documents shorter than omega are skipped (counted), not fatal.
CorpusScan scan_corpus(const Corpus& corpus, const ResolvedSystem& system,
                       const WindowSpec& spec);

// CSV: doc_id,start,omega,r,tail_prob,significant.
void write_window_csv(std::ostream& out, const std::vector<Window>& windows);

struct SimulateResult {
  std::size_t windows = 0;
  std::size_t significant = 0;
  double fraction = 0.0;
  double alpha = 0.0;
  double sigma = 0.0;  // binomial std of the fraction at rate alpha
  double bound = 0.0;  // alpha + 3 sigma
  bool within_bound = false;
};

// Seeded Monte-Carlo check of the designed false-positive bound:
// n_windows disjoint windows of omega i.i.d. Bernoulli(p) tokens, tested
// at the given alpha with the true p.
SimulateResult simulate_false_positives(std::size_t n_windows, std::size_t omega, double p,
                                        double alpha, std::uint64_t seed);

}  // namespace subwin

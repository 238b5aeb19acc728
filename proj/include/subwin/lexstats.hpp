// lexstats.hpp -- type-token statistics: ratios, prefix-limited ratios,
// cubic regression of tokens on types, one-way ANOVA.
#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subwin/corpus.hpp"

namespace subwin {

// Distinct surfaces divided by occurrences.
double ttr(const TokenSeq& tokens);

// Ratio over the first min(n, len) tokens; *truncated set when len < n.
double ttr_prefix(const TokenSeq& tokens, std::size_t n = 500, bool* truncated = nullptr);

struct TTRRecord {
  std::string doc_id;
  std::size_t tokens = 0;
  std::size_t types = 0;
  double ratio = 0.0;
  std::size_t prefix_n = 500;
  double prefix_ratio = 0.0;
  bool prefix_truncated = false;
};

std::vector<TTRRecord> ttr_records(const Corpus& corpus, std::size_t prefix_n = 500);

struct CorpusTTR {
  std::size_t documents = 0;
  double mean_ratio = 0.0;    // mean of per-document ratios (primary)
  double pooled_ratio = 0.0;  // total distinct types / total tokens
  double mean_prefix_ratio = 0.0;
};

CorpusTTR corpus_ttr(const Corpus& corpus, std::size_t prefix_n = 500);

struct PolyFit {
  int degree = 3;
  std::vector<double> coefficients;  // c0 + c1 x + ... (types -> tokens)
  double rss = 0.0;
  std::vector<std::pair<double, double>> points;  // (types, tokens) per doc
};

// Least squares via normal equations with column scaling.
PolyFit polyfit(std::span<const double> x, std::span<const double> y, int degree);

// Cubic of per-document token counts on type counts; needs >= 5 documents.
PolyFit type_token_fit(const Corpus& corpus, int degree = 3);

struct AnovaResult {
  double f = 0.0;
  double p_value = 1.0;
  std::size_t df_between = 0;
  std::size_t df_within = 0;
  double ss_between = 0.0;
  double ss_within = 0.0;
  bool significant_05 = false;
  bool significant_01 = false;
};

// One-way ANOVA over (label, per-document ratios) groups; every group
// needs >= 2 values and there must be >= 2 groups.
AnovaResult anova_ttr(const std::vector<std::pair<std::string, std::vector<double>>>& groups);

// CSV: doc_id,tokens,types,ratio,prefix_ratio.
void write_ttr_csv(std::ostream& out, const std::vector<TTRRecord>& records);

}  // namespace subwin

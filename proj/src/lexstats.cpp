// lexstats.cpp -- type-token ratios, polynomial regression, ANOVA.
#include "subwin/lexstats.hpp"

#include "subwin/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <unordered_set>

#include "subwin/stats.hpp"

namespace subwin {

namespace {

std::size_t type_count(const TokenSeq& tokens, std::size_t limit) {
  std::unordered_set<std::string_view> distinct;
  const std::size_t n = std::min(limit, tokens.size());
  for (std::size_t i = 0; i < n; ++i) distinct.insert(tokens[i].surface);
  return distinct.size();
}

}  // namespace

double ttr(const TokenSeq& tokens) {
  if (tokens.empty()) throw Error("ttr: empty token sequence");
  return double(type_count(tokens, tokens.size())) / double(tokens.size());
}

double ttr_prefix(const TokenSeq& tokens, std::size_t n, bool* truncated) {
  if (tokens.empty()) throw Error("ttr_prefix: empty token sequence");
  if (n == 0) throw Error("ttr_prefix: n must be >= 1");
  const std::size_t len = std::min(n, tokens.size());
  if (truncated) *truncated = tokens.size() < n;
  return double(type_count(tokens, len)) / double(len);
}

std::vector<TTRRecord> ttr_records(const Corpus& corpus, std::size_t prefix_n) {
  std::vector<TTRRecord> records;
  records.reserve(corpus.size());
  for (const Document& d : corpus.documents) {
    const TokenSeq& ft = d.fulltext();
    TTRRecord rec;
    rec.doc_id = d.id;
    rec.tokens = ft.size();
    rec.types = type_count(ft, ft.size());
    rec.ratio = double(rec.types) / double(rec.tokens);
    rec.prefix_n = prefix_n;
    rec.prefix_ratio = ttr_prefix(ft, prefix_n, &rec.prefix_truncated);
    records.push_back(std::move(rec));
  }
  return records;
}

CorpusTTR corpus_ttr(const Corpus& corpus, std::size_t prefix_n) {
  if (corpus.empty()) throw Error("corpus_ttr: corpus '" + corpus.name + "' is empty");
  CorpusTTR out;
  out.documents = corpus.size();
  std::unordered_set<std::string_view> pooled_types;
  std::size_t pooled_tokens = 0;
  for (const TTRRecord& rec : ttr_records(corpus, prefix_n)) {
    out.mean_ratio += rec.ratio;
    out.mean_prefix_ratio += rec.prefix_ratio;
  }
  for (const Document& d : corpus.documents) {
    for (const Token& t : d.fulltext()) pooled_types.insert(t.surface);
    pooled_tokens += d.fulltext().size();
  }
  out.mean_ratio /= double(out.documents);
  out.mean_prefix_ratio /= double(out.documents);
  out.pooled_ratio = double(pooled_types.size()) / double(pooled_tokens);
  return out;
}

PolyFit polyfit(std::span<const double> x, std::span<const double> y, int degree) {
  if (degree < 1) throw Error("polyfit: degree must be >= 1");
  const std::size_t n = x.size();
  if (n != y.size()) throw Error("polyfit: x/y size mismatch");
  const std::size_t k = std::size_t(degree) + 1;
  if (n < k) throw Error("polyfit: need at least degree+1 points");

  const double xmin = *std::min_element(x.begin(), x.end());
  const double xmax = *std::max_element(x.begin(), x.end());
  if (xmin == xmax) throw Error("polyfit: degenerate input, all x identical");

  // Column scaling keeps the normal equations well conditioned for the
  // raw type counts this is used on; extended precision plus one round
  // of iterative refinement recovers exact polynomials to ~1e-12.
  const double scale = std::max(std::fabs(xmin), std::fabs(xmax));

  std::vector<std::vector<long double>> ata(k, std::vector<long double>(k, 0.0L));
  std::vector<long double> aty(k, 0.0L);
  std::vector<long double> powers(2 * k - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const long double xs = (long double)x[i] / scale;
    powers[0] = 1.0L;
    for (std::size_t d = 1; d < 2 * k - 1; ++d) powers[d] = powers[d - 1] * xs;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) ata[r][c] += powers[r + c];
      aty[r] += powers[r] * (long double)y[i];
    }
  }

  // LU with partial pivoting, kept for refinement solves.
  std::vector<std::vector<long double>> lu = ata;
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (fabsl(lu[r][col]) > fabsl(lu[pivot][col])) pivot = r;
    if (fabsl(lu[pivot][col]) < 1e-18L) throw Error("polyfit: singular normal equations");
    std::swap(lu[col], lu[pivot]);
    std::swap(perm[col], perm[pivot]);
    for (std::size_t r = col + 1; r < k; ++r) {
      lu[r][col] /= lu[col][col];
      for (std::size_t c = col + 1; c < k; ++c) lu[r][c] -= lu[r][col] * lu[col][c];
    }
  }
  auto lu_solve = [&](const std::vector<long double>& rhs) {
    std::vector<long double> b(k);
    for (std::size_t i = 0; i < k; ++i) b[i] = rhs[perm[i]];
    for (std::size_t r = 1; r < k; ++r)
      for (std::size_t c = 0; c < r; ++c) b[r] -= lu[r][c] * b[c];
    for (std::size_t r = k; r-- > 0;) {
      for (std::size_t c = r + 1; c < k; ++c) b[r] -= lu[r][c] * b[c];
      b[r] /= lu[r][r];
    }
    return b;
  };

  std::vector<long double> beta = lu_solve(aty);
  for (int round = 0; round < 2; ++round) {
    std::vector<long double> residual(k);
    for (std::size_t r = 0; r < k; ++r) {
      long double acc = aty[r];
      for (std::size_t c = 0; c < k; ++c) acc -= ata[r][c] * beta[c];
      residual[r] = acc;
    }
    const std::vector<long double> correction = lu_solve(residual);
    for (std::size_t r = 0; r < k; ++r) beta[r] += correction[r];
  }

  PolyFit fit;
  fit.degree = degree;
  fit.coefficients.resize(k);
  long double s = 1.0L;
  for (std::size_t d = 0; d < k; ++d) {
    fit.coefficients[d] = double(beta[d] / s);
    s *= (long double)scale;
  }
  for (std::size_t i = 0; i < n; ++i) {
    double pred = 0.0, xp = 1.0;
    for (std::size_t d = 0; d < k; ++d) {
      pred += fit.coefficients[d] * xp;
      xp *= x[i];
    }
    const double resid = y[i] - pred;
    fit.rss += resid * resid;
    fit.points.emplace_back(x[i], y[i]);
  }
  return fit;
}

PolyFit type_token_fit(const Corpus& corpus, int degree) {
  if (corpus.size() < 5)
    throw Error("type_token_fit: corpus '" + corpus.name + "' has fewer than 5 documents");
  std::vector<double> x, y;
  x.reserve(corpus.size());
  y.reserve(corpus.size());
  for (const Document& d : corpus.documents) {
    const TokenSeq& ft = d.fulltext();
    x.push_back(double(type_count(ft, ft.size())));
    y.push_back(double(ft.size()));
  }
  return polyfit(x, y, degree);
}

AnovaResult anova_ttr(const std::vector<std::pair<std::string, std::vector<double>>>& groups) {
  if (groups.size() < 2) throw Error("anova_ttr: need at least 2 groups");
  std::size_t total_n = 0;
  double grand_sum = 0.0;
  for (const auto& [label, values] : groups) {
    if (values.size() < 2)
      throw Error("anova_ttr: group '" + label + "' has fewer than 2 values");
    total_n += values.size();
    for (double v : values) grand_sum += v;
  }
  const double grand_mean = grand_sum / double(total_n);

  AnovaResult res;
  for (const auto& [label, values] : groups) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= double(values.size());
    res.ss_between += double(values.size()) * (mean - grand_mean) * (mean - grand_mean);
    for (double v : values) res.ss_within += (v - mean) * (v - mean);
  }
  res.df_between = groups.size() - 1;
  res.df_within = total_n - groups.size();

  const double ms_between = res.ss_between / double(res.df_between);
  const double ms_within = res.ss_within / double(res.df_within);
  if (ms_within == 0.0) {
    res.f = ms_between == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  } else {
    res.f = ms_between / ms_within;
  }
  res.p_value = std::isinf(res.f)
                    ? 0.0
                    : f_distribution_sf(res.f, double(res.df_between), double(res.df_within));
  res.significant_05 = res.p_value < 0.05;
  res.significant_01 = res.p_value < 0.01;
  return res;
}

void write_ttr_csv(std::ostream& out, const std::vector<TTRRecord>& records) {
  out << "doc_id,tokens,types,ratio,prefix_ratio\r\n";
  char buf[128];
  for (const TTRRecord& rec : records) {
    std::snprintf(buf, sizeof(buf), ",%zu,%zu,%.6f,%.6f", rec.tokens, rec.types, rec.ratio,
                  rec.prefix_ratio);
    out << csv_field(rec.doc_id) << buf << "\r\n";
  }
}

}  // namespace subwin

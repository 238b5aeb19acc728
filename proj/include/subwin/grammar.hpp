// grammar.hpp -- POS tag-sequence constructs of windows, their weight of
// evidence for window significance, and theory/practice discrimination.
#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "subwin/corpus.hpp"
#include "subwin/sterm.hpp"
#include "subwin/window.hpp"

namespace subwin {

// Penn Treebank tags -> simplified labels (noun, pl-noun, adj, prep, ...).
// Tags already in the simplified alphabet pass through; anything else
// maps to "other".
struct TagMap {
  std::map<std::string, std::string> mapping;
  std::unordered_set<std::string> labels;  // the simplified alphabet

  std::string simplify(const std::string& tag) const;
  bool known(const std::string& tag) const;
  void rebuild_labels();

  static TagMap penn_default();
  // TSV: tag<TAB>label, '#' comments.
  static TagMap load(std::istream& in);
  static TagMap load_file(const std::string& path);
};

// Replaces tags with simplified labels in place; returns the number of
// unknown tags mapped to "other". Every token must already be tagged.
std::size_t map_tags(TokenSeq& tokens, const TagMap& tagmap);
Corpus map_corpus_tags(const Corpus& corpus, const TagMap& tagmap,
                       std::size_t* unknown_count = nullptr);

struct TagSequence {
  std::vector<std::string> tags;

  std::string str() const;  // space-joined
  static TagSequence parse(std::string_view text);
  auto operator<=>(const TagSequence&) const = default;
};

struct GramStat {
  TagSequence construct;
  std::size_t n = 0;     // windows with this exact tag sequence
  std::size_t n_sw = 0;  // of those, significant ones
  double pr_sw_given_g = 0.0;  // smoothed
  double m_g = 0.0;            // weight of evidence, bits
};

struct LengthTotals {
  std::size_t windows = 0;
  std::size_t significant = 0;
};

struct GramTable {
  std::vector<GramStat> stats;  // ordered by (length, construct)
  std::map<std::size_t, LengthTotals> totals;
  std::size_t min_support = 20;
  std::size_t dropped = 0;  // constructs removed by min_support
};

struct LengthRange {
  std::size_t lo = 1;
  std::size_t hi = 4;
};

// Window significance is evaluated per length with the spec's alpha and
// p scope; spec.omega itself is ignored here.
GramTable construct_counts(const Corpus& corpus, const ResolvedSystem& system,
                           const WindowSpec& spec, LengthRange lengths = {},
                           std::size_t min_support = 20, double smoothing_add = 0.5);

// log odds a window is significant given the construct, minus the
// unconditional log odds; add-half smoothing on both, base-2 bits.
double weight_of_evidence(std::size_t n, std::size_t n_sw, std::size_t total_windows,
                          std::size_t total_sw, double smoothing_add = 0.5);

struct TheoryPracticeRow {
  TagSequence construct;
  std::vector<double> m_g;  // aligned with DeltaTPTable::corpora
  double delta_tp = 0.0;
};

struct DeltaTPTable {
  std::vector<std::string> corpora;
  std::vector<Orientation> orientations;
  std::vector<TheoryPracticeRow> rows;      // sorted by delta_tp descending
  std::vector<TagSequence> excluded;        // constructs not shared by all
};

// delta_tp = sum of practice M_G minus sum of theory M_G; constructs must
// clear min_support in every corpus to participate.
DeltaTPTable delta_tp(const std::vector<std::pair<std::string, const GramTable*>>& tables,
                      const std::map<std::string, Orientation>& orientations);

// CSV exports: construct,N,pr_sw_given_g,m_g and
// construct,m_g_<corpus>...,delta_tp.
void write_grammar_csv(std::ostream& out, const GramTable& table);
void write_delta_csv(std::ostream& out, const DeltaTPTable& table);

}  // namespace subwin

// sterm.hpp -- special-term (S-term) set construction and BI/IDF weights.
#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "subwin/corpus.hpp"

namespace subwin {

struct STermSet {
  std::string label;
  std::string recipe;  // human-readable description of how the set was built
  std::unordered_set<std::string> terms;
  bool stoplist_applied = false;

  bool usable() const { return !terms.empty(); }
  bool contains(const std::string& term) const { return terms.count(term) != 0; }
};

// Distinct normalized surfaces of one field of one document. Per-document:
// a document's own title terms do not apply to any other document.
STermSet field_sterms(const Document& doc, FieldName field, const Stoplist* stoplist = nullptr);

// Union of a field's terms over every document possessing it.
STermSet pooled_field_sterms(const Corpus& corpus, FieldName field,
                             const Stoplist* stoplist = nullptr);

// Corpus-global set from a subject dictionary file (one term per line,
// '#' comments); identical for every document.
STermSet dictionary_sterms(std::istream& in, const TokenizePolicy& policy = {},
                           const Stoplist* stoplist = nullptr);
STermSet dictionary_sterms_file(const std::string& path, const TokenizePolicy& policy = {},
                                const Stoplist* stoplist = nullptr);

// Number of documents whose union of fields contains the term.
std::size_t doc_frequency(const std::string& term, const Corpus& corpus);

// Document probabilities are smoothed as (df + add) / (N + 2*add);
// add = 0.5 is the default everywhere, add = 0 gives raw frequencies.
struct SmoothingConfig {
  double add = 0.5;
};

// log2 of the odds ratio (p/(1-p)) / (q/(1-q)); p, q must lie in (0,1).
double bi_weight(double p, double q);

// -log2 q for q in (0, 1].
double idf_weight(double q);

enum class WeightScheme { bi, idf };
const char* to_string(WeightScheme s);

struct TermWeight {
  std::string term;
  std::size_t df_target = 0;
  std::size_t df_combined = 0;
  double p = 0.0;  // within-database document probability (smoothed)
  double q = 0.0;  // combined-database document probability (smoothed)
  double w_bi = 0.0;
  double w_idf = 0.0;
};

// Weights for every term observed in the target corpus. The target must
// be a document-wise subset of the combined corpus.
std::vector<TermWeight> weight_table(const Corpus& target, const Corpus& combined,
                                     const SmoothingConfig& smoothing = {});

// Terms whose scheme weight meets the cutoff (default 5 bits for BI,
// 4 bits for IDF).
STermSet weighted_sterms(const Corpus& target, const Corpus& combined, WeightScheme scheme,
                         std::optional<double> cutoff = std::nullopt,
                         const SmoothingConfig& smoothing = {},
                         const Stoplist* stoplist = nullptr);

// CSV: term,df_target,df_combined,p,q,w_bi,w_idf (6-decimal fixed point).
void write_weight_csv(std::ostream& out, const std::vector<TermWeight>& table);

// How an S-term system is specified on the command line / in config.
struct SystemSpec {
  enum class Kind { field, pooled_field, dictionary, bi, idf };
  Kind kind = Kind::field;
  FieldName field = FieldName::title;
  std::optional<double> cutoff;  // weighted schemes only

  // "title" | "pooled:title" | "dictionary" | "bi" | "idf" (optionally
  // "bi:4.5" to override the cutoff).
  static SystemSpec parse(std::string_view text);
  std::string label(bool stoplist_applied = false) const;
};

// A system resolved against a concrete corpus: either one shared set or
// one set per document (field systems).
struct ResolvedSystem {
  std::string label;
  bool per_doc_mode = false;
  STermSet shared;
  std::map<std::string, STermSet> per_document;  // doc id -> set

  const STermSet& for_doc(const Document& doc) const;

  static ResolvedSystem fixed(STermSet set);
};

// combined may be null for field/dictionary systems; bi/idf require it.
ResolvedSystem resolve_system(const SystemSpec& spec, const Corpus& corpus,
                              const Corpus* combined, const Stoplist* stoplist,
                              const std::string& dictionary_path,
                              const SmoothingConfig& smoothing = {},
                              const TokenizePolicy& policy = {});

}  // namespace subwin

// corpus.hpp -- document/corpus data model, tokenization, and ingestion.
//
// A Corpus is immutable after load; every operation in the library is a
// pure function over these structures.
#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace subwin {

// All library failures are reported through this type so the CLI can
// separate input problems from logic bugs.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FieldName {
  title,
  abstract,
  fulltext,
  citations,
  section_headers,
  mesh_major,
  mesh_minor,
};

inline constexpr std::array<FieldName, 7> kAllFields = {
    FieldName::title,         FieldName::abstract,  FieldName::fulltext,
    FieldName::citations,     FieldName::section_headers,
    FieldName::mesh_major,    FieldName::mesh_minor,
};

const char* to_string(FieldName f);
std::optional<FieldName> field_from_string(std::string_view s);

struct Token {
  std::string surface;        // normalized term type
  std::string tag;            // POS tag label; empty when untagged
  std::size_t position = 0;   // 0-based index within its field
  bool tagged() const { return !tag.empty(); }
};
using TokenSeq = std::vector<Token>;

struct TokenizePolicy {
  bool keep_digits = true;              // keep tokens that are digits-only
  bool keep_punctuation_tokens = false; // keep chunks that strip to nothing
};

// Whitespace split, Unicode-aware lowercasing (ASCII + Latin-1 fold,
// other code points pass through), leading/trailing punctuation stripped,
// internal hyphens kept as part of one token.
std::vector<std::string> tokenize(std::string_view raw, const TokenizePolicy& policy = {});

// Lowercase + edge-strip one term, used for stoplist/dictionary entries.
std::string normalize_term(std::string_view term);

// Lowercase only, no stripping; pre-tagged surfaces keep the tagger's
// tokenization verbatim (punctuation tokens included).
std::string lowercase_utf8(std::string_view s);

enum class Orientation { theory, practice, unlabeled };
const char* to_string(Orientation o);
std::optional<Orientation> orientation_from_string(std::string_view s);

struct Document {
  std::string id;
  std::string discipline;  // corpus label
  std::map<FieldName, TokenSeq> fields;

  bool has(FieldName f) const { return fields.count(f) != 0; }
  const TokenSeq& field(FieldName f) const;  // Error when absent
  const TokenSeq& fulltext() const { return field(FieldName::fulltext); }
};

struct Corpus {
  std::string name;
  Orientation orientation = Orientation::unlabeled;
  std::vector<Document> documents;

  bool empty() const { return documents.empty(); }
  std::size_t size() const { return documents.size(); }
};

enum class CorpusFormat { json, pretagged_json };

// Schema: {"name": str, "orientation": "theory"|"practice"|"unlabeled",
//          "documents": [{"id": str, "fields": {<field>: str, ...}}]}
// Field values are raw text (json) or whitespace-separated word_TAG
// pairs (pretagged_json). Malformed input raises Error naming the
// offending document and field.
Corpus load_corpus(std::istream& in, CorpusFormat format, const TokenizePolicy& policy = {});
Corpus load_corpus_file(const std::string& path, CorpusFormat format,
                        const TokenizePolicy& policy = {});

// word_TAG serialization; '_' in surfaces escaped as "\_".
std::string to_pretagged(const TokenSeq& tokens);
TokenSeq parse_pretagged(std::string_view text, const std::string& doc_id, FieldName field);

struct Stoplist {
  std::unordered_set<std::string> terms;

  bool contains(const std::string& term) const { return terms.count(term) != 0; }
  std::size_t size() const { return terms.size(); }

  // One term per line, '#' starts a comment, entries normalized with the
  // same tokenizer policy as corpus text.
  static Stoplist load(std::istream& in, const TokenizePolicy& policy = {});
  static Stoplist load_file(const std::string& path, const TokenizePolicy& policy = {});
};

// Order-preserving subsequence whose surfaces are not stoplisted.
TokenSeq remove_stopwords(const TokenSeq& tokens, const Stoplist& stoplist);

struct FieldCensusRow {
  FieldName field = FieldName::title;
  std::size_t documents = 0;  // documents possessing the field
  double mean_tokens = 0.0;
  double mean_types = 0.0;
};

// Per-field means over the documents possessing each field.
std::vector<FieldCensusRow> field_census(const Corpus& corpus);

enum class Subset { all, even, odd };
const char* to_string(Subset s);
std::optional<Subset> subset_from_string(std::string_view s);

// Restrict to even- or odd-indexed documents (0-based).
Corpus subset_corpus(const Corpus& corpus, Subset subset);

}  // namespace subwin

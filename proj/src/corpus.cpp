// corpus.cpp -- tokenization and corpus ingestion.
#include "subwin/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace subwin {

const char* to_string(FieldName f) {
  switch (f) {
    case FieldName::title: return "title";
    case FieldName::abstract: return "abstract";
    case FieldName::fulltext: return "fulltext";
    case FieldName::citations: return "citations";
    case FieldName::section_headers: return "section_headers";
    case FieldName::mesh_major: return "mesh_major";
    case FieldName::mesh_minor: return "mesh_minor";
  }
  return "?";
}

std::optional<FieldName> field_from_string(std::string_view s) {
  for (FieldName f : kAllFields)
    if (s == to_string(f)) return f;
  return std::nullopt;
}

const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::theory: return "theory";
    case Orientation::practice: return "practice";
    case Orientation::unlabeled: return "unlabeled";
  }
  return "?";
}

std::optional<Orientation> orientation_from_string(std::string_view s) {
  if (s == "theory") return Orientation::theory;
  if (s == "practice") return Orientation::practice;
  if (s == "unlabeled") return Orientation::unlabeled;
  return std::nullopt;
}

const char* to_string(Subset s) {
  switch (s) {
    case Subset::all: return "all";
    case Subset::even: return "even";
    case Subset::odd: return "odd";
  }
  return "?";
}

std::optional<Subset> subset_from_string(std::string_view s) {
  if (s == "all") return Subset::all;
  if (s == "even") return Subset::even;
  if (s == "odd") return Subset::odd;
  return std::nullopt;
}

const TokenSeq& Document::field(FieldName f) const {
  auto it = fields.find(f);
  if (it == fields.end())
    throw Error("document '" + id + "' has no field '" + to_string(f) + "'");
  return it->second;
}

namespace {

// Minimal UTF-8 walk. Invalid bytes are passed through as single
// code points so tokenization never throws on dirty input.
std::uint32_t decode_utf8(std::string_view s, std::size_t& i) {
  const unsigned char c = s[i];
  if (c < 0x80) {
    ++i;
    return c;
  }
  std::size_t extra = 0;
  std::uint32_t cp = c;
  if ((c & 0xE0) == 0xC0) { extra = 1; cp &= 0x1F; }
  else if ((c & 0xF0) == 0xE0) { extra = 2; cp &= 0x0F; }
  else if ((c & 0xF8) == 0xF0) { extra = 3; cp &= 0x07; }
  else { ++i; return c; }
  if (i + extra >= s.size()) {
    ++i;
    return c;
  }
  for (std::size_t k = 1; k <= extra; ++k) {
    const unsigned char cc = s[i + k];
    if ((cc & 0xC0) != 0x80) { ++i; return c; }
    cp = (cp << 6) | (cc & 0x3F);
  }
  i += extra + 1;
  return cp;
}

void encode_utf8(std::uint32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(char(cp));
  } else if (cp < 0x800) {
    out.push_back(char(0xC0 | (cp >> 6)));
    out.push_back(char(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(char(0xE0 | (cp >> 12)));
    out.push_back(char(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(char(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(char(0xF0 | (cp >> 18)));
    out.push_back(char(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(char(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(char(0x80 | (cp & 0x3F)));
  }
}

// ASCII + Latin-1 case fold; everything else passes through.
std::uint32_t lower_cp(std::uint32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  return cp;
}

bool is_ascii_space(std::uint32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v';
}

bool is_digit_cp(std::uint32_t cp) { return cp >= '0' && cp <= '9'; }

// Word characters: ASCII alphanumerics and all non-ASCII code points.
bool is_word_cp(std::uint32_t cp) {
  if (cp >= 0x80) return true;
  return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || is_digit_cp(cp);
}

std::vector<std::uint32_t> decode_all(std::string_view s) {
  std::vector<std::uint32_t> cps;
  cps.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) cps.push_back(decode_utf8(s, i));
  return cps;
}

std::string encode_all(const std::vector<std::uint32_t>& cps, std::size_t lo, std::size_t hi) {
  std::string out;
  for (std::size_t i = lo; i < hi; ++i) encode_utf8(cps[i], out);
  return out;
}

// Normalizes one whitespace-free chunk. Empty result means "dropped".
std::string normalize_chunk(std::string_view chunk, const TokenizePolicy& policy) {
  std::vector<std::uint32_t> cps = decode_all(chunk);
  for (auto& cp : cps) cp = lower_cp(cp);

  std::size_t lo = 0, hi = cps.size();
  while (lo < hi && !is_word_cp(cps[lo])) ++lo;
  while (hi > lo && !is_word_cp(cps[hi - 1])) --hi;

  if (lo >= hi) {
    // All punctuation.
    if (policy.keep_punctuation_tokens && !cps.empty())
      return encode_all(cps, 0, cps.size());
    return {};
  }

  bool all_digits = true;
  for (std::size_t i = lo; i < hi; ++i)
    if (!is_digit_cp(cps[i])) { all_digits = false; break; }
  if (all_digits && !policy.keep_digits) return {};

  return encode_all(cps, lo, hi);
}

}  // namespace

std::vector<std::string> tokenize(std::string_view raw, const TokenizePolicy& policy) {
  std::vector<std::string> out;
  std::size_t i = 0;
  const std::size_t n = raw.size();
  while (i < n) {
    while (i < n && is_ascii_space(static_cast<unsigned char>(raw[i]))) ++i;
    std::size_t start = i;
    while (i < n && !is_ascii_space(static_cast<unsigned char>(raw[i]))) ++i;
    if (i > start) {
      std::string tok = normalize_chunk(raw.substr(start, i - start), policy);
      if (!tok.empty()) out.push_back(std::move(tok));
    }
  }
  return out;
}

std::string normalize_term(std::string_view term) {
  return normalize_chunk(term, TokenizePolicy{});
}

std::string lowercase_utf8(std::string_view s) {
  std::vector<std::uint32_t> cps = decode_all(s);
  std::string out;
  out.reserve(s.size());
  for (auto cp : cps) encode_utf8(lower_cp(cp), out);
  return out;
}

std::string to_pretagged(const TokenSeq& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (!t.tagged())
      throw Error("cannot serialize untagged token '" + t.surface + "' as word_TAG");
    if (i) out.push_back(' ');
    for (char c : t.surface) {
      if (c == '_') out += "\\_";
      else out.push_back(c);
    }
    out.push_back('_');
    out += t.tag;
  }
  return out;
}

TokenSeq parse_pretagged(std::string_view text, const std::string& doc_id, FieldName field) {
  TokenSeq out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && is_ascii_space(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < n && !is_ascii_space(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) continue;
    std::string_view chunk = text.substr(start, i - start);

    // Last '_' not preceded by a backslash splits surface from tag.
    std::size_t sep = std::string_view::npos;
    for (std::size_t k = chunk.size(); k-- > 0;) {
      if (chunk[k] == '_' && (k == 0 || chunk[k - 1] != '\\')) { sep = k; break; }
    }
    if (sep == std::string_view::npos || sep == 0 || sep + 1 >= chunk.size())
      throw Error("malformed word_TAG token '" + std::string(chunk) + "' in field '" +
                  to_string(field) + "' of document '" + doc_id + "'");

    std::string surface;
    surface.reserve(sep);
    for (std::size_t k = 0; k < sep; ++k) {
      if (chunk[k] == '\\' && k + 1 < sep && chunk[k + 1] == '_') {
        surface.push_back('_');
        ++k;
      } else {
        surface.push_back(chunk[k]);
      }
    }
    Token t;
    t.surface = lowercase_utf8(surface);
    t.tag = std::string(chunk.substr(sep + 1));
    t.position = out.size();
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

TokenSeq tokens_from_raw(const std::string& raw, const TokenizePolicy& policy) {
  TokenSeq seq;
  auto surfaces = tokenize(raw, policy);
  seq.reserve(surfaces.size());
  for (std::size_t i = 0; i < surfaces.size(); ++i)
    seq.push_back(Token{std::move(surfaces[i]), {}, i});
  return seq;
}

}  // namespace

Corpus load_corpus(std::istream& in, CorpusFormat format, const TokenizePolicy& policy) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("corpus is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("documents") || !j["documents"].is_array())
    throw Error("corpus JSON must be an object with a 'documents' array");

  Corpus corpus;
  corpus.name = j.value("name", std::string("unnamed"));
  if (j.contains("orientation")) {
    auto o = orientation_from_string(j["orientation"].get<std::string>());
    if (!o) throw Error("corpus '" + corpus.name + "': unknown orientation");
    corpus.orientation = *o;
  }

  std::unordered_set<std::string> seen_ids;
  for (const auto& jd : j["documents"]) {
    if (!jd.is_object() || !jd.contains("id") || !jd["id"].is_string())
      throw Error("corpus '" + corpus.name + "': document without string 'id'");
    Document doc;
    doc.id = jd["id"].get<std::string>();
    doc.discipline = corpus.name;
    if (!seen_ids.insert(doc.id).second)
      throw Error("corpus '" + corpus.name + "': duplicate document id '" + doc.id + "'");
    if (!jd.contains("fields") || !jd["fields"].is_object())
      throw Error("document '" + doc.id + "' has no 'fields' object");

    for (const auto& [key, value] : jd["fields"].items()) {
      auto f = field_from_string(key);
      if (!f)
        throw Error("document '" + doc.id + "': unknown field '" + key + "'");
      if (!value.is_string())
        throw Error("document '" + doc.id + "': field '" + key + "' is not a string");
      TokenSeq seq = (format == CorpusFormat::pretagged_json)
                         ? parse_pretagged(value.get<std::string>(), doc.id, *f)
                         : tokens_from_raw(value.get<std::string>(), policy);
      if (seq.empty())
        throw Error("document '" + doc.id + "': field '" + key + "' has no tokens");
      doc.fields.emplace(*f, std::move(seq));
    }
    if (!doc.has(FieldName::fulltext))
      throw Error("document '" + doc.id + "': field 'fulltext' is required");
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

Corpus load_corpus_file(const std::string& path, CorpusFormat format,
                        const TokenizePolicy& policy) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file '" + path + "'");
  return load_corpus(in, format, policy);
}

Stoplist Stoplist::load(std::istream& in, const TokenizePolicy& policy) {
  Stoplist sl;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    for (auto& term : tokenize(line, policy)) sl.terms.insert(std::move(term));
  }
  return sl;
}

Stoplist Stoplist::load_file(const std::string& path, const TokenizePolicy& policy) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open stoplist file '" + path + "'");
  return load(in, policy);
}

TokenSeq remove_stopwords(const TokenSeq& tokens, const Stoplist& stoplist) {
  TokenSeq out;
  out.reserve(tokens.size());
  for (const Token& t : tokens)
    if (!stoplist.contains(t.surface)) out.push_back(t);
  return out;
}

std::vector<FieldCensusRow> field_census(const Corpus& corpus) {
  if (corpus.empty()) throw Error("field_census: corpus '" + corpus.name + "' is empty");
  std::vector<FieldCensusRow> rows;
  for (FieldName f : kAllFields) {
    FieldCensusRow row;
    row.field = f;
    double tokens = 0, types = 0;
    for (const Document& d : corpus.documents) {
      auto it = d.fields.find(f);
      if (it == d.fields.end()) continue;
      ++row.documents;
      tokens += double(it->second.size());
      std::unordered_set<std::string_view> distinct;
      for (const Token& t : it->second) distinct.insert(t.surface);
      types += double(distinct.size());
    }
    if (row.documents == 0) continue;
    row.mean_tokens = tokens / double(row.documents);
    row.mean_types = types / double(row.documents);
    rows.push_back(row);
  }
  return rows;
}

Corpus subset_corpus(const Corpus& corpus, Subset subset) {
  if (subset == Subset::all) return corpus;
  Corpus out;
  out.name = corpus.name;
  out.orientation = corpus.orientation;
  const std::size_t want = (subset == Subset::even) ? 0 : 1;
  for (std::size_t i = 0; i < corpus.documents.size(); ++i)
    if (i % 2 == want) out.documents.push_back(corpus.documents[i]);
  return out;
}

}  // namespace subwin

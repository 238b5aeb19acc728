// sterm.cpp -- S-term set construction and term weighting.
#include "subwin/sterm.hpp"

#include "subwin/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <unordered_map>

namespace subwin {

const char* to_string(WeightScheme s) {
  return s == WeightScheme::bi ? "bi" : "idf";
}

STermSet field_sterms(const Document& doc, FieldName field, const Stoplist* stoplist) {
  const TokenSeq& tokens = doc.field(field);  // throws when absent
  STermSet set;
  set.label = to_string(field);
  set.recipe = std::string("field(") + to_string(field) + ", per_document)";
  set.stoplist_applied = stoplist != nullptr;
  for (const Token& t : tokens) {
    if (stoplist && stoplist->contains(t.surface)) continue;
    set.terms.insert(t.surface);
  }
  return set;
}

STermSet pooled_field_sterms(const Corpus& corpus, FieldName field, const Stoplist* stoplist) {
  STermSet set;
  set.label = std::string("pooled:") + to_string(field);
  set.recipe = std::string("field(") + to_string(field) + ", pooled)";
  set.stoplist_applied = stoplist != nullptr;
  for (const Document& d : corpus.documents) {
    auto it = d.fields.find(field);
    if (it == d.fields.end()) continue;
    for (const Token& t : it->second) {
      if (stoplist && stoplist->contains(t.surface)) continue;
      set.terms.insert(t.surface);
    }
  }
  return set;
}

STermSet dictionary_sterms(std::istream& in, const TokenizePolicy& policy,
                           const Stoplist* stoplist) {
  STermSet set;
  set.label = "dictionary";
  set.recipe = "dictionary";
  set.stoplist_applied = stoplist != nullptr;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    for (auto& term : tokenize(line, policy)) {
      if (stoplist && stoplist->contains(term)) continue;
      set.terms.insert(std::move(term));
    }
  }
  return set;
}

STermSet dictionary_sterms_file(const std::string& path, const TokenizePolicy& policy,
                                const Stoplist* stoplist) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open dictionary file '" + path + "'");
  STermSet set = dictionary_sterms(in, policy, stoplist);
  set.recipe = "dictionary(" + path + ")";
  return set;
}

namespace {

// Distinct surfaces across all fields of one document.
std::unordered_set<std::string_view> document_vocabulary(const Document& doc) {
  std::unordered_set<std::string_view> vocab;
  for (const auto& [field, tokens] : doc.fields)
    for (const Token& t : tokens) vocab.insert(t.surface);
  return vocab;
}

}  // namespace

std::size_t doc_frequency(const std::string& term, const Corpus& corpus) {
  std::size_t df = 0;
  for (const Document& d : corpus.documents)
    if (document_vocabulary(d).count(term)) ++df;
  return df;
}

double bi_weight(double p, double q) {
  if (!(p > 0.0 && p < 1.0) || !(q > 0.0 && q < 1.0))
    throw Error("bi_weight: p and q must lie in (0,1) after smoothing");
  return std::log2((p / (1.0 - p)) / (q / (1.0 - q)));
}

double idf_weight(double q) {
  if (!(q > 0.0 && q <= 1.0))
    throw Error("idf_weight: q must lie in (0,1] after smoothing");
  return -std::log2(q);
}

std::vector<TermWeight> weight_table(const Corpus& target, const Corpus& combined,
                                     const SmoothingConfig& smoothing) {
  if (combined.empty()) throw Error("weight_table: combined corpus is empty");
  if (target.empty()) throw Error("weight_table: target corpus is empty");

  std::unordered_set<std::string> combined_ids;
  for (const Document& d : combined.documents) combined_ids.insert(d.id);
  for (const Document& d : target.documents)
    if (!combined_ids.count(d.id))
      throw Error("weight_table: target document '" + d.id +
                  "' is not part of the combined corpus");

  std::unordered_map<std::string, std::size_t> df_target, df_combined;
  for (const Document& d : target.documents)
    for (auto sv : document_vocabulary(d)) ++df_target[std::string(sv)];
  for (const Document& d : combined.documents)
    for (auto sv : document_vocabulary(d)) ++df_combined[std::string(sv)];

  const double a = smoothing.add;
  const double nt = double(target.size());
  const double nc = double(combined.size());

  std::vector<TermWeight> table;
  table.reserve(df_target.size());
  for (const auto& [term, dft] : df_target) {
    TermWeight w;
    w.term = term;
    w.df_target = dft;
    auto combined_it = df_combined.find(term);
    if (combined_it == df_combined.end() || combined_it->second < dft)
      throw Error("weight_table: term '" + term +
                  "' is more frequent in the target than in the combined corpus; the "
                  "corpora disagree on shared document ids");
    w.df_combined = combined_it->second;
    w.p = (double(w.df_target) + a) / (nt + 2.0 * a);
    w.q = (double(w.df_combined) + a) / (nc + 2.0 * a);
    w.w_bi = bi_weight(w.p, w.q);
    w.w_idf = idf_weight(w.q);
    table.push_back(std::move(w));
  }
  std::sort(table.begin(), table.end(),
            [](const TermWeight& a_, const TermWeight& b_) { return a_.term < b_.term; });
  return table;
}

STermSet weighted_sterms(const Corpus& target, const Corpus& combined, WeightScheme scheme,
                         std::optional<double> cutoff, const SmoothingConfig& smoothing,
                         const Stoplist* stoplist) {
  const double cut = cutoff.value_or(scheme == WeightScheme::bi ? 5.0 : 4.0);
  STermSet set;
  set.label = to_string(scheme);
  {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s_threshold(%g)", to_string(scheme), cut);
    set.recipe = buf;
  }
  set.stoplist_applied = stoplist != nullptr;
  for (const TermWeight& w : weight_table(target, combined, smoothing)) {
    const double value = scheme == WeightScheme::bi ? w.w_bi : w.w_idf;
    if (value < cut) continue;
    if (stoplist && stoplist->contains(w.term)) continue;
    set.terms.insert(w.term);
  }
  return set;
}

void write_weight_csv(std::ostream& out, const std::vector<TermWeight>& table) {
  out << "term,df_target,df_combined,p,q,w_bi,w_idf\r\n";
  char buf[256];
  for (const TermWeight& w : table) {
    std::snprintf(buf, sizeof(buf), ",%zu,%zu,%.6f,%.6f,%.6f,%.6f", w.df_target, w.df_combined,
                  w.p, w.q, w.w_bi, w.w_idf);
    out << csv_field(w.term) << buf << "\r\n";
  }
}

SystemSpec SystemSpec::parse(std::string_view text) {
  SystemSpec spec;
  auto parse_cutoff = [&](std::string_view rest) {
    if (rest.empty()) return;
    spec.cutoff = std::stod(std::string(rest));
  };
  if (text == "dictionary") {
    spec.kind = Kind::dictionary;
    return spec;
  }
  if (text.substr(0, 3) == "bi:" || text == "bi") {
    spec.kind = Kind::bi;
    if (text.size() > 3) parse_cutoff(text.substr(3));
    return spec;
  }
  if (text.substr(0, 4) == "idf:" || text == "idf") {
    spec.kind = Kind::idf;
    if (text.size() > 4) parse_cutoff(text.substr(4));
    return spec;
  }
  bool pooled = false;
  if (text.substr(0, 7) == "pooled:") {
    pooled = true;
    text.remove_prefix(7);
  }
  auto f = field_from_string(text);
  if (!f) throw Error("unknown S-term system '" + std::string(text) + "'");
  if (*f == FieldName::fulltext)
    throw Error("fulltext cannot serve as its own S-term system");
  spec.kind = pooled ? Kind::pooled_field : Kind::field;
  spec.field = *f;
  return spec;
}

std::string SystemSpec::label(bool stoplist_applied) const {
  std::string base;
  switch (kind) {
    case Kind::field: base = to_string(field); break;
    case Kind::pooled_field: base = std::string("pooled:") + to_string(field); break;
    case Kind::dictionary: base = "dictionary"; break;
    case Kind::bi: base = "bi"; break;
    case Kind::idf: base = "idf"; break;
  }
  if (stoplist_applied) base += "-nostop";
  return base;
}

const STermSet& ResolvedSystem::for_doc(const Document& doc) const {
  if (!per_doc_mode) return shared;
  static const STermSet kEmpty{};
  auto it = per_document.find(doc.id);
  return it == per_document.end() ? kEmpty : it->second;
}

ResolvedSystem ResolvedSystem::fixed(STermSet set) {
  ResolvedSystem sys;
  sys.label = set.label;
  sys.shared = std::move(set);
  return sys;
}

ResolvedSystem resolve_system(const SystemSpec& spec, const Corpus& corpus,
                              const Corpus* combined, const Stoplist* stoplist,
                              const std::string& dictionary_path,
                              const SmoothingConfig& smoothing, const TokenizePolicy& policy) {
  ResolvedSystem sys;
  sys.label = spec.label(stoplist != nullptr);
  switch (spec.kind) {
    case SystemSpec::Kind::field: {
      sys.per_doc_mode = true;
      for (const Document& d : corpus.documents)
        if (d.has(spec.field))
          sys.per_document.emplace(d.id, field_sterms(d, spec.field, stoplist));
      return sys;
    }
    case SystemSpec::Kind::pooled_field:
      sys.shared = pooled_field_sterms(corpus, spec.field, stoplist);
      return sys;
    case SystemSpec::Kind::dictionary:
      if (dictionary_path.empty())
        throw Error("system 'dictionary' requires a dictionary file path");
      sys.shared = dictionary_sterms_file(dictionary_path, policy, stoplist);
      return sys;
    case SystemSpec::Kind::bi:
    case SystemSpec::Kind::idf: {
      if (combined == nullptr)
        throw Error("system '" + sys.label + "' requires a combined corpus");
      auto scheme = spec.kind == SystemSpec::Kind::bi ? WeightScheme::bi : WeightScheme::idf;
      sys.shared = weighted_sterms(corpus, *combined, scheme, spec.cutoff, smoothing, stoplist);
      return sys;
    }
  }
  throw Error("unreachable system kind");
}

}  // namespace subwin

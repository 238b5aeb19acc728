// grammar.cpp -- tag mapping, construct counting, weight of evidence.
#include "subwin/grammar.hpp"

#include "subwin/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace subwin {

namespace {

const char* kPennDefault[][2] = {
    {"CC", "conj"},        {"CD", "number"},       {"DT", "det"},
    {"EX", "exist-there"}, {"FW", "frgn-word"},    {"IN", "prep"},
    {"JJ", "adj"},         {"JJR", "compartv-adj"},{"JJS", "superl-adj"},
    {"LS", "list-item"},   {"MD", "modal"},        {"NN", "noun"},
    {"NNS", "pl-noun"},    {"NNP", "proper-noun"}, {"NNPS", "proper-noun"},
    {"PDT", "predet"},     {"POS", "possessive"},  {"PRP", "pron"},
    {"PRP$", "poss-pron"}, {"RB", "adv"},          {"RBR", "compartv-adv"},
    {"RBS", "superl-adv"}, {"RP", "particle"},     {"SYM", "symbol"},
    {"TO", "to"},          {"UH", "interject"},    {"VB", "verb"},
    {"VBD", "pst-tns-verb"}, {"VBG", "gerund"},    {"VBN", "vrb-past-prt"},
    {"VBP", "verb"},       {"VBZ", "3rd-pers-vrb"},{"WDT", "wh-det"},
    {"WP", "wh-pron"},     {"WP$", "wh-poss"},     {"WRB", "wh-adv"},
    {",", "comma"},        {".", "period"},        {":", "colon"},
    {"``", "quote"},       {"''", "quote"},        {"(", "paren"},
    {")", "paren"},        {"-LRB-", "paren"},     {"-RRB-", "paren"},
    {"$", "symbol"},       {"#", "symbol"},
};

}  // namespace

std::string TagMap::simplify(const std::string& tag) const {
  auto it = mapping.find(tag);
  if (it != mapping.end()) return it->second;
  if (labels.count(tag)) return tag;  // already simplified
  return "other";
}

bool TagMap::known(const std::string& tag) const {
  return mapping.count(tag) != 0 || labels.count(tag) != 0;
}

void TagMap::rebuild_labels() {
  labels.clear();
  for (const auto& [tag, label] : mapping) labels.insert(label);
}

TagMap TagMap::penn_default() {
  TagMap tm;
  for (const auto& entry : kPennDefault) tm.mapping.emplace(entry[0], entry[1]);
  tm.rebuild_labels();
  return tm;
}

TagMap TagMap::load(std::istream& in) {
  TagMap tm;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag, label;
    if (ls >> tag >> label) tm.mapping[tag] = label;
  }
  if (tm.mapping.empty()) throw Error("tag map is empty");
  tm.rebuild_labels();
  return tm;
}

TagMap TagMap::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open tag map file '" + path + "'");
  return load(in);
}

std::size_t map_tags(TokenSeq& tokens, const TagMap& tagmap) {
  std::size_t unknown = 0;
  for (Token& t : tokens) {
    if (!t.tagged())
      throw Error("map_tags: token '" + t.surface + "' is untagged");
    if (!tagmap.known(t.tag)) ++unknown;
    t.tag = tagmap.simplify(t.tag);
  }
  return unknown;
}

Corpus map_corpus_tags(const Corpus& corpus, const TagMap& tagmap, std::size_t* unknown_count) {
  Corpus out = corpus;
  std::size_t unknown = 0;
  for (Document& d : out.documents)
    for (auto& [field, tokens] : d.fields) unknown += map_tags(tokens, tagmap);
  if (unknown_count) *unknown_count = unknown;
  return out;
}

std::string TagSequence::str() const {
  std::string out;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (i) out.push_back(' ');
    out += tags[i];
  }
  return out;
}

TagSequence TagSequence::parse(std::string_view text) {
  TagSequence seq;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    if (i > start) seq.tags.emplace_back(text.substr(start, i - start));
  }
  return seq;
}

double weight_of_evidence(std::size_t n, std::size_t n_sw, std::size_t total_windows,
                          std::size_t total_sw, double smoothing_add) {
  if (total_windows == 0) throw Error("weight_of_evidence: zero total windows");
  if (n_sw > n || total_sw < n_sw || total_windows < n)
    throw Error("weight_of_evidence: inconsistent counts");
  const double a = smoothing_add;
  const double cond = (double(n_sw) + a) / (double(n) + 2.0 * a);
  const double prior = (double(total_sw) + a) / (double(total_windows) + 2.0 * a);
  return std::log2(cond / (1.0 - cond)) - std::log2(prior / (1.0 - prior));
}

GramTable construct_counts(const Corpus& corpus, const ResolvedSystem& system,
                           const WindowSpec& spec, LengthRange lengths,
                           std::size_t min_support, double smoothing_add) {
  if (corpus.empty()) throw Error("construct_counts: corpus '" + corpus.name + "' is empty");
  if (lengths.lo == 0 || lengths.lo > lengths.hi)
    throw Error("construct_counts: bad length range");
  for (const Document& d : corpus.documents)
    for (const Token& t : d.fulltext())
      if (!t.tagged())
        throw Error("construct_counts: corpus '" + corpus.name + "' is not fully tagged ('" +
                    t.surface + "' in document '" + d.id + "')");

  GramTable table;
  table.min_support = min_support;

  std::map<std::string, const Document*> docs;
  for (const Document& d : corpus.documents) docs[d.id] = &d;

  std::map<TagSequence, std::pair<std::size_t, std::size_t>> counts;  // n, n_sw
  for (std::size_t len = lengths.lo; len <= lengths.hi; ++len) {
    WindowSpec len_spec = spec;
    len_spec.omega = len;
    CorpusScan scan = scan_corpus(corpus, system, len_spec);
    LengthTotals& totals = table.totals[len];
    totals.windows = scan.total_windows;
    totals.significant = scan.significant;

    for (const Window& w : scan.windows) {
      const TokenSeq& ft = docs.at(w.doc_id)->fulltext();
      TagSequence seq;
      seq.tags.reserve(len);
      for (std::size_t i = w.start; i < w.start + len; ++i) seq.tags.push_back(ft[i].tag);
      auto& entry = counts[std::move(seq)];
      ++entry.first;
      if (w.significant) ++entry.second;
    }
  }

  for (const auto& [construct, entry] : counts) {
    if (entry.first < min_support) {
      ++table.dropped;
      continue;
    }
    GramStat stat;
    stat.construct = construct;
    stat.n = entry.first;
    stat.n_sw = entry.second;
    const double a = smoothing_add;
    stat.pr_sw_given_g = (double(stat.n_sw) + a) / (double(stat.n) + 2.0 * a);
    const LengthTotals& totals = table.totals.at(construct.tags.size());
    stat.m_g =
        weight_of_evidence(stat.n, stat.n_sw, totals.windows, totals.significant, smoothing_add);
    table.stats.push_back(std::move(stat));
  }
  std::sort(table.stats.begin(), table.stats.end(), [](const GramStat& a, const GramStat& b) {
    if (a.construct.tags.size() != b.construct.tags.size())
      return a.construct.tags.size() < b.construct.tags.size();
    return a.construct < b.construct;
  });
  return table;
}

DeltaTPTable delta_tp(const std::vector<std::pair<std::string, const GramTable*>>& tables,
                      const std::map<std::string, Orientation>& orientations) {
  if (tables.size() < 2) throw Error("delta_tp: need at least 2 corpora");

  DeltaTPTable out;
  bool has_theory = false, has_practice = false;
  for (const auto& [name, table] : tables) {
    auto it = orientations.find(name);
    if (it == orientations.end() || it->second == Orientation::unlabeled)
      throw Error("delta_tp: corpus '" + name + "' has no theory/practice orientation");
    out.corpora.push_back(name);
    out.orientations.push_back(it->second);
    has_theory = has_theory || it->second == Orientation::theory;
    has_practice = has_practice || it->second == Orientation::practice;
  }
  if (!has_theory || !has_practice)
    throw Error("delta_tp: need at least one theory and one practice corpus");

  // Constructs must clear min_support everywhere; the rest are reported.
  std::map<TagSequence, std::size_t> presence;
  std::map<TagSequence, std::vector<double>> values;
  for (std::size_t c = 0; c < tables.size(); ++c) {
    for (const GramStat& stat : tables[c].second->stats) {
      auto& seen = presence[stat.construct];
      auto& vals = values[stat.construct];
      if (vals.empty()) vals.assign(tables.size(), 0.0);
      vals[c] = stat.m_g;
      ++seen;
    }
  }
  for (const auto& [construct, seen] : presence) {
    if (seen < tables.size()) {
      out.excluded.push_back(construct);
      continue;
    }
    TheoryPracticeRow row;
    row.construct = construct;
    row.m_g = values.at(construct);
    for (std::size_t c = 0; c < out.corpora.size(); ++c)
      row.delta_tp += out.orientations[c] == Orientation::practice ? row.m_g[c] : -row.m_g[c];
    out.rows.push_back(std::move(row));
  }
  if (out.rows.empty()) throw Error("delta_tp: no construct meets min_support in every corpus");
  std::sort(out.rows.begin(), out.rows.end(), [](const TheoryPracticeRow& a,
                                                 const TheoryPracticeRow& b) {
    if (a.delta_tp != b.delta_tp) return a.delta_tp > b.delta_tp;
    return a.construct < b.construct;
  });
  return out;
}

void write_grammar_csv(std::ostream& out, const GramTable& table) {
  out << "construct,N,pr_sw_given_g,m_g\r\n";
  char buf[96];
  for (const GramStat& stat : table.stats) {
    std::snprintf(buf, sizeof(buf), ",%zu,%.6f,%.6f", stat.n, stat.pr_sw_given_g, stat.m_g);
    out << csv_field(stat.construct.str()) << buf << "\r\n";
  }
}

void write_delta_csv(std::ostream& out, const DeltaTPTable& table) {
  out << "construct";
  for (const auto& name : table.corpora) out << "," << csv_field("m_g_" + name);
  out << ",delta_tp\r\n";
  char buf[32];
  for (const TheoryPracticeRow& row : table.rows) {
    out << csv_field(row.construct.str());
    for (double v : row.m_g) {
      std::snprintf(buf, sizeof(buf), ",%.6f", v);
      out << buf;
    }
    std::snprintf(buf, sizeof(buf), ",%.6f", row.delta_tp);
    out << buf << "\r\n";
  }
}

}  // namespace subwin

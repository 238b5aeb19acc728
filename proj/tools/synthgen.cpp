// synthgen.cpp -- deterministic generator for the bundled synthetic
// corpora. Four corpora with contrasting type-token regimes, field
// inventories, and S-term location habits, written as pretagged JSON,
// plus the subject dictionary for the medical-flavored corpus.
#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "subwin/corpus.hpp"

namespace fs = std::filesystem;
using subwin::Token;
using subwin::TokenSeq;

namespace {

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  double u01() { return double(engine() >> 11) * 0x1p-53; }
  std::size_t below(std::size_t n) { return std::size_t(u01() * double(n)) % n; }
  std::size_t between(std::size_t lo, std::size_t hi) {  // inclusive
    return lo + below(hi - lo + 1);
  }
};

struct Lexeme {
  std::string word;
  std::string tag;
};

const Lexeme kFunctionWords[] = {
    {"the", "DT"},   {"of", "IN"},    {"and", "CC"},  {"a", "DT"},     {"to", "TO"},
    {"in", "IN"},    {"is", "VBZ"},   {"was", "VBD"}, {"for", "IN"},   {"with", "IN"},
    {"on", "IN"},    {"as", "IN"},    {"by", "IN"},   {"are", "VBP"},  {"be", "VB"},
    {"this", "DT"},  {"that", "WDT"}, {"from", "IN"}, {"an", "DT"},    {"which", "WDT"},
    {"were", "VBD"}, {"at", "IN"},    {"we", "PRP"},  {"it", "PRP"},   {"not", "RB"},
    {"can", "MD"},   {"may", "MD"},   {"has", "VBZ"}, {"have", "VBP"}, {"been", "VBN"},
    {"these", "DT"}, {"when", "WRB"}, {"their", "PRP$"}, {"more", "RBR"}, {"also", "RB"},
    {"each", "DT"},  {"such", "JJ"},  {"its", "PRP$"}, {"than", "IN"},  {"other", "JJ"},
};
constexpr std::size_t kFunctionCount = sizeof(kFunctionWords) / sizeof(kFunctionWords[0]);

const char* kHeaderWords[][2] = {
    {"introduction", "NN"}, {"methods", "NNS"},    {"results", "NNS"},
    {"discussion", "NN"},   {"conclusions", "NNS"}, {"background", "NN"},
    {"analysis", "NN"},     {"evaluation", "NN"},
};

std::string make_word(Rng& rng) {
  static const char* onsets[] = {"b", "c",  "d",  "f",  "g",  "l",  "m",  "n",
                                 "p", "r",  "s",  "t",  "v",  "br", "cr", "dr",
                                 "gl", "pl", "st", "tr", "sp", "th"};
  static const char* vowels[] = {"a", "e", "i", "o", "u", "ia", "ea", "io"};
  static const char* codas[] = {"", "n", "r", "s", "l", "x", "m", "t"};
  std::string w;
  const std::size_t syllables = rng.between(2, 4);
  for (std::size_t s = 0; s < syllables; ++s) {
    w += onsets[rng.below(sizeof(onsets) / sizeof(onsets[0]))];
    w += vowels[rng.below(sizeof(vowels) / sizeof(vowels[0]))];
  }
  w += codas[rng.below(sizeof(codas) / sizeof(codas[0]))];
  return w;
}

std::string content_tag(Rng& rng) {
  const double u = rng.u01();
  if (u < 0.50) return "NN";
  if (u < 0.64) return "JJ";
  if (u < 0.76) return "NNS";
  if (u < 0.82) return "VBD";
  if (u < 0.87) return "VBZ";
  if (u < 0.91) return "VBN";
  if (u < 0.95) return "RB";
  return "NNP";
}

struct CorpusPlan {
  std::string name;
  std::string orientation;
  std::size_t vocab_size;     // content vocabulary size
  double zipf_s;              // skew; larger reuses top ranks more
  std::size_t docs;
  bool has_citations;
  bool has_section_headers;
  bool has_mesh;
  double late_bias;           // >0 pushes topic bursts toward the end
  double burst_rate;          // bursts per fulltext token
};

struct Vocab {
  std::vector<Lexeme> words;
  std::vector<double> cdf;  // Zipf cumulative over ranks
};

Vocab make_vocab(Rng& rng, std::size_t size, double s) {
  Vocab v;
  std::map<std::string, bool> seen;
  while (v.words.size() < size) {
    std::string w = make_word(rng);
    if (seen.count(w)) continue;
    seen[w] = true;
    v.words.push_back({w, content_tag(rng)});
  }
  v.cdf.resize(size);
  double sum = 0.0;
  for (std::size_t r = 0; r < size; ++r) {
    sum += 1.0 / std::pow(double(r + 1), s);
    v.cdf[r] = sum;
  }
  for (double& c : v.cdf) c /= sum;
  return v;
}

const Lexeme& zipf_draw(Rng& rng, const Vocab& v) {
  const double u = rng.u01();
  const auto it = std::lower_bound(v.cdf.begin(), v.cdf.end(), u);
  return v.words[std::size_t(it - v.cdf.begin()) % v.words.size()];
}

Token tok(const Lexeme& lex) { return Token{lex.word, lex.tag, 0}; }

void push(TokenSeq& seq, const Lexeme& lex) {
  Token t = tok(lex);
  t.position = seq.size();
  seq.push_back(std::move(t));
}

// Burst center position in [0,1]; bias > 0 favors late positions.
double burst_position(Rng& rng, double bias) {
  const double u = rng.u01();
  if (bias <= 0.0) return u * (1.0 - 0.15 * u);  // mild early lean
  return std::pow(u, 1.0 / (1.0 + bias));        // late-heavy
}

struct GeneratedDoc {
  std::map<std::string, TokenSeq> fields;
};

GeneratedDoc make_doc(Rng& rng, const CorpusPlan& plan, const Vocab& vocab,
                      const std::vector<Lexeme>& topical_band) {
  GeneratedDoc doc;

  // Topic terms anchor the title, abstract, headers, and fulltext bursts.
  std::vector<Lexeme> topic;
  for (std::size_t i = 0; i < 12; ++i)
    topic.push_back(topical_band[rng.below(topical_band.size())]);

  TokenSeq title;
  const std::size_t title_len = rng.between(8, 12);
  for (std::size_t i = 0; i < title_len; ++i) {
    if (i % 3 == 2) push(title, kFunctionWords[rng.below(kFunctionCount)]);
    else push(title, topic[rng.below(topic.size())]);
  }
  doc.fields["title"] = std::move(title);

  TokenSeq abstract;
  const std::size_t abstract_len = rng.between(60, 100);
  for (std::size_t i = 0; i < abstract_len; ++i) {
    const double u = rng.u01();
    if (u < 0.30) push(abstract, topic[rng.below(topic.size())]);
    else if (u < 0.62) push(abstract, zipf_draw(rng, vocab));
    else push(abstract, kFunctionWords[rng.below(kFunctionCount)]);
  }
  doc.fields["abstract"] = std::move(abstract);

  // Fulltext: background stream with topic bursts at biased locations.
  const std::size_t len = rng.between(450, 700);
  TokenSeq fulltext;
  fulltext.reserve(len + 64);
  std::vector<std::vector<Lexeme>> bursts;
  const std::size_t n_bursts = std::size_t(double(len) * plan.burst_rate);
  std::vector<std::pair<std::size_t, std::size_t>> burst_at;  // (position, index)
  for (std::size_t b = 0; b < n_bursts; ++b) {
    std::vector<Lexeme> burst;
    const std::size_t burst_len = rng.between(2, 4);
    for (std::size_t i = 0; i < burst_len; ++i) burst.push_back(topic[rng.below(topic.size())]);
    burst_at.emplace_back(std::size_t(burst_position(rng, plan.late_bias) * double(len)),
                          bursts.size());
    bursts.push_back(std::move(burst));
  }
  std::sort(burst_at.begin(), burst_at.end());
  std::size_t next_burst = 0;
  for (std::size_t i = 0; i < len; ++i) {
    while (next_burst < burst_at.size() && burst_at[next_burst].first <= i) {
      for (const Lexeme& lex : bursts[burst_at[next_burst].second]) push(fulltext, lex);
      ++next_burst;
    }
    const double u = rng.u01();
    if (u < 0.42) push(fulltext, kFunctionWords[rng.below(kFunctionCount)]);
    else if (u < 0.88) push(fulltext, zipf_draw(rng, vocab));
    else if (u < 0.92) push(fulltext, Lexeme{std::to_string(rng.between(1, 1999)), "CD"});
    else if (u < 0.97) push(fulltext, Lexeme{",", ","});
    else push(fulltext, Lexeme{".", "."});
  }
  doc.fields["fulltext"] = std::move(fulltext);

  if (plan.has_citations) {
    TokenSeq citations;
    const std::size_t cite_len = rng.between(120, 220);
    for (std::size_t i = 0; i < cite_len; ++i) {
      const double u = rng.u01();
      if (u < 0.18) push(citations, topic[rng.below(topic.size())]);
      else if (u < 0.60) push(citations, zipf_draw(rng, vocab));
      else if (u < 0.72) push(citations, Lexeme{std::to_string(rng.between(1970, 1996)), "CD"});
      else if (u < 0.86) {
        Lexeme author = zipf_draw(rng, vocab);
        author.tag = "NNP";
        push(citations, author);
      } else push(citations, kFunctionWords[rng.below(kFunctionCount)]);
    }
    doc.fields["citations"] = std::move(citations);
  }

  if (plan.has_section_headers) {
    TokenSeq headers;
    const std::size_t n_headers = rng.between(4, 7);
    for (std::size_t h = 0; h < n_headers; ++h) {
      push(headers, Lexeme{kHeaderWords[rng.below(8)][0], kHeaderWords[rng.below(8)][1]});
      if (rng.u01() < 0.6) push(headers, topic[rng.below(topic.size())]);
    }
    doc.fields["section_headers"] = std::move(headers);
  }

  if (plan.has_mesh) {
    TokenSeq major, minor;
    for (std::size_t i = 0; i < rng.between(4, 6); ++i)
      push(major, topical_band[rng.below(topical_band.size())]);
    for (std::size_t i = 0; i < rng.between(10, 18); ++i)
      push(minor, topical_band[rng.below(topical_band.size())]);
    doc.fields["mesh_major"] = std::move(major);
    doc.fields["mesh_minor"] = std::move(minor);
  }
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20240501;
  std::string out_dir = "data";
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) seed = std::stoull(argv[++i]);
    else if (arg == "--out" && i + 1 < argc) out_dir = argv[++i];
    else {
      std::cerr << "usage: synthgen [--seed N] [--out DIR]\n";
      return 2;
    }
  }

  const CorpusPlan plans[] = {
      // practice-leaning: richer vocabulary, late topic bursts
      {"synmed", "practice", 2600, 0.85, 40, false, false, true, 1.2, 0.030},
      {"synexp", "practice", 2200, 0.90, 40, true, true, false, 0.9, 0.028},
      // theory-leaning: smaller vocabulary, heavier reuse, flat/early bursts
      {"syntheo", "theory", 420, 1.34, 40, true, true, false, 0.0, 0.026},
      {"synling", "theory", 300, 1.42, 40, true, true, false, 0.0, 0.024},
  };

  fs::create_directories(fs::path(out_dir) / "corpora");

  std::vector<std::string> dictionary;
  for (const CorpusPlan& plan : plans) {
    Rng rng(seed ^ std::hash<std::string>{}(plan.name));
    const Vocab vocab = make_vocab(rng, plan.vocab_size, plan.zipf_s);

    // Topical band: mid-rank terms, frequent enough to recur across the
    // corpus but absent from the other corpora.
    std::vector<Lexeme> band;
    const std::size_t band_lo = std::min<std::size_t>(30, plan.vocab_size / 10);
    const std::size_t band_hi = std::min<std::size_t>(plan.vocab_size, band_lo + 220);
    for (std::size_t r = band_lo; r < band_hi; ++r) band.push_back(vocab.words[r]);
    if (plan.has_mesh)
      for (const Lexeme& lex : band) dictionary.push_back(lex.word);

    nlohmann::json jdocs = nlohmann::json::array();
    double ttr_sum = 0.0;
    for (std::size_t d = 0; d < plan.docs; ++d) {
      GeneratedDoc doc = make_doc(rng, plan, vocab, band);
      char id[64];
      std::snprintf(id, sizeof(id), "%s-%03zu", plan.name.c_str(), d);
      nlohmann::json jd;
      jd["id"] = id;
      nlohmann::json jf;
      for (const auto& [field, tokens] : doc.fields)
        jf[field] = subwin::to_pretagged(tokens);
      jd["fields"] = std::move(jf);
      jdocs.push_back(std::move(jd));

      const TokenSeq& ft = doc.fields.at("fulltext");
      std::map<std::string, bool> types;
      for (const Token& t : ft) types[t.surface] = true;
      ttr_sum += double(types.size()) / double(ft.size());
    }

    nlohmann::json j;
    j["name"] = plan.name;
    j["orientation"] = plan.orientation;
    j["documents"] = std::move(jdocs);

    const fs::path path = fs::path(out_dir) / "corpora" / (plan.name + ".json");
    std::ofstream out(path, std::ios::binary);
    out << j.dump(2) << "\n";
    std::cout << plan.name << ": " << plan.docs << " docs, mean fulltext TTR "
              << ttr_sum / double(plan.docs) << "\n";
  }

  std::sort(dictionary.begin(), dictionary.end());
  dictionary.erase(std::unique(dictionary.begin(), dictionary.end()), dictionary.end());
  std::ofstream dict(fs::path(out_dir) / "dictionary.txt", std::ios::binary);
  dict << "# subject dictionary for the synmed corpus\n";
  for (const std::string& w : dictionary) dict << w << "\n";
  std::cout << "dictionary: " << dictionary.size() << " terms\n";
  return 0;
}

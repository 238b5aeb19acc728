// Tokenization, ingestion, stoplists, census.
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "subwin/corpus.hpp"

using namespace subwin;
using testutil::Rand;

TEST_CASE("tokenize basics") {
  CHECK(tokenize("Cystic Fibrosis, treated.") ==
        std::vector<std::string>{"cystic", "fibrosis", "treated"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("   \t\n ").empty());
}

TEST_CASE("tokenize digit policy") {
  TokenizePolicy keep, drop;
  drop.keep_digits = false;
  CHECK(tokenize("n 2", keep) == std::vector<std::string>{"n", "2"});
  CHECK(tokenize("n 2", drop) == std::vector<std::string>{"n"});
  CHECK(tokenize("x42 42", drop) == std::vector<std::string>{"x42"});
}

TEST_CASE("tokenize punctuation handling") {
  CHECK(tokenize("(hello)") == std::vector<std::string>{"hello"});
  CHECK(tokenize("state-of-the-art") == std::vector<std::string>{"state-of-the-art"});
  CHECK(tokenize("--dash-- ...") == std::vector<std::string>{"dash"});
  TokenizePolicy punct;
  punct.keep_punctuation_tokens = true;
  CHECK(tokenize("a ...", punct) == std::vector<std::string>{"a", "..."});
}

TEST_CASE("tokenize lowercases latin-1") {
  CHECK(tokenize("Größe MATTERS") == std::vector<std::string>{"größe", "matters"});
  CHECK(normalize_term("(Naïve)") == "naïve");
}

TEST_CASE("tokenize is idempotent") {
  Rand rng(7);
  const std::string pool = "aB9 .,-_(){}ÄxyZ!?";
  for (int iter = 0; iter < 200; ++iter) {
    std::string raw;
    const std::size_t len = rng.below(40);
    for (std::size_t i = 0; i < len; ++i) raw.push_back(pool[rng.below(pool.size())]);
    const auto once = tokenize(raw);
    std::string joined;
    for (const auto& t : once) joined += t + " ";
    CHECK(tokenize(joined) == once);
  }
}

TEST_CASE("pretagged parse and round trip") {
  const TokenSeq toks = parse_pretagged("boy_NN bites_VBZ dogs_NNS", "d", FieldName::fulltext);
  REQUIRE(toks.size() == 3);
  CHECK(toks[0].surface == "boy");
  CHECK(toks[0].tag == "NN");
  CHECK(toks[2].tag == "NNS");
  CHECK(toks[2].position == 2);

  // Underscore escaping.
  TokenSeq with_underscore;
  with_underscore.push_back(Token{"a_b", "NN", 0});
  with_underscore.push_back(Token{"plain", "JJ", 1});
  const std::string text = to_pretagged(with_underscore);
  CHECK(text == "a\\_b_NN plain_JJ");
  const TokenSeq back = parse_pretagged(text, "d", FieldName::fulltext);
  REQUIRE(back.size() == 2);
  CHECK(back[0].surface == "a_b");
  CHECK(back[0].tag == "NN");

  CHECK_THROWS_AS(parse_pretagged("naked", "d", FieldName::fulltext), Error);
  CHECK_THROWS_AS(parse_pretagged("tail_", "d", FieldName::fulltext), Error);
  CHECK_THROWS_AS(parse_pretagged("_NN", "d", FieldName::fulltext), Error);
}

TEST_CASE("pretagged round trip is lossless for surfaces") {
  Rand rng(11);
  const std::string alphabet = "abc_x";
  for (int iter = 0; iter < 100; ++iter) {
    TokenSeq toks;
    const std::size_t n = 1 + rng.below(12);
    for (std::size_t i = 0; i < n; ++i) {
      std::string w;
      const std::size_t len = 1 + rng.below(6);
      for (std::size_t k = 0; k < len; ++k) w.push_back(alphabet[rng.below(alphabet.size())]);
      toks.push_back(Token{w, rng.below(2) ? "NN" : "JJ", i});
    }
    const TokenSeq back = parse_pretagged(to_pretagged(toks), "d", FieldName::fulltext);
    REQUIRE(back.size() == toks.size());
    for (std::size_t i = 0; i < toks.size(); ++i) {
      CHECK(back[i].surface == toks[i].surface);
      CHECK(back[i].tag == toks[i].tag);
    }
  }
}

TEST_CASE("load_corpus json") {
  std::istringstream in(R"({"name":"demo","orientation":"practice","documents":[
    {"id":"d1","fields":{"title":"A Tiny Title","fulltext":"one two three four"}}]})");
  const Corpus c = load_corpus(in, CorpusFormat::json);
  CHECK(c.name == "demo");
  CHECK(c.orientation == Orientation::practice);
  REQUIRE(c.size() == 1);
  CHECK(c.documents[0].fields.size() == 2);
  CHECK(c.documents[0].fulltext().size() == 4);
  CHECK(c.documents[0].field(FieldName::title)[0].surface == "a");
  CHECK(c.documents[0].discipline == "demo");
}

TEST_CASE("load_corpus rejects bad schema") {
  {
    std::istringstream in(R"({"name":"x","documents":[
      {"id":"d1","fields":{"body":"text","fulltext":"a"}}]})");
    CHECK_THROWS_WITH_AS(load_corpus(in, CorpusFormat::json),
                         doctest::Contains("unknown field 'body'"), Error);
  }
  {
    std::istringstream in(R"({"name":"x","documents":[
      {"id":"d1","fields":{"fulltext":"a"}},{"id":"d1","fields":{"fulltext":"b"}}]})");
    CHECK_THROWS_WITH_AS(load_corpus(in, CorpusFormat::json),
                         doctest::Contains("duplicate document id"), Error);
  }
  {
    std::istringstream in(R"({"name":"x","documents":[{"id":"d1","fields":{"title":"t"}}]})");
    CHECK_THROWS_WITH_AS(load_corpus(in, CorpusFormat::json),
                         doctest::Contains("fulltext"), Error);
  }
  {
    std::istringstream in(R"({"name":"x","documents":[
      {"id":"d1","fields":{"title":"...","fulltext":"a"}}]})");
    CHECK_THROWS_WITH_AS(load_corpus(in, CorpusFormat::json),
                         doctest::Contains("no tokens"), Error);
  }
}

TEST_CASE("load_corpus pretagged") {
  std::istringstream in(R"({"name":"x","documents":[
    {"id":"d1","fields":{"fulltext":"Boy_NN bites_VBZ ,_, dog_NN ._."}}]})");
  const Corpus c = load_corpus(in, CorpusFormat::pretagged_json);
  const TokenSeq& ft = c.documents[0].fulltext();
  REQUIRE(ft.size() == 5);
  CHECK(ft[0].surface == "boy");  // lowercased, tokenization left to the tagger
  CHECK(ft[2].surface == ",");
  CHECK(ft[2].tag == ",");
  CHECK(ft[4].tag == ".");
}

TEST_CASE("stoplist and remove_stopwords") {
  std::istringstream in("the\nand # a comment\n# full comment line\nThe\n");
  const Stoplist sl = Stoplist::load(in);
  CHECK(sl.size() == 2);
  CHECK(sl.contains("the"));

  const TokenSeq toks = testutil::seq({"the", "cystic", "and", "fibrosis"});
  const TokenSeq kept = remove_stopwords(toks, sl);
  REQUIRE(kept.size() == 2);
  CHECK(kept[0].surface == "cystic");
  CHECK(kept[1].surface == "fibrosis");

  CHECK(remove_stopwords(toks, Stoplist{}).size() == 4);
  const Stoplist all{{"the", "cystic", "and", "fibrosis"}};
  CHECK(remove_stopwords(toks, all).empty());
}

TEST_CASE("remove_stopwords is an idempotent subsequence filter") {
  Rand rng(23);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e", "f"};
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<std::string> words;
    for (std::size_t i = 0; i < rng.below(30); ++i) words.push_back(vocab[rng.below(6)]);
    Stoplist sl;
    for (const auto& w : vocab)
      if (rng.below(2)) sl.terms.insert(w);
    const TokenSeq input = testutil::seq(words);
    const TokenSeq once = remove_stopwords(input, sl);
    const TokenSeq twice = remove_stopwords(once, sl);
    CHECK(once.size() == twice.size());
    // Subsequence check: surfaces of `once` appear in order within input.
    std::size_t pos = 0;
    for (const Token& t : once) {
      while (pos < input.size() && input[pos].surface != t.surface) ++pos;
      REQUIRE(pos < input.size());
      ++pos;
    }
  }
}

TEST_CASE("field census") {
  Document d1 = testutil::doc("d1", {"w1", "w2"});
  d1.fields[FieldName::title] = testutil::seq({"a", "b", "c", "d"});
  Document d2 = testutil::doc("d2", {"w1"});
  d2.fields[FieldName::title] = testutil::seq({"p", "q", "r", "s", "t", "u"});
  const Corpus c = testutil::corpus("x", {d1, d2});

  const auto rows = field_census(c);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].field == FieldName::title);
  CHECK(rows[0].documents == 2);
  CHECK(rows[0].mean_tokens == doctest::Approx(5.0));
  CHECK(rows[0].mean_types == doctest::Approx(5.0));

  const Corpus single = testutil::corpus("y", {testutil::doc("d", {"a", "a", "b"})});
  const auto srows = field_census(single);
  REQUIRE(srows.size() == 1);
  CHECK(srows[0].mean_tokens == doctest::Approx(3.0));
  CHECK(srows[0].mean_types == doctest::Approx(2.0));

  CHECK_THROWS_AS(field_census(Corpus{}), Error);
}

TEST_CASE("type count never exceeds token count") {
  Rand rng(31);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<std::string> words;
    for (std::size_t i = 0; i < 1 + rng.below(50); ++i)
      words.push_back(std::string(1, char('a' + rng.below(8))));
    const Corpus c = testutil::corpus("x", {testutil::doc("d", words)});
    const auto rows = field_census(c);
    CHECK(rows[0].mean_types <= rows[0].mean_tokens);
  }
}

TEST_CASE("subset corpus") {
  std::vector<Document> docs;
  for (int i = 0; i < 5; ++i) docs.push_back(testutil::doc("d" + std::to_string(i), {"a"}));
  const Corpus c = testutil::corpus("x", docs);
  const Corpus even = subset_corpus(c, Subset::even);
  const Corpus odd = subset_corpus(c, Subset::odd);
  REQUIRE(even.size() == 3);
  CHECK(even.documents[0].id == "d0");
  CHECK(even.documents[2].id == "d4");
  REQUIRE(odd.size() == 2);
  CHECK(odd.documents[0].id == "d1");
  CHECK(subset_corpus(c, Subset::all).size() == 5);
}

// helpers.hpp -- shared fixtures for the unit tests.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "subwin/corpus.hpp"

namespace testutil {

inline subwin::TokenSeq seq(const std::vector<std::string>& surfaces) {
  subwin::TokenSeq out;
  out.reserve(surfaces.size());
  for (std::size_t i = 0; i < surfaces.size(); ++i)
    out.push_back(subwin::Token{surfaces[i], {}, i});
  return out;
}

inline subwin::TokenSeq tagged_seq(const std::vector<std::pair<std::string, std::string>>& toks) {
  subwin::TokenSeq out;
  out.reserve(toks.size());
  for (std::size_t i = 0; i < toks.size(); ++i)
    out.push_back(subwin::Token{toks[i].first, toks[i].second, i});
  return out;
}

inline subwin::Document doc(std::string id, std::vector<std::string> fulltext) {
  subwin::Document d;
  d.id = std::move(id);
  d.fields[subwin::FieldName::fulltext] = seq(fulltext);
  return d;
}

inline subwin::Corpus corpus(std::string name, std::vector<subwin::Document> docs,
                             subwin::Orientation orientation = subwin::Orientation::unlabeled) {
  subwin::Corpus c;
  c.name = std::move(name);
  c.orientation = orientation;
  c.documents = std::move(docs);
  return c;
}

// Deterministic uniform helpers for hand-rolled property tests.
struct Rand {
  std::mt19937_64 engine;
  explicit Rand(std::uint64_t seed) : engine(seed) {}
  double u01() { return double(engine() >> 11) * 0x1p-53; }
  std::size_t below(std::size_t n) { return std::size_t(u01() * double(n)) % n; }
};

}  // namespace testutil

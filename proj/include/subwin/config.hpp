// config.hpp -- run configuration shared by all CLI subcommands.
// Defaults match the stated analysis parameters: omega 3, alpha 0.03,
// BI cutoff 5, IDF cutoff 4, min_support 20.
#pragma once

#include <string>

#include "subwin/corpus.hpp"
#include "subwin/window.hpp"

namespace subwin {

struct RunConfig {
  std::size_t omega = 3;
  double alpha = 0.03;
  double bi_cutoff = 5.0;
  double idf_cutoff = 4.0;
  double smoothing_add = 0.5;
  std::size_t n_points = 17;
  double bin_halfwidth = 0.03;
  std::size_t min_support = 20;
  std::size_t grammar_min_len = 1;
  std::size_t grammar_max_len = 4;
  std::string grammar_system = "title";  // S system behind grammar tables
  std::size_t ttr_prefix = 500;
  double ttr_theory_threshold = 0.25;
  std::size_t classify_top_constructs = 4;
  std::string stoplist_path;
  std::string dictionary_path;
  std::string tagmap_path;
  Subset subset = Subset::all;
  WindowSpec::PScope p_scope = WindowSpec::PScope::per_document;
  bool pretagged = false;
  TokenizePolicy policy;

  WindowSpec window_spec() const {
    WindowSpec spec;
    spec.omega = omega;
    spec.alpha = alpha;
    spec.p_scope = p_scope;
    return spec;
  }

  // ".json" files hold a flat JSON object of the keys above; anything
  // else is parsed as flat TOML (key = value, '#' comments).
  static RunConfig load_file(const std::string& path);
  static RunConfig from_json_text(const std::string& text);
  static RunConfig from_toml_text(const std::string& text);
};

}  // namespace subwin

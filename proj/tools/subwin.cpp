// subwin.cpp -- command line front end for the window analysis library.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "subwin/classify.hpp"
#include "subwin/config.hpp"
#include "subwin/report.hpp"

namespace {

struct GlobalOpts {
  std::string config_path;
  std::string out_dir;
  std::string subset = "all";
};

struct AnalysisOpts {
  std::optional<std::size_t> omega;
  std::optional<double> alpha;
  std::string stoplist;
  std::string dictionary;
  std::string tagmap;
  std::string p_scope;
  bool pretagged = false;
  bool no_stoplist = false;  // keep a configured stoplist out of the S sets
};

void add_analysis_opts(CLI::App* cmd, AnalysisOpts& opts) {
  cmd->add_option("--omega", opts.omega, "window size");
  cmd->add_option("--alpha", opts.alpha, "significance cutoff (tail < alpha)");
  cmd->add_option("--stoplist", opts.stoplist, "stoplist file, removed from S-producing fields");
  cmd->add_option("--dictionary", opts.dictionary, "subject dictionary file");
  cmd->add_option("--tagmap", opts.tagmap, "tag map TSV (defaults to the built-in Penn map)");
  cmd->add_option("--p-scope", opts.p_scope, "per_document or per_corpus")
      ->check(CLI::IsMember({"per_document", "per_corpus"}));
  cmd->add_flag("--pretagged", opts.pretagged, "corpus fields hold word_TAG pairs");
  cmd->add_flag("--no-stoplist", opts.no_stoplist,
                "resolve S systems without the configured stoplist");
}

subwin::RunConfig make_config(const GlobalOpts& global, const AnalysisOpts& opts) {
  subwin::RunConfig config;
  if (!global.config_path.empty())
    config = subwin::RunConfig::load_file(global.config_path);
  if (auto s = subwin::subset_from_string(global.subset)) config.subset = *s;
  if (opts.omega) config.omega = *opts.omega;
  if (opts.alpha) config.alpha = *opts.alpha;
  if (!opts.stoplist.empty()) config.stoplist_path = opts.stoplist;
  if (!opts.dictionary.empty()) config.dictionary_path = opts.dictionary;
  if (!opts.tagmap.empty()) config.tagmap_path = opts.tagmap;
  if (opts.pretagged) config.pretagged = true;
  if (opts.p_scope == "per_corpus") config.p_scope = subwin::WindowSpec::PScope::per_corpus;
  if (opts.p_scope == "per_document") config.p_scope = subwin::WindowSpec::PScope::per_document;
  return config;
}

// CSV subcommands stream to stdout unless --out is set, in which case
// the output lands in <out>/<name>.
void emit(const GlobalOpts& global, const std::string& name, const std::string& content) {
  if (global.out_dir.empty()) {
    std::cout << content;
    return;
  }
  std::filesystem::create_directories(global.out_dir);
  const std::filesystem::path path = std::filesystem::path(global.out_dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw subwin::Error("cannot write '" + path.string() + "'");
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subwin -- significant text window statistics for document corpora"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts global;
  app.add_option("--config", global.config_path, "configuration file (.json or flat TOML)");
  app.add_option("--out", global.out_dir, "output directory");
  app.add_option("--subset", global.subset, "document subset: all, even, or odd (0-based)")
      ->check(CLI::IsMember({"all", "even", "odd"}));

  AnalysisOpts opts;

  auto* census = app.add_subcommand("census", "per-field token/type means");
  std::vector<std::string> census_paths;
  census->add_option("corpora", census_paths, "corpus JSON files")->required();
  add_analysis_opts(census, opts);

  auto* sterms = app.add_subcommand("sterms", "list an S-term system or its weight table");
  std::vector<std::string> sterms_paths;
  std::string sterms_system = "title";
  bool sterms_weights = false;
  sterms->add_option("corpora", sterms_paths,
                     "target corpus first; the rest join the combined pool")
      ->required();
  sterms->add_option("--system", sterms_system, "title|abstract|...|dictionary|bi|idf");
  sterms->add_flag("--weights", sterms_weights, "print the full BI/IDF weight table");
  add_analysis_opts(sterms, opts);

  auto* windows = app.add_subcommand("windows", "dump windows with significance verdicts");
  std::vector<std::string> windows_paths;
  std::string windows_system = "title";
  windows->add_option("corpora", windows_paths,
                      "target corpus first; the rest join the combined pool")
      ->required();
  windows->add_option("--system", windows_system, "S-term system");
  add_analysis_opts(windows, opts);

  auto* profile = app.add_subcommand("profile", "SC/WWD/Q profiles plus location curves");
  std::vector<std::string> profile_paths;
  std::vector<std::string> profile_systems;
  profile->add_option("corpora", profile_paths, "corpus JSON files")->required();
  profile->add_option("--system", profile_systems, "S-term systems (default: all available)");
  add_analysis_opts(profile, opts);

  auto* curve = app.add_subcommand("curve", "location curves only");
  std::vector<std::string> curve_paths;
  std::vector<std::string> curve_systems;
  curve->add_option("corpora", curve_paths, "corpus JSON files")->required();
  curve->add_option("--system", curve_systems, "S-term systems (default: all available)");
  add_analysis_opts(curve, opts);

  auto* overlap = app.add_subcommand("overlap", "cross-system SW overlap matrix");
  std::vector<std::string> overlap_paths;
  std::vector<std::string> overlap_systems;
  overlap->add_option("corpora", overlap_paths,
                      "target corpus first; the rest join the combined pool")
      ->required();
  overlap->add_option("--system", overlap_systems, "systems to compare (default: all available)");
  add_analysis_opts(overlap, opts);

  auto* ttr = app.add_subcommand("ttr", "type-token ratios per document");
  std::vector<std::string> ttr_paths;
  bool ttr_anova = false;
  ttr->add_option("corpora", ttr_paths, "corpus JSON files")->required();
  ttr->add_flag("--anova", ttr_anova, "one-way ANOVA of per-document ratios across corpora");
  add_analysis_opts(ttr, opts);

  auto* grammar = app.add_subcommand("grammar", "tag-sequence constructs with M_G weights");
  std::vector<std::string> grammar_paths;
  std::string grammar_system;
  grammar->add_option("corpora", grammar_paths,
                      "target corpus first; the rest join the combined pool")
      ->required();
  grammar->add_option("--system", grammar_system, "S system behind SW decisions (default: title)");
  add_analysis_opts(grammar, opts);

  auto* deltatp = app.add_subcommand("deltatp", "theory/practice construct discrimination");
  std::vector<std::string> deltatp_paths;
  deltatp->add_option("corpora", deltatp_paths, "labeled corpora (theory and practice)")
      ->required();
  add_analysis_opts(deltatp, opts);

  auto* classify = app.add_subcommand("classify", "profile store building and classification");
  std::vector<std::string> classify_paths;
  std::string classify_store;
  bool classify_build = false;
  classify->add_option("corpora", classify_paths, "input corpus (or corpora with --build)");
  classify->add_option("--store", classify_store, "profile store JSON path")->required();
  classify->add_flag("--build", classify_build, "build the store from the given corpora");
  add_analysis_opts(classify, opts);

  auto* report = app.add_subcommand("report-all", "full analysis bundle into --out");
  std::vector<std::string> report_paths;
  report->add_option("corpora", report_paths, "corpus JSON files")->required();
  add_analysis_opts(report, opts);

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo false-positive harness");
  std::size_t sim_windows = 100000;
  double sim_p = 0.1;
  std::uint64_t sim_seed = 1;
  simulate->add_option("--windows", sim_windows, "number of simulated windows");
  simulate->add_option("--p", sim_p, "S-token probability");
  simulate->add_option("--seed", sim_seed, "RNG seed");
  add_analysis_opts(simulate, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    const subwin::RunConfig config = make_config(global, opts);
    const bool use_stoplist = !config.stoplist_path.empty() && !opts.no_stoplist;

    auto load_with_pool = [&](const std::vector<std::string>& paths)
        -> std::pair<std::vector<subwin::Corpus>, subwin::Corpus> {
      auto corpora = subwin::load_inputs(config, paths);
      subwin::Corpus combined;
      if (corpora.size() > 1) combined = subwin::combined_corpus(corpora);
      return {std::move(corpora), std::move(combined)};
    };

    if (census->parsed()) {
      auto corpora = subwin::load_inputs(config, census_paths);
      std::ostringstream out;
      subwin::run_census(corpora, out);
      emit(global, "census.csv", out.str());
    } else if (sterms->parsed()) {
      auto [corpora, combined] = load_with_pool(sterms_paths);
      std::ostringstream out;
      subwin::run_sterms(config, corpora.front(), corpora.size() > 1 ? &combined : nullptr,
                         sterms_system, sterms_weights, use_stoplist, out);
      emit(global, sterms_weights ? "weights.csv" : "sterms.csv", out.str());
    } else if (windows->parsed()) {
      auto [corpora, combined] = load_with_pool(windows_paths);
      std::ostringstream out;
      subwin::run_windows(config, corpora.front(), corpora.size() > 1 ? &combined : nullptr,
                          windows_system, use_stoplist, out);
      emit(global, "windows.csv", out.str());
    } else if (profile->parsed()) {
      auto corpora = subwin::load_inputs(config, profile_paths);
      subwin::run_profile(config, corpora, profile_systems,
                          global.out_dir.empty() ? "." : global.out_dir);
    } else if (curve->parsed()) {
      auto corpora = subwin::load_inputs(config, curve_paths);
      subwin::run_curve(config, corpora, curve_systems,
                        global.out_dir.empty() ? "." : global.out_dir);
    } else if (overlap->parsed()) {
      auto [corpora, combined] = load_with_pool(overlap_paths);
      std::ostringstream out;
      subwin::run_overlap(config, corpora.front(), corpora.size() > 1 ? &combined : nullptr,
                          overlap_systems, use_stoplist, out);
      emit(global, "overlap_" + corpora.front().name + ".csv", out.str());
    } else if (ttr->parsed()) {
      auto corpora = subwin::load_inputs(config, ttr_paths);
      std::ostringstream out;
      subwin::run_ttr(config, corpora, ttr_anova, out);
      emit(global, ttr_anova ? "ttr_anova.json" : "ttr.csv", out.str());
    } else if (grammar->parsed()) {
      subwin::RunConfig gconfig = config;
      if (!grammar_system.empty()) gconfig.grammar_system = grammar_system;
      auto [corpora, combined] = load_with_pool(grammar_paths);
      std::ostringstream out;
      subwin::run_grammar(gconfig, corpora.front(), corpora.size() > 1 ? &combined : nullptr,
                          use_stoplist, out);
      emit(global, "grammar_" + corpora.front().name + ".csv", out.str());
    } else if (deltatp->parsed()) {
      auto corpora = subwin::load_inputs(config, deltatp_paths);
      std::ostringstream out;
      subwin::run_deltatp(config, corpora, use_stoplist, out);
      emit(global, "theory_practice.csv", out.str());
    } else if (classify->parsed()) {
      if (classify_build) {
        if (classify_paths.size() < 2)
          throw subwin::Error("classify --build needs at least 2 corpora");
        auto corpora = subwin::load_inputs(config, classify_paths);
        subwin::build_store(corpora, config).save_file(classify_store);
        std::cerr << "wrote profile store '" << classify_store << "' with "
                  << corpora.size() << " profiles\n";
      } else {
        if (classify_paths.size() != 1)
          throw subwin::Error("classify needs exactly one input corpus (or --build)");
        auto corpora = subwin::load_inputs(config, classify_paths);
        const auto store = subwin::ProfileStore::load_file(classify_store);
        const auto res = subwin::classify(corpora.front(), store, config);
        if (res.single_profile)
          std::cerr << "warning: store holds a single profile; "
                       "every input maps to it\n";
        nlohmann::json j;
        j["label"] = res.label;
        j["orientation"] = subwin::to_string(res.orientation);
        j["distance"] = res.distance;
        j["ttr_rule"] = subwin::to_string(res.ttr_rule);
        j["ttr_mean"] = res.ttr_mean;
        std::cout << j.dump(2) << "\n";
      }
    } else if (report->parsed()) {
      if (global.out_dir.empty())
        throw subwin::Error("report-all requires --out <directory>");
      auto corpora = subwin::load_inputs(config, report_paths);
      subwin::run_report_all(config, corpora, global.out_dir);
    } else if (simulate->parsed()) {
      const auto res = subwin::run_simulate(sim_windows, config.omega, sim_p, config.alpha,
                                            sim_seed, std::cout);
      return res.within_bound ? 0 : 3;
    }
  } catch (const subwin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

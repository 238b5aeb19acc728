// report.cpp -- subcommand drivers and the report-all bundle writer.
#include "subwin/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "subwin/csv.hpp"
#include "subwin/grammar.hpp"
#include "subwin/lexstats.hpp"
#include "subwin/profile.hpp"
#include "subwin/svg.hpp"

namespace fs = std::filesystem;

namespace subwin {

namespace {

bool fully_tagged(const Corpus& corpus) {
  for (const Document& d : corpus.documents)
    for (const auto& [field, tokens] : d.fields)
      for (const Token& t : tokens)
        if (!t.tagged()) return false;
  return !corpus.empty();
}

TagMap config_tagmap(const RunConfig& config) {
  return config.tagmap_path.empty() ? TagMap::penn_default()
                                    : TagMap::load_file(config.tagmap_path);
}

double round6(double v) { return std::round(v * 1e6) / 1e6; }

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string sanitize_filename(std::string name) {
  for (char& c : name)
    if (c == ':' || c == '/' || c == '\\' || c == ' ') c = '-';
  return name;
}

// Tracks written files so a failed run leaves no partial bundle behind.
class OutputTree {
 public:
  explicit OutputTree(fs::path root) : root_(std::move(root)) {
    std::error_code ec;
    fs::create_directories(root_, ec);
    if (ec) throw Error("cannot create output directory '" + root_.string() + "'");
  }

  ~OutputTree() {
    if (kept_) return;
    std::error_code ec;
    for (const fs::path& p : written_) fs::remove(p, ec);
    for (auto it = dirs_.rbegin(); it != dirs_.rend(); ++it) fs::remove(*it, ec);
  }

  void mkdir(const std::string& relative) {
    const fs::path dir = root_ / relative;
    if (!fs::exists(dir)) {
      std::error_code ec;
      fs::create_directories(dir, ec);
      if (ec) throw Error("cannot create directory '" + dir.string() + "'");
      dirs_.push_back(dir);
    }
  }

  void write(const std::string& relative, const std::string& content) {
    const fs::path path = root_ / relative;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << content;
    out.close();
    if (!out) throw Error("write failed for '" + path.string() + "'");
    written_.push_back(path);
  }

  void keep() { kept_ = true; }

 private:
  fs::path root_;
  std::vector<fs::path> written_;
  std::vector<fs::path> dirs_;
  bool kept_ = false;
};

std::optional<Stoplist> config_stoplist(const RunConfig& config) {
  if (config.stoplist_path.empty()) return std::nullopt;
  return Stoplist::load_file(config.stoplist_path, config.policy);
}

nlohmann::json profile_to_json(const SWProfile& prof) {
  nlohmann::json j;
  j["corpus"] = prof.corpus;
  j["system"] = prof.system;
  j["omega"] = prof.omega;
  j["sc"] = round6(prof.sc);
  j["wwd"] = round6(prof.wwd);
  j["q"] = round6(prof.q);
  return j;
}

}  // namespace

std::vector<Corpus> load_inputs(const RunConfig& config, const std::vector<std::string>& paths) {
  if (paths.empty()) throw Error("no corpus files given");
  const CorpusFormat format =
      config.pretagged ? CorpusFormat::pretagged_json : CorpusFormat::json;
  std::optional<TagMap> tagmap;
  std::vector<Corpus> corpora;
  corpora.reserve(paths.size());
  for (const std::string& path : paths) {
    Corpus corpus = subset_corpus(load_corpus_file(path, format, config.policy), config.subset);
    if (corpus.empty())
      throw Error("corpus '" + corpus.name + "' has no documents after subset '" +
                  to_string(config.subset) + "'");
    if (fully_tagged(corpus)) {
      if (!tagmap) tagmap = config_tagmap(config);
      corpus = map_corpus_tags(corpus, *tagmap);
    }
    corpora.push_back(std::move(corpus));
  }
  return corpora;
}

Corpus combined_corpus(const std::vector<Corpus>& corpora) {
  Corpus combined;
  combined.name = "combined";
  std::set<std::string> ids;
  for (const Corpus& c : corpora) {
    for (const Document& d : c.documents) {
      if (!ids.insert(d.id).second)
        throw Error("combined corpus: duplicate document id '" + d.id +
                    "' across corpora; bi/idf weighting needs globally unique ids");
      combined.documents.push_back(d);
    }
  }
  return combined;
}

std::vector<std::string> default_system_names(const Corpus& corpus, const RunConfig& config,
                                              bool have_combined) {
  std::vector<std::string> names;
  for (FieldName f : kAllFields) {
    if (f == FieldName::fulltext) continue;
    bool present = false;
    for (const Document& d : corpus.documents)
      if (d.has(f)) { present = true; break; }
    if (present) names.emplace_back(to_string(f));
  }
  if (!config.dictionary_path.empty()) names.emplace_back("dictionary");
  if (have_combined) {
    names.emplace_back("bi");
    names.emplace_back("idf");
  }
  return names;
}

ResolvedSystem resolve_named_system(const std::string& name, const Corpus& corpus,
                                    const Corpus* combined, const RunConfig& config,
                                    bool apply_stoplist) {
  SystemSpec spec = SystemSpec::parse(name);
  if (!spec.cutoff) {
    if (spec.kind == SystemSpec::Kind::bi) spec.cutoff = config.bi_cutoff;
    if (spec.kind == SystemSpec::Kind::idf) spec.cutoff = config.idf_cutoff;
  }
  std::optional<Stoplist> stoplist;
  if (apply_stoplist) {
    stoplist = config_stoplist(config);
    if (!stoplist) throw Error("system '" + name + "-nostop' needs a configured stoplist");
  }
  return resolve_system(spec, corpus, combined, stoplist ? &*stoplist : nullptr,
                        config.dictionary_path, {config.smoothing_add}, config.policy);
}

void run_census(const std::vector<Corpus>& corpora, std::ostream& out) {
  out << "corpus,field,documents,mean_tokens,mean_types\r\n";
  for (const Corpus& c : corpora) {
    for (const FieldCensusRow& row : field_census(c)) {
      out << csv_field(c.name) << "," << to_string(row.field) << "," << row.documents << ","
          << fmt6(row.mean_tokens) << "," << fmt6(row.mean_types) << "\r\n";
    }
  }
}

void run_sterms(const RunConfig& config, const Corpus& corpus, const Corpus* combined,
                const std::string& system, bool weights, bool apply_stoplist,
                std::ostream& out) {
  if (weights) {
    if (!combined) throw Error("weight table needs at least two corpora (a combined pool)");
    write_weight_csv(out, weight_table(corpus, *combined, {config.smoothing_add}));
    return;
  }
  ResolvedSystem sys = resolve_named_system(system, corpus, combined, config, apply_stoplist);
  std::set<std::string> terms;
  if (sys.per_doc_mode) {
    for (const auto& [doc_id, set] : sys.per_document)
      terms.insert(set.terms.begin(), set.terms.end());
  } else {
    terms.insert(sys.shared.terms.begin(), sys.shared.terms.end());
  }
  out << "term\r\n";
  for (const std::string& t : terms) out << csv_field(t) << "\r\n";
}

void run_windows(const RunConfig& config, const Corpus& corpus, const Corpus* combined,
                 const std::string& system, bool apply_stoplist, std::ostream& out) {
  ResolvedSystem sys = resolve_named_system(system, corpus, combined, config, apply_stoplist);
  write_window_csv(out, scan_corpus(corpus, sys, config.window_spec()).windows);
}

void run_overlap(const RunConfig& config, const Corpus& corpus, const Corpus* combined,
                 const std::vector<std::string>& systems, bool apply_stoplist,
                 std::ostream& out) {
  std::vector<std::string> names =
      systems.empty() ? default_system_names(corpus, config, combined != nullptr) : systems;
  std::vector<ResolvedSystem> resolved;
  resolved.reserve(names.size());
  for (const std::string& name : names)
    resolved.push_back(resolve_named_system(name, corpus, combined, config, apply_stoplist));
  write_overlap_csv(out, overlap_matrix(corpus, resolved, config.window_spec()));
  if (systems.empty()) {
    // Field systems the corpus cannot produce, matching how corpora
    // without a marked field simply lack those rows/columns.
    std::string missing;
    for (FieldName f : kAllFields) {
      if (f == FieldName::fulltext) continue;
      bool present = false;
      for (const Document& d : corpus.documents)
        if (d.has(f)) { present = true; break; }
      if (!present) missing += std::string(" ") + to_string(f);
    }
    if (!missing.empty())
      out << "# field systems unavailable in this corpus:" << missing << "\r\n";
  }
}

void run_ttr(const RunConfig& config, const std::vector<Corpus>& corpora, bool anova,
             std::ostream& out) {
  if (anova) {
    std::vector<std::pair<std::string, std::vector<double>>> groups;
    for (const Corpus& c : corpora) {
      std::vector<double> ratios;
      for (const TTRRecord& rec : ttr_records(c, config.ttr_prefix)) ratios.push_back(rec.ratio);
      groups.emplace_back(c.name, std::move(ratios));
    }
    const AnovaResult res = anova_ttr(groups);
    nlohmann::json j;
    j["f"] = res.f;
    j["p_value"] = res.p_value;
    j["df_between"] = res.df_between;
    j["df_within"] = res.df_within;
    j["significant_at_0.05"] = res.significant_05;
    j["significant_at_0.01"] = res.significant_01;
    out << j.dump(2) << "\n";
    return;
  }
  if (corpora.size() == 1) {
    write_ttr_csv(out, ttr_records(corpora.front(), config.ttr_prefix));
    return;
  }
  out << "corpus,doc_id,tokens,types,ratio,prefix_ratio\r\n";
  for (const Corpus& c : corpora)
    for (const TTRRecord& rec : ttr_records(c, config.ttr_prefix))
      out << csv_field(c.name) << "," << csv_field(rec.doc_id) << "," << rec.tokens << ","
          << rec.types << "," << fmt6(rec.ratio) << "," << fmt6(rec.prefix_ratio) << "\r\n";
}

void run_grammar(const RunConfig& config, const Corpus& corpus, const Corpus* combined,
                 bool apply_stoplist, std::ostream& out) {
  ResolvedSystem sys = resolve_named_system(config.grammar_system, corpus, combined, config,
                                            apply_stoplist);
  write_grammar_csv(out, construct_counts(corpus, sys, config.window_spec(),
                                          {config.grammar_min_len, config.grammar_max_len},
                                          config.min_support, config.smoothing_add));
}

void run_deltatp(const RunConfig& config, const std::vector<Corpus>& corpora,
                 bool apply_stoplist, std::ostream& out) {
  if (corpora.size() < 2) throw Error("deltatp needs at least 2 corpora");
  const Corpus combined = combined_corpus(corpora);
  std::vector<GramTable> tables;
  tables.reserve(corpora.size());
  std::map<std::string, Orientation> orientations;
  for (const Corpus& c : corpora) {
    ResolvedSystem sys = resolve_named_system(config.grammar_system, c, &combined, config,
                                              apply_stoplist);
    tables.push_back(construct_counts(c, sys, config.window_spec(),
                                      {config.grammar_min_len, config.grammar_max_len},
                                      config.min_support, config.smoothing_add));
    orientations[c.name] = c.orientation;
  }
  std::vector<std::pair<std::string, const GramTable*>> refs;
  for (std::size_t i = 0; i < corpora.size(); ++i)
    refs.emplace_back(corpora[i].name, &tables[i]);
  write_delta_csv(out, delta_tp(refs, orientations));
}

namespace {

struct CurveOutputs {
  std::string csv;
  std::string svg;
  std::string basename;
};

CurveOutputs make_curve(const RunConfig& config, const Corpus& corpus,
                        const ResolvedSystem& system) {
  const LocationCurve curve = location_curve(corpus, system, config.window_spec(),
                                             config.n_points, config.bin_halfwidth);
  CurveOutputs out;
  std::ostringstream csv;
  write_curve_csv(csv, curve);
  out.csv = csv.str();
  out.svg = curve_svg(curve, corpus.name + " / " + system.label + " (omega " +
                                 std::to_string(config.omega) + ")");
  out.basename = sanitize_filename(corpus.name) + "_" + sanitize_filename(system.label);
  return out;
}

void emit_profiles_and_curves(const RunConfig& config, const std::vector<Corpus>& corpora,
                              const std::vector<std::string>& requested_systems,
                              OutputTree& tree, bool want_profiles, bool want_curves) {
  const Corpus combined = corpora.size() > 1 ? combined_corpus(corpora) : Corpus{};
  const Corpus* combined_ptr = corpora.size() > 1 ? &combined : nullptr;
  const bool with_stoplist = !config.stoplist_path.empty();

  nlohmann::json profiles = nlohmann::json::array();
  if (want_curves) tree.mkdir("curves");

  for (const Corpus& corpus : corpora) {
    std::vector<std::string> names =
        requested_systems.empty()
            ? default_system_names(corpus, config, combined_ptr != nullptr)
            : requested_systems;
    for (int pass = 0; pass < (want_profiles && with_stoplist ? 2 : 1); ++pass) {
      const bool stopped = pass == 1;
      for (const std::string& name : names) {
        ResolvedSystem sys = resolve_named_system(name, corpus, combined_ptr, config, stopped);
        if (want_profiles) {
          profiles.push_back(profile_to_json(
              sw_profile(corpus, sys, config.window_spec())));
        }
        if (want_curves && !stopped) {
          const CurveOutputs curve = make_curve(config, corpus, sys);
          tree.write("curves/" + curve.basename + ".csv", curve.csv);
          tree.write("curves/" + curve.basename + ".svg", curve.svg);
        }
      }
    }
  }
  if (want_profiles) tree.write("profiles.json", profiles.dump(2) + "\n");
}

}  // namespace

void run_profile(const RunConfig& config, const std::vector<Corpus>& corpora,
                 const std::vector<std::string>& systems, const std::string& out_dir) {
  OutputTree tree(out_dir.empty() ? "." : out_dir);
  emit_profiles_and_curves(config, corpora, systems, tree, true, true);
  tree.keep();
}

void run_curve(const RunConfig& config, const std::vector<Corpus>& corpora,
               const std::vector<std::string>& systems, const std::string& out_dir) {
  OutputTree tree(out_dir.empty() ? "." : out_dir);
  emit_profiles_and_curves(config, corpora, systems, tree, false, true);
  tree.keep();
}

SimulateResult run_simulate(std::size_t windows, std::size_t omega, double p, double alpha,
                            std::uint64_t seed, std::ostream& out) {
  const SimulateResult res = simulate_false_positives(windows, omega, p, alpha, seed);
  nlohmann::json j;
  j["windows"] = res.windows;
  j["significant"] = res.significant;
  j["fraction"] = res.fraction;
  j["alpha"] = res.alpha;
  j["sigma"] = res.sigma;
  j["bound"] = res.bound;
  j["within_bound"] = res.within_bound;
  j["seed"] = seed;
  out << j.dump(2) << "\n";
  return res;
}

void run_report_all(const RunConfig& config, const std::vector<Corpus>& corpora,
                    const std::string& out_dir) {
  if (corpora.empty()) throw Error("report-all: no corpora");
  OutputTree tree(out_dir);

  {
    std::ostringstream census;
    run_census(corpora, census);
    tree.write("census.csv", census.str());
  }

  emit_profiles_and_curves(config, corpora, {}, tree, true, true);

  const Corpus combined = corpora.size() > 1 ? combined_corpus(corpora) : Corpus{};
  const Corpus* combined_ptr = corpora.size() > 1 ? &combined : nullptr;

  for (const Corpus& corpus : corpora) {
    std::ostringstream overlap;
    run_overlap(config, corpus, combined_ptr, {}, false, overlap);
    tree.write("overlap_" + sanitize_filename(corpus.name) + ".csv", overlap.str());
  }

  {
    std::ostringstream ttr;
    run_ttr(config, corpora, false, ttr);
    tree.write("ttr.csv", ttr.str());
  }

  {
    nlohmann::json fits = nlohmann::json::object();
    for (const Corpus& corpus : corpora) {
      if (corpus.size() < 5) continue;  // cubic fit needs at least 5 documents
      try {
        const PolyFit fit = type_token_fit(corpus);
        nlohmann::json jf;
        jf["degree"] = fit.degree;
        jf["coefficients"] = fit.coefficients;
        jf["rss"] = fit.rss;
        jf["documents"] = fit.points.size();
        fits[corpus.name] = std::move(jf);
      } catch (const Error&) {
        // Degenerate type counts (all equal); the corpus has no fit.
      }
    }
    tree.write("fit.json", fits.dump(2) + "\n");
  }

  bool all_tagged = true;
  for (const Corpus& corpus : corpora) {
    if (!fully_tagged(corpus)) {
      all_tagged = false;
      continue;
    }
    std::ostringstream grammar;
    run_grammar(config, corpus, combined_ptr, false, grammar);
    tree.write("grammar_" + sanitize_filename(corpus.name) + ".csv", grammar.str());
  }

  bool has_theory = false, has_practice = false;
  for (const Corpus& corpus : corpora) {
    has_theory = has_theory || corpus.orientation == Orientation::theory;
    has_practice = has_practice || corpus.orientation == Orientation::practice;
  }
  if (all_tagged && corpora.size() >= 2 && has_theory && has_practice) {
    std::ostringstream delta;
    run_deltatp(config, corpora, false, delta);
    tree.write("theory_practice.csv", delta.str());
  }

  tree.keep();
}

}  // namespace subwin

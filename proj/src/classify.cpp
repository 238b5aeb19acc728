// classify.cpp -- profile features, store persistence, nearest-profile
// classification.
#include "subwin/classify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "subwin/lexstats.hpp"
#include "subwin/profile.hpp"

namespace subwin {

namespace {

// Construct frequencies need no significance test: rate of each exact
// tag sequence among windows of its length.
std::map<TagSequence, double> construct_rates(const Corpus& corpus,
                                              const std::vector<TagSequence>& wanted) {
  std::map<std::size_t, std::size_t> totals;
  std::map<TagSequence, std::size_t> counts;
  std::map<std::size_t, bool> lengths;
  for (const TagSequence& seq : wanted) lengths[seq.tags.size()] = true;

  bool tagged = true;
  for (const Document& d : corpus.documents)
    for (const Token& t : d.fulltext())
      if (!t.tagged()) { tagged = false; break; }

  std::map<TagSequence, double> rates;
  if (!tagged) {
    for (const TagSequence& seq : wanted) rates[seq] = 0.0;
    return rates;
  }

  for (const auto& [len, used] : lengths) {
    (void)used;
    for (const Document& d : corpus.documents) {
      const TokenSeq& ft = d.fulltext();
      if (ft.size() < len) continue;
      for (std::size_t start = 0; start + len <= ft.size(); ++start) {
        ++totals[len];
        TagSequence seq;
        seq.tags.reserve(len);
        for (std::size_t i = start; i < start + len; ++i) seq.tags.push_back(ft[i].tag);
        if (std::find(wanted.begin(), wanted.end(), seq) != wanted.end()) ++counts[seq];
      }
    }
  }
  for (const TagSequence& seq : wanted) {
    const std::size_t total = totals[seq.tags.size()];
    rates[seq] = total ? double(counts[seq]) / double(total) : 0.0;
  }
  return rates;
}

LocationCurve curve_for(const Corpus& corpus, const RunConfig& config,
                        const std::string& system_name) {
  const SystemSpec spec = SystemSpec::parse(system_name);
  // Classification features are computed without a stoplist so labeled
  // and unlabeled inputs featurize identically.
  ResolvedSystem system = resolve_system(spec, corpus, nullptr, nullptr,
                                         config.dictionary_path, {config.smoothing_add},
                                         config.policy);
  return location_curve(corpus, system, config.window_spec(), config.n_points,
                        config.bin_halfwidth);
}

}  // namespace

DisciplineProfile build_profile(const Corpus& corpus, const RunConfig& config,
                                const FeatureSpec& features) {
  if (corpus.empty()) throw Error("build_profile: corpus '" + corpus.name + "' is empty");
  DisciplineProfile prof;
  prof.label = corpus.name;
  prof.orientation = corpus.orientation;

  const CorpusTTR ttr = corpus_ttr(corpus, config.ttr_prefix);
  prof.feature_names.push_back("ttr_mean");
  prof.features.push_back(ttr.mean_ratio);
  prof.feature_names.push_back("ttr_prefix_mean");
  prof.features.push_back(ttr.mean_prefix_ratio);

  for (const std::string& system_name : features.curve_systems) {
    const LocationCurve curve = curve_for(corpus, config, system_name);
    std::vector<double> rates(config.n_points, 0.0);
    for (const CurvePoint& pt : curve.points) {
      const std::size_t index =
          std::size_t(std::lround(pt.position * double(config.n_points - 1)));
      rates[index] = pt.rate;
    }
    for (std::size_t i = 0; i < config.n_points; ++i) {
      prof.feature_names.push_back("curve:" + system_name + ":" + std::to_string(i));
      prof.features.push_back(rates[i]);
    }
  }

  if (!features.constructs.empty()) {
    auto rates = construct_rates(corpus, features.constructs);
    for (const TagSequence& seq : features.constructs) {
      prof.feature_names.push_back("construct:" + seq.str());
      prof.features.push_back(rates.at(seq));
    }
  }
  return prof;
}

ProfileStore build_store(const std::vector<Corpus>& corpora, const RunConfig& config) {
  if (corpora.size() < 2) throw Error("build_store: need at least 2 corpora");

  FeatureSpec features;
  // Rank constructs by |delta_tp| when grammar data is available.
  bool all_tagged = true, has_theory = false, has_practice = false;
  for (const Corpus& c : corpora) {
    has_theory = has_theory || c.orientation == Orientation::theory;
    has_practice = has_practice || c.orientation == Orientation::practice;
    for (const Document& d : c.documents)
      for (const Token& t : d.fulltext())
        if (!t.tagged()) { all_tagged = false; break; }
  }
  if (all_tagged && has_theory && has_practice && config.classify_top_constructs > 0) {
    const SystemSpec grammar_spec = SystemSpec::parse(config.grammar_system);
    std::vector<GramTable> tables;
    tables.reserve(corpora.size());
    std::vector<std::pair<std::string, const GramTable*>> refs;
    std::map<std::string, Orientation> orientations;
    for (const Corpus& c : corpora) {
      ResolvedSystem system = resolve_system(grammar_spec, c, nullptr, nullptr,
                                             config.dictionary_path, {config.smoothing_add},
                                             config.policy);
      tables.push_back(construct_counts(c, system, config.window_spec(),
                                        {config.grammar_min_len, config.grammar_max_len},
                                        config.min_support, config.smoothing_add));
      orientations[c.name] = c.orientation;
    }
    for (std::size_t i = 0; i < corpora.size(); ++i)
      refs.emplace_back(corpora[i].name, &tables[i]);
    try {
      DeltaTPTable delta = delta_tp(refs, orientations);
      std::stable_sort(delta.rows.begin(), delta.rows.end(),
                       [](const TheoryPracticeRow& a, const TheoryPracticeRow& b) {
                         return std::fabs(a.delta_tp) > std::fabs(b.delta_tp);
                       });
      for (std::size_t i = 0; i < delta.rows.size() && i < config.classify_top_constructs; ++i)
        features.constructs.push_back(delta.rows[i].construct);
      std::sort(features.constructs.begin(), features.constructs.end());
    } catch (const Error&) {
      // No shared constructs; profiles proceed without grammar features.
    }
  }

  ProfileStore store;
  for (const Corpus& c : corpora) store.profiles.push_back(build_profile(c, config, features));
  return store;
}

std::vector<double> featurize(const Corpus& corpus, const RunConfig& config,
                              const std::vector<std::string>& feature_names) {
  std::vector<double> out;
  out.reserve(feature_names.size());

  const CorpusTTR ttr = corpus_ttr(corpus, config.ttr_prefix);
  std::map<std::string, LocationCurve> curves;
  std::vector<TagSequence> constructs;
  for (const std::string& name : feature_names)
    if (name.rfind("construct:", 0) == 0)
      constructs.push_back(TagSequence::parse(name.substr(10)));
  std::map<TagSequence, double> rates;
  if (!constructs.empty()) rates = construct_rates(corpus, constructs);

  for (const std::string& name : feature_names) {
    if (name == "ttr_mean") {
      out.push_back(ttr.mean_ratio);
    } else if (name == "ttr_prefix_mean") {
      out.push_back(ttr.mean_prefix_ratio);
    } else if (name.rfind("curve:", 0) == 0) {
      const auto second = name.find(':', 6);
      if (second == std::string::npos) throw Error("bad curve feature name '" + name + "'");
      const std::string system_name = name.substr(6, second - 6);
      const std::size_t index = std::stoul(name.substr(second + 1));
      if (index >= config.n_points)
        throw Error("curve feature '" + name + "' is outside the configured n_points");
      auto it = curves.find(system_name);
      if (it == curves.end())
        it = curves.emplace(system_name, curve_for(corpus, config, system_name)).first;
      double rate = 0.0;
      for (const CurvePoint& pt : it->second.points) {
        const std::size_t pt_index =
            std::size_t(std::lround(pt.position * double(config.n_points - 1)));
        if (pt_index == index) { rate = pt.rate; break; }
      }
      out.push_back(rate);
    } else if (name.rfind("construct:", 0) == 0) {
      out.push_back(rates.at(TagSequence::parse(name.substr(10))));
    } else {
      throw Error("unknown feature name '" + name + "'");
    }
  }
  return out;
}

std::pair<std::size_t, double> nearest_profile(const std::vector<double>& x,
                                               const ProfileStore& store, bool normalize) {
  if (store.profiles.empty()) throw Error("classify: profile store is empty");
  const std::size_t dims = store.profiles.front().features.size();
  if (x.size() != dims) throw Error("classify: feature vector length mismatch");

  // Feature-wise z-normalization over the stored profiles; zero-variance
  // features carry no weight.
  std::vector<double> mean(dims, 0.0), sd(dims, 0.0);
  for (const DisciplineProfile& p : store.profiles)
    for (std::size_t j = 0; j < dims; ++j) mean[j] += p.features[j];
  for (std::size_t j = 0; j < dims; ++j) mean[j] /= double(store.profiles.size());
  for (const DisciplineProfile& p : store.profiles)
    for (std::size_t j = 0; j < dims; ++j)
      sd[j] += (p.features[j] - mean[j]) * (p.features[j] - mean[j]);
  for (std::size_t j = 0; j < dims; ++j) sd[j] = std::sqrt(sd[j] / double(store.profiles.size()));

  std::size_t best_index = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < store.profiles.size(); ++i) {
    const DisciplineProfile& p = store.profiles[i];
    double dist2 = 0.0;
    for (std::size_t j = 0; j < dims; ++j) {
      double diff = x[j] - p.features[j];
      if (normalize) {
        if (sd[j] == 0.0) continue;
        diff /= sd[j];
      }
      dist2 += diff * diff;
    }
    const double dist = std::sqrt(dist2);
    if (best < 0.0 || dist < best) {
      best = dist;
      best_index = i;
    }
  }
  return {best_index, best};
}

ClassifyResult classify(const Corpus& input, const ProfileStore& store, const RunConfig& config,
                        bool normalize) {
  if (store.profiles.empty()) throw Error("classify: profile store is empty");
  const auto& names = store.profiles.front().feature_names;
  for (const DisciplineProfile& p : store.profiles)
    if (p.feature_names != names)
      throw Error("classify: store profiles disagree on feature layout");

  const std::vector<double> x = featurize(input, config, names);
  const auto [index, distance] = nearest_profile(x, store, normalize);

  ClassifyResult res;
  res.single_profile = store.profiles.size() == 1;
  res.label = store.profiles[index].label;
  res.orientation = store.profiles[index].orientation;
  res.distance = distance;
  res.ttr_mean = corpus_ttr(input, config.ttr_prefix).mean_ratio;
  res.ttr_rule = res.ttr_mean < config.ttr_theory_threshold ? Orientation::theory
                                                            : Orientation::practice;
  return res;
}

void ProfileStore::save(std::ostream& out) const {
  nlohmann::json j;
  j["profiles"] = nlohmann::json::array();
  for (const DisciplineProfile& p : profiles) {
    nlohmann::json jp;
    jp["label"] = p.label;
    jp["orientation"] = to_string(p.orientation);
    jp["feature_names"] = p.feature_names;
    jp["features"] = p.features;
    j["profiles"].push_back(std::move(jp));
  }
  out << j.dump(2) << "\n";
}

void ProfileStore::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write profile store '" + path + "'");
  save(out);
}

ProfileStore ProfileStore::load(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("profile store is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("profiles") || !j["profiles"].is_array())
    throw Error("profile store must be an object with a 'profiles' array");
  ProfileStore store;
  for (const auto& jp : j["profiles"]) {
    DisciplineProfile p;
    p.label = jp.at("label").get<std::string>();
    auto o = orientation_from_string(jp.at("orientation").get<std::string>());
    if (!o) throw Error("profile '" + p.label + "': unknown orientation");
    p.orientation = *o;
    p.feature_names = jp.at("feature_names").get<std::vector<std::string>>();
    p.features = jp.at("features").get<std::vector<double>>();
    if (p.feature_names.size() != p.features.size())
      throw Error("profile '" + p.label + "': feature name/value length mismatch");
    store.profiles.push_back(std::move(p));
  }
  return store;
}

ProfileStore ProfileStore::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open profile store '" + path + "'");
  return load(in);
}

}  // namespace subwin

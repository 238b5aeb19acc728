// classify.hpp -- discipline profiles and the nearest-profile /
// TTR-rule classifier.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "subwin/config.hpp"
#include "subwin/corpus.hpp"
#include "subwin/grammar.hpp"
#include "subwin/sterm.hpp"

namespace subwin {

struct DisciplineProfile {
  std::string label;
  Orientation orientation = Orientation::unlabeled;
  std::vector<std::string> feature_names;
  std::vector<double> features;
};

struct ProfileStore {
  std::vector<DisciplineProfile> profiles;

  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;
  static ProfileStore load(std::istream& in);
  static ProfileStore load_file(const std::string& path);
};

// Feature layout, fixed by configuration:
//   ttr_mean, ttr_prefix_mean,
//   curve:<system>:<point index> for each curve system,
//   construct:<tag sequence> frequency rates for selected constructs.
struct FeatureSpec {
  std::vector<std::string> curve_systems = {"title", "abstract"};
  std::vector<TagSequence> constructs;  // chosen by delta_tp ranking
};

DisciplineProfile build_profile(const Corpus& corpus, const RunConfig& config,
                                const FeatureSpec& features);

// Builds one profile per corpus. When every corpus is tagged and both
// orientations are present, the top |delta_tp| constructs (under the
// config's grammar system) are added as shared features.
ProfileStore build_store(const std::vector<Corpus>& corpora, const RunConfig& config);

// Recompute a feature vector following an existing store's layout.
std::vector<double> featurize(const Corpus& corpus, const RunConfig& config,
                              const std::vector<std::string>& feature_names);

struct ClassifyResult {
  std::string label;  // nearest stored profile
  Orientation orientation = Orientation::unlabeled;
  double distance = 0.0;
  Orientation ttr_rule = Orientation::unlabeled;  // standalone TTR rule
  double ttr_mean = 0.0;
  bool single_profile = false;  // store held only one profile
};

// Nearest stored profile to a raw feature vector. With normalize set,
// distances are feature-wise z-normalized over the store, which makes
// the argmin invariant under affine rescaling of the feature space.
std::pair<std::size_t, double> nearest_profile(const std::vector<double>& x,
                                               const ProfileStore& store, bool normalize);

// Nearest profile by Euclidean distance, feature-wise z-normalized over
// the store when normalize is set.
ClassifyResult classify(const Corpus& input, const ProfileStore& store, const RunConfig& config,
                        bool normalize = true);

}  // namespace subwin

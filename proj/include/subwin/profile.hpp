// profile.hpp -- aggregate significant-window statistics: SC, WWD, Q,
// location-through-fulltext curves, and cross-system overlap matrices.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "subwin/corpus.hpp"
#include "subwin/sterm.hpp"
#include "subwin/window.hpp"

namespace subwin {

enum class Averaging { micro, macro };

struct SWProfile {
  std::string corpus;
  std::string system;
  std::size_t omega = 0;
  double sc = 0.0;   // Pr(token in some SW | token is S)
  double wwd = 0.0;  // Pr(token is S | token in some SW)
  double q = 0.0;    // sc^alpha_exp * wwd^beta_exp
  double alpha_exp = 1.0;
  double beta_exp = 1.0;
  Averaging averaging = Averaging::micro;
  // Pooled position counts (micro mode); sc*|S| == wwd*|P| == |S and P|.
  std::uint64_t s_positions = 0;        // |S|
  std::uint64_t covered_positions = 0;  // |P|
  std::uint64_t overlap_positions = 0;  // |S and P|
};

SWProfile sw_profile(const Corpus& corpus, const ResolvedSystem& system, const WindowSpec& spec,
                     double alpha_exp = 1.0, double beta_exp = 1.0,
                     Averaging averaging = Averaging::micro);

struct CurvePoint {
  double position = 0.0;  // relative location in [0,1]
  double rate = 0.0;      // SWs per 100 windows
  std::uint64_t windows = 0;
  std::uint64_t significant = 0;
};

struct LocationCurve {
  std::size_t n_points = 17;
  double bin_halfwidth = 0.03;
  std::vector<CurvePoint> points;  // empty bins are absent, not zero
};

// Rates of significant windows per 100 windows whose normalized center
// falls within +/- bin_halfwidth of each of n_points evenly spaced
// positions; endpoint bins are half width by construction.
LocationCurve location_curve(const Corpus& corpus, const ResolvedSystem& system,
                             const WindowSpec& spec, std::size_t n_points = 17,
                             double bin_halfwidth = 0.03);

using WindowKey = std::pair<std::string, std::size_t>;  // (doc id, start)

struct OverlapMatrix {
  std::vector<std::string> systems;  // systems with at least one SW
  std::vector<std::string> absent;   // zero-SW systems, excluded
  std::vector<std::size_t> sw_counts;
  std::vector<std::vector<std::size_t>> intersections;
  std::vector<std::vector<double>> cells;  // cells[row][col] = Pr(row|col)
  // +1: dominates in all pairwise comparisons, -1: dominated, 0: neither.
  // A +1 column is a most precise predictor; a +1 row is easiest to predict.
  std::vector<int> column_marks;
  std::vector<int> row_marks;
};

OverlapMatrix overlap_from_sets(const std::vector<std::string>& labels,
                                const std::vector<std::vector<WindowKey>>& sw_sets);

// Windows are identified by (doc id, start) with the shared spec's omega.
OverlapMatrix overlap_matrix(const Corpus& corpus, const std::vector<ResolvedSystem>& systems,
                             const WindowSpec& spec);

// CSV exports. Overlap headers/rownames carry +/- marking suffixes.
void write_curve_csv(std::ostream& out, const LocationCurve& curve);
void write_overlap_csv(std::ostream& out, const OverlapMatrix& matrix);

}  // namespace subwin

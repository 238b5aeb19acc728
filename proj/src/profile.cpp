// profile.cpp -- SC/WWD/Q aggregation, location curves, overlap matrices.
#include "subwin/profile.hpp"

#include "subwin/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace subwin {

namespace {

struct DocPositionCounts {
  std::uint64_t s = 0;
  std::uint64_t covered = 0;
  std::uint64_t overlap = 0;
};

DocPositionCounts doc_position_counts(const Document& doc, const STermSet& s,
                                      const WindowSpec& spec, std::optional<double> pooled_p) {
  DocPositionCounts counts;
  const TokenSeq& ft = doc.fulltext();
  const std::size_t len = ft.size();

  std::vector<bool> covered(len, false);
  for (const Window& w : significant_windows(doc, s, spec, pooled_p)) {
    if (!w.significant) continue;
    for (std::size_t i = w.start; i < w.start + w.omega; ++i) covered[i] = true;
  }
  for (std::size_t i = 0; i < len; ++i) {
    const bool in_s = s.contains(ft[i].surface);
    if (in_s) ++counts.s;
    if (covered[i]) ++counts.covered;
    if (in_s && covered[i]) ++counts.overlap;
  }
  return counts;
}

}  // namespace

SWProfile sw_profile(const Corpus& corpus, const ResolvedSystem& system, const WindowSpec& spec,
                     double alpha_exp, double beta_exp, Averaging averaging) {
  if (corpus.empty()) throw Error("sw_profile: corpus '" + corpus.name + "' is empty");

  SWProfile prof;
  prof.corpus = corpus.name;
  prof.system = system.label;
  prof.omega = spec.omega;
  prof.alpha_exp = alpha_exp;
  prof.beta_exp = beta_exp;
  prof.averaging = averaging;

  std::optional<double> pooled;
  if (spec.p_scope == WindowSpec::PScope::per_corpus)
    pooled = corpus_s_probability(corpus, system);

  double macro_sc_sum = 0, macro_wwd_sum = 0;
  std::size_t macro_sc_n = 0, macro_wwd_n = 0;

  for (const Document& d : corpus.documents) {
    if (d.fulltext().size() < spec.omega) continue;
    const auto counts = doc_position_counts(d, system.for_doc(d), spec, pooled);
    prof.s_positions += counts.s;
    prof.covered_positions += counts.covered;
    prof.overlap_positions += counts.overlap;
    if (counts.s > 0) {
      macro_sc_sum += double(counts.overlap) / double(counts.s);
      ++macro_sc_n;
    }
    if (counts.covered > 0) {
      macro_wwd_sum += double(counts.overlap) / double(counts.covered);
      ++macro_wwd_n;
    }
  }

  if (averaging == Averaging::micro) {
    prof.sc = prof.s_positions ? double(prof.overlap_positions) / double(prof.s_positions) : 0.0;
    prof.wwd = prof.covered_positions
                   ? double(prof.overlap_positions) / double(prof.covered_positions)
                   : 0.0;
  } else {
    prof.sc = macro_sc_n ? macro_sc_sum / double(macro_sc_n) : 0.0;
    prof.wwd = macro_wwd_n ? macro_wwd_sum / double(macro_wwd_n) : 0.0;
  }
  prof.q = std::pow(prof.sc, alpha_exp) * std::pow(prof.wwd, beta_exp);
  return prof;
}

LocationCurve location_curve(const Corpus& corpus, const ResolvedSystem& system,
                             const WindowSpec& spec, std::size_t n_points,
                             double bin_halfwidth) {
  if (n_points < 2) throw Error("location_curve: need at least 2 points");
  if (!(bin_halfwidth > 0.0)) throw Error("location_curve: bin halfwidth must be positive");

  std::vector<std::uint64_t> total(n_points, 0), sig(n_points, 0);

  std::optional<double> pooled;
  if (spec.p_scope == WindowSpec::PScope::per_corpus)
    pooled = corpus_s_probability(corpus, system);

  for (const Document& d : corpus.documents) {
    const std::size_t len = d.fulltext().size();
    if (len < spec.omega) continue;
    for (const Window& w : significant_windows(d, system.for_doc(d), spec, pooled)) {
      const double ncenter = len > 1 ? w.center() / double(len - 1) : 0.5;
      for (std::size_t i = 0; i < n_points; ++i) {
        const double x = double(i) / double(n_points - 1);
        if (std::fabs(ncenter - x) <= bin_halfwidth + 1e-12) {
          ++total[i];
          if (w.significant) ++sig[i];
        }
      }
    }
  }

  LocationCurve curve;
  curve.n_points = n_points;
  curve.bin_halfwidth = bin_halfwidth;
  for (std::size_t i = 0; i < n_points; ++i) {
    if (total[i] == 0) continue;  // empty bin: absent, not zero
    CurvePoint pt;
    pt.position = double(i) / double(n_points - 1);
    pt.windows = total[i];
    pt.significant = sig[i];
    pt.rate = 100.0 * double(sig[i]) / double(total[i]);
    curve.points.push_back(pt);
  }
  return curve;
}

OverlapMatrix overlap_from_sets(const std::vector<std::string>& labels,
                                const std::vector<std::vector<WindowKey>>& sw_sets) {
  if (labels.size() != sw_sets.size())
    throw Error("overlap_from_sets: label/set count mismatch");
  if (labels.size() < 2) throw Error("overlap_from_sets: need at least 2 systems");

  OverlapMatrix m;
  std::vector<std::vector<WindowKey>> sets;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (sw_sets[i].empty()) {
      m.absent.push_back(labels[i]);
      continue;
    }
    std::vector<WindowKey> sorted = sw_sets[i];
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    m.systems.push_back(labels[i]);
    sets.push_back(std::move(sorted));
  }

  const std::size_t n = m.systems.size();
  m.sw_counts.resize(n);
  m.intersections.assign(n, std::vector<std::size_t>(n, 0));
  m.cells.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) m.sw_counts[i] = sets[i].size();

  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<WindowKey> inter;
      std::set_intersection(sets[r].begin(), sets[r].end(), sets[c].begin(), sets[c].end(),
                            std::back_inserter(inter));
      m.intersections[r][c] = inter.size();
      m.cells[r][c] = double(inter.size()) / double(m.sw_counts[c]);
    }
  }

  // Strict dominance in every pairwise comparison, per the +/- convention:
  // a dominating column is an MPP, a dominated column's row is easiest to
  // predict.
  m.column_marks.assign(n, 0);
  m.row_marks.assign(n, 0);
  for (std::size_t i = 0; i < n && n >= 2; ++i) {
    bool col_dominates = true, col_dominated = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (!(m.cells[j][i] > m.cells[i][j])) col_dominates = false;
      if (!(m.cells[j][i] < m.cells[i][j])) col_dominated = false;
    }
    m.column_marks[i] = col_dominates ? +1 : (col_dominated ? -1 : 0);
    m.row_marks[i] = col_dominated ? +1 : (col_dominates ? -1 : 0);
  }
  return m;
}

OverlapMatrix overlap_matrix(const Corpus& corpus, const std::vector<ResolvedSystem>& systems,
                             const WindowSpec& spec) {
  if (systems.size() < 2) throw Error("overlap_matrix: need at least 2 systems");
  std::vector<std::string> labels;
  std::vector<std::vector<WindowKey>> sets;
  for (const ResolvedSystem& sys : systems) {
    labels.push_back(sys.label);
    std::vector<WindowKey> keys;
    for (const Window& w : scan_corpus(corpus, sys, spec).windows)
      if (w.significant) keys.emplace_back(w.doc_id, w.start);
    sets.push_back(std::move(keys));
  }
  return overlap_from_sets(labels, sets);
}

void write_curve_csv(std::ostream& out, const LocationCurve& curve) {
  out << "position,rate\r\n";
  char buf[64];
  for (const CurvePoint& pt : curve.points) {
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f", pt.position, pt.rate);
    out << buf << "\r\n";
  }
}

namespace {

std::string marked(const std::string& label, int mark) {
  if (mark > 0) return label + "+";
  if (mark < 0) return label + "-";
  return label;
}

}  // namespace

void write_overlap_csv(std::ostream& out, const OverlapMatrix& m) {
  out << "Pr(row|col)";
  for (std::size_t c = 0; c < m.systems.size(); ++c)
    out << "," << csv_field(marked(m.systems[c], m.column_marks[c]));
  out << "\r\n";
  char buf[32];
  for (std::size_t r = 0; r < m.systems.size(); ++r) {
    out << csv_field(marked(m.systems[r], m.row_marks[r]));
    for (std::size_t c = 0; c < m.systems.size(); ++c) {
      std::snprintf(buf, sizeof(buf), ",%.6f", m.cells[r][c]);
      out << buf;
    }
    out << "\r\n";
  }
  if (!m.absent.empty()) {
    out << "# absent (no significant windows):";
    for (const auto& label : m.absent) out << " " << label;
    out << "\r\n";
  }
}

}  // namespace subwin

// report.hpp -- subcommand drivers shared by the CLI binary and tests.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "subwin/config.hpp"
#include "subwin/corpus.hpp"
#include "subwin/sterm.hpp"
#include "subwin/window.hpp"

namespace subwin {

// Loads each corpus (format per config), applies the configured document
// subset, and normalizes tags through the configured tag map when the
// corpus is fully tagged.
std::vector<Corpus> load_inputs(const RunConfig& config, const std::vector<std::string>& paths);

// Union of all documents under the name "combined"; document ids must be
// globally unique.
Corpus combined_corpus(const std::vector<Corpus>& corpora);

// Systems analyzed by default for one corpus: every present field except
// fulltext, the dictionary when configured, bi/idf when a combined
// corpus is available.
std::vector<std::string> default_system_names(const Corpus& corpus, const RunConfig& config,
                                              bool have_combined);

// Resolve a system name ("title", "dictionary", "bi", ...) against a
// corpus, optionally applying the configured stoplist.
ResolvedSystem resolve_named_system(const std::string& name, const Corpus& corpus,
                                    const Corpus* combined, const RunConfig& config,
                                    bool apply_stoplist);

void run_census(const std::vector<Corpus>& corpora, std::ostream& out);
void run_sterms(const RunConfig& config, const Corpus& corpus, const Corpus* combined,
                const std::string& system, bool weights, bool apply_stoplist,
                std::ostream& out);
void run_windows(const RunConfig& config, const Corpus& corpus, const Corpus* combined,
                 const std::string& system, bool apply_stoplist, std::ostream& out);
void run_overlap(const RunConfig& config, const Corpus& corpus, const Corpus* combined,
                 const std::vector<std::string>& systems, bool apply_stoplist,
                 std::ostream& out);
void run_ttr(const RunConfig& config, const std::vector<Corpus>& corpora, bool anova,
             std::ostream& out);
void run_grammar(const RunConfig& config, const Corpus& corpus, const Corpus* combined,
                 bool apply_stoplist, std::ostream& out);
void run_deltatp(const RunConfig& config, const std::vector<Corpus>& corpora,
                 bool apply_stoplist, std::ostream& out);

// Writes profiles.json plus curves/<corpus>_<system>.{csv,svg} under
// out_dir for every (corpus, system) pair.
void run_profile(const RunConfig& config, const std::vector<Corpus>& corpora,
                 const std::vector<std::string>& systems, const std::string& out_dir);
void run_curve(const RunConfig& config, const std::vector<Corpus>& corpora,
               const std::vector<std::string>& systems, const std::string& out_dir);

SimulateResult run_simulate(std::size_t windows, std::size_t omega, double p, double alpha,
                            std::uint64_t seed, std::ostream& out);

// The full bundle: census.csv, profiles.json, overlap_<corpus>.csv,
// curves/*.csv+svg, ttr.csv, fit.json, grammar_<corpus>.csv,
// theory_practice.csv. Deterministic; partial outputs are removed when
// any step fails.
void run_report_all(const RunConfig& config, const std::vector<Corpus>& corpora,
                    const std::string& out_dir);

}  // namespace subwin

#ifndef LEXIND_TOOLS_PIPELINE_CONFIG_H_
#define LEXIND_TOOLS_PIPELINE_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexind/column_space.h"
#include "lexind/cooccurrence.h"
#include "lexind/dictionary.h"
#include "lexind/similarity.h"

namespace lexind::cli {

// Settings for the `pipeline` command: one experiment from corpora and seed
// dictionaries to an extracted (and optionally evaluated) lexicon.
struct PipelineConfig {
  std::string source_corpus;
  std::string target_corpus;
  std::string source_stopwords;
  std::string target_stopwords;
  std::vector<std::pair<std::string, std::string>> dictionaries;  // id -> path, by priority
  std::string combination = "none";  // none | simple | independent
  WindowMode mode = WindowMode::kUnordered;
  int window = 5;
  Measure measure = Measure::kLogLikelihood;
  bool normalize = true;
  Metric metric = Metric::kDiceMin;
  std::string weights = "unit";  // unit | accuracy | accuracy_size | ID=w,ID=w
  std::map<std::string, double> accuracies;
  std::size_t top_k = 10;
  std::uint64_t min_frequency = 1;
  std::uint64_t min_target_frequency = 1;
  unsigned threads = 0;
  std::string out;
  std::string source_matrix_out;
  std::string target_matrix_out;
  std::string gold;
  std::vector<std::size_t> ks{1, 10};
  std::string report;
};

// "ID=PATH"
std::pair<std::string, std::string> ParseIdPath(const std::string& text);
// "ID=v,ID=v"
std::map<std::string, double> ParseIdValues(const std::string& text);
// "1,10"
std::vector<std::size_t> ParseKs(const std::string& text);

// Resolves the weight source against a combined dictionary. Returns nullopt
// for metrics that ignore weights.
std::optional<WeightSet> ResolveWeights(const std::string& source,
                                        const std::map<std::string, double>& accuracies,
                                        const CombinedDictionary& dict);

// Reads a flat `key=value` file (# comments, blank lines) and returns it as
// `--key value` arguments. Keys in `given` are skipped so that command-line
// flags win. Throws IoError / ParseError.
std::vector<std::string> ExpandConfigFile(const std::string& path,
                                          const std::vector<std::string>& given);

}  // namespace lexind::cli

#endif  // LEXIND_TOOLS_PIPELINE_CONFIG_H_

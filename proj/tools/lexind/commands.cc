#include "lexind/commands.h"

#include <functional>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "lexind/corpus.h"
#include "lexind/error.h"
#include "lexind/evaluation.h"
#include "lexind/extraction.h"
#include "lexind/pivot.h"

namespace lexind::cli {
namespace {

const std::vector<std::string> kModes{"unordered", "ordered"};
const std::vector<std::string> kMeasures{"raw", "llr"};
const std::vector<std::string> kCombinations{"none", "simple", "independent"};
const std::vector<std::string> kMetrics{"cityblock",  "cosine",      "dicemin", "diceprod",
                                        "jaccardmin", "jaccardprod", "lin",     "newdicemin"};

WordSet MaybeLoadWordSet(const std::string& path) {
  return path.empty() ? WordSet{} : LoadWordSet(path);
}

// Raw counts -> optional log-likelihood -> zero-row pruning -> optional
// row normalization.
CoocMatrix BuildSideMatrix(const Corpus& corpus, const Vocabulary& rows,
                           const ColumnSpacePtr& columns, Measure measure, bool normalize,
                           unsigned threads, std::ostream& err) {
  auto m = BuildCooccurrence(corpus, rows, columns, threads);
  if (measure == Measure::kLogLikelihood) {
    LlrDiagnostics diag;
    m = ApplyLogLikelihood(m, CountWords(corpus), corpus.token_count, &diag);
    if (diag.clipped_cells > 0) {
      err << "lexind: " << corpus.language_tag << ": clipped negative contingency counts in "
          << diag.clipped_cells << " cells\n";
    }
  }
  m = PruneZeroRows(m);
  if (normalize) m = NormalizeRows(m);
  err << "lexind: " << corpus.language_tag << " matrix " << m.rows() << " rows x "
      << m.space().size() << " columns, " << m.nnz() << " cells\n";
  return m;
}

void WarnIgnoredWeights(Metric metric, const std::string& weights, std::ostream& err) {
  if (metric != Metric::kNewDiceMin && weights != "unit") {
    err << "lexind: warning: weights are only used by newdicemin; ignoring --weights\n";
  }
}

void RequireNewDiceSetup(Metric metric, const CombinedDictionary& dict) {
  if (metric == Metric::kNewDiceMin && dict.mode() != CombinationMode::kIndependent) {
    throw ConfigError("metric newdicemin requires an independent dictionary combination");
  }
}

CombinedDictionary CombineConfigured(const std::vector<std::pair<std::string, std::string>>& dicts,
                                     const std::string& combination) {
  if (dicts.empty()) throw ConfigError("no seed dictionary given (--dict ID=PATH)");
  std::vector<SeedDictionary> loaded;
  for (const auto& [id, path] : dicts) loaded.push_back(LoadDictionary(path, id));
  if (combination == "none") {
    if (loaded.size() != 1) {
      throw ConfigError("combination=none takes exactly one dictionary; use simple or independent");
    }
    return CombinedDictionary::FromSingle(loaded.front());
  }
  return ParseCombinationMode(combination) == CombinationMode::kSimple
             ? CombineSimple(loaded)
             : CombineIndependent(loaded);
}

// Pulls `--config FILE` out of a pipeline invocation and splices the file's
// keys in right after the subcommand name.
std::vector<std::string> ExpandPipelineConfig(const std::vector<std::string>& args) {
  if (args.empty() || args.front() != "pipeline") return args;
  std::vector<std::string> rest;
  std::string config_path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[++i];
    } else if (args[i].starts_with("--config=")) {
      config_path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (config_path.empty()) return args;
  std::vector<std::string> out{"pipeline"};
  for (auto& a : ExpandConfigFile(config_path, rest)) out.push_back(std::move(a));
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace

void RunPipeline(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
  const auto dict = CombineConfigured(config.dictionaries, config.combination);
  RequireNewDiceSetup(config.metric, dict);
  WarnIgnoredWeights(config.metric, config.weights, err);
  std::optional<WeightSet> weights;
  if (config.metric == Metric::kNewDiceMin) {
    weights = ResolveWeights(config.weights, config.accuracies, dict);
  }
  err << "lexind: seed dictionary " << dict.size() << " entries (" << ToString(dict.mode())
      << ")\n";

  const auto source_corpus =
      LoadCorpus(config.source_corpus, MaybeLoadWordSet(config.source_stopwords), "source");
  const auto target_corpus =
      LoadCorpus(config.target_corpus, MaybeLoadWordSet(config.target_stopwords), "target");
  const auto source_rows = BuildVocabulary(source_corpus, config.min_frequency);
  const auto target_rows = BuildVocabulary(target_corpus, config.min_target_frequency);

  const auto source_matrix =
      BuildSideMatrix(source_corpus, source_rows, MakeSourceSpace(dict, config.mode, config.window),
                      config.measure, config.normalize, config.threads, err);
  const auto target_matrix =
      BuildSideMatrix(target_corpus, target_rows, MakeTargetSpace(dict, config.mode, config.window),
                      config.measure, config.normalize, config.threads, err);
  if (!config.source_matrix_out.empty()) WriteMatrix(source_matrix, config.source_matrix_out);
  if (!config.target_matrix_out.empty()) WriteMatrix(target_matrix, config.target_matrix_out);

  const auto lexicon = ExtractLexicon(source_matrix, target_matrix, dict, config.metric,
                                      weights ? &*weights : nullptr, config.top_k, config.threads);
  WriteLexicon(lexicon, config.out);
  err << "lexind: wrote " << lexicon.entries.size() << " ranked entries to " << config.out << '\n';

  if (!config.gold.empty()) {
    const auto report = Evaluate(lexicon, LoadGold(config.gold), config.ks);
    out << FormatSummary(report);
    if (!config.report.empty()) WriteReport(report, config.report);
  }
}

int Run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  try {
    args = ExpandPipelineConfig(raw_args);
  } catch (const Error& e) {
    err << "lexind: " << e.what() << '\n';
    return kExitUsageError;
  }

  CLI::App app{"Bilingual lexicon extraction from comparable corpora", "lexind"};
  app.require_subcommand(1, 1);
  std::function<void()> action;
  std::string threads_help = "worker threads (0 = machine parallelism); never changes output";

  // build-pivot
  struct {
    std::string src_pivot, pivot_tgt, stopwords, out, dict_id = "DicPi";
    std::string orientation = "pivot-first";
    std::size_t top_n = 40000;
    unsigned threads = 0;
  } pivot;
  auto* cmd_pivot = app.add_subcommand("build-pivot", "build a seed dictionary through a pivot language");
  cmd_pivot->add_option("--src-pivot", pivot.src_pivot, "source headword<TAB>pivot description")
      ->required()->check(CLI::ExistingFile);
  cmd_pivot->add_option("--pivot-tgt", pivot.pivot_tgt, "pivot-target dictionary")
      ->required()->check(CLI::ExistingFile);
  cmd_pivot->add_option("--tgt-orientation", pivot.orientation,
                        "pivot-first: pivot<TAB>targets (inverted); target-first: target<TAB>pivot words")
      ->check(CLI::IsMember({"pivot-first", "target-first"}))->capture_default_str();
  cmd_pivot->add_option("--stopwords", pivot.stopwords, "pivot-language stop words")
      ->check(CLI::ExistingFile);
  cmd_pivot->add_option("--top-n", pivot.top_n, "entries to keep")
      ->check(CLI::PositiveNumber)->capture_default_str();
  cmd_pivot->add_option("--dict-id", pivot.dict_id)->capture_default_str();
  cmd_pivot->add_option("--out", pivot.out, "output dictionary TSV")->required();
  cmd_pivot->add_option("--threads", pivot.threads, threads_help);
  cmd_pivot->callback([&] {
    action = [&] {
      const auto stop = MaybeLoadWordSet(pivot.stopwords);
      const auto src = LoadPivotSide(pivot.src_pivot, stop, PivotOrientation::kHeadwordFirst);
      const auto tgt = LoadPivotSide(pivot.pivot_tgt, stop,
                                     pivot.orientation == "pivot-first"
                                         ? PivotOrientation::kPivotFirst
                                         : PivotOrientation::kHeadwordFirst);
      const auto dict = BuildPivotDictionary(src, tgt, pivot.top_n, pivot.dict_id, pivot.threads);
      WriteDictionary(dict, pivot.out);
      err << "lexind: " << dict.id() << ": " << dict.size() << " entries\n";
    };
  });

  // ingest-table
  struct {
    std::string table, out, dict_id = "DicPa";
    std::size_t top_n = 40000;
  } table;
  auto* cmd_table = app.add_subcommand("ingest-table", "seed dictionary from a word translation table");
  cmd_table->add_option("--table", table.table, "source<TAB>target<TAB>probability")
      ->required()->check(CLI::ExistingFile);
  cmd_table->add_option("--top-n", table.top_n)->check(CLI::PositiveNumber)->capture_default_str();
  cmd_table->add_option("--dict-id", table.dict_id)->capture_default_str();
  cmd_table->add_option("--out", table.out)->required();
  cmd_table->callback([&] {
    action = [&] {
      const auto dict = IngestTranslationTable(table.table, table.top_n, table.dict_id);
      WriteDictionary(dict, table.out);
      err << "lexind: " << dict.id() << ": " << dict.size() << " entries\n";
    };
  });

  // combine
  struct {
    std::vector<std::string> dicts;
    std::string mode = "simple", out;
  } combine;
  auto* cmd_combine = app.add_subcommand("combine", "combine seed dictionaries");
  cmd_combine->add_option("--dict", combine.dicts, "ID=PATH, highest priority first")->required();
  cmd_combine->add_option("--mode", combine.mode)
      ->check(CLI::IsMember({"simple", "independent"}))->capture_default_str();
  cmd_combine->add_option("--out", combine.out)->required();
  cmd_combine->callback([&] {
    action = [&] {
      std::vector<std::pair<std::string, std::string>> dicts;
      for (const auto& d : combine.dicts) dicts.push_back(ParseIdPath(d));
      if (dicts.size() < 2) throw ConfigError("combine needs at least two --dict");
      const auto dict = CombineConfigured(dicts, combine.mode);
      WriteCombined(dict, combine.out);
      err << "lexind: combined " << dict.size() << " entries\n";
    };
  });

  // build-matrix
  struct {
    std::string corpus, stopwords, dictionary, side = "source", mode = "unordered";
    std::string measure = "llr", out;
    int window = 5;
    bool normalize = true;
    std::uint64_t min_frequency = 1;
    unsigned threads = 0;
  } matrix;
  auto* cmd_matrix = app.add_subcommand("build-matrix", "co-occurrence matrix for one corpus");
  cmd_matrix->add_option("--corpus", matrix.corpus)->required()->check(CLI::ExistingFile);
  cmd_matrix->add_option("--stopwords", matrix.stopwords)->check(CLI::ExistingFile);
  cmd_matrix->add_option("--dictionary", matrix.dictionary, "seed or combined dictionary TSV")
      ->required()->check(CLI::ExistingFile);
  cmd_matrix->add_option("--side", matrix.side, "which dictionary side gives the columns")
      ->check(CLI::IsMember({"source", "target"}))->capture_default_str();
  cmd_matrix->add_option("--mode", matrix.mode)->check(CLI::IsMember(kModes))->capture_default_str();
  cmd_matrix->add_option("--window", matrix.window)->check(CLI::PositiveNumber)->capture_default_str();
  cmd_matrix->add_option("--measure", matrix.measure)
      ->check(CLI::IsMember(kMeasures))->capture_default_str();
  cmd_matrix->add_flag("--normalize,!--no-normalize", matrix.normalize, "L1-normalize rows");
  cmd_matrix->add_option("--min-frequency", matrix.min_frequency)->capture_default_str();
  cmd_matrix->add_option("--out", matrix.out)->required();
  cmd_matrix->add_option("--threads", matrix.threads, threads_help);
  cmd_matrix->callback([&] {
    action = [&] {
      const auto dict = LoadSeedColumns(matrix.dictionary);
      const auto mode = ParseWindowMode(matrix.mode);
      const auto columns = matrix.side == "source" ? MakeSourceSpace(dict, mode, matrix.window)
                                                   : MakeTargetSpace(dict, mode, matrix.window);
      const auto corpus = LoadCorpus(matrix.corpus, MaybeLoadWordSet(matrix.stopwords), matrix.side);
      const auto rows = BuildVocabulary(corpus, matrix.min_frequency);
      const auto m = BuildSideMatrix(corpus, rows, columns, ParseMeasure(matrix.measure),
                                     matrix.normalize, matrix.threads, err);
      WriteMatrix(m, matrix.out);
    };
  });

  // extract
  struct {
    std::string source_matrix, target_matrix, dictionary, metric = "dicemin";
    std::string weights = "unit", accuracy, out;
    std::size_t top_k = 10;
    unsigned threads = 0;
  } extract;
  auto* cmd_extract = app.add_subcommand("extract", "rank target candidates for every source row");
  cmd_extract->add_option("--source-matrix", extract.source_matrix)
      ->required()->check(CLI::ExistingFile);
  cmd_extract->add_option("--target-matrix", extract.target_matrix)
      ->required()->check(CLI::ExistingFile);
  cmd_extract->add_option("--dictionary", extract.dictionary)->required()->check(CLI::ExistingFile);
  cmd_extract->add_option("--metric", extract.metric)
      ->check(CLI::IsMember(kMetrics, CLI::ignore_case))->capture_default_str();
  cmd_extract->add_option("--weights", extract.weights,
                          "unit | accuracy | accuracy_size | ID=w,ID=w")->capture_default_str();
  cmd_extract->add_option("--accuracy", extract.accuracy, "ID=acc,ID=acc");
  cmd_extract->add_option("--top-k", extract.top_k)->check(CLI::PositiveNumber)->capture_default_str();
  cmd_extract->add_option("--out", extract.out)->required();
  cmd_extract->add_option("--threads", extract.threads, threads_help);
  cmd_extract->callback([&] {
    action = [&] {
      const auto dict = LoadSeedColumns(extract.dictionary);
      const auto metric = ParseMetric(extract.metric);
      RequireNewDiceSetup(metric, dict);
      WarnIgnoredWeights(metric, extract.weights, err);
      std::optional<WeightSet> weights;
      if (metric == Metric::kNewDiceMin) {
        weights = ResolveWeights(extract.weights,
                                 extract.accuracy.empty() ? std::map<std::string, double>{}
                                                          : ParseIdValues(extract.accuracy),
                                 dict);
      }
      const auto sh = ReadMatrixHeader(extract.source_matrix);
      const auto th = ReadMatrixHeader(extract.target_matrix);
      const auto source =
          LoadMatrix(extract.source_matrix, MakeSourceSpace(dict, sh.mode, sh.window));
      const auto target =
          LoadMatrix(extract.target_matrix, MakeTargetSpace(dict, th.mode, th.window));
      const auto lexicon = ExtractLexicon(source, target, dict, metric,
                                          weights ? &*weights : nullptr, extract.top_k,
                                          extract.threads);
      WriteLexicon(lexicon, extract.out);
    };
  });

  // evaluate
  struct {
    std::string lexicon, gold, ks = "1,10", report;
  } eval;
  auto* cmd_eval = app.add_subcommand("evaluate", "Top-k scores of a lexicon against a gold set");
  cmd_eval->add_option("--lexicon", eval.lexicon)->required()->check(CLI::ExistingFile);
  cmd_eval->add_option("--gold", eval.gold)->required()->check(CLI::ExistingFile);
  cmd_eval->add_option("--ks", eval.ks, "comma-separated k values")->capture_default_str();
  cmd_eval->add_option("--report", eval.report, "also write a TSV report");
  cmd_eval->callback([&] {
    action = [&] {
      const auto ks = ParseKs(eval.ks);
      const auto report = Evaluate(LoadLexicon(eval.lexicon), LoadGold(eval.gold), ks);
      out << FormatSummary(report);
      if (!eval.report.empty()) WriteReport(report, eval.report);
    };
  });

  // pipeline
  PipelineConfig config;
  struct {
    std::vector<std::string> dicts;
    std::string mode = "unordered", measure = "llr", metric = "dicemin", accuracy, ks = "1,10";
  } pipe;
  auto* cmd_pipe = app.add_subcommand("pipeline", "corpora + dictionaries -> lexicon (+ evaluation)");
  cmd_pipe->add_option("--config", "flat key=value file; flags override its keys");
  cmd_pipe->add_option("--source-corpus", config.source_corpus)->required()->check(CLI::ExistingFile);
  cmd_pipe->add_option("--target-corpus", config.target_corpus)->required()->check(CLI::ExistingFile);
  cmd_pipe->add_option("--source-stopwords", config.source_stopwords)->check(CLI::ExistingFile);
  cmd_pipe->add_option("--target-stopwords", config.target_stopwords)->check(CLI::ExistingFile);
  cmd_pipe->add_option("--dict", pipe.dicts, "ID=PATH, highest priority first")->required();
  cmd_pipe->add_option("--combination", config.combination)
      ->check(CLI::IsMember(kCombinations))->capture_default_str();
  cmd_pipe->add_option("--mode", pipe.mode)->check(CLI::IsMember(kModes))->capture_default_str();
  cmd_pipe->add_option("--window", config.window)->check(CLI::PositiveNumber)->capture_default_str();
  cmd_pipe->add_option("--measure", pipe.measure)->check(CLI::IsMember(kMeasures))->capture_default_str();
  cmd_pipe->add_flag("--normalize,!--no-normalize", config.normalize, "L1-normalize rows");
  cmd_pipe->add_option("--metric", pipe.metric)
      ->check(CLI::IsMember(kMetrics, CLI::ignore_case))->capture_default_str();
  cmd_pipe->add_option("--weights", config.weights, "unit | accuracy | accuracy_size | ID=w,ID=w")
      ->capture_default_str();
  cmd_pipe->add_option("--accuracy", pipe.accuracy, "ID=acc,ID=acc");
  cmd_pipe->add_option("--top-k", config.top_k)->check(CLI::PositiveNumber)->capture_default_str();
  cmd_pipe->add_option("--min-frequency", config.min_frequency)->capture_default_str();
  cmd_pipe->add_option("--min-target-frequency", config.min_target_frequency)->capture_default_str();
  cmd_pipe->add_option("--threads", config.threads, threads_help);
  cmd_pipe->add_option("--out", config.out, "lexicon TSV")->required();
  cmd_pipe->add_option("--source-matrix-out", config.source_matrix_out);
  cmd_pipe->add_option("--target-matrix-out", config.target_matrix_out);
  cmd_pipe->add_option("--gold", config.gold)->check(CLI::ExistingFile);
  cmd_pipe->add_option("--ks", pipe.ks)->capture_default_str();
  cmd_pipe->add_option("--report", config.report);
  cmd_pipe->callback([&] {
    action = [&] {
      for (const auto& d : pipe.dicts) config.dictionaries.push_back(ParseIdPath(d));
      config.mode = ParseWindowMode(pipe.mode);
      config.measure = ParseMeasure(pipe.measure);
      config.metric = ParseMetric(pipe.metric);
      if (!pipe.accuracy.empty()) config.accuracies = ParseIdValues(pipe.accuracy);
      config.ks = ParseKs(pipe.ks);
      RunPipeline(config, out, err);
    };
  });

  std::vector<const char*> argv{"lexind"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "lexind: configuration error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const IoError& e) {
    err << "lexind: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const ParseError& e) {
    err << "lexind: parse error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const std::exception& e) {
    err << "lexind: error: " << e.what() << '\n';
    return kExitDataError;
  }
}

}  // namespace lexind::cli

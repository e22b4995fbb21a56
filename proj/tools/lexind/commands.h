#ifndef LEXIND_TOOLS_COMMANDS_H_
#define LEXIND_TOOLS_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "lexind/pipeline_config.h"

namespace lexind::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitDataError = 1,   // the inputs parsed but left nothing usable
  kExitUsageError = 2,  // bad flags, missing or malformed files, inconsistent config
};

// Runs `lexind <args...>` (program name excluded). Results go to files
// named by the flags; summaries to `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The body of the `pipeline` command. Throws lexind::Error.
void RunPipeline(const PipelineConfig& config, std::ostream& out, std::ostream& err);

}  // namespace lexind::cli

#endif  // LEXIND_TOOLS_COMMANDS_H_

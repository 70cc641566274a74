#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "harmonia/modes.hpp"
#include "harmonia/space.hpp"

namespace harmonia {

enum ExitCode { kExitOk = 0, kExitVerifyFailed = 1, kExitBadInput = 2, kExitIo = 3 };

struct RunConfig {
  std::string command;
  Space space;
  int k_lo = 0;
  int k_hi = 0;
  std::string out;       // empty: standard output
  std::string in;        // basis document for verify / eval
  std::string points;    // point file for eval
  std::string format = "csv";
  Normalization normalization = Normalization::Primitive;
  bool full_group = false;
  bool oracle = false;
  bool orthogonality = false;
};

int run_generate(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_dims(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_eval(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_group(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments and dispatches; never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace harmonia

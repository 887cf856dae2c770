#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "sigdim/lp.hpp"
#include "sigdim/signaling.hpp"

namespace sigdim {

struct RunConfig {
  std::string command;  // model | classify | measurements | vertices | effective | dimension | signaling | witness

  std::string name;           // model name for `model`
  std::string system_path;    // GptSystem JSON
  std::string input_path;     // ConditionalDistribution JSON
  std::string vertices_path;  // optional strategy list for `witness`
  std::string output_path;    // primary artifact; stdout when empty
  std::string report_path;    // signaling report JSON
  std::string csv_path;       // signaling report CSV

  std::optional<long> m, n, d;
  std::string box = "1";
  long threads = 1;
  Objective objective = Objective::Zeros;
  SearchOrder search = SearchOrder::Linear;
};

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2 };

/// Runs one command. Results go to `out`; diagnostics, one line each, to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace sigdim

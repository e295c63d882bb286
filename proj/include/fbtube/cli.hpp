#pragma once
// Command implementations behind the fbtube binary. Each command consumes a
// RunConfig and produces deterministic text artifacts: fixed seed and config
// imply byte-identical output, independent of the worker count. Every report
// embeds a config echo.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fbtube/basin.hpp"
#include "fbtube/certify.hpp"

namespace fbtube {

struct RunConfig {
  // shared
  double tol = kDefaultParamTol;
  int max_iter = kDefaultMaxIter;
  int max_m = kDefaultParamMaxM;
  std::uint64_t seed = 1;
  int threads = 1;
  // certify
  int depth = kDefaultProofDepth;
  double tail_bound = kDefaultTailBound;
  // basin
  SliceSpec slice{};
  // param / family sweeps
  int samples = 400;
  double radius = 2.0;

  nlohmann::ordered_json echo(const std::string& command) const;
};

struct CommandResult {
  int exit_code = 0;
  // Named text artifacts, e.g. {"certify.json": "..."} or
  // {"slice.csv": "...", "slice.pgm": "..."}. Keys are suffix hints; the
  // driver maps them onto the --out path.
  std::vector<std::pair<std::string, std::string>> artifacts;
  std::string summary;  // one-line human summary for stderr
};

/// Runs all six certificates; exit 0 iff every verdict is Proved. Emits a
/// JSON report listing each certificate.
CommandResult run_certify(const RunConfig& cfg);

/// Renders the configured slice; emits CSV and PGM plus a JSON summary.
CommandResult run_basin(const RunConfig& cfg);

/// Evaluates Phi on the standard sample set of the weighted-norm ball of the
/// configured radius; emits CSV with per-sample convergence metadata plus a
/// JSON summary. Non-convergent samples are flagged, not dropped.
CommandResult run_param(const RunConfig& cfg);

/// Family sweep: S-containment of (U, V), obstruction statistics with the
/// finite-difference cross-check, the factorable negative control, the
/// large-|v| lower-bound checks, and the Marty probe. Emits a JSON report.
CommandResult run_family(const RunConfig& cfg);

/// Fixed-format float for CSV cells: shortest round-trip via %.17g.
std::string format_double(double x);

}  // namespace fbtube

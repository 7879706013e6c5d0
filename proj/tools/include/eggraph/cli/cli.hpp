#pragma once

#include "eggraph/constructions.hpp"
#include "eggraph/game.hpp"
#include "eggraph/solver.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace eggraph::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kBadInput = 2,
  kBudgetExhausted = 3,
};

/// Solver output together with the instance it certifies.
struct Witness {
  ConstructedInstance instance;
  Certificate certificate;
};

/// Picks the construction from the scenario (FC/SH ladder with gadgets, HD/PD
/// ladder with reset hub) or the tree when `tree` is set, solves for its
/// parameters and builds it. `period` is p, or p0 for the tree.
Witness make_witness(const GameParams& params, std::int64_t period, bool tree,
                     const SolverOptions& options = {});

/// Runs the command line. Never throws; returns one of ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eggraph::cli

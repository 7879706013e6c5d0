#pragma once

#include "eggraph/constructions.hpp"
#include "eggraph/game.hpp"
#include "eggraph/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eggraph {

/// One strict inequality lhs > rhs, evaluated exactly.
struct Inequality {
  std::string label;
  Rational lhs;
  Rational rhs;

  Rational residual() const { return lhs - rhs; }
  bool holds() const { return lhs > rhs; }
};

/// The sufficient inequalities for one construction, evaluated at concrete
/// structural parameters.
///
/// FCSH labels:
///   outer-beats-inner      (sc+d)/(s+1)         > (a+sb)/(s+1)
///   outer-beats-ladder     (sc+d)/(s+1)         > ((q+2)a+rb)/(q+r+2)
///   ladder-beats-feeler    (qa+(r+2)b)/(q+r+2)  > ((2p-3)c+3d)/(2p)
///   ladder-beats-front     (qa+(r+2)b)/(q+r+2)  > (c+(q+r-1)d)/(q+r)
///   feeler-resets-ladder   ((2p-1)c+d)/(2p)     > ((q+2)a+rb)/(q+r+2)
/// HDPD labels:
///   front-spreads          min{((o-1)a+b)/o, (oa+2b)/(o+2)} > (c+(o+1)d)/(o+2)
///   reset-hub-stays-weak   (oa+2b)/(o+2) > ((p-2)oc+(o+q+1)d)/((p-1)o+q+1)
///   reset-hub-fires        ((p-1)oc+(q+1)d)/((p-1)o+q+1) > a
///   guard-above-cooperators  (sc+(r+1)d)/(s+r+1) > ((o+1)a+b)/(o+2)
///   guard-below-source     a > (sc+(r+1)d)/(s+r+1)
/// Tree labels:
///   cooperator-wins-front  (a+rb)/(r+1) > (c+rd)/(r+1)
///   defector-wins-front    (rc+d)/(r+1) > a
/// plus the informational flag "outer-cooperators-spread": b > (c+rd)/(r+1).
struct Certificate {
  ConstructionKind kind{};
  GameParams params;
  std::map<std::string, std::int64_t> structural_params;
  std::vector<Inequality> inequalities;
  std::map<std::string, bool> flags;

  bool holds() const;
  std::vector<std::string> violated() const;
  Rational min_residual() const;
  const Inequality& at(std::string_view label) const;
};

/// Throw ScenarioError unless a > c (FC/SH), InvalidArgument for p < 2 or
/// non-positive structural parameters.
Certificate check_fcsh(const GameParams& params, std::int64_t p, std::int64_t q, std::int64_t r,
                       std::int64_t s);
/// Throw ScenarioError unless c > a (HD/PD).
Certificate check_hdpd(const GameParams& params, std::int64_t p, std::int64_t o, std::int64_t q,
                       std::int64_t r, std::int64_t s);
/// Throw ScenarioError unless the params are HD.
Certificate check_tree(const GameParams& params, std::int64_t r, std::int64_t q);

struct SolverOptions {
  /// Cap on candidate evaluations per solve.
  std::uint64_t max_candidates = 1'000'000;
  /// Receives progress notes such as a ladder-size escalation.
  std::function<void(std::string_view)> log;
};

struct FcshSolution {
  std::int64_t q = 0, r = 0, s = 0;
  /// m = q + r from the ladder-width search.
  std::int64_t m = 0;
  /// True when the first m meeting the width conditions admitted no r.
  bool escalated = false;
  Certificate certificate;
};

struct HdpdSolution {
  std::int64_t o = 0, q = 0, r = 0, s = 0;
  Certificate certificate;
};

struct TreeSolution {
  std::int64_t r = 0, q = 0;
  std::size_t predicted_period = 0;
  Certificate certificate;
};

/// Requires FC or SH, generic, p >= 2. Throws ScenarioError / InvalidArgument
/// on bad input, Infeasible when b >= ((2p-1)c+d)/(2p) (possible only in FC),
/// and BudgetExhausted when the scan cap is reached. The result always carries
/// a certificate that holds.
FcshSolution solve_fcsh(const GameParams& params, std::int64_t p, const SolverOptions& options = {});
/// Requires HD or PD, generic, p >= 2. Same error contract as solve_fcsh.
HdpdSolution solve_hdpd(const GameParams& params, std::int64_t p, const SolverOptions& options = {});
/// Requires HD, generic, p0 >= 1. Same error contract as solve_fcsh.
TreeSolution solve_tree(const GameParams& params, std::int64_t p0, const SolverOptions& options = {});

/// Open interval of reals q satisfying the two reset-hub conditions for a
/// fixed clique size o, with payoffs normalized to a = 1, d = 0.
/// `lower` is empty when o + 2b <= 0 (the lower bound then does not bind in
/// closed form and both conditions must be checked directly).
struct QInterval {
  std::optional<Rational> lower;
  Rational upper;
};
QInterval hdpd_q_interval(const GameParams& params, std::int64_t p, std::int64_t o);

/// Asymptotic slopes of the lower and upper q-bounds as functions of o, in
/// normalized coordinates.
struct Slopes {
  Rational lower;
  Rational upper;
};
Slopes hdpd_slopes(const GameParams& params, std::int64_t p);

/// Largest eps such that moving every payoff by less than eps keeps all
/// inequalities of `cert` strict: every side is a convex combination of
/// payoffs, so a residual moves by at most 2 * eps.
Rational perturbation_margin(const Certificate& cert);

}  // namespace eggraph

#pragma once

#include "eggraph/rational.hpp"

#include <string>
#include <string_view>

namespace eggraph {

/// The four social-dilemma scenarios, determined by the strict order of the
/// payoffs. Anything without one of the four strict orders is NonAdmissible.
enum class Scenario { PD, SH, HD, FC, NonAdmissible };

std::string_view to_string(Scenario scenario);

/// Payoff matrix of the symmetric two-strategy game:
///
///        C   D
///   C    a   b
///   D    c   d
///
/// A cooperator facing a defector receives b; the defector receives c.
struct GameParams {
  Rational a;
  Rational b;
  Rational c;
  Rational d;

  /// min{a,c} > max{b,d}
  bool admissible() const;
  /// a, b, c, d pairwise distinct.
  bool generic() const;

  friend bool operator==(const GameParams&, const GameParams&) = default;
};

Scenario classify_scenario(const GameParams& params);

/// Applies x -> (x - d) / (a - d) to all four payoffs, giving a = 1, d = 0.
/// Mean utility comparisons, and therefore the dynamics, are unchanged.
/// Throws InvalidArgument when a == d.
GameParams normalize_params(const GameParams& params);

/// Parses "a,b,c,d" where each entry is accepted by parse_rational.
GameParams parse_params(std::string_view text);

std::string to_string(const GameParams& params);

}  // namespace eggraph

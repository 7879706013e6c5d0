#include "eggraph/game.hpp"

#include "eggraph/error.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace eggraph {

std::string_view to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::PD: return "PD";
    case Scenario::SH: return "SH";
    case Scenario::HD: return "HD";
    case Scenario::FC: return "FC";
    case Scenario::NonAdmissible: return "NonAdmissible";
  }
  return "NonAdmissible";
}

bool GameParams::admissible() const { return std::min(a, c) > std::max(b, d); }

bool GameParams::generic() const {
  return a != b && a != c && a != d && b != c && b != d && c != d;
}

Scenario classify_scenario(const GameParams& p) {
  if (!p.admissible()) return Scenario::NonAdmissible;
  // Admissibility already gives a > b, a > d, c > b, c > d.
  if (p.c > p.a && p.d > p.b) return Scenario::PD;
  if (p.a > p.c && p.d > p.b) return Scenario::SH;
  if (p.c > p.a && p.b > p.d) return Scenario::HD;
  if (p.a > p.c && p.b > p.d) return Scenario::FC;
  return Scenario::NonAdmissible;
}

GameParams normalize_params(const GameParams& p) {
  if (p.a == p.d) throw InvalidArgument("cannot normalize payoffs with a == d");
  const Rational scale = p.a - p.d;
  auto map = [&](const Rational& x) { return Rational((x - p.d) / scale); };
  return GameParams{map(p.a), map(p.b), map(p.c), map(p.d)};
}

GameParams parse_params(std::string_view text) {
  std::vector<Rational> values;
  while (true) {
    const auto comma = text.find(',');
    values.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (values.size() != 4) {
    throw InvalidArgument("expected four payoffs a,b,c,d, got " + std::to_string(values.size()));
  }
  return GameParams{values[0], values[1], values[2], values[3]};
}

std::string to_string(const GameParams& p) {
  return to_string(p.a) + "," + to_string(p.b) + "," + to_string(p.c) + "," + to_string(p.d);
}

}  // namespace eggraph

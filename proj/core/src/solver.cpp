#include "eggraph/solver.hpp"

#include "eggraph/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace eggraph {
namespace {

Rational R(std::int64_t x) { return make_rational(x); }

// (x * wx + y * wy) / (wx + wy)
Rational mix(const Rational& x, std::int64_t wx, const Rational& y, std::int64_t wy) {
  return Rational((x * wx + y * wy) / Rational(wx + wy));
}

void require_positive(std::initializer_list<std::pair<const char*, std::int64_t>> values) {
  for (const auto& [name, value] : values) {
    if (value < 1) throw InvalidArgument(std::string(name) + " must be a positive integer");
  }
}

void require_generic(const GameParams& params) {
  if (!params.generic()) throw InvalidArgument("solvers need generic (pairwise distinct) payoffs");
}

class Budget {
 public:
  Budget(std::uint64_t cap, const char* what) : cap_(cap), what_(what) {}
  void spend() {
    if (++used_ > cap_) {
      throw BudgetExhausted(std::string(what_) + ": no certified parameters within " +
                            std::to_string(cap_) + " candidates");
    }
  }

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
  const char* what_;
};

void note(const SolverOptions& options, const std::string& message) {
  if (options.log) options.log(message);
}

std::int64_t to_i64(const BigInt& x) {
  if (x > BigInt(std::numeric_limits<std::int64_t>::max())) throw BudgetExhausted("parameter overflow");
  return x.convert_to<std::int64_t>();
}

}  // namespace

bool Certificate::holds() const {
  return std::all_of(inequalities.begin(), inequalities.end(), [](const Inequality& i) { return i.holds(); });
}

std::vector<std::string> Certificate::violated() const {
  std::vector<std::string> out;
  for (const auto& i : inequalities) {
    if (!i.holds()) out.push_back(i.label);
  }
  return out;
}

Rational Certificate::min_residual() const {
  if (inequalities.empty()) return Rational(0);
  Rational best = inequalities.front().residual();
  for (const auto& i : inequalities) best = std::min(best, i.residual());
  return best;
}

const Inequality& Certificate::at(std::string_view label) const {
  for (const auto& i : inequalities) {
    if (i.label == label) return i;
  }
  throw InvalidArgument("certificate has no inequality '" + std::string(label) + "'");
}

Certificate check_fcsh(const GameParams& params, std::int64_t p, std::int64_t q, std::int64_t r,
                       std::int64_t s) {
  const Scenario sc = classify_scenario(params);
  if (sc != Scenario::FC && sc != Scenario::SH) {
    throw ScenarioError("fcsh construction needs FC or SH payoffs, got " + std::string(to_string(sc)));
  }
  if (p < 2) throw InvalidArgument("p must be at least 2");
  require_positive({{"q", q}, {"r", r}, {"s", s}});
  const auto& [a, b, c, d] = params;

  const Rational outer = mix(c, s, d, 1);               // (sc+d)/(s+1)
  const Rational inner = mix(a, 1, b, s);               // (a+sb)/(s+1)
  const Rational ladder_high = mix(a, q + 2, b, r);     // ((q+2)a+rb)/(q+r+2)
  const Rational ladder_low = mix(a, q, b, r + 2);      // (qa+(r+2)b)/(q+r+2)
  const Rational feeler_quiet = mix(c, 2 * p - 3, d, 3);  // ((2p-3)c+3d)/(2p)
  const Rational feeler_full = mix(c, 2 * p - 1, d, 1);   // ((2p-1)c+d)/(2p)
  const Rational front = mix(c, 1, d, q + r - 1);       // (c+(q+r-1)d)/(q+r)

  Certificate cert;
  cert.kind = ConstructionKind::Fcsh;
  cert.params = params;
  cert.structural_params = {{"p", p}, {"q", q}, {"r", r}, {"s", s}};
  cert.inequalities = {
      {"outer-beats-inner", outer, inner},
      {"outer-beats-ladder", outer, ladder_high},
      {"ladder-beats-feeler", ladder_low, feeler_quiet},
      {"ladder-beats-front", ladder_low, front},
      {"feeler-resets-ladder", feeler_full, ladder_high},
  };
  return cert;
}

Certificate check_hdpd(const GameParams& params, std::int64_t p, std::int64_t o, std::int64_t q,
                       std::int64_t r, std::int64_t s) {
  const Scenario sc = classify_scenario(params);
  if (sc != Scenario::HD && sc != Scenario::PD) {
    throw ScenarioError("hdpd construction needs HD or PD payoffs, got " + std::string(to_string(sc)));
  }
  if (p < 2) throw InvalidArgument("p must be at least 2");
  require_positive({{"o", o}, {"q", q}, {"r", r}, {"s", s}});
  const auto& [a, b, c, d] = params;

  const Rational first_rung = mix(a, o - 1, b, 1);    // ((o-1)a+b)/o
  const Rational boundary = mix(a, o, b, 2);          // (oa+2b)/(o+2)
  const Rational front = mix(c, 1, d, o + 1);         // (c+(o+1)d)/(o+2)
  const Rational hub_before = mix(c, (p - 2) * o, d, o + q + 1);
  const Rational hub_reset = mix(c, (p - 1) * o, d, q + 1);
  const Rational guard = mix(c, s, d, r + 1);         // (sc+(r+1)d)/(s+r+1)
  const Rational cooperators = mix(a, o + 1, b, 1);   // ((o+1)a+b)/(o+2)

  Certificate cert;
  cert.kind = ConstructionKind::Hdpd;
  cert.params = params;
  cert.structural_params = {{"p", p}, {"o", o}, {"q", q}, {"r", r}, {"s", s}};
  cert.inequalities = {
      {"front-spreads", std::min(first_rung, boundary), front},
      {"reset-hub-stays-weak", boundary, hub_before},
      {"reset-hub-fires", hub_reset, a},
      {"guard-above-cooperators", guard, cooperators},
      {"guard-below-source", a, guard},
  };
  return cert;
}

Certificate check_tree(const GameParams& params, std::int64_t r, std::int64_t q) {
  const Scenario sc = classify_scenario(params);
  if (sc != Scenario::HD) {
    throw ScenarioError("tree construction needs HD payoffs, got " + std::string(to_string(sc)));
  }
  if (r < 2) throw InvalidArgument("r must be at least 2");
  if (q < 5) throw InvalidArgument("q must be at least 5");
  const auto& [a, b, c, d] = params;

  Certificate cert;
  cert.kind = ConstructionKind::Tree;
  cert.params = params;
  cert.structural_params = {{"r", r}, {"q", q}};
  cert.inequalities = {
      {"cooperator-wins-front", mix(a, 1, b, r), mix(c, 1, d, r)},
      {"defector-wins-front", mix(c, r, d, 1), a},
  };
  cert.flags["outer-cooperators-spread"] = b > mix(c, 1, d, r);
  return cert;
}

FcshSolution solve_fcsh(const GameParams& params, std::int64_t p, const SolverOptions& options) {
  const Scenario sc = classify_scenario(params);
  if (sc != Scenario::FC && sc != Scenario::SH) {
    throw ScenarioError("fcsh construction needs FC or SH payoffs, got " + std::string(to_string(sc)));
  }
  require_generic(params);
  if (p < 2) throw InvalidArgument("p must be at least 2");
  const auto& [a, b, c, d] = params;

  Budget budget(options.max_candidates, "solve_fcsh");
  const Rational feeler_full = mix(c, 2 * p - 1, d, 1);
  const Rational feeler_quiet = mix(c, 2 * p - 3, d, 3);
  const Rational gap = Rational((c - d) / R(p));
  // The ladder's upper bound mixes a and b, so it never drops below b.
  if (b >= feeler_full) {
    throw Infeasible("fcsh inequalities unsatisfiable: b >= ((2p-1)c+d)/(2p) = " + to_string(feeler_full) +
                     " for p = " + std::to_string(p));
  }

  bool escalated = false;
  for (std::int64_t m = 2;; ++m) {
    budget.spend();
    const bool narrow_enough = Rational(R(6) * (a - b) / R(m + 2)) < gap;
    const bool front_low_enough = mix(c, 1, d, m - 1) < feeler_quiet;
    if (!narrow_enough || !front_low_enough) continue;

    for (std::int64_t r = 1; r <= m - 1; ++r) {
      budget.spend();
      const std::int64_t q = m - r;
      const Rational high = mix(a, q + 2, b, r);
      const Rational low = mix(a, q, b, r + 2);
      if (!(feeler_full > high && high > low && low > feeler_quiet)) continue;

      // (sc+d)/(s+1) grows with s toward c; take the first s clearing both bars.
      const BigInt s_inner = floor_plus_one(Rational((a - d) / (c - b)));
      const BigInt s_reset = floor_plus_one(Rational((feeler_full - d) / (c - feeler_full)));
      const std::int64_t s = std::max<std::int64_t>({1, to_i64(s_inner), to_i64(s_reset)});

      Certificate cert = check_fcsh(params, p, q, r, s);
      if (cert.holds()) return FcshSolution{q, r, s, m, escalated, std::move(cert)};
    }
    escalated = true;
    note(options, "solve_fcsh: m = " + std::to_string(m) + " admits no r; escalating");
  }
}

QInterval hdpd_q_interval(const GameParams& params, std::int64_t p, std::int64_t o) {
  const GameParams n = normalize_params(params);
  const Rational& b = n.b;
  const Rational& c = n.c;
  const Rational oo = R(o);
  QInterval out;
  out.upper = Rational(oo * R(p - 1) * (c - 1) - 1);
  const Rational denom = Rational(oo + R(2) * b);
  if (denom > 0) {
    const Slopes slopes = hdpd_slopes(params, p);
    const Rational linear = Rational(R(2 * (p - 1)) * b - R(2 * (p - 2)) * c + 1);
    out.lower = Rational((oo * oo * slopes.lower - oo * linear - R(2) * b) / denom);
  }
  return out;
}

Slopes hdpd_slopes(const GameParams& params, std::int64_t p) {
  const GameParams n = normalize_params(params);
  const Rational& c = n.c;
  return Slopes{Rational(R(1 - p) * (1 - c) - c), Rational(R(p - 1) * (c - 1))};
}

HdpdSolution solve_hdpd(const GameParams& params, std::int64_t p, const SolverOptions& options) {
  const Scenario sc = classify_scenario(params);
  if (sc != Scenario::HD && sc != Scenario::PD) {
    throw ScenarioError("hdpd construction needs HD or PD payoffs, got " + std::string(to_string(sc)));
  }
  require_generic(params);
  if (p < 2) throw InvalidArgument("p must be at least 2");
  const auto& [a, b, c, d] = params;

  Budget budget(options.max_candidates, "solve_hdpd");
  for (std::int64_t o = 1;; ++o) {
    budget.spend();
    const Rational front = mix(c, 1, d, o + 1);
    if (!(std::min(mix(a, o - 1, b, 1), mix(a, o, b, 2)) > front)) continue;

    const QInterval interval = hdpd_q_interval(params, p, o);
    const BigInt q_hi = ceil_minus_one(interval.upper);
    const BigInt q_lo = interval.lower ? std::max(BigInt(1), floor_plus_one(*interval.lower)) : BigInt(1);
    if (q_hi < q_lo) continue;

    const Rational boundary = mix(a, o, b, 2);
    const Rational cooperators = mix(a, o + 1, b, 1);
    for (std::int64_t q = to_i64(q_lo); q <= to_i64(q_hi); ++q) {
      budget.spend();
      if (!(boundary > mix(c, (p - 2) * o, d, o + q + 1))) continue;
      if (!(mix(c, (p - 1) * o, d, q + 1) > a)) continue;

      // The guard's utility (sc+(r+1)d)/(s+r+1) grows with s toward c, so for
      // each r the smallest s above `cooperators` is the only candidate worth
      // testing against the upper bar a. Scan r until r alone exceeds the best total.
      std::int64_t best_r = 0;
      std::int64_t best_s = 0;
      for (std::int64_t r = 1; best_r == 0 || r < best_r + best_s; ++r) {
        budget.spend();
        const BigInt s_min = std::max(
            BigInt(1), floor_plus_one(Rational(R(r + 1) * (cooperators - d) / (c - cooperators))));
        const std::int64_t s = to_i64(s_min);
        if (!(mix(c, s, d, r + 1) < a)) continue;
        if (best_r == 0 || r + s < best_r + best_s) {
          best_r = r;
          best_s = s;
        }
      }

      Certificate cert = check_hdpd(params, p, o, q, best_r, best_s);
      if (cert.holds()) return HdpdSolution{o, q, best_r, best_s, std::move(cert)};
    }
  }
}

TreeSolution solve_tree(const GameParams& params, std::int64_t p0, const SolverOptions& options) {
  const Scenario sc = classify_scenario(params);
  if (sc != Scenario::HD) {
    throw ScenarioError("tree construction needs HD payoffs, got " + std::string(to_string(sc)));
  }
  require_generic(params);
  if (p0 < 1) throw InvalidArgument("p0 must be at least 1");

  const std::int64_t q = std::max<std::int64_t>(5, (p0 + 1) / 2 + 3);
  Budget budget(options.max_candidates, "solve_tree");
  for (std::int64_t r = 2;; ++r) {
    budget.spend();
    Certificate cert = check_tree(params, r, q);
    if (cert.holds()) {
      return TreeSolution{r, q, static_cast<std::size_t>(2 * (q - 3)), std::move(cert)};
    }
  }
}

Rational perturbation_margin(const Certificate& cert) { return Rational(cert.min_residual() / 2); }

}  // namespace eggraph

#include "eggraph/error.hpp"
#include "eggraph/solver.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace eggraph;

namespace {
GameParams P(const char* text) { return parse_params(text); }
Rational R(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

// Weighted average (x*wx + y*wy) / (wx + wy), written out independently.
Rational avg(const Rational& x, std::int64_t wx, const Rational& y, std::int64_t wy) {
  return (x * R(wx) + y * R(wy)) / R(wx + wy);
}

// Direct substitution into the five ladder inequalities.
std::vector<bool> fcsh_by_hand(const GameParams& g, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
  const auto& [a, b, c, d] = g;
  const Rational outer = avg(c, s, d, 1);
  const Rational high = avg(a, q + 2, b, r);
  const Rational low = avg(a, q, b, r + 2);
  return {outer > avg(a, 1, b, s), outer > high, low > avg(c, 2 * p - 3, d, 3),
          low > avg(c, 1, d, q + r - 1), avg(c, 2 * p - 1, d, 1) > high};
}
}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("fcsh certificate for a solved instance re-checks by substitution") {
    const GameParams g = P("1,0.5,0.8,0");
    const FcshSolution sol = solve_fcsh(g, 2);
    CHECK(sol.certificate.holds());
    for (bool ok : fcsh_by_hand(g, 2, sol.q, sol.r, sol.s)) CHECK(ok);
    for (const Inequality& ineq : sol.certificate.inequalities) CHECK(ineq.residual() > 0);
    CHECK(sol.certificate.inequalities.size() == 5);
  }

  TEST_CASE("fcsh failure lists the broken inequalities") {
    const GameParams g = P("1,-1,0.5,0.2");
    const Certificate cert = check_fcsh(g, 3, 1, 1, 1);
    const std::vector<bool> hand = fcsh_by_hand(g, 3, 1, 1, 1);
    const char* labels[] = {"outer-beats-inner", "outer-beats-ladder", "ladder-beats-feeler", "ladder-beats-front",
                            "feeler-resets-ladder"};
    for (int i = 0; i < 5; ++i) CHECK(cert.at(labels[i]).holds() == hand[i]);
    CHECK(cert.at("outer-beats-inner").holds());
    CHECK_FALSE(cert.at("feeler-resets-ladder").holds());
    CHECK_FALSE(cert.holds());
    const std::vector<std::string> broken = cert.violated();
    CHECK(std::find(broken.begin(), broken.end(), "feeler-resets-ladder") != broken.end());
    CHECK_THROWS_AS(cert.at("no-such-label"), InvalidArgument);
  }

  TEST_CASE("fcsh large s satisfies the outer-beats-inner inequality") {
    const GameParams g = P("1,0.5,0.8,0");
    bool held = false;
    for (std::int64_t s = 1; s <= 64; ++s) {
      const bool now = check_fcsh(g, 3, 2, 2, s).at("outer-beats-inner").holds();
      if (held) CHECK(now);
      held = held || now;
    }
    CHECK(held);
  }

  TEST_CASE("fcsh solver output follows the width recipe") {
    for (const char* text : {"1,0.5,0.8,0", "1,0,0.5,0.25", "1,-1,0.5,0.2", "1,0.3,0.9,0.1"}) {
      const GameParams g = P(text);
      for (std::int64_t p = 2; p <= 6; ++p) {
        const FcshSolution sol = solve_fcsh(g, p);
        CHECK(sol.m == sol.q + sol.r);
        CHECK(R(6) * (g.a - g.b) / R(sol.m + 2) < (g.c - g.d) / R(p));
        CHECK(sol.certificate.holds());
        CHECK(check_fcsh(g, p, sol.q, sol.r, sol.s).holds());
      }
    }
    CHECK(solve_fcsh(P("1,0,0.5,0.25"), 5).certificate.holds());
  }

  TEST_CASE("fcsh escalation is logged") {
    std::vector<std::string> notes;
    SolverOptions opts;
    opts.log = [&notes](std::string_view note) { notes.emplace_back(note); };
    const FcshSolution sol = solve_fcsh(P("1,0.5,0.8,0"), 2, opts);
    CHECK(sol.escalated);
    CHECK_FALSE(notes.empty());
  }

  TEST_CASE("fcsh infeasible region is reported") {
    // b above ((2p-1)c+d)/(2p): every ladder average exceeds the feeler.
    CHECK_THROWS_AS(solve_fcsh(P("1,0.9,0.95,0.1"), 3), Infeasible);
    CHECK(solve_fcsh(P("1,0.9,0.95,0.1"), 9).certificate.holds());
  }

  TEST_CASE("solver input validation") {
    CHECK_THROWS_AS(solve_fcsh(P("1,0.45,1.24,0"), 3), ScenarioError);
    CHECK_THROWS_AS(solve_hdpd(P("1,0.5,0.8,0"), 3), ScenarioError);
    CHECK_THROWS_AS(solve_tree(P("1,-0.45,1.35,0"), 3), ScenarioError);
    CHECK_THROWS_AS(solve_fcsh(P("1,0.5,0.8,0"), 1), InvalidArgument);
    CHECK_THROWS_AS(solve_hdpd(P("1,0.45,1.24,0"), 1), InvalidArgument);
    CHECK_THROWS_AS(solve_tree(P("1,0.6,2,0"), 0), InvalidArgument);
    CHECK_THROWS_AS(solve_fcsh(P("1,0.5,0.4,0"), 3), ScenarioError);
    CHECK_THROWS_AS(check_fcsh(P("1,0.45,1.24,0"), 3, 1, 1, 1), ScenarioError);
    CHECK_THROWS_AS(check_hdpd(P("1,0.5,0.8,0"), 3, 1, 1, 1, 1), ScenarioError);
    CHECK_THROWS_AS(check_tree(P("1,-0.45,1.35,0"), 2, 5), ScenarioError);
    SolverOptions tight;
    tight.max_candidates = 2;
    CHECK_THROWS_AS(solve_fcsh(P("1,0.5,0.8,0"), 4, tight), BudgetExhausted);
    CHECK_THROWS_AS(solve_hdpd(P("1,0.45,1.24,0"), 5, tight), BudgetExhausted);
  }

  TEST_CASE("hdpd worked instance") {
    const GameParams g = P("1,0.45,1.24,0");
    const Certificate cert = check_hdpd(g, 5, 4, 2, 1, 6);
    CHECK(cert.holds());
    for (const Inequality& ineq : cert.inequalities) CHECK(ineq.residual() > 0);
    CHECK(cert.inequalities.size() == 5);

    const Certificate big_q = check_hdpd(g, 5, 4, 50, 1, 6);
    CHECK_FALSE(big_q.at("reset-hub-fires").holds());
    // Right side of the reset condition by substitution.
    CHECK(big_q.at("reset-hub-fires").lhs == avg(g.c, 4 * 4, g.d, 51));

    const HdpdSolution sol = solve_hdpd(g, 5);
    CHECK(sol.certificate.holds());
    CHECK(sol.o == 4);
    CHECK(sol.q == 2);
    CHECK(sol.r == 1);
    CHECK(sol.s == 6);
  }

  TEST_CASE("hdpd slopes differ by c") {
    const Slopes sl = hdpd_slopes(P("1,-0.45,1.35,0"), 10);
    CHECK(sl.lower == R(9, 5));
    CHECK(sl.upper == R(63, 20));
    CHECK(sl.upper - sl.lower == R(27, 20));
  }

  TEST_CASE("hdpd solution lies inside the q interval") {
    const GameParams g = P("1,-0.45,1.35,0");
    const HdpdSolution sol = solve_hdpd(g, 10);
    CHECK(sol.certificate.holds());
    const QInterval iv = hdpd_q_interval(g, 10, sol.o);
    CHECK(R(sol.q) < iv.upper);
    if (iv.lower) CHECK(*iv.lower < R(sol.q));
    CHECK(iv.upper == R(sol.o) * R(9) * (g.c - 1) - 1);
  }

  TEST_CASE("hdpd q interval widens with o") {
    const GameParams g = P("1,0.45,1.24,0");
    Rational previous = -1;
    for (std::int64_t o = 4; o <= 40; ++o) {
      const QInterval iv = hdpd_q_interval(g, 5, o);
      REQUIRE(iv.lower.has_value());
      const Rational width = iv.upper - *iv.lower;
      CHECK(width > previous);
      previous = width;
    }
    // Width per o approaches the slope difference c (normalized).
    const QInterval far = hdpd_q_interval(g, 5, 100000);
    const Rational ratio = (far.upper - *far.lower) / R(100000);
    CHECK(abs(ratio - g.c) < R(1, 1000));
  }

  TEST_CASE("hdpd solver over PD and HD quadruples") {
    for (const char* text : {"1,-0.45,1.35,0", "1,-0.2,1.6,0.1", "1,0.45,1.24,0", "1,0.6,2,0"}) {
      for (std::int64_t p = 2; p <= 6; ++p) {
        const GameParams g = P(text);
        const HdpdSolution sol = solve_hdpd(g, p);
        CHECK(check_hdpd(g, p, sol.o, sol.q, sol.r, sol.s).holds());
      }
    }
  }

  TEST_CASE("tree conditions") {
    const GameParams g = P("1,0.6,2,0");
    const Certificate three = check_tree(g, 3, 6);
    CHECK(three.holds());
    CHECK(three.at("cooperator-wins-front").lhs == (1 + 3 * R(3, 5)) / 4);
    CHECK(three.flags.at("outer-cooperators-spread"));
    CHECK_FALSE(check_tree(P("1,0.4,2,0"), 3, 6).flags.at("outer-cooperators-spread"));

    const TreeSolution sol = solve_tree(g, 6);
    CHECK(sol.q == 6);
    CHECK(sol.predicted_period == 6);
    CHECK(sol.r == 2);
    CHECK(sol.certificate.holds());
    CHECK_THROWS_AS(check_tree(g, 1, 6), InvalidArgument);

    const TreeSolution twelve = solve_tree(P("1,0.7,2,0"), 12);
    CHECK(twelve.q == 9);
    CHECK(twelve.predicted_period == 12);
    const TreeSolution one = solve_tree(g, 1);
    CHECK(one.q == 5);
    CHECK(one.predicted_period == 4);
    for (std::int64_t p0 = 1; p0 <= 13; ++p0) {
      const TreeSolution s = solve_tree(g, p0);
      CHECK(static_cast<std::int64_t>(s.predicted_period) >= p0);
      CHECK(s.predicted_period == static_cast<std::size_t>(2 * (s.q - 3)));
    }
  }

  TEST_CASE("solvers are deterministic") {
    const GameParams g = P("1,0.45,1.24,0");
    const HdpdSolution x = solve_hdpd(g, 4);
    const HdpdSolution y = solve_hdpd(g, 4);
    CHECK(x.o == y.o);
    CHECK(x.q == y.q);
    CHECK(x.r == y.r);
    CHECK(x.s == y.s);
  }
}

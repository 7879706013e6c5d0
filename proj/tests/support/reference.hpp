#pragma once
// Naive reference implementation of the imitation rule, written against the
// textbook definition and sharing no code with the library: adjacency matrix
// instead of CSR, hand-rolled int64 fractions instead of Boost rationals.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ref {

struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac() = default;
  Frac(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
};

inline Frac operator+(Frac x, Frac y) {
  const std::int64_t g = std::lcm(x.den, y.den);
  return Frac(x.num * (g / x.den) + y.num * (g / y.den), g);
}
inline Frac operator*(Frac x, std::int64_t k) { return Frac(x.num * k, x.den); }
inline Frac operator/(Frac x, std::int64_t k) { return Frac(x.num, x.den * k); }
inline bool operator<(Frac x, Frac y) {
  __extension__ using Wide = __int128;
  return Wide(x.num) * y.den < Wide(y.num) * x.den;
}
inline bool operator==(Frac x, Frac y) { return x.num == y.num && x.den == y.den; }

struct Payoffs {
  Frac a, b, c, d;
};

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
  Matrix m(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) m[u][v] = m[v][u] = true;
  return m;
}

// u_i = (1/|N(i)|) sum_j [a X_i X_j + b X_i (1-X_j) + c (1-X_i) X_j + d (1-X_i)(1-X_j)]
inline Frac utility(const Matrix& adj, const Payoffs& p, const std::vector<int>& x, int i) {
  Frac sum(0);
  int deg = 0;
  for (int j = 0; j < static_cast<int>(adj.size()); ++j) {
    if (!adj[i][j]) continue;
    ++deg;
    sum = sum + p.a * (x[i] * x[j]) + p.b * (x[i] * (1 - x[j])) + p.c * ((1 - x[i]) * x[j]) +
          p.d * ((1 - x[i]) * (1 - x[j]));
  }
  if (deg == 0) throw std::invalid_argument("isolated vertex");
  return sum / deg;
}

// A_i(x) = { x_k : k in argmax over N(i) + {i} of u_k }; adopt when |A_i| = 1.
inline std::vector<int> step(const Matrix& adj, const Payoffs& p, const std::vector<int>& x) {
  const int n = static_cast<int>(adj.size());
  std::vector<Frac> u(n);
  for (int i = 0; i < n; ++i) u[i] = utility(adj, p, x, i);
  std::vector<int> next = x;
  for (int i = 0; i < n; ++i) {
    Frac best = u[i];
    for (int k = 0; k < n; ++k) {
      if (adj[i][k] && best < u[k]) best = u[k];
    }
    bool saw_c = false;
    bool saw_d = false;
    for (int k = 0; k < n; ++k) {
      if ((k == i || adj[i][k]) && u[k] == best) (x[k] ? saw_c : saw_d) = true;
    }
    if (saw_c != saw_d) next[i] = saw_c ? 1 : 0;
  }
  return next;
}

// First repeat by linear search through the whole history.
struct Cycle {
  std::size_t transient = 0;
  std::size_t period = 0;
};

inline Cycle find_cycle(const Matrix& adj, const Payoffs& p, std::vector<int> x, std::size_t limit) {
  std::vector<std::vector<int>> seen;
  for (std::size_t t = 0; t <= limit; ++t) {
    for (std::size_t s = 0; s < seen.size(); ++s) {
      if (seen[s] == x) return {s, t - s};
    }
    seen.push_back(x);
    x = step(adj, p, x);
  }
  throw std::runtime_error("no cycle within limit");
}

}  // namespace ref

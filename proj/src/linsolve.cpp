#include "kpasep/linsolve.hpp"

#include <map>
#include <stdexcept>

namespace kpasep {

void RateGraph::add(std::size_t x, std::size_t y, const Rational& u) {
  if (x == y || u == 0) return;
  for (auto& [t, r] : out[x]) {
    if (t == y) {
      r += u;
      return;
    }
  }
  out[x].emplace_back(y, u);
}

Rational RateGraph::outflow(std::size_t x) const {
  Rational s = 0;
  for (const auto& [y, u] : out[x]) s += u;
  return s;
}

namespace {

std::vector<char> reach(const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<char> seen(adj.size(), 0);
  if (adj.empty()) return seen;
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

bool strongly_connected(const RateGraph& g) {
  std::vector<std::vector<std::size_t>> fwd(g.size), bwd(g.size);
  for (std::size_t x = 0; x < g.size; ++x) {
    for (const auto& [y, u] : g.out[x]) {
      if (u > 0) {
        fwd[x].push_back(y);
        bwd[y].push_back(x);
      }
    }
  }
  for (const auto& seen : {reach(fwd), reach(bwd)}) {
    for (char c : seen) {
      if (!c) return false;
    }
  }
  return true;
}

std::vector<Rational> stationary_vector(const RateGraph& g) {
  const std::size_t n = g.size;
  if (n == 0) return {};
  if (!strongly_connected(g)) throw std::domain_error("chain is reducible; stationary distribution is not unique");

  // Row y of the system is column y of Q; the last row is replaced by sum pi = 1.
  using Row = std::map<std::size_t, Rational>;
  std::vector<Row> rows(n);
  std::vector<Rational> rhs(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& [y, u] : g.out[x]) {
      rows[y][x] += u;
      rows[x][x] -= u;
    }
  }
  rows[n - 1].clear();
  for (std::size_t x = 0; x < n; ++x) rows[n - 1][x] = 1;
  rhs[n - 1] = 1;
  for (auto& row : rows) std::erase_if(row, [](const auto& kv) { return kv.second == 0; });

  std::vector<char> used(n, 0);
  std::vector<std::size_t> pivot_of(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    // sparsest eligible row keeps fill-in down
    std::size_t best = n;
    for (std::size_t r = 0; r < n; ++r) {
      if (used[r] || !rows[r].contains(col)) continue;
      if (best == n || rows[r].size() < rows[best].size()) best = r;
    }
    if (best == n) throw std::domain_error("singular stationary system");
    used[best] = 1;
    pivot_of[col] = best;
    const Rational inv = Rational(1) / rows[best].at(col);
    for (auto& [c, v] : rows[best]) v *= inv;
    rhs[best] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == best) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      const Rational f = it->second;
      for (const auto& [c, v] : rows[best]) {
        Rational& t = rows[r][c];
        t -= f * v;
        if (t == 0) rows[r].erase(c);
      }
      rhs[r] -= f * rhs[best];
    }
  }
  std::vector<Rational> pi(n);
  for (std::size_t col = 0; col < n; ++col) pi[col] = rhs[pivot_of[col]];
  return pi;
}

bool is_stationary(const RateGraph& g, const std::vector<Rational>& pi) {
  std::vector<Rational> flow(g.size, 0);
  for (std::size_t x = 0; x < g.size; ++x) {
    for (const auto& [y, u] : g.out[x]) {
      flow[y] += pi[x] * u;
      flow[x] -= pi[x] * u;
    }
  }
  for (const auto& f : flow) {
    if (f != 0) return false;
  }
  return true;
}

}  // namespace kpasep

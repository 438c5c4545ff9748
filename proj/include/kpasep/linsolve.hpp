#pragma once

#include "kpasep/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace kpasep {

/// Unnormalized transition rates of a finite chain: out[x] lists (y, u) with
/// y != x and u > 0. The step probability is u / denom; the remainder of each
/// row is a self-loop.
struct RateGraph {
  std::size_t size = 0;
  Rational denom = 1;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> out;

  explicit RateGraph(std::size_t n = 0) : size(n), out(n) {}
  /// Accumulates u onto x -> y; self-loops are ignored.
  void add(std::size_t x, std::size_t y, const Rational& u);
  /// Row sum of outgoing rates.
  Rational outflow(std::size_t x) const;
};

/// True iff the positive-rate digraph is strongly connected.
bool strongly_connected(const RateGraph& g);

/// Exact stationary vector: solves pi Q = 0, sum pi = 1 by sparse rational
/// Gaussian elimination. Throws std::domain_error when the chain is reducible.
std::vector<Rational> stationary_vector(const RateGraph& g);

/// Checks pi Q = 0 term by term (pi need not be normalized).
bool is_stationary(const RateGraph& g, const std::vector<Rational>& pi);

}  // namespace kpasep

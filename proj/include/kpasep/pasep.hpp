#pragma once

#include "kpasep/laurent_poly.hpp"
#include "kpasep/linsolve.hpp"
#include "kpasep/word.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kpasep {

/// a_s counts (r_1, ..., r_{k-1}).
using Sector = std::vector<int>;

/// Rate of a single move, before any parameter values are chosen.
enum class RateKind { one, alpha, beta, q0inf, q0i, qiinf, qij };

struct Move {
  Word target;
  RateKind kind;
  int i = 0;  // species index for q0i / qiinf, heavier species for qij
  int j = 0;  // lighter species for qij
};

/// Swap and boundary rates of the k-species system. Missing entries of the
/// per-species maps fall back to q0inf.
struct RateParams {
  Rational alpha = 1;
  Rational beta = 1;
  Rational q0inf = 1;
  std::map<int, Rational> q0i;
  std::map<int, Rational> qiinf;
  std::map<std::pair<int, int>, Rational> qij;

  /// All swap rates equal to q.
  static RateParams uniform(Rational alpha, Rational beta, Rational q);

  Rational rate(const Move& m) const;
  /// Throws std::invalid_argument unless alpha, beta in (0,1] and swaps in [0,1].
  void validate() const;
};

/// Symbolic rate with a single q (alpha, beta, q, or 1).
LaurentPoly symbolic_rate(const Move& m);

/// All words of length n with exactly r_s letters a_s, in the order
/// d < a_1 < ... < a_{k-1} < e. Throws std::invalid_argument if infeasible.
std::vector<Word> sector_states(int n, int k, const Sector& sector);

/// Every move out of w: adjacent inversions swap at rate 1, the reverse swaps
/// at the matching q, e -> d at site 1 at rate alpha, d -> e at site n at rate beta.
std::vector<Move> moves(const Word& w);

std::vector<std::pair<Word, Rational>> out_transitions(const Word& w, const RateParams& params);

struct ChainSystem {
  std::vector<Word> states;
  RateGraph graph;  // denom = n + 1

  std::size_t index_of(const Word& w) const;

 private:
  friend ChainSystem build_chain(int, int, const Sector&, const RateParams&);
  std::map<std::string, std::size_t> index_;
};

ChainSystem build_chain(int n, int k, const Sector& sector, const RateParams& params);

bool irreducibility_check(const ChainSystem& chain);

/// Exact stationary distribution in state order.
std::vector<std::pair<Word, Rational>> stationary_exact(int n, int k, const Sector& sector, const RateParams& params);

/// Reverses the word and exchanges d and e; maps the 2-species system with
/// (alpha, beta) onto the one with (beta, alpha).
Word reversal_dual(const Word& w);

}  // namespace kpasep

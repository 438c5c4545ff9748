#pragma once

#include "kpasep/execution.hpp"
#include "kpasep/laurent_poly.hpp"
#include "kpasep/linsolve.hpp"
#include "kpasep/rhombic.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kpasep {

/// A tableau class, represented by its filling of the maximal tiling (k = 2).
struct ChainState {
  Word word;
  Filling filling;

  std::string key() const;
};

struct Locus {
  enum Kind { corner, inner_corner, empty_e_strip, empty_d_strip } kind;
  int p = -1;  // left position of the corner pair (0-based)
};

enum class CornerType { alpha, beta, q };

std::string to_string(CornerType c);

/// All equivalent fillings, reached by filling flips.
std::vector<Filling> equivalence_class(const Diagram& d, const Filling& f);

/// Symbol of the corner tile in any equivalent filling that has one, found by
/// searching the flip class.
CornerType classify_corner_by_flips(const Diagram& d, const Filling& f, int p);
/// Read directly off the maximal tiling: de and da corners carry their tile;
/// for an ae corner the e-strip is scanned from the bottom up to the corner
/// tile and the first tile that is not blocked decides.
CornerType classify_corner(const Diagram& d, const Filling& f, int p);

std::vector<Locus> loci(const ChainState& s);

struct Transition {
  ChainState target;
  LaurentPoly rate;  // alpha, beta, q or 1; probability rate / (n+1)
  Locus locus;
  std::optional<CornerType> corner;
};

Transition transition(const ChainState& s, const Locus& locus);
/// Exact weight relation required for this transition, as {num, den} with
/// wt(T) * den == wt(F) * num.
std::pair<LaurentPoly, LaurentPoly> expected_weight_ratio(const ChainState& s, const Locus& locus, std::optional<CornerType> corner);

struct RatChain {
  int n = 0;
  int r = 0;
  std::vector<ChainState> states;
  std::vector<LaurentPoly> weights;
  std::vector<std::vector<Transition>> out;
  std::vector<std::vector<std::size_t>> target_index;  // parallel to out
  std::map<std::string, std::size_t> index;

  std::size_t size() const { return states.size(); }
  /// Numeric rate graph (denominator n+1) at the given parameters.
  RateGraph rate_graph(const Assignment& at) const;
};

RatChain chain(int n, int r, Execution ex = Execution::serial);

struct ProjectionReport {
  bool forward_ok = false;   // every chain move has the PASEP rate of its image
  bool lift_ok = false;      // every PASEP move lifts uniquely from every preimage
  bool row_sums_ok = false;  // per-row sums over each preimage class match
  std::size_t checked_moves = 0;
  std::vector<std::string> problems;
  bool passed() const { return forward_ok && lift_ok && row_sums_ok; }
};

ProjectionReport projection_check(const RatChain& c);

struct Profile {
  int corners_alpha_beta = 0;  // C
  int corners_q = 0;           // C0
  int inner_corners = 0;       // I
  bool empty_e = false;        // delta_R
  bool empty_d = false;        // delta_L
  std::vector<int> d_strip_lengths;
};

Profile profile(const ChainState& s);

struct BalanceReport {
  std::size_t states = 0;
  std::size_t failures = 0;
  std::size_t contract_failures = 0;  // weight relation of a single transition
  std::size_t outflow_failures = 0;   // outflow against the profile expression
  std::vector<std::string> problems;
  bool passed() const { return failures == 0 && contract_failures == 0 && outflow_failures == 0; }
};

/// For every state F: wt(F) * (sum of outgoing rates) equals the sum over
/// predecessors S of wt(S) * rate(S -> F), symbolically.
BalanceReport detailed_balance_check(const RatChain& c);

struct StationaryReport {
  bool solved = false;               // exact solve was run
  bool proportional_to_weight = false;
  bool pushforward_matches = false;  // summed over types equals the PASEP solve
};

/// Exact stationary check at the given parameter values. When solve is false
/// the weight vector is only verified to satisfy pi Q = 0.
StationaryReport stationary_check(const RatChain& c, const Rational& a, const Rational& b, const Rational& q, bool solve);

}  // namespace kpasep

#include "doctest.h"
#include "kpasep/pasep.hpp"

#include <stdexcept>

using namespace kpasep;

namespace {

std::vector<std::string> names(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(to_string(w));
  return out;
}

const RateParams kParams = RateParams::uniform(Rational(1, 2), Rational(1, 3), Rational(1, 5));

}  // namespace

TEST_CASE("sector_states") {
  CHECK(names(sector_states(2, 2, {1})) == std::vector<std::string>{"da", "ad", "ae", "ea"});
  CHECK(sector_states(4, 2, {1}).size() == 32);
  CHECK(names(sector_states(1, 1, {})) == std::vector<std::string>{"d", "e"});
  CHECK(sector_states(4, 3, {1, 1}).size() == 48);
  CHECK_THROWS_AS(sector_states(2, 2, {3}), std::invalid_argument);
  CHECK_THROWS_AS(sector_states(2, 3, {1}), std::invalid_argument);
}

TEST_CASE("out_transitions") {
  RateParams p;
  p.alpha = Rational(1, 2);
  p.beta = Rational(1, 3);
  p.q0inf = Rational(1, 7);
  p.qij[{2, 1}] = Rational(2, 9);

  auto ed = out_transitions(parse_word("ed"), p);
  REQUIRE(ed.size() == 3);
  CHECK(to_string(ed[0].first) == "dd");
  CHECK(ed[0].second == p.alpha);
  CHECK(to_string(ed[1].first) == "de");
  CHECK(ed[1].second == p.q0inf);
  CHECK(to_string(ed[2].first) == "ee");
  CHECK(ed[2].second == p.beta);

  auto de = out_transitions(parse_word("de"), p);
  REQUIRE(de.size() == 1);
  CHECK(to_string(de[0].first) == "ed");
  CHECK(de[0].second == 1);

  auto a12 = out_transitions(parse_word("a1a2"), p);
  REQUIRE(a12.size() == 1);
  CHECK(to_string(a12[0].first) == "a2a1");
  CHECK(a12[0].second == Rational(2, 9));
  auto a21 = out_transitions(parse_word("a2a1"), p);
  REQUIRE(a21.size() == 1);
  CHECK(a21[0].second == 1);
}

TEST_CASE("sector conservation and stochasticity") {
  for (const auto& w : sector_states(5, 3, {1, 2})) {
    Rational total = 0;
    for (const auto& [t, u] : out_transitions(w, kParams)) {
      CHECK(sector_of(t, 3) == std::vector<int>{1, 2});
      total += u;
    }
    CHECK(total <= 6);
  }
}

TEST_CASE("stationary_exact small cases") {
  SUBCASE("k=1 n=1 two-state balance") {
    auto pi = stationary_exact(1, 1, {}, kParams);
    const Rational a(1, 2), b(1, 3);
    CHECK(pi[0].second == a / (a + b));
    CHECK(pi[1].second == b / (a + b));
  }
  SUBCASE("k=1 n=2 against an independent solve") {
    auto pi = stationary_exact(2, 1, {}, kParams);
    REQUIRE(pi.size() == 4);
    CHECK(to_string(pi[0].first) == "dd");
    CHECK(pi[0].second == Rational(5, 14));
    CHECK(pi[1].second == Rational(31, 126));
    CHECK(pi[2].second == Rational(5, 21));
    CHECK(pi[3].second == Rational(10, 63));
  }
  SUBCASE("normalization and stationarity") {
    const RateParams ones = RateParams::uniform(1, 1, 1);
    const ChainSystem c = build_chain(2, 2, {1}, ones);
    const auto pi = stationary_vector(c.graph);
    Rational s = 0;
    for (const auto& x : pi) s += x;
    CHECK(s == 1);
    CHECK(is_stationary(c.graph, pi));
  }
}

TEST_CASE("irreducibility") {
  CHECK(irreducibility_check(build_chain(2, 1, {}, RateParams::uniform(Rational(1, 2), Rational(1, 2), 0))));
  CHECK(irreducibility_check(build_chain(1, 2, {1}, kParams)));
  CHECK(irreducibility_check(build_chain(3, 2, {1}, RateParams::uniform(Rational(1, 2), Rational(1, 2), 1))));
  // TASEP with an a-particle: a cannot pass back to the left, but d can push it, so still irreducible
  CHECK(irreducibility_check(build_chain(3, 2, {1}, RateParams::uniform(1, 1, 0))));
  RateGraph g(2);
  g.add(0, 1, 1);
  CHECK_FALSE(strongly_connected(g));
  CHECK_THROWS_AS(stationary_vector(g), std::domain_error);
}

TEST_CASE("distinct swap rates give a valid stationary vector") {
  RateParams p = RateParams::uniform(Rational(1, 2), Rational(2, 3), Rational(1, 4));
  p.q0i[1] = Rational(1, 3);
  p.q0i[2] = Rational(1, 5);
  p.qiinf[1] = Rational(3, 7);
  p.qij[{2, 1}] = Rational(1, 6);
  p.validate();
  const ChainSystem c = build_chain(4, 3, {1, 1}, p);
  CHECK(is_stationary(c.graph, stationary_vector(c.graph)));
  p.alpha = 2;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("reversal symmetry for two species") {
  const RateParams swapped = RateParams::uniform(Rational(1, 3), Rational(1, 2), Rational(1, 5));
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}}) {
    const auto pi = stationary_exact(n, 2, {r}, kParams);
    const ChainSystem dual = build_chain(n, 2, {r}, swapped);
    const auto rho = stationary_vector(dual.graph);
    for (const auto& [w, p] : pi) CHECK(rho[dual.index_of(reversal_dual(w))] == p);
  }
}

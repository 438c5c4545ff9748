#include "doctest.h"
#include "kpasep/ansatz.hpp"
#include "kpasep/rhombic.hpp"

using namespace kpasep;

namespace {

Assignment values(const RateParams& p) {
  Assignment a;
  a.set(Var::alpha, p.alpha).set(Var::beta, p.beta).set(Var::q, p.q0inf);
  return a;
}

void check_sector(int n, int k, const Sector& sector, const RateParams& p) {
  const auto pi = stationary_exact(n, k, sector, p);
  const Assignment at = values(p);
  const Rational z = Z(n, k, sector).eval(at);
  const Rational zb = Z_partition(n, k, sector).eval(at);
  for (const auto& [w, prob] : pi) {
    CHECK(weight(w, k).eval(at) / z == prob);
    CHECK(bracket(w, k).eval(at) / zb == prob);
  }
}

}  // namespace

TEST_CASE("tableau weights give the stationary distribution") {
  const RateParams p = RateParams::uniform(Rational(1, 2), Rational(1, 3), Rational(1, 5));
  check_sector(3, 1, {}, p);
  check_sector(3, 2, {1}, p);
  check_sector(4, 2, {2}, RateParams::uniform(Rational(3, 4), Rational(1, 7), Rational(2, 3)));
  check_sector(4, 3, {1, 1}, p);
  check_sector(3, 4, {1, 0, 1}, p);
}

#include "kpasep/pasep.hpp"

#include <numeric>
#include <stdexcept>

namespace kpasep {

RateParams RateParams::uniform(Rational alpha, Rational beta, Rational q) {
  RateParams p;
  p.alpha = std::move(alpha);
  p.beta = std::move(beta);
  p.q0inf = std::move(q);
  return p;
}

Rational RateParams::rate(const Move& m) const {
  auto lookup = [this](const auto& table, const auto& key) {
    auto it = table.find(key);
    return it == table.end() ? q0inf : it->second;
  };
  switch (m.kind) {
    case RateKind::one: return 1;
    case RateKind::alpha: return alpha;
    case RateKind::beta: return beta;
    case RateKind::q0inf: return q0inf;
    case RateKind::q0i: return lookup(q0i, m.i);
    case RateKind::qiinf: return lookup(qiinf, m.i);
    case RateKind::qij: return lookup(qij, std::make_pair(m.i, m.j));
  }
  return 0;
}

void RateParams::validate() const {
  auto in01 = [](const Rational& r) { return r >= 0 && r <= 1; };
  if (alpha <= 0 || alpha > 1) throw std::invalid_argument("alpha must lie in (0,1]");
  if (beta <= 0 || beta > 1) throw std::invalid_argument("beta must lie in (0,1]");
  if (!in01(q0inf)) throw std::invalid_argument("q0inf must lie in [0,1]");
  for (const auto& [s, r] : q0i) {
    if (!in01(r)) throw std::invalid_argument("q0" + std::to_string(s) + " must lie in [0,1]");
  }
  for (const auto& [s, r] : qiinf) {
    if (!in01(r)) throw std::invalid_argument("q" + std::to_string(s) + "inf must lie in [0,1]");
  }
  for (const auto& [ij, r] : qij) {
    if (ij.first <= ij.second) throw std::invalid_argument("qij requires i > j");
    if (!in01(r)) throw std::invalid_argument("qij must lie in [0,1]");
  }
}

LaurentPoly symbolic_rate(const Move& m) {
  switch (m.kind) {
    case RateKind::one: return 1;
    case RateKind::alpha: return alpha();
    case RateKind::beta: return beta();
    default: return qvar();
  }
}

std::vector<Word> sector_states(int n, int k, const Sector& sector) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (k < 1 || k - 1 > Letter::kMaxSpecies) throw std::invalid_argument("k out of range");
  if (static_cast<int>(sector.size()) != k - 1) throw std::invalid_argument("sector must have k-1 entries");
  int total = 0;
  for (int r : sector) {
    if (r < 0) throw std::invalid_argument("negative sector entry");
    total += r;
  }
  if (total > n) throw std::invalid_argument("sector infeasible: more a-particles than sites");

  std::vector<Word> out;
  Word cur;
  std::vector<int> left = sector;
  int free_left = n - total;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    if (free_left > 0) {
      --free_left;
      cur.push_back(Letter::d());
      self(self);
      cur.pop_back();
      ++free_left;
    }
    for (int s = 1; s <= k - 1; ++s) {
      if (left[static_cast<std::size_t>(s - 1)] == 0) continue;
      --left[static_cast<std::size_t>(s - 1)];
      cur.push_back(Letter::a(s));
      self(self);
      cur.pop_back();
      ++left[static_cast<std::size_t>(s - 1)];
    }
    if (free_left > 0) {
      --free_left;
      cur.push_back(Letter::e());
      self(self);
      cur.pop_back();
      ++free_left;
    }
  };
  rec(rec);
  return out;
}

namespace {

// Rate of moving the heavier letter x back to the left of the lighter y.
Move reverse_move(Word target, Letter heavy, Letter light) {
  if (heavy.is_d() && light.is_e()) return {std::move(target), RateKind::q0inf};
  if (heavy.is_d()) return {std::move(target), RateKind::q0i, light.species()};
  if (light.is_e()) return {std::move(target), RateKind::qiinf, heavy.species()};
  return {std::move(target), RateKind::qij, heavy.species(), light.species()};
}

}  // namespace

std::vector<Move> moves(const Word& w) {
  std::vector<Move> out;
  const std::size_t n = w.size();
  if (w.front().is_e()) {
    Word t = w;
    t.front() = Letter::d();
    out.push_back({std::move(t), RateKind::alpha});
  }
  for (std::size_t p = 0; p + 1 < n; ++p) {
    const Letter x = w[p], y = w[p + 1];
    if (x.rank() == y.rank()) continue;
    Word t = w;
    std::swap(t[p], t[p + 1]);
    if (x.rank() > y.rank()) {
      out.push_back({std::move(t), RateKind::one});
    } else {
      out.push_back(reverse_move(std::move(t), y, x));
    }
  }
  if (w.back().is_d()) {
    Word t = w;
    t.back() = Letter::e();
    out.push_back({std::move(t), RateKind::beta});
  }
  return out;
}

std::vector<std::pair<Word, Rational>> out_transitions(const Word& w, const RateParams& params) {
  std::vector<std::pair<Word, Rational>> out;
  for (auto& m : moves(w)) {
    Rational r = params.rate(m);
    out.emplace_back(std::move(m.target), std::move(r));
  }
  return out;
}

std::size_t ChainSystem::index_of(const Word& w) const {
  auto it = index_.find(to_string(w));
  if (it == index_.end()) throw std::out_of_range("word not in chain: " + to_string(w));
  return it->second;
}

ChainSystem build_chain(int n, int k, const Sector& sector, const RateParams& params) {
  ChainSystem c;
  c.states = sector_states(n, k, sector);
  for (std::size_t i = 0; i < c.states.size(); ++i) c.index_.emplace(to_string(c.states[i]), i);
  c.graph = RateGraph(c.states.size());
  c.graph.denom = n + 1;
  for (std::size_t x = 0; x < c.states.size(); ++x) {
    for (const auto& [t, u] : out_transitions(c.states[x], params)) c.graph.add(x, c.index_of(t), u);
    if (c.graph.outflow(x) > c.graph.denom) throw std::logic_error("row is not stochastic: rates exceed n+1");
  }
  return c;
}

bool irreducibility_check(const ChainSystem& chain) { return strongly_connected(chain.graph); }

std::vector<std::pair<Word, Rational>> stationary_exact(int n, int k, const Sector& sector, const RateParams& params) {
  const ChainSystem c = build_chain(n, k, sector, params);
  const auto pi = stationary_vector(c.graph);
  std::vector<std::pair<Word, Rational>> out;
  out.reserve(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) out.emplace_back(c.states[i], pi[i]);
  return out;
}

Word reversal_dual(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& l : r) {
    if (l.is_d()) {
      l = Letter::e();
    } else if (l.is_e()) {
      l = Letter::d();
    }
  }
  return r;
}

}  // namespace kpasep

#include "kpasep/ratchain.hpp"

#include <algorithm>
#include <exception>
#include <queue>
#include <set>
#include <stdexcept>

namespace kpasep {

std::string ChainState::key() const {
  std::string s = to_string(word) + ":";
  for (Symbol x : filling.sym) s += x == Symbol::alpha ? 'a' : (x == Symbol::beta ? 'b' : '.');
  return s;
}

std::string to_string(CornerType c) {
  switch (c) {
    case CornerType::alpha: return "alpha";
    case CornerType::beta: return "beta";
    case CornerType::q: return "q";
  }
  return "?";
}

std::vector<Filling> equivalence_class(const Diagram& d, const Filling& f) {
  std::set<Filling> seen{f};
  std::queue<Filling> todo;
  todo.push(f);
  while (!todo.empty()) {
    const Filling cur = todo.front();
    todo.pop();
    for (const auto& h : hexagons(d, cur.tiling)) {
      Filling nb = filling_flip(d, cur, h);
      if (seen.insert(nb).second) todo.push(std::move(nb));
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

bool is_corner(const Word& w, int p) {
  return p >= 0 && p + 1 < static_cast<int>(w.size()) &&
         w[static_cast<std::size_t>(p)].rank() > w[static_cast<std::size_t>(p + 1)].rank();
}

bool has_corner_tile(const Filling& f, int p) {
  const auto& sx = f.tiling.seq[static_cast<std::size_t>(p)];
  const auto& sy = f.tiling.seq[static_cast<std::size_t>(p + 1)];
  return !sx.empty() && !sy.empty() && sx.front() == p + 1 && sy.front() == p;
}

CornerType corner_symbol(const Diagram& d, const Filling& f, int p) {
  const auto st = statuses(d, f)[static_cast<std::size_t>(d.tile_id(p, p + 1))];
  switch (st) {
    case TileStatus::alpha: return CornerType::alpha;
    case TileStatus::beta: return CornerType::beta;
    case TileStatus::free_q: return CornerType::q;
    case TileStatus::forced_empty: break;
  }
  throw std::logic_error("a corner tile cannot be blocked");
}

// An equivalent filling with a tile at the corner, nearest in flips.
std::pair<Filling, CornerType> corner_representative(const Diagram& d, const Filling& f, int p) {
  if (!is_corner(d.word(), p)) throw std::invalid_argument("not a corner");
  if (has_corner_tile(f, p)) return {f, corner_symbol(d, f, p)};
  std::set<Filling> seen{f};
  std::queue<Filling> todo;
  todo.push(f);
  while (!todo.empty()) {
    const Filling cur = todo.front();
    todo.pop();
    for (const auto& h : hexagons(d, cur.tiling)) {
      Filling nb = filling_flip(d, cur, h);
      if (!seen.insert(nb).second) continue;
      if (has_corner_tile(nb, p)) return {nb, corner_symbol(d, nb, p)};
      todo.push(std::move(nb));
    }
  }
  throw std::logic_error("no equivalent filling has a tile at this corner");
}

}  // namespace

CornerType classify_corner_by_flips(const Diagram& d, const Filling& f, int p) {
  const CornerType first = corner_representative(d, f, p).second;
  // the content must not depend on which representative is used
  for (const auto& g : equivalence_class(d, f)) {
    if (has_corner_tile(g, p) && corner_symbol(d, g, p) != first) {
      throw std::logic_error("corner content differs between equivalent fillings");
    }
  }
  return first;
}

CornerType classify_corner(const Diagram& d, const Filling& f, int p) {
  if (!is_corner(d.word(), p)) throw std::invalid_argument("not a corner");
  if (has_corner_tile(f, p)) return corner_symbol(d, f, p);
  if (!d.word()[static_cast<std::size_t>(p + 1)].is_e()) {
    throw std::invalid_argument("expected the maximal tiling");
  }
  const auto st = statuses(d, f);
  for (int z : f.tiling.seq[static_cast<std::size_t>(p + 1)]) {
    const TileStatus s = st[static_cast<std::size_t>(d.tile_id(z, p + 1))];
    if (s == TileStatus::forced_empty) continue;
    return s == TileStatus::alpha ? CornerType::alpha : CornerType::q;
  }
  throw std::logic_error("corner stack has no deciding tile");
}

std::vector<Locus> loci(const ChainState& s) {
  const Word& w = s.word;
  const int n = static_cast<int>(w.size());
  std::vector<Locus> out;
  if (w.front().is_e()) out.push_back({Locus::empty_e_strip});
  for (int p = 0; p + 1 < n; ++p) {
    const int a = w[static_cast<std::size_t>(p)].rank(), b = w[static_cast<std::size_t>(p + 1)].rank();
    if (a > b) out.push_back({Locus::corner, p});
    if (a < b) out.push_back({Locus::inner_corner, p});
  }
  if (w.back().is_d()) out.push_back({Locus::empty_d_strip});
  return out;
}

namespace {

// Mutable pseudoline arrangement with stable line ids, used to cut and paste
// strips before turning the result back into a filling.
struct Arrangement {
  std::vector<Letter> letter;
  std::vector<int> order;
  std::vector<std::vector<int>> seq;
  std::map<std::pair<int, int>, Symbol> sym;

  static std::pair<int, int> key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

  static Arrangement from(const Diagram& d, const Filling& f) {
    Arrangement a;
    a.letter = d.word();
    for (int i = 0; i < d.n(); ++i) a.order.push_back(i);
    a.seq = f.tiling.seq;
    for (std::size_t id = 0; id < d.tiles().size(); ++id) {
      if (f.sym[id] != Symbol::none) a.sym[key(d.tiles()[id].p, d.tiles()[id].pp)] = f.sym[id];
    }
    return a;
  }

  int add_line(Letter l) {
    letter.push_back(l);
    seq.emplace_back();
    return static_cast<int>(letter.size()) - 1;
  }

  void remove_line(int id) {
    order.erase(std::find(order.begin(), order.end(), id));
    for (int y : seq[static_cast<std::size_t>(id)]) {
      auto& s = seq[static_cast<std::size_t>(y)];
      s.erase(std::find(s.begin(), s.end(), id));
      sym.erase(key(id, y));
    }
    seq[static_cast<std::size_t>(id)].clear();
  }

  void insert_after(int line, int anchor, int added) {
    auto& s = seq[static_cast<std::size_t>(line)];
    s.insert(std::find(s.begin(), s.end(), anchor) + 1, added);
  }

  // New d-line at order index s: it first crosses the e/a run starting at s,
  // then follows the next d-line. Its right-most tile gets the beta.
  void insert_d_line(std::size_t s) {
    const int nl = add_line(Letter::d());
    std::vector<int> group;
    std::size_t i = s;
    while (i < order.size() && !letter[static_cast<std::size_t>(order[i])].is_d()) group.push_back(order[i++]);
    std::vector<int> path = group;
    if (i < order.size()) {
      const int next = order[i];
      for (int y : seq[static_cast<std::size_t>(next)]) {
        path.push_back(y);
        insert_after(y, next, nl);
      }
    }
    for (int y : group) {
      auto& sy = seq[static_cast<std::size_t>(y)];
      sy.insert(sy.begin(), nl);
    }
    seq[static_cast<std::size_t>(nl)] = path;
    order.insert(order.begin() + static_cast<long>(s), nl);
    if (!path.empty()) sym[key(nl, path.front())] = Symbol::beta;
  }

  // Mirror image: new e-line at order index s crossing the d/a run ending at
  // s-1, then following the previous e-line. Its bottom tile gets the alpha.
  void insert_e_line(std::size_t s) {
    const int nl = add_line(Letter::e());
    std::vector<int> group;
    long i = static_cast<long>(s) - 1;
    while (i >= 0 && !letter[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])].is_e()) {
      group.push_back(order[static_cast<std::size_t>(i--)]);
    }
    std::vector<int> path = group;
    if (i >= 0) {
      const int prev = order[static_cast<std::size_t>(i)];
      for (int y : seq[static_cast<std::size_t>(prev)]) {
        path.push_back(y);
        insert_after(y, prev, nl);
      }
    }
    for (int y : group) {
      auto& sy = seq[static_cast<std::size_t>(y)];
      sy.insert(sy.begin(), nl);
    }
    seq[static_cast<std::size_t>(nl)] = path;
    order.insert(order.begin() + static_cast<long>(s), nl);
    if (!path.empty()) sym[key(nl, path.front())] = Symbol::alpha;
  }

  std::pair<Diagram, Filling> realize() const {
    Word w;
    std::vector<int> pos(letter.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
      w.push_back(letter[static_cast<std::size_t>(order[i])]);
      pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    }
    Diagram d(w, 2);
    Filling f;
    f.tiling.seq.resize(order.size());
    for (int id : order) {
      for (int y : seq[static_cast<std::size_t>(id)]) {
        f.tiling.seq[static_cast<std::size_t>(pos[static_cast<std::size_t>(id)])].push_back(pos[static_cast<std::size_t>(y)]);
      }
    }
    f.sym.assign(d.tiles().size(), Symbol::none);
    for (const auto& [k, v] : sym) {
      const int id = d.tile_id(pos[static_cast<std::size_t>(k.first)], pos[static_cast<std::size_t>(k.second)]);
      if (id < 0) throw std::logic_error("symbol on a pair that does not cross");
      f.sym[static_cast<std::size_t>(id)] = v;
    }
    return {std::move(d), std::move(f)};
  }
};

ChainState finish(const Arrangement& a) {
  auto [d, f] = a.realize();
  if (!is_valid(d, f.tiling)) throw std::logic_error("transition produced an invalid tiling");
  if (!is_valid_filling(d, f)) throw std::logic_error("transition produced an invalid filling");
  Filling c = canonicalize(d, f);
  return {d.word(), std::move(c)};
}

}  // namespace

Transition transition(const ChainState& s, const Locus& locus) {
  const Diagram d(s.word, 2);
  const Word& w = s.word;
  const int n = static_cast<int>(w.size());
  Transition t{{}, LaurentPoly(1), locus, std::nullopt};
  switch (locus.kind) {
    case Locus::empty_e_strip: {
      if (!w.front().is_e()) throw std::invalid_argument("no empty e-strip");
      Arrangement a = Arrangement::from(d, s.filling);
      a.remove_line(a.order.front());
      std::size_t at = 0;
      while (at < a.order.size() && a.letter[static_cast<std::size_t>(a.order[at])].is_d()) ++at;
      a.insert_d_line(at);
      t.target = finish(a);
      t.rate = alpha();
      break;
    }
    case Locus::empty_d_strip: {
      if (!w.back().is_d()) throw std::invalid_argument("no empty d-strip");
      Arrangement a = Arrangement::from(d, s.filling);
      a.remove_line(a.order.back());
      std::size_t at = a.order.size();
      while (at > 0 && a.letter[static_cast<std::size_t>(a.order[at - 1])].is_e()) --at;
      a.insert_e_line(at);
      t.target = finish(a);
      t.rate = beta();
      break;
    }
    case Locus::inner_corner: {
      const int p = locus.p;
      if (p < 0 || p + 1 >= n || w[static_cast<std::size_t>(p)].rank() >= w[static_cast<std::size_t>(p + 1)].rank()) {
        throw std::invalid_argument("not an inner corner");
      }
      Arrangement a = Arrangement::from(d, s.filling);
      const int x = a.order[static_cast<std::size_t>(p)], y = a.order[static_cast<std::size_t>(p + 1)];
      std::swap(a.order[static_cast<std::size_t>(p)], a.order[static_cast<std::size_t>(p + 1)]);
      a.seq[static_cast<std::size_t>(x)].insert(a.seq[static_cast<std::size_t>(x)].begin(), y);
      a.seq[static_cast<std::size_t>(y)].insert(a.seq[static_cast<std::size_t>(y)].begin(), x);
      t.target = finish(a);
      t.rate = qvar();
      break;
    }
    case Locus::corner: {
      const int p = locus.p;
      auto [rep, kind] = corner_representative(d, s.filling, p);
      t.corner = kind;
      Arrangement a = Arrangement::from(d, rep);
      const int x = a.order[static_cast<std::size_t>(p)], y = a.order[static_cast<std::size_t>(p + 1)];
      if (kind == CornerType::q) {
        a.seq[static_cast<std::size_t>(x)].erase(a.seq[static_cast<std::size_t>(x)].begin());
        a.seq[static_cast<std::size_t>(y)].erase(a.seq[static_cast<std::size_t>(y)].begin());
        std::swap(a.order[static_cast<std::size_t>(p)], a.order[static_cast<std::size_t>(p + 1)]);
      } else if (kind == CornerType::beta) {
        // compress the d-strip of x, blow up a d-path after y and the d's that follow it
        a.remove_line(x);
        std::size_t at = static_cast<std::size_t>(p) + 1;
        while (at < a.order.size() && a.letter[static_cast<std::size_t>(a.order[at])].is_d()) ++at;
        a.insert_d_line(at);
      } else {
        // compress the e-strip of y, blow up an e-path before x and the e's preceding it
        a.remove_line(y);
        std::size_t at = static_cast<std::size_t>(p);
        while (at > 0 && a.letter[static_cast<std::size_t>(a.order[at - 1])].is_e()) --at;
        a.insert_e_line(at);
      }
      t.target = finish(a);
      t.rate = LaurentPoly(1);
      break;
    }
  }
  return t;
}

std::pair<LaurentPoly, LaurentPoly> expected_weight_ratio(const ChainState& s, const Locus& locus, std::optional<CornerType> corner) {
  const Word& w = s.word;
  const int n = static_cast<int>(w.size());
  const LaurentPoly ia = LaurentPoly::variable(Var::alpha, -1), ib = LaurentPoly::variable(Var::beta, -1);
  const LaurentPoly one(1);
  switch (locus.kind) {
    case Locus::empty_e_strip:
      // e d^{n-1}: the new d-strip is empty
      return {count_d(w) == n - 1 ? alpha() * ib : alpha(), one};
    case Locus::empty_d_strip:
      return {count_e(w) == n - 1 ? beta() * ia : beta(), one};
    case Locus::inner_corner: return {qvar(), one};
    case Locus::corner: break;
  }
  const int p = locus.p;
  if (*corner == CornerType::q) return {one, qvar()};
  int strip = 0;
  if (*corner == CornerType::beta) {
    for (int i = p + 1; i < n; ++i) strip += !w[static_cast<std::size_t>(i)].is_d();
    return {strip == 1 ? ib : one, one};
  }
  for (int i = 0; i <= p; ++i) strip += !w[static_cast<std::size_t>(i)].is_e();
  return {strip == 1 ? ia : one, one};
}

RateGraph RatChain::rate_graph(const Assignment& at) const {
  RateGraph g(states.size());
  g.denom = n + 1;
  for (std::size_t x = 0; x < states.size(); ++x) {
    for (std::size_t i = 0; i < out[x].size(); ++i) g.add(x, target_index[x][i], out[x][i].rate.eval(at));
  }
  return g;
}

RatChain chain(int n, int r, Execution ex) {
  RatChain c;
  c.n = n;
  c.r = r;
  for (const auto& w : sector_states(n, 2, {r})) {
    const Diagram d(w, 2);
    for (auto& f : enumerate_fillings(d)) {
      ChainState s{w, std::move(f)};
      c.index.emplace(s.key(), c.states.size());
      c.weights.push_back(wt(d, s.filling));
      c.states.push_back(std::move(s));
    }
  }
  const long count = static_cast<long>(c.states.size());
  c.out.resize(c.states.size());
  c.target_index.resize(c.states.size());
  std::vector<std::exception_ptr> errors(c.states.size());
  auto build = [&](long i) {
    const auto x = static_cast<std::size_t>(i);
    try {
      for (const auto& l : loci(c.states[x])) {
        Transition t = transition(c.states[x], l);
        c.target_index[x].push_back(c.index.at(t.target.key()));
        c.out[x].push_back(std::move(t));
      }
    } catch (...) {
      errors[x] = std::current_exception();
    }
  };
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) build(i);
  } else {
    for (long i = 0; i < count; ++i) build(i);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return c;
}

ProjectionReport projection_check(const RatChain& c) {
  ProjectionReport rep;
  rep.forward_ok = rep.lift_ok = rep.row_sums_ok = true;
  auto problem = [&](bool& flag, std::string msg) {
    flag = false;
    if (rep.problems.size() < 20) rep.problems.push_back(std::move(msg));
  };
  for (std::size_t x = 0; x < c.size(); ++x) {
    const Word& y1 = c.states[x].word;
    std::map<std::string, LaurentPoly> pasep;  // image word -> rate
    for (const auto& m : moves(y1)) pasep[to_string(m.target)] += symbolic_rate(m);
    std::map<std::size_t, LaurentPoly> agg;
    for (std::size_t i = 0; i < c.out[x].size(); ++i) agg[c.target_index[x][i]] += c.out[x][i].rate;

    LaurentPoly rat_sum, pasep_sum;
    std::map<std::string, int> lifts;
    for (const auto& [t, rate] : agg) {
      ++rep.checked_moves;
      rat_sum += rate;
      const std::string img = to_string(c.states[t].word);
      ++lifts[img];
      auto it = pasep.find(img);
      if (it == pasep.end() || it->second != rate) {
        problem(rep.forward_ok, c.states[x].key() + " -> " + c.states[t].key() + " has no matching PASEP move");
      }
    }
    for (const auto& [img, rate] : pasep) {
      pasep_sum += rate;
      if (lifts[img] != 1) {
        problem(rep.lift_ok, c.states[x].key() + ": move to " + img + " lifts " + std::to_string(lifts[img]) + " times");
      }
    }
    if (rat_sum != pasep_sum) problem(rep.row_sums_ok, c.states[x].key() + ": row sums differ");
  }
  return rep;
}

Profile profile(const ChainState& s) {
  Profile pr;
  const Diagram d(s.word, 2);
  const Word& w = s.word;
  for (const auto& l : loci(s)) {
    switch (l.kind) {
      case Locus::corner:
        if (classify_corner(d, s.filling, l.p) == CornerType::q) {
          ++pr.corners_q;
        } else {
          ++pr.corners_alpha_beta;
        }
        break;
      case Locus::inner_corner: ++pr.inner_corners; break;
      case Locus::empty_e_strip: pr.empty_e = true; break;
      case Locus::empty_d_strip: pr.empty_d = true; break;
    }
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_d()) continue;
    int len = 0;
    for (std::size_t j = i + 1; j < w.size(); ++j) len += !w[j].is_d();
    pr.d_strip_lengths.push_back(len);
  }
  return pr;
}

BalanceReport detailed_balance_check(const RatChain& c) {
  BalanceReport rep;
  rep.states = c.size();
  std::vector<LaurentPoly> inflow(c.size());
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (std::size_t i = 0; i < c.out[x].size(); ++i) {
      const auto& t = c.out[x][i];
      const std::size_t y = c.target_index[x][i];
      inflow[y] += c.weights[x] * t.rate;
      const auto [num, den] = expected_weight_ratio(c.states[x], t.locus, t.corner);
      if (c.weights[y] * den != c.weights[x] * num) {
        ++rep.contract_failures;
        if (rep.problems.size() < 20) rep.problems.push_back("weight contract: " + c.states[x].key() + " -> " + c.states[y].key());
      }
    }
  }
  for (std::size_t x = 0; x < c.size(); ++x) {
    LaurentPoly rates;
    for (const auto& t : c.out[x]) rates += t.rate;
    const Profile pr = profile(c.states[x]);
    LaurentPoly expected = LaurentPoly(pr.corners_alpha_beta + pr.corners_q) + LaurentPoly(pr.inner_corners) * qvar();
    if (pr.empty_e) expected += alpha();
    if (pr.empty_d) expected += beta();
    if (expected != rates) {
      ++rep.outflow_failures;
      if (rep.problems.size() < 20) rep.problems.push_back("outflow: " + c.states[x].key());
    }
    if (c.weights[x] * rates != inflow[x]) {
      ++rep.failures;
      if (rep.problems.size() < 20) rep.problems.push_back("balance: " + c.states[x].key());
    }
  }
  return rep;
}

StationaryReport stationary_check(const RatChain& c, const Rational& a, const Rational& b, const Rational& q, bool solve) {
  StationaryReport rep;
  Assignment at;
  at.set(Var::alpha, a).set(Var::beta, b).set(Var::q, q);
  const RateGraph g = c.rate_graph(at);
  std::vector<Rational> w(c.size());
  Rational total = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    w[i] = c.weights[i].eval(at);
    total += w[i];
  }
  for (auto& x : w) x /= total;
  if (solve) {
    rep.solved = true;
    rep.proportional_to_weight = stationary_vector(g) == w;
  } else {
    rep.proportional_to_weight = strongly_connected(g) && is_stationary(g, w);
  }
  std::map<std::string, Rational> push;
  for (std::size_t i = 0; i < c.size(); ++i) push[to_string(c.states[i].word)] += w[i];
  rep.pushforward_matches = true;
  for (const auto& [word, p] : stationary_exact(c.n, 2, {c.r}, RateParams::uniform(a, b, q))) {
    if (push[to_string(word)] != p) rep.pushforward_matches = false;
  }
  return rep;
}

}  // namespace kpasep

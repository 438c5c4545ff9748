#include "kpasep/rhombic.hpp"

#include "kpasep/ansatz.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kpasep {

Diagram::Diagram(Word w, int k) : word_(std::move(w)), k_(k) {
  check_word(word_, k_);
  const int n = this->n();
  id_.assign(static_cast<std::size_t>(n * n), -1);
  for (int p = 0; p < n; ++p) {
    for (int pp = p + 1; pp < n; ++pp) {
      if (word_[static_cast<std::size_t>(p)].rank() > word_[static_cast<std::size_t>(pp)].rank()) {
        const int id = static_cast<int>(tiles_.size());
        tiles_.push_back({p, pp});
        id_[static_cast<std::size_t>(p * n + pp)] = id;
        id_[static_cast<std::size_t>(pp * n + p)] = id;
      }
    }
  }
}

int Diagram::tile_id(int x, int y) const {
  if (x < 0 || y < 0 || x >= n() || y >= n()) return -1;
  return id_[static_cast<std::size_t>(x * n() + y)];
}

TileClass Diagram::tile_class(int id) const {
  const Tile& t = tiles_.at(static_cast<std::size_t>(id));
  const Letter a = word_[static_cast<std::size_t>(t.p)], b = word_[static_cast<std::size_t>(t.pp)];
  if (a.is_d()) return b.is_e() ? TileClass::de : TileClass::da;
  return b.is_e() ? TileClass::ae : TileClass::aa;
}

Diagram tiles_of(const Word& w, int k) { return Diagram(w, k); }

std::optional<std::vector<SweepStep>> sweep(const Diagram& d, const Tiling& t) {
  const int n = d.n();
  if (static_cast<int>(t.seq.size()) != n) return std::nullopt;
  // each line must meet exactly its crossing partners, once each
  for (int x = 0; x < n; ++x) {
    std::vector<int> s = t.seq[static_cast<std::size_t>(x)];
    std::sort(s.begin(), s.end());
    std::vector<int> expect;
    for (int y = 0; y < n; ++y) {
      if (d.tile_id(x, y) >= 0) expect.push_back(y);
    }
    if (s != expect) return std::nullopt;
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
  auto next_of = [&](int x) {
    const auto& s = t.seq[static_cast<std::size_t>(x)];
    return next[static_cast<std::size_t>(x)] < s.size() ? s[next[static_cast<std::size_t>(x)]] : -1;
  };
  std::vector<SweepStep> steps;
  const std::size_t total = d.tiles().size();
  while (steps.size() < total) {
    bool moved = false;
    for (int pos = 0; pos + 1 < n; ++pos) {
      const int a = order[static_cast<std::size_t>(pos)], b = order[static_cast<std::size_t>(pos + 1)];
      if (next_of(a) == b && next_of(b) == a) {
        steps.push_back({d.tile_id(a, b), pos});
        ++next[static_cast<std::size_t>(a)];
        ++next[static_cast<std::size_t>(b)];
        std::swap(order[static_cast<std::size_t>(pos)], order[static_cast<std::size_t>(pos + 1)]);
        moved = true;
        break;
      }
    }
    if (!moved) return std::nullopt;
  }
  return steps;
}

bool is_valid(const Diagram& d, const Tiling& t) { return sweep(d, t).has_value(); }

Tiling maximal_tiling(const Diagram& d) {
  const int n = d.n();
  const Word& w = d.word();
  Tiling t;
  t.seq.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    std::vector<int> partners;
    for (int p = 0; p < x; ++p) {
      if (d.tile_id(p, x) >= 0) partners.push_back(p);
    }
    std::sort(partners.begin(), partners.end(), [&](int a, int b) {
      const int ra = w[static_cast<std::size_t>(a)].rank(), rb = w[static_cast<std::size_t>(b)].rank();
      return ra != rb ? ra > rb : a > b;
    });
    t.seq[static_cast<std::size_t>(x)] = partners;
    for (int p : partners) t.seq[static_cast<std::size_t>(p)].push_back(x);
  }
  return t;
}

namespace {

// Position of y in seq[x], or -1.
int where(const Tiling& t, int x, int y) {
  const auto& s = t.seq[static_cast<std::size_t>(x)];
  auto it = std::find(s.begin(), s.end(), y);
  return it == s.end() ? -1 : static_cast<int>(it - s.begin());
}

bool adjacent_in(const Tiling& t, int x, int a, int b) {
  const int i = where(t, x, a), j = where(t, x, b);
  return i >= 0 && j >= 0 && (i - j == 1 || j - i == 1);
}

}  // namespace

std::vector<Hexagon> hexagons(const Diagram& d, const Tiling& t) {
  std::vector<Hexagon> out;
  const int n = d.n();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (d.tile_id(x, y) < 0) continue;
      for (int z = y + 1; z < n; ++z) {
        if (d.tile_id(x, z) < 0 || d.tile_id(y, z) < 0) continue;
        if (adjacent_in(t, x, y, z) && adjacent_in(t, y, x, z) && adjacent_in(t, z, x, y)) {
          out.push_back({x, y, z, where(t, x, y) < where(t, x, z)});
        }
      }
    }
  }
  return out;
}

Tiling flip(const Diagram& d, const Tiling& t, const Hexagon& h) {
  if (d.tile_id(h.x, h.y) < 0 || d.tile_id(h.x, h.z) < 0 || d.tile_id(h.y, h.z) < 0 ||
      !adjacent_in(t, h.x, h.y, h.z) || !adjacent_in(t, h.y, h.x, h.z) || !adjacent_in(t, h.z, h.x, h.y)) {
    throw std::invalid_argument("lines do not bound a hexagon");
  }
  Tiling out = t;
  auto swap_in = [&](int line, int a, int b) {
    auto& s = out.seq[static_cast<std::size_t>(line)];
    std::swap(s[static_cast<std::size_t>(where(t, line, a))], s[static_cast<std::size_t>(where(t, line, b))]);
  };
  swap_in(h.x, h.y, h.z);
  swap_in(h.y, h.x, h.z);
  swap_in(h.z, h.x, h.y);
  return out;
}

std::vector<Tiling> flip_reachable_tilings(const Diagram& d, std::size_t limit) {
  std::set<Tiling> seen;
  std::queue<Tiling> todo;
  Tiling start = maximal_tiling(d);
  seen.insert(start);
  todo.push(std::move(start));
  while (!todo.empty()) {
    Tiling cur = std::move(todo.front());
    todo.pop();
    for (const auto& h : hexagons(d, cur)) {
      Tiling nb = flip(d, cur, h);
      if (seen.insert(nb).second) {
        if (seen.size() > limit) throw std::length_error("too many tilings");
        todo.push(std::move(nb));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::array<int, 2> direction(Letter l, int k) {
  // one circular family: e, a_1, ..., a_{k-1}, d turning from west to south
  const int i = l.is_d() ? k : l.rank();
  return {-(k - i), -i};
}

namespace {

struct Step {
  int tile;
  TileClass cls;
  int dline;  // line carrying the d-strip, or -1
  int eline;  // line carrying the e-strip, or -1
};

std::vector<Step> steps_for(const Diagram& d, const Tiling& t) {
  auto sw = sweep(d, t);
  if (!sw) throw std::invalid_argument("invalid tiling");
  std::vector<Step> out;
  out.reserve(sw->size());
  for (const auto& s : *sw) {
    const Tile& tile = d.tiles()[static_cast<std::size_t>(s.tile)];
    const TileClass c = d.tile_class(s.tile);
    const bool has_d = c == TileClass::de || c == TileClass::da;
    const bool has_e = c == TileClass::de || c == TileClass::ae;
    out.push_back({s.tile, c, has_d ? tile.p : -1, has_e ? tile.pp : -1});
  }
  return out;
}

// Backtracking over the tiles in sweep order. The flags record a beta seen on
// a d-line and an alpha seen on an e-line, which block every later tile there.
template <typename Visit>
void backtrack(const std::vector<Step>& steps, int n, Visit&& visit) {
  std::vector<char> beta_on(static_cast<std::size_t>(n), 0), alpha_on(static_cast<std::size_t>(n), 0);
  std::vector<Symbol> sym(steps.size(), Symbol::none);
  int na = 0, nb = 0, nq = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == steps.size()) {
      visit(steps, sym, na, nb, nq);
      return;
    }
    const Step& s = steps[i];
    if (s.cls == TileClass::aa) {
      ++nq;
      self(self, i + 1);
      --nq;
      return;
    }
    const bool blocked = (s.dline >= 0 && beta_on[static_cast<std::size_t>(s.dline)]) ||
                         (s.eline >= 0 && alpha_on[static_cast<std::size_t>(s.eline)]);
    if (blocked) {
      sym[i] = Symbol::none;
      self(self, i + 1);
      return;
    }
    sym[i] = Symbol::none;
    ++nq;
    self(self, i + 1);
    --nq;
    if (s.eline >= 0) {
      sym[i] = Symbol::alpha;
      alpha_on[static_cast<std::size_t>(s.eline)] = 1;
      ++na;
      self(self, i + 1);
      --na;
      alpha_on[static_cast<std::size_t>(s.eline)] = 0;
    }
    if (s.dline >= 0) {
      sym[i] = Symbol::beta;
      beta_on[static_cast<std::size_t>(s.dline)] = 1;
      ++nb;
      self(self, i + 1);
      --nb;
      beta_on[static_cast<std::size_t>(s.dline)] = 0;
    }
    sym[i] = Symbol::none;
  };
  rec(rec, 0);
}

LaurentPoly boundary_factor(const Word& w) {
  return LaurentPoly::term(Monomial::of(Var::alpha, count_d(w)) * Monomial::of(Var::beta, count_e(w)), 1);
}

}  // namespace

std::vector<TileStatus> statuses(const Diagram& d, const Filling& f) {
  const auto steps = steps_for(d, f.tiling);
  if (f.sym.size() != d.tiles().size()) throw std::invalid_argument("filling has the wrong number of tiles");
  std::vector<char> beta_on(static_cast<std::size_t>(d.n()), 0), alpha_on(static_cast<std::size_t>(d.n()), 0);
  std::vector<TileStatus> out(d.tiles().size(), TileStatus::free_q);
  for (const auto& s : steps) {
    const Symbol sym = f.sym[static_cast<std::size_t>(s.tile)];
    auto& st = out[static_cast<std::size_t>(s.tile)];
    if (s.cls == TileClass::aa) {
      if (sym != Symbol::none) throw std::invalid_argument("an a-a tile must be empty");
      st = TileStatus::free_q;
      continue;
    }
    const bool blocked = (s.dline >= 0 && beta_on[static_cast<std::size_t>(s.dline)]) ||
                         (s.eline >= 0 && alpha_on[static_cast<std::size_t>(s.eline)]);
    if (sym == Symbol::none) {
      st = blocked ? TileStatus::forced_empty : TileStatus::free_q;
      continue;
    }
    if (blocked) throw std::invalid_argument("symbol in a tile blocked by an alpha below or a beta to the right");
    if (sym == Symbol::alpha) {
      if (s.eline < 0) throw std::invalid_argument("alpha is only allowed in de and ae tiles");
      alpha_on[static_cast<std::size_t>(s.eline)] = 1;
      st = TileStatus::alpha;
    } else {
      if (s.dline < 0) throw std::invalid_argument("beta is only allowed in de and da tiles");
      beta_on[static_cast<std::size_t>(s.dline)] = 1;
      st = TileStatus::beta;
    }
  }
  return out;
}

bool is_valid_filling(const Diagram& d, const Filling& f) {
  try {
    statuses(d, f);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<Filling> enumerate_fillings(const Diagram& d) { return enumerate_fillings(d, maximal_tiling(d)); }

std::vector<Filling> enumerate_fillings(const Diagram& d, const Tiling& t) {
  std::vector<Filling> out;
  const auto steps = steps_for(d, t);
  backtrack(steps, d.n(), [&](const std::vector<Step>& st, const std::vector<Symbol>& sym, int, int, int) {
    Filling f{t, std::vector<Symbol>(d.tiles().size(), Symbol::none)};
    for (std::size_t i = 0; i < st.size(); ++i) f.sym[static_cast<std::size_t>(st[i].tile)] = sym[i];
    out.push_back(std::move(f));
  });
  return out;
}

LaurentPoly wt(const Diagram& d, const Filling& f) {
  const auto st = statuses(d, f);
  int na = 0, nb = 0, nq = 0;
  for (auto s : st) {
    na += s == TileStatus::alpha;
    nb += s == TileStatus::beta;
    nq += s == TileStatus::free_q;
  }
  return boundary_factor(d.word()) *
         LaurentPoly::term(Monomial::of(Var::alpha, na) * Monomial::of(Var::beta, nb) * Monomial::of(Var::q, nq), 1);
}

LaurentPoly weight(const Diagram& d, const Tiling& t) {
  std::map<std::array<int, 3>, unsigned long long> counts;
  backtrack(steps_for(d, t), d.n(),
            [&](const std::vector<Step>&, const std::vector<Symbol>&, int na, int nb, int nq) { ++counts[{na, nb, nq}]; });
  LaurentPoly sum;
  for (const auto& [e, c] : counts) {
    sum.add_term(Monomial::of(Var::alpha, e[0]) * Monomial::of(Var::beta, e[1]) * Monomial::of(Var::q, e[2]),
                 Rational(Integer(std::to_string(c))));
  }
  return boundary_factor(d.word()) * sum;
}

LaurentPoly weight(const Word& w, int k) {
  const Diagram d(w, k);
  return weight(d, maximal_tiling(d));
}

LaurentPoly Z(int n, int k, const Sector& sector, Execution ex) {
  const auto states = sector_states(n, k, sector);
  std::vector<LaurentPoly> parts(states.size());
  const long count = static_cast<long>(states.size());
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) parts[static_cast<std::size_t>(i)] = weight(states[static_cast<std::size_t>(i)], k);
  } else {
    for (long i = 0; i < count; ++i) parts[static_cast<std::size_t>(i)] = weight(states[static_cast<std::size_t>(i)], k);
  }
  LaurentPoly z;
  for (const auto& p : parts) z += p;
  return z;
}

int free_d_strips(const Diagram& d, const Filling& f) {
  std::vector<char> has_beta(static_cast<std::size_t>(d.n()), 0);
  for (std::size_t id = 0; id < d.tiles().size(); ++id) {
    if (f.sym[id] == Symbol::beta) has_beta[static_cast<std::size_t>(d.tiles()[id].p)] = 1;
  }
  int free = 0;
  for (int x = 0; x < d.n(); ++x) free += d.word()[static_cast<std::size_t>(x)].is_d() && !has_beta[static_cast<std::size_t>(x)];
  return free;
}

TilingsReport prop28_check(const Word& w, int k) {
  const Diagram d(w, k);
  TilingsReport rep;
  rep.reference = weight(d, maximal_tiling(d));
  const auto all = flip_reachable_tilings(d);
  rep.tilings = all.size();
  for (std::size_t i = 0; i < all.size(); ++i) {
    LaurentPoly wgt = weight(d, all[i]);
    if (wgt != rep.reference) rep.mismatches.emplace_back(i, std::move(wgt));
  }
  rep.all_equal = rep.mismatches.empty();
  return rep;
}

Integer count_classes(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("need 0 <= r <= n");
  Integer total = 0;
  for (const auto& w : sector_states(n, 2, {r})) {
    const Diagram d(w, 2);
    unsigned long long c = 0;
    backtrack(steps_for(d, maximal_tiling(d)), d.n(), [&](const auto&, const auto&, int, int, int) { ++c; });
    total += Integer(std::to_string(c));
  }
  return total;
}

Integer count_classes_formula(int n, int r) { return binomial(n, r) * factorial(n + 1) / factorial(r + 1); }

ProbeReport conjecture_probe(const Word& w, int k, const Tiling& t) {
  const Diagram d(w, k);
  ProbeReport rep;
  rep.on_tiling = weight(d, t);
  rep.on_maximal = weight(d, maximal_tiling(d));
  rep.equal = rep.on_tiling == rep.on_maximal;
  return rep;
}

namespace {

struct Local {
  std::array<Symbol, 3> sym;  // da, de, ae
  std::array<int, 3> wexp;    // alpha, beta, q
  bool out_d, out_e;
};

// All symbol choices on the three hexagon tiles given whether the d-line and
// e-line are already blocked when they reach the hexagon.
std::vector<Local> local_configs(bool is_max, bool bD, bool bE) {
  enum { DA, DE, AE };
  const std::array<int, 3> order = is_max ? std::array<int, 3>{DA, DE, AE} : std::array<int, 3>{AE, DE, DA};
  std::vector<Local> out;
  Local cur{};
  auto rec = [&](auto&& self, int i, bool fd, bool fe) -> void {
    if (i == 3) {
      cur.out_d = fd;
      cur.out_e = fe;
      out.push_back(cur);
      return;
    }
    const int tile = order[static_cast<std::size_t>(i)];
    const bool on_d = tile != AE, on_e = tile != DA;
    const bool blocked = (on_d && fd) || (on_e && fe);
    auto& sym = cur.sym[static_cast<std::size_t>(tile)];
    if (blocked) {
      sym = Symbol::none;
      self(self, i + 1, fd, fe);
      return;
    }
    sym = Symbol::none;
    ++cur.wexp[2];
    self(self, i + 1, fd, fe);
    --cur.wexp[2];
    if (on_e) {
      sym = Symbol::alpha;
      ++cur.wexp[0];
      self(self, i + 1, fd, true);
      --cur.wexp[0];
    }
    if (on_d) {
      sym = Symbol::beta;
      ++cur.wexp[1];
      self(self, i + 1, true, fe);
      --cur.wexp[1];
    }
    sym = Symbol::none;
  };
  rec(rec, 0, bD, bE);
  return out;
}

bool blocked_before(const Diagram& d, const Filling& f, int line, int first_partner, Symbol blocker) {
  for (int y : f.tiling.seq[static_cast<std::size_t>(line)]) {
    if (y == first_partner) return false;
    if (f.sym[static_cast<std::size_t>(d.tile_id(line, y))] == blocker) return true;
  }
  return false;
}

}  // namespace

Filling filling_flip(const Diagram& d, const Filling& f, const Hexagon& h) {
  const Word& w = d.word();
  if (!(w[static_cast<std::size_t>(h.x)].is_d() && w[static_cast<std::size_t>(h.y)].is_a() &&
        w[static_cast<std::size_t>(h.z)].is_e())) {
    throw std::invalid_argument("filling flips are defined on d/a/e hexagons");
  }
  const int t_da = d.tile_id(h.x, h.y), t_de = d.tile_id(h.x, h.z), t_ae = d.tile_id(h.y, h.z);
  // the first hexagon partner met on each strip line
  const int first_on_d = where(f.tiling, h.x, h.y) < where(f.tiling, h.x, h.z) ? h.y : h.z;
  const int first_on_e = where(f.tiling, h.z, h.x) < where(f.tiling, h.z, h.y) ? h.x : h.y;
  const bool bD = blocked_before(d, f, h.x, first_on_d, Symbol::beta);
  const bool bE = blocked_before(d, f, h.z, first_on_e, Symbol::alpha);

  const std::array<Symbol, 3> current{f.sym[static_cast<std::size_t>(t_da)], f.sym[static_cast<std::size_t>(t_de)],
                                      f.sym[static_cast<std::size_t>(t_ae)]};
  const auto here = local_configs(h.is_max, bD, bE);
  const auto there = local_configs(!h.is_max, bD, bE);
  auto key = [](const Local& l) { return std::make_tuple(l.wexp, l.out_d, l.out_e); };
  const Local* src = nullptr;
  for (const auto& l : here) {
    if (l.sym == current) src = &l;
  }
  if (!src) throw std::invalid_argument("filling is not admissible on the hexagon");
  std::vector<const Local*> group_here, group_there;
  for (const auto& l : here) {
    if (key(l) == key(*src)) group_here.push_back(&l);
  }
  for (const auto& l : there) {
    if (key(l) == key(*src)) group_there.push_back(&l);
  }
  if (group_here.size() != group_there.size()) throw std::logic_error("hexagon fillings do not match up");
  auto by_sym = [](const Local* a, const Local* b) { return a->sym < b->sym; };
  std::sort(group_here.begin(), group_here.end(), by_sym);
  std::sort(group_there.begin(), group_there.end(), by_sym);
  const auto pos = std::find(group_here.begin(), group_here.end(), src) - group_here.begin();
  const Local& dst = *group_there[static_cast<std::size_t>(pos)];

  Filling out{flip(d, f.tiling, h), f.sym};
  out.sym[static_cast<std::size_t>(t_da)] = dst.sym[0];
  out.sym[static_cast<std::size_t>(t_de)] = dst.sym[1];
  out.sym[static_cast<std::size_t>(t_ae)] = dst.sym[2];
  return out;
}

Filling canonicalize(const Diagram& d, const Filling& f) {
  Filling cur = f;
  for (;;) {
    bool flipped = false;
    for (const auto& h : hexagons(d, cur.tiling)) {
      if (!h.is_max) {
        cur = filling_flip(d, cur, h);
        flipped = true;
        break;
      }
    }
    if (!flipped) return cur;
  }
}

std::size_t transfer_cross_check(const Word& w, int k, std::vector<std::string>* details) {
  check_word(w, k);
  const Diagram base(w, k);
  const auto fills = enumerate_fillings(base);
  std::map<std::vector<Symbol>, std::size_t> index_of;
  for (std::size_t i = 0; i < fills.size(); ++i) index_of.emplace(fills[i].sym, i);
  const std::vector<int> j = sector_of(w, k);
  const LaurentPoly ab = alpha() * beta();

  std::vector<Letter> letters{Letter::d(), Letter::e()};
  for (int s = 1; s <= k - 1; ++s) letters.push_back(Letter::a(s));

  std::size_t mismatches = 0;
  for (Letter l : letters) {
    Word wl = w;
    wl.push_back(l);
    const Diagram ext(wl, k);
    // coefficient per (old filling, new index)
    std::vector<std::map<Index, LaurentPoly>> got(fills.size());
    for (const auto& g : enumerate_fillings(ext)) {
      std::vector<Symbol> restricted(base.tiles().size());
      for (std::size_t id = 0; id < base.tiles().size(); ++id) {
        const Tile& t = base.tiles()[id];
        restricted[id] = g.sym[static_cast<std::size_t>(ext.tile_id(t.p, t.pp))];
      }
      const std::size_t src = index_of.at(restricted);
      const Index col{free_d_strips(ext, g), sector_of(wl, k)};
      got[src][col] += wt(ext, g);
    }
    for (std::size_t i = 0; i < fills.size(); ++i) {
      const Index row{free_d_strips(base, fills[i]), j};
      LaurentPoly scale = wt(base, fills[i]);
      if (!l.is_a()) scale *= ab;
      SparseRow expect = matrix_row(MatrixKind::of(l), row);
      std::set<Index> cols;
      for (const auto& [c, v] : expect) cols.insert(c);
      for (const auto& [c, v] : got[i]) cols.insert(c);
      for (const Index& c : cols) {
        const LaurentPoly lhs = got[i].count(c) ? got[i][c] : LaurentPoly();
        const LaurentPoly rhs = expect.count(c) ? expect[c] * scale : LaurentPoly();
        if (lhs != rhs) {
          ++mismatches;
          if (details && details->size() < 20) {
            details->push_back(to_string(w) + "+" + to_string(Word{l}) + " " + to_string(row) + "->" + to_string(c) +
                               ": " + lhs.to_string() + " vs " + rhs.to_string());
          }
        }
      }
    }
  }
  return mismatches;
}

std::string symbol_name(TileStatus s) {
  switch (s) {
    case TileStatus::alpha: return "alpha";
    case TileStatus::beta: return "beta";
    case TileStatus::free_q: return "q";
    case TileStatus::forced_empty: return "empty";
  }
  return "?";
}

}  // namespace kpasep

namespace kpasep {

std::string render_svg(const Diagram& d, const Filling& f, int scale) {
  const auto steps = sweep(d, f.tiling);
  if (!steps) throw std::invalid_argument("not a tiling of the diagram");
  const auto st = statuses(d, f);
  const int k = d.k();
  using Pt = std::array<int, 2>;
  Word cur = d.word();
  std::vector<Pt> pts(cur.size() + 1, Pt{0, 0});
  for (std::size_t i = 0; i < cur.size(); ++i) {
    const auto v = direction(cur[i], k);
    pts[i + 1] = {pts[i][0] + v[0], pts[i][1] + v[1]};
  }
  const std::vector<Pt> boundary = pts;
  std::vector<std::array<Pt, 4>> quads;
  for (const auto& s : *steps) {
    const auto p = static_cast<std::size_t>(s.pos);
    const auto va = direction(cur[p], k), vb = direction(cur[p + 1], k);
    const Pt a = pts[p];
    const Pt b = {a[0] + va[0], a[1] + va[1]};
    const Pt c = {b[0] + vb[0], b[1] + vb[1]};
    const Pt e = {a[0] + vb[0], a[1] + vb[1]};
    quads.push_back({a, b, c, e});
    std::swap(cur[p], cur[p + 1]);
    pts[p + 1] = e;
  }
  int minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (const auto& p : boundary) {
    minx = std::min(minx, p[0]);
    maxx = std::max(maxx, p[0]);
    miny = std::min(miny, p[1]);
    maxy = std::max(maxy, p[1]);
  }
  for (const auto& q : quads) {
    for (const auto& p : q) {
      minx = std::min(minx, p[0]);
      maxx = std::max(maxx, p[0]);
      miny = std::min(miny, p[1]);
      maxy = std::max(maxy, p[1]);
    }
  }
  const int pad = scale;
  // svg y grows downward
  auto X = [&](const Pt& p) { return (p[0] - minx) * scale + pad; };
  auto Y = [&](const Pt& p) { return (maxy - p[1]) * scale + pad; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (maxx - minx) * scale + 2 * pad << "\" height=\""
      << (maxy - miny) * scale + 2 * pad << "\">\n";
  static const char* fill[] = {"#f4d6a0", "#b9d7ea", "#c9e4c5", "#e3d0ea"};
  for (std::size_t i = 0; i < quads.size(); ++i) {
    const int id = (*steps)[i].tile;
    const auto& q = quads[i];
    out << "  <polygon points=\"";
    for (std::size_t v = 0; v < 4; ++v) out << (v ? " " : "") << X(q[v]) << ',' << Y(q[v]);
    out << "\" fill=\"" << fill[static_cast<int>(d.tile_class(id))] << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    const char* label = st[static_cast<std::size_t>(id)] == TileStatus::alpha  ? "&#945;"
                        : st[static_cast<std::size_t>(id)] == TileStatus::beta ? "&#946;"
                        : st[static_cast<std::size_t>(id)] == TileStatus::free_q ? "q"
                                                                                  : "";
    if (*label) {
      const double cx = (X(q[0]) + X(q[2])) / 2.0, cy = (Y(q[0]) + Y(q[2])) / 2.0;
      out << "  <text x=\"" << cx << "\" y=\"" << cy + scale / 6.0 << "\" font-size=\"" << scale / 2
          << "\" text-anchor=\"middle\">" << label << "</text>\n";
    }
  }
  out << "  <polyline points=\"";
  for (std::size_t v = 0; v < boundary.size(); ++v) out << (v ? " " : "") << X(boundary[v]) << ',' << Y(boundary[v]);
  out << "\" fill=\"none\" stroke=\"#c00\" stroke-width=\"2\"/>\n</svg>\n";
  return out.str();
}

}  // namespace kpasep

#include "kpasep/ansatz.hpp"

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <stdexcept>

namespace kpasep {

int Index::jsum() const { return std::accumulate(j.begin(), j.end(), 0); }

std::string to_string(const Index& x) {
  std::string s = "(" + std::to_string(x.i);
  for (int v : x.j) s += "," + std::to_string(v);
  return s + ")";
}

MatrixKind MatrixKind::of(Letter l) {
  if (l.is_d()) return {D};
  if (l.is_e()) return {E};
  return {A, l.species()};
}

std::string MatrixKind::name() const {
  switch (tag) {
    case D: return "D";
    case E: return "E";
    case A: return "A" + std::to_string(s);
  }
  return "?";
}

namespace {

LaurentPoly monomial(int a, int b, int q) {
  return LaurentPoly::term(Monomial::of(Var::alpha, a) * Monomial::of(Var::beta, b) * Monomial::of(Var::q, q), 1);
}

LaurentPoly from_integer(const Integer& z) { return LaurentPoly(Rational(z)); }

}  // namespace

LaurentPoly entry_D(const Index& row, const Index& col) {
  if (col.i != row.i + 1 || col.j != row.j) return {};
  return monomial(0, -1, 0);
}

LaurentPoly entry_A(int s, const Index& row, const Index& col) {
  const int k1 = static_cast<int>(row.j.size());
  if (s < 1 || s > k1) throw std::invalid_argument("A_s needs 1 <= s <= k-1");
  const int u = col.i;
  if (u < 0 || u > row.i || col.j.size() != row.j.size()) return {};
  for (int r = 0; r < k1; ++r) {
    if (col.j[static_cast<std::size_t>(r)] != row.j[static_cast<std::size_t>(r)] + (r == s - 1 ? 1 : 0)) return {};
  }
  int qexp = u;
  for (int r = s + 1; r <= k1; ++r) qexp += row.j[static_cast<std::size_t>(r - 1)];
  return from_integer(binomial(row.i, u)) * monomial(0, row.i - u, qexp);
}

LaurentPoly entry_E(const Index& row, const Index& col) {
  const int i = row.i, u = col.i;
  if (u < 0 || u > i || col.j != row.j) return {};
  const int j = row.jsum();
  LaurentPoly inner = from_integer(binomial(i, u)) * monomial(0, 0, u) * (monomial(0, 0, j) + alpha() * qint(j));
  for (int w = 0; w < u; ++w) inner += from_integer(binomial(i - u + w, i - u)) * monomial(1, 0, w);
  return monomial(-1, i - u, 0) * inner;
}

LaurentPoly entry(MatrixKind m, const Index& row, const Index& col) {
  switch (m.tag) {
    case MatrixKind::D: return entry_D(row, col);
    case MatrixKind::E: return entry_E(row, col);
    case MatrixKind::A: return entry_A(m.s, row, col);
  }
  return {};
}

SparseRow matrix_row(MatrixKind m, const Index& row) {
  SparseRow out;
  if (m.tag == MatrixKind::D) {
    Index col{row.i + 1, row.j};
    out.emplace(col, entry_D(row, col));
    return out;
  }
  Index col{0, row.j};
  if (m.tag == MatrixKind::A) {
    if (m.s < 1 || m.s > static_cast<int>(row.j.size())) throw std::invalid_argument("A_s needs 1 <= s <= k-1");
    ++col.j[static_cast<std::size_t>(m.s - 1)];
  }
  for (int u = 0; u <= row.i; ++u) {
    col.i = u;
    LaurentPoly v = entry(m, row, col);
    if (!v.is_zero()) out.emplace(col, std::move(v));
  }
  return out;
}

SparseRow apply_matrix(const SparseRow& v, MatrixKind m) {
  SparseRow out;
  for (const auto& [idx, coef] : v) {
    for (const auto& [col, val] : matrix_row(m, idx)) {
      LaurentPoly& t = out[col];
      t += coef * val;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

namespace {

SparseRow bra(int k) {
  SparseRow v;
  v.emplace(Index{0, std::vector<int>(static_cast<std::size_t>(k - 1), 0)}, LaurentPoly(1));
  return v;
}

LaurentPoly ket(const SparseRow& v) {
  LaurentPoly s;
  for (const auto& [idx, c] : v) s += c;
  return s;
}

}  // namespace

LaurentPoly bracket(const Word& w, int k) {
  check_word(w, k);
  SparseRow v = bra(k);
  for (Letter l : w) v = apply_matrix(v, MatrixKind::of(l));
  return ket(v);
}

std::string Relation::name() const {
  switch (tag) {
    case DE: return "DE";
    case DA: return "DA" + std::to_string(s);
    case AE: return "AE" + std::to_string(s);
    case AA: return "AA" + std::to_string(t) + std::to_string(s);
  }
  return "?";
}

std::vector<Relation> relations_for(int k) {
  std::vector<Relation> out{{Relation::DE}};
  for (int s = 1; s <= k - 1; ++s) {
    out.push_back({Relation::DA, s});
    out.push_back({Relation::AE, s});
  }
  for (int t = 2; t <= k - 1; ++t) {
    for (int s = 1; s < t; ++s) out.push_back({Relation::AA, s, t});
  }
  return out;
}

std::vector<Index> window_indices(int k, int wi, int wj) {
  std::vector<Index> out;
  std::vector<int> j(static_cast<std::size_t>(k - 1), 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos == j.size()) {
      for (int i = 0; i <= wi; ++i) out.push_back({i, j});
      return;
    }
    for (int v = 0; v <= left; ++v) {
      j[pos] = v;
      self(self, pos + 1, left - v);
    }
    j[pos] = 0;
  };
  rec(rec, 0, wj);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

SparseRow product_row(const Index& row, std::initializer_list<MatrixKind> ms) {
  SparseRow v;
  v.emplace(row, LaurentPoly(1));
  for (MatrixKind m : ms) v = apply_matrix(v, m);
  return v;
}

void axpy(SparseRow& acc, const SparseRow& x, const LaurentPoly& c) {
  for (const auto& [idx, val] : x) acc[idx] += c * val;
}

}  // namespace

RelationReport relation_check(const Relation& rel, int k, int wi, int wj, const LaurentPoly& lambda) {
  if (rel.tag != Relation::DE && (rel.s < 1 || rel.s > k - 1)) throw std::invalid_argument("species out of range");
  if (rel.tag == Relation::AA && (rel.t <= rel.s || rel.t > k - 1)) throw std::invalid_argument("AA needs t > s");
  RelationReport rep;
  rep.relation = rel.name();
  rep.window_i = wi;
  rep.window_j = wj;
  rep.k = k;
  rep.lambda = lambda;
  const MatrixKind D{MatrixKind::D}, E{MatrixKind::E}, As{MatrixKind::A, rel.s}, At{MatrixKind::A, rel.t};
  const LaurentPoly q = qvar(), one(1);
  for (const Index& row : window_indices(k, wi, wj)) {
    SparseRow res;
    switch (rel.tag) {
      case Relation::DE:
        axpy(res, product_row(row, {D, E}), one);
        axpy(res, product_row(row, {E, D}), -q);
        axpy(res, product_row(row, {D}), -lambda);
        axpy(res, product_row(row, {E}), -lambda);
        break;
      case Relation::DA:
        axpy(res, product_row(row, {D, As}), one);
        axpy(res, product_row(row, {As, D}), -q);
        axpy(res, product_row(row, {As}), -lambda);
        break;
      case Relation::AE:
        axpy(res, product_row(row, {As, E}), one);
        axpy(res, product_row(row, {E, As}), -q);
        axpy(res, product_row(row, {As}), -lambda);
        break;
      case Relation::AA:
        axpy(res, product_row(row, {At, As}), one);
        axpy(res, product_row(row, {As, At}), -q);
        break;
    }
    ++rep.rows_checked;
    for (const auto& [col, val] : res) {
      if (val.is_zero()) continue;
      ++rep.residual_count;
      if (rep.residual_samples.size() < 5) {
        rep.residual_samples.push_back(to_string(row) + "->" + to_string(col) + ": " + val.to_string());
      }
    }
  }
  return rep;
}

BoundaryReport boundary_check(int k, int wi, int wj) {
  BoundaryReport rep;
  const Index origin{0, std::vector<int>(static_cast<std::size_t>(k - 1), 0)};
  SparseRow expect;
  expect.emplace(origin, LaurentPoly::variable(Var::alpha, -1));
  rep.bra_condition = matrix_row({MatrixKind::E}, origin) == expect;
  rep.ket_condition = true;
  const LaurentPoly inv_beta = LaurentPoly::variable(Var::beta, -1);
  for (const Index& row : window_indices(k, wi, wj)) {
    ++rep.rows_checked;
    if (ket(matrix_row({MatrixKind::D}, row)) != inv_beta) rep.ket_condition = false;
  }
  return rep;
}

LaurentPoly Z_partition(int n, int k, const Sector& sector, Execution ex) {
  const auto states = sector_states(n, k, sector);
  std::vector<LaurentPoly> parts(states.size());
  const long count = static_cast<long>(states.size());
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) parts[static_cast<std::size_t>(i)] = bracket(states[static_cast<std::size_t>(i)], k);
  } else {
    for (long i = 0; i < count; ++i) parts[static_cast<std::size_t>(i)] = bracket(states[static_cast<std::size_t>(i)], k);
  }
  LaurentPoly z;
  for (const auto& p : parts) z += p;
  return z;
}

LaurentPoly Z_partition_markers(int n, int k, const Sector& sector) {
  sector_states(1, k, std::vector<int>(sector.size(), 0));  // validates k against the sector shape
  int total = 0;
  for (int r : sector) total += r;
  if (total > n) throw std::invalid_argument("sector infeasible: more a-particles than sites");
  SparseRow v = bra(k);
  for (int step = 0; step < n; ++step) {
    SparseRow next = apply_matrix(v, {MatrixKind::D});
    axpy(next, apply_matrix(v, {MatrixKind::E}), LaurentPoly(1));
    for (int s = 1; s <= k - 1; ++s) {
      axpy(next, apply_matrix(v, {MatrixKind::A, s}), LaurentPoly::variable(species_marker(s)));
    }
    // drop terms already past the requested marker degree
    for (auto& [idx, val] : next) {
      LaurentPoly kept;
      for (const auto& [m, c] : val.terms()) {
        bool ok = true;
        for (int s = 1; s <= k - 1; ++s) {
          if (m.exponent(species_marker(s)) > sector[static_cast<std::size_t>(s - 1)]) ok = false;
        }
        if (ok) kept.add_term(m, c);
      }
      val = std::move(kept);
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    v = std::move(next);
  }
  LaurentPoly z = ket(v);
  for (int s = 1; s <= k - 1; ++s) z = z.coeff_extract(species_marker(s), sector[static_cast<std::size_t>(s - 1)]);
  return z;
}

}  // namespace kpasep

#pragma once

#include "kpasep/execution.hpp"
#include "kpasep/laurent_poly.hpp"
#include "kpasep/pasep.hpp"
#include "kpasep/word.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace kpasep {

/// Row/column index (i, j_1..j_{k-1}): i counts free d-strips, j_s the a_s letters.
struct Index {
  int i = 0;
  std::vector<int> j;

  int jsum() const;
  auto operator<=>(const Index&) const = default;
  bool operator==(const Index&) const = default;
};

std::string to_string(const Index& x);

/// A matrix of the family, named by the letter it represents.
struct MatrixKind {
  enum Tag { D, E, A } tag;
  int s = 0;  // species for A

  static MatrixKind of(Letter l);
  std::string name() const;
};

LaurentPoly entry_D(const Index& row, const Index& col);
LaurentPoly entry_A(int s, const Index& row, const Index& col);
LaurentPoly entry_E(const Index& row, const Index& col);
LaurentPoly entry(MatrixKind m, const Index& row, const Index& col);

using SparseRow = std::map<Index, LaurentPoly>;

/// Nonzero entries of one row; finite because columns are bounded by the row.
SparseRow matrix_row(MatrixKind m, const Index& row);

/// v * M, dropping zero entries.
SparseRow apply_matrix(const SparseRow& v, MatrixKind m);

/// <w| X(W) |v> with the bra the (0,0) indicator and the ket all ones.
LaurentPoly bracket(const Word& w, int k);

struct RelationReport {
  std::string relation;
  int window_i = 0;
  int window_j = 0;
  int k = 2;
  LaurentPoly lambda;
  std::size_t rows_checked = 0;
  std::size_t residual_count = 0;
  std::vector<std::string> residual_samples;  // first few nonzero residuals

  bool passed() const { return residual_count == 0; }
};

/// One quadratic relation of the family:
///   "DE"      DE - qED - lambda(D + E)
///   "DA<s>"   DA_s - qA_sD - lambda A_s
///   "AE<s>"   A_sE - qEA_s - lambda A_s
///   "AA<t><s>" A_tA_s - qA_sA_t   (t > s)
struct Relation {
  enum Tag { DE, DA, AE, AA } tag;
  int s = 0;
  int t = 0;
  std::string name() const;
};

/// All relations that make sense for k species.
std::vector<Relation> relations_for(int k);

/// Every row index with i <= wi and sum j <= wj is expanded and all columns of
/// the residual row compared against zero.
RelationReport relation_check(const Relation& rel, int k, int wi, int wj, const LaurentPoly& lambda);

struct BoundaryReport {
  std::size_t rows_checked = 0;
  bool bra_condition = false;  // row (0,0) of E equals (1/alpha) <w|
  bool ket_condition = false;  // every D row sums to 1/beta
  bool passed() const { return bra_condition && ket_condition; }
};

BoundaryReport boundary_check(int k, int wi, int wj);

/// Sum of bracket(W) over the sector.
LaurentPoly Z_partition(int n, int k, const Sector& sector, Execution ex = Execution::serial);
/// [y_1^{r_1} ... y_{k-1}^{r_{k-1}}] <w|(D + sum y_s A_s + E)^n|v>.
LaurentPoly Z_partition_markers(int n, int k, const Sector& sector);

/// All index tuples with i <= wi and sum j <= wj for k species, in order.
std::vector<Index> window_indices(int k, int wi, int wj);

}  // namespace kpasep

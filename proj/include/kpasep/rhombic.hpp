#pragma once

#include "kpasep/execution.hpp"
#include "kpasep/laurent_poly.hpp"
#include "kpasep/pasep.hpp"
#include "kpasep/word.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kpasep {

/// A crossing of the lines at positions p < pp (0-based) with rank(W_p) > rank(W_pp).
struct Tile {
  int p = 0;
  int pp = 0;
};

enum class TileClass { de, da, ae, aa };

/// The rhombic diagram of a word, as its set of crossing pairs.
class Diagram {
 public:
  Diagram(Word w, int k);

  const Word& word() const { return word_; }
  int k() const { return k_; }
  int n() const { return static_cast<int>(word_.size()); }
  const std::vector<Tile>& tiles() const { return tiles_; }
  /// Tile id of the crossing of lines x and y (any order), or -1.
  int tile_id(int x, int y) const;
  TileClass tile_class(int id) const;

 private:
  Word word_;
  int k_;
  std::vector<Tile> tiles_;
  std::vector<int> id_;  // n*n
};

Diagram tiles_of(const Word& w, int k);

/// A tiling as a pseudoline arrangement: seq[x] lists the lines crossed by
/// line x, in the order met walking from the boundary path spelled by the word
/// into the diagram. For a d-line this is its d-strip right to left, for an
/// e-line its e-strip bottom to top.
struct Tiling {
  std::vector<std::vector<int>> seq;

  bool operator==(const Tiling&) const = default;
  auto operator<=>(const Tiling&) const = default;
};

/// One step of the sweep from the word's path to the sorted path: lines at
/// positions (pos, pos+1) of the current order cross, placing tile `tile`
/// anchored at path point pos.
struct SweepStep {
  int tile;
  int pos;
};

/// The sweep realizing the tiling, or nullopt if the sequences do not form a
/// valid arrangement of the diagram.
std::optional<std::vector<SweepStep>> sweep(const Diagram& d, const Tiling& t);
bool is_valid(const Diagram& d, const Tiling& t);

/// Heaviest tiles first: line t crosses its earlier heavier partners in
/// decreasing rank, latest first.
Tiling maximal_tiling(const Diagram& d);

/// Three pairwise crossing lines x < y < z forming an empty triangle.
struct Hexagon {
  int x, y, z;
  bool is_max = true;  // y before z on line x
};

std::vector<Hexagon> hexagons(const Diagram& d, const Tiling& t);
/// Rotates the hexagon; involution. Throws std::invalid_argument if the
/// three lines do not bound an empty triangle.
Tiling flip(const Diagram& d, const Tiling& t, const Hexagon& h);

/// Every tiling reachable from the maximal one by flips, in sorted order.
std::vector<Tiling> flip_reachable_tilings(const Diagram& d, std::size_t limit = 100000);

/// Integer direction vector of a letter for k species.
std::array<int, 2> direction(Letter l, int k);

enum class Symbol : std::uint8_t { none, alpha, beta };
enum class TileStatus : std::uint8_t { alpha, beta, free_q, forced_empty };

struct Filling {
  Tiling tiling;
  std::vector<Symbol> sym;  // by tile id

  bool operator==(const Filling&) const = default;
  auto operator<=>(const Filling&) const = default;
};

/// Derived status per tile id; throws std::invalid_argument if a symbol is
/// inadmissible for its tile or sits in a blocked tile.
std::vector<TileStatus> statuses(const Diagram& d, const Filling& f);
bool is_valid_filling(const Diagram& d, const Filling& f);

/// All admissible fillings of a tiling (default: maximal), in backtracking order.
std::vector<Filling> enumerate_fillings(const Diagram& d);
std::vector<Filling> enumerate_fillings(const Diagram& d, const Tiling& t);

LaurentPoly wt(const Diagram& d, const Filling& f);

/// Sum of wt over the fillings of a tiling, without materializing them.
LaurentPoly weight(const Diagram& d, const Tiling& t);
LaurentPoly weight(const Word& w, int k);

/// Sum of weight(W) over the sector.
LaurentPoly Z(int n, int k, const Sector& sector, Execution ex = Execution::serial);

/// Number of d-strips (d-lines) carrying no beta.
int free_d_strips(const Diagram& d, const Filling& f);

struct TilingsReport {
  std::size_t tilings = 0;
  bool all_equal = false;
  LaurentPoly reference;  // weight on the maximal tiling
  std::vector<std::pair<std::size_t, LaurentPoly>> mismatches;  // tiling index, weight
};

/// Weight sum on every flip-reachable tiling against the maximal one.
TilingsReport prop28_check(const Word& w, int k = 2);

/// count of maximal fillings over the sector; equals Z at alpha = beta = q = 1.
Integer count_classes(int n, int r);
Integer count_classes_formula(int n, int r);

struct ProbeReport {
  LaurentPoly on_tiling;
  LaurentPoly on_maximal;
  bool equal = false;
};

/// Report-only comparison of the weight on an arbitrary tiling (k >= 3).
ProbeReport conjecture_probe(const Word& w, int k, const Tiling& t);

/// Weight-preserving bijection between the fillings of the two orientations of
/// a d/a/e hexagon (k = 2).
Filling filling_flip(const Diagram& d, const Filling& f, const Hexagon& h);

/// Repeatedly flips minimal hexagons (with their fillings) until the tiling
/// is the maximal one.
Filling canonicalize(const Diagram& d, const Filling& f);

/// Every filling of the word appended with each letter, grouped by the free
/// d-strip count and a-counts, compared against the matrix entries. Returns
/// the number of mismatching (filling, letter, column) triples.
std::size_t transfer_cross_check(const Word& w, int k, std::vector<std::string>* details = nullptr);

std::string symbol_name(TileStatus s);

/// SVG drawing of a filled tiling: one rhombus per tile from the direction
/// vectors, scaled by `scale` pixels per unit.
std::string render_svg(const Diagram& d, const Filling& f, int scale = 24);

}  // namespace kpasep

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kpasep {

/// A particle species (or the hole). Ordered by rank, which is the order in
/// which edges appear on the sorted boundary path: e < a_1 < ... < a_9 < d.
/// A pair of letters (x, y) with x left of y and rank(x) > rank(y) is an
/// inversion: it swaps forward at rate 1 and contributes one tile.
class Letter {
 public:
  static constexpr int kMaxSpecies = 9;

  static constexpr Letter d() { return Letter(kDRank); }
  static constexpr Letter e() { return Letter(0); }
  static Letter a(int s);

  constexpr int rank() const { return rank_; }
  constexpr bool is_d() const { return rank_ == kDRank; }
  constexpr bool is_e() const { return rank_ == 0; }
  constexpr bool is_a() const { return rank_ > 0 && rank_ < kDRank; }
  /// Species index s of a_s; only meaningful when is_a().
  constexpr int species() const { return rank_; }

  /// State-ordering key: d < a_1 < ... < a_9 < e.
  constexpr int order_key() const { return is_d() ? 0 : (is_e() ? kDRank : rank_); }

  /// Valid for a k-species system (a_s requires 1 <= s <= k-1).
  constexpr bool valid_for(int k) const { return !is_a() || rank_ <= k - 1; }

  constexpr bool operator==(const Letter&) const = default;

 private:
  static constexpr int kDRank = kMaxSpecies + 1;
  constexpr explicit Letter(int rank) : rank_(static_cast<std::int8_t>(rank)) {}
  std::int8_t rank_;
};

using Word = std::vector<Letter>;

/// Parses letters d, e, a, a1..a9 ("a" means a1). Throws std::invalid_argument.
Word parse_word(std::string_view text);

/// Validates every letter against k; throws std::invalid_argument.
void check_word(const Word& w, int k);

/// Renders with "a" for a_1 when no other species occurs, otherwise "a<s>".
std::string to_string(const Word& w);

/// Lexicographic comparison under d < a_1 < ... < a_{k-1} < e.
bool word_less(const Word& x, const Word& y);

int count_d(const Word& w);
int count_e(const Word& w);
/// Counts (r_1, ..., r_{k-1}) of each a-species.
std::vector<int> sector_of(const Word& w, int k);
/// Number of inversion pairs (the tile count of the rhombic diagram).
int inversions(const Word& w);

}  // namespace kpasep

#include "kpasep/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace kpasep {

Letter Letter::a(int s) {
  if (s < 1 || s > kMaxSpecies) throw std::invalid_argument("species index out of range: " + std::to_string(s));
  return Letter(s);
}

Word parse_word(std::string_view text) {
  Word w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == 'd') {
      w.push_back(Letter::d());
    } else if (c == 'e') {
      w.push_back(Letter::e());
    } else if (c == 'a') {
      if (i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        const int s = text[++i] - '0';
        if (s == 0) throw std::invalid_argument("malformed word: a0 is not a species");
        w.push_back(Letter::a(s));
      } else {
        w.push_back(Letter::a(1));
      }
    } else {
      throw std::invalid_argument("malformed word: unexpected '" + std::string(1, c) + "'");
    }
  }
  if (w.empty()) throw std::invalid_argument("malformed word: empty");
  return w;
}

void check_word(const Word& w, int k) {
  for (const auto& l : w) {
    if (!l.valid_for(k)) {
      throw std::invalid_argument("letter a" + std::to_string(l.species()) + " is not valid for k=" + std::to_string(k));
    }
  }
}

std::string to_string(const Word& w) {
  const bool plain = std::all_of(w.begin(), w.end(), [](Letter l) { return !l.is_a() || l.species() == 1; });
  std::string s;
  for (const auto& l : w) {
    if (l.is_d()) {
      s += 'd';
    } else if (l.is_e()) {
      s += 'e';
    } else {
      s += 'a';
      if (!plain) s += static_cast<char>('0' + l.species());
    }
  }
  return s;
}

bool word_less(const Word& x, const Word& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](Letter a, Letter b) { return a.order_key() < b.order_key(); });
}

int count_d(const Word& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](Letter l) { return l.is_d(); }));
}

int count_e(const Word& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](Letter l) { return l.is_e(); }));
}

std::vector<int> sector_of(const Word& w, int k) {
  std::vector<int> r(static_cast<std::size_t>(std::max(k - 1, 0)), 0);
  for (const auto& l : w) {
    if (l.is_a()) {
      if (l.species() > k - 1) throw std::invalid_argument("word has a species beyond k-1");
      ++r[static_cast<std::size_t>(l.species() - 1)];
    }
  }
  return r;
}

int inversions(const Word& w) {
  int n = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) n += w[i].rank() > w[j].rank() ? 1 : 0;
  }
  return n;
}

}  // namespace kpasep

// Reduced words over a fixed free-group basis: parsing, formatting,
// free reduction, cyclic reduction, and the length-lexicographic order.
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twist {

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a configured search or size budget is exhausted.
class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One occurrence of a generator x_i (sign +1) or its inverse (sign -1).
// Letters are ordered x1 < x1^-1 < x2 < x2^-1 < ...; order_key() gives the
// position of a letter in that order.
class Letter {
 public:
  Letter(int index, int sign) : code_(static_cast<std::int32_t>(index)) {
    if (index < 1) throw std::invalid_argument("Letter: index must be >= 1");
    if (sign == -1)
      code_ = -code_;
    else if (sign != 1)
      throw std::invalid_argument("Letter: sign must be +1 or -1");
  }

  int index() const { return code_ < 0 ? -code_ : code_; }
  int sign() const { return code_ < 0 ? -1 : 1; }
  Letter inverse() const { return Letter(Raw{}, -code_); }
  int order_key() const { return 2 * (index() - 1) + (code_ < 0 ? 1 : 0); }

  friend bool operator==(Letter a, Letter b) { return a.code_ == b.code_; }
  friend bool operator!=(Letter a, Letter b) { return a.code_ != b.code_; }

 private:
  struct Raw {};
  Letter(Raw, std::int32_t code) : code_(code) {}
  std::int32_t code_;
};

// An immutable word over the alphabet of a rank-n free group. A Word is a
// plain letter sequence; free reduction is a separate step, so unreduced
// words are representable (e.g. straight after parsing). Every word carries
// its ambient rank and operations refuse to mix ranks.
class Word {
 public:
  explicit Word(int rank) : rank_(check_rank(rank)) {}
  Word(std::vector<Letter> letters, int rank);
  static Word generator(int index, int rank, int sign = 1);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const;
  // Letters [first, last) as a word of the same rank.
  Word slice(std::size_t first, std::size_t last) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  static int check_rank(int rank);
  std::vector<Letter> letters_;
  int rank_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

bool is_reduced(const Word& w);
Word reduce(const Word& w);

// Graphical concatenation, no reduction.
Word concat(const Word& a, const Word& b);
// reduce(a b)
Word multiply(const Word& a, const Word& b);
Word multiply(const Word& a, const Word& b, const Word& c);
// reduce(w^k) for any integer k
Word power(const Word& w, long k);
// reduce(g^-1 w g)
Word conjugate(const Word& w, const Word& g);

// Peels mutually inverse boundary letters off a reduced word:
// w == conj^-1 core conj graphically, with core cyclically reduced.
struct CyclicReduction {
  Word core;
  Word conj;
};
CyclicReduction cyclic_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);

// Length-first order; words of equal length compare lexicographically under
// the letter order. A strict total order on reduced words.
bool word_less(const Word& a, const Word& b);

// True when the cyclically reduced words a and b are rotations of one
// another, i.e. conjugate in the free group.
bool is_cyclic_rotation(const Word& a, const Word& b);

// Accepts either verbose syntax ("x1 x2^-1", whitespace separated) or
// compact syntax ("aB", lowercase generator / uppercase inverse, rank <= 26).
// "1" or the empty string denotes the empty word. No implicit reduction.
Word parse_word(std::string_view text, int rank);

// Compact syntax when rank <= 26, verbose otherwise; empty word prints "1".
std::string format_word(const Word& w);

}  // namespace twist

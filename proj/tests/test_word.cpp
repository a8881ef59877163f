#include "doctest.h"
#include "helpers.hpp"
#include "twist/word.hpp"

#include <random>

using namespace twist;
using twist_test::W;

TEST_CASE("parsing accepts both syntaxes without implicit reduction") {
  Word w = W("a B a", 2);
  CHECK(w.size() == 3);
  CHECK(w[1] == Letter(2, -1));
  CHECK(W("x1 x2^-1 x1", 2) == w);
  CHECK(W("a A", 2).size() == 2);  // unreduced as written
  CHECK(W("1", 5) == Word(5));
  CHECK(W("", 3) == Word(3));
  CHECK(W("aB", 2) == W("a B", 2));
}

TEST_CASE("parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_word("a q", 2), parse_error);           // index beyond rank
  CHECK_THROWS_AS(parse_word("x3", 2), parse_error);            // index beyond rank
  CHECK_THROWS_AS(parse_word("a x1", 2), parse_error);          // mixed syntaxes
  CHECK_THROWS_AS(parse_word("x1^2", 2), parse_error);          // unknown token
  CHECK_THROWS_AS(parse_word("a 1", 2), parse_error);           // '1' must stand alone
  CHECK_THROWS_AS(parse_word("a?", 2), parse_error);
  CHECK_THROWS_AS(parse_word("ab", 27), parse_error);           // compact needs rank <= 26
}

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(reduce(W("a A", 2)) == Word(2));
  CHECK(reduce(W("abBA", 2)) == Word(2));
  CHECK(reduce(W("abBa", 2)) == W("aa", 2));
}

TEST_CASE("cyclic reduction peels matched boundary letters") {
  auto cr = cyclic_reduce(W("abA", 2));
  CHECK(cr.core == W("b", 2));
  CHECK(cr.conj == W("A", 2));
  cr = cyclic_reduce(W("abab", 2));
  CHECK(cr.core == W("abab", 2));
  CHECK(cr.conj.empty());
  cr = cyclic_reduce(Word(2));
  CHECK(cr.core.empty());
  CHECK(cr.conj.empty());
}

TEST_CASE("word order is length first, then letter order") {
  CHECK(word_less(W("a", 2), W("b", 2)));
  CHECK_FALSE(word_less(W("A", 2), W("a", 2)));
  CHECK(word_less(W("a", 2), W("A", 2)));
  CHECK(word_less(W("b", 2), W("aa", 2)));
}

TEST_CASE("formatting round-trips in both syntaxes") {
  CHECK(format_word(W("aBa", 2)) == "aBa");
  CHECK(format_word(Word(2)) == "1");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    int rank = 1 + static_cast<int>(rng() % 4);
    Word w = random_reduced_word(rank, static_cast<int>(rng() % 10), rng);
    CHECK(parse_word(format_word(w), rank) == w);
    // verbose syntax too
    std::string verbose;
    for (Letter l : w) {
      verbose += "x" + std::to_string(l.index());
      if (l.sign() < 0) verbose += "^-1";
      verbose += ' ';
    }
    CHECK(parse_word(verbose, rank) == w);
  }
}

TEST_CASE("rank is carried and checked") {
  CHECK_THROWS_AS(multiply(W("a", 2), W("a", 3)), std::invalid_argument);
  CHECK_THROWS_AS(Word({Letter(3, 1)}, 2), std::invalid_argument);
  CHECK(W("a", 2) != W("a", 3));
}

TEST_CASE("reduction properties on random words") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    int rank = 2 + static_cast<int>(rng() % 3);
    Word a = random_reduced_word(rank, static_cast<int>(rng() % 12), rng);
    Word b = random_reduced_word(rank, static_cast<int>(rng() % 12), rng);
    CHECK(reduce(a) == a);  // idempotent on reduced input
    CHECK(reduce(reduce(concat(a, b))) == reduce(concat(a, b)));
    Word ab = multiply(a, b);
    CHECK(ab.size() <= a.size() + b.size());
    std::size_t lo = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
    CHECK(ab.size() >= lo);
    auto cr = cyclic_reduce(a);
    CHECK(is_cyclically_reduced(cr.core));
    CHECK(conjugate(cr.core, cr.conj) == a);
    CHECK(a.size() == cr.core.size() + 2 * cr.conj.size());
  }
}

TEST_CASE("word order is a strict total order") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    int rank = 2;
    Word a = random_reduced_word(rank, static_cast<int>(rng() % 6), rng);
    Word b = random_reduced_word(rank, static_cast<int>(rng() % 6), rng);
    Word c = random_reduced_word(rank, static_cast<int>(rng() % 6), rng);
    int rels = (word_less(a, b) ? 1 : 0) + (word_less(b, a) ? 1 : 0) + (a == b ? 1 : 0);
    CHECK(rels == 1);  // trichotomy
    if (word_less(a, b) && word_less(b, c)) CHECK(word_less(a, c));
  }
}

TEST_CASE("cyclic rotation detection") {
  CHECK(is_cyclic_rotation(W("abc", 3), W("cab", 3)));
  CHECK_FALSE(is_cyclic_rotation(W("abc", 3), W("acb", 3)));
  CHECK(is_cyclic_rotation(Word(2), Word(2)));
}

TEST_CASE("inverse and power behave") {
  CHECK(W("aB", 2).inverse() == W("bA", 2));
  CHECK(power(W("ab", 2), 2) == W("abab", 2));
  CHECK(power(W("ab", 2), -1) == W("BA", 2));
  CHECK(power(W("ab", 2), 0) == Word(2));
  CHECK(multiply(power(W("abA", 2), 3), power(W("abA", 2), -3)) == Word(2));
}

#include "doctest.h"
#include "helpers.hpp"
#include "twist/oracle.hpp"
#include "twist/twisted.hpp"

#include <random>
#include <set>

using namespace twist;
using twist_test::W;
using twist_test::swap_ab;
using twist_test::swap_cert;

namespace {

std::set<std::string> word_set(const TwistedClass& cls) {
  std::set<std::string> out;
  for (const auto& e : cls.elements()) out.insert(format_word(e.word));
  return out;
}

}  // namespace

TEST_CASE("phi shifts move parts through the automorphism") {
  Automorphism swap = swap_ab();
  TwistedElement e = phi_shift(W("ab", 2), 1, ShiftSide::Final, swap);
  CHECK(e.word == W("aa", 2));
  CHECK(e.witness == W("B", 2));
  CHECK(verify_twisted(swap, W("ab", 2), e));

  e = phi_shift(W("ab", 2), 1, ShiftSide::Initial, swap);
  CHECK(e.word == W("bb", 2));
  CHECK(e.witness == W("b", 2));
  CHECK(verify_twisted(swap, W("ab", 2), e));

  e = phi_shift(W("ab", 2), 1, ShiftSide::Final, Automorphism::identity(2));
  CHECK(e.word == W("ba", 2));

  // whole-word shifts through empty-side splits
  CHECK(phi_shift(W("a", 2), 0, ShiftSide::Final, swap).word == W("b", 2));
  CHECK(phi_shift(W("a", 2), 1, ShiftSide::Initial, swap).word == W("b", 2));
  CHECK_THROWS_AS(phi_shift(W("ab", 2), 3, ShiftSide::Final, swap), std::out_of_range);
}

TEST_CASE("cyclically phi-reduced words") {
  Automorphism swap = swap_ab();
  CHECK(is_cyclically_phi_reduced(W("a", 2), swap));
  CHECK_FALSE(is_cyclically_phi_reduced(W("Ba", 2), swap));
  CHECK(is_cyclically_phi_reduced(Word(2), swap));
}

TEST_CASE("cyclic phi-reduction shortens to a fixpoint with a valid witness") {
  Automorphism swap = swap_ab();
  TwistedElement e = cyclic_phi_reduce(W("Ba", 2), swap);
  CHECK(e.word == Word(2));
  CHECK(e.witness == W("A", 2));
  CHECK(verify_twisted(swap, W("Ba", 2), e));

  e = cyclic_phi_reduce(W("a", 2), swap);
  CHECK(e.word == W("a", 2));
  CHECK(e.witness == Word(2));

  e = cyclic_phi_reduce(W("abA", 2), Automorphism::identity(2));
  CHECK(e.word == W("b", 2));
  CHECK(verify_twisted(Automorphism::identity(2), W("abA", 2), e));
}

TEST_CASE("the twisted action composes") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    Fixture f = twist_test::sample_fixture(rng);
    Word v = random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 8), rng);
    Word x = random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 5), rng);
    Word y = random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 5), rng);
    CHECK(twisted_action(f.phi, twisted_action(f.phi, v, x), y) ==
          twisted_action(f.phi, v, multiply(x, y)));
  }
}

TEST_CASE("class construction on the swap automorphism") {
  Automorphism swap = swap_ab();
  VirtuallyInnerCert cert = swap_cert();

  TwistedClass core = build_class_core(W("a", 2), swap, cert);
  CHECK(word_set(core) == std::set<std::string>{"a", "b"});

  TwistedClass trivial = build_class_core(Word(2), swap, cert);
  CHECK(word_set(trivial) == std::set<std::string>{"1"});

  TwistedClass collapsed = build_class_core(W("Ba", 2), swap, cert);
  CHECK(word_set(collapsed) == std::set<std::string>{"1"});

  TwistedClass full_a = build_class(W("a", 2), swap, cert);
  TwistedClass full_b = build_class(W("b", 2), swap, cert);
  CHECK(word_set(full_a) == std::set<std::string>{"a", "b"});
  CHECK(word_set(full_a) == word_set(full_b));
  CHECK(full_a.contains(W("b", 2)));
  CHECK_FALSE(full_a.contains(W("A", 2)));
}

TEST_CASE("every class element carries an exact witness") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 60; ++i) {
    Fixture f = twist_test::sample_fixture(rng);
    Word v = random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 7), rng);
    TwistedClass cls = build_class(v, f.phi, f.cert);
    for (const TwistedElement& e : cls.elements()) {
      CHECK(verify_twisted(f.phi, cls.origin(), e));
      CHECK(is_delta_reduced(e.word, f.cert.delta));
      CHECK(is_cyclically_phi_reduced(e.word, f.phi));
    }
  }
}

TEST_CASE("normal forms") {
  Automorphism swap = swap_ab();
  VirtuallyInnerCert cert = swap_cert();
  TwistedElement nf = normal_form(W("b", 2), swap, cert);
  CHECK(nf.word == W("a", 2));
  CHECK(verify_twisted(swap, W("b", 2), nf));
  CHECK(normal_form(Word(2), swap, cert).word == Word(2));
  nf = normal_form(W("Ba", 2), swap, cert);
  CHECK(nf.word == Word(2));
  CHECK(verify_twisted(swap, W("Ba", 2), nf));
}

TEST_CASE("decide produces verified witnesses and rejects non-conjugates") {
  Automorphism swap = swap_ab();
  VirtuallyInnerCert cert = swap_cert();
  auto x = decide_twisted_conjugacy(W("a", 2), W("b", 2), swap, cert);
  REQUIRE(x.has_value());
  CHECK(verify_makanin(swap, W("a", 2), W("b", 2), *x));
  CHECK_FALSE(decide_twisted_conjugacy(W("a", 2), W("A", 2), swap, cert).has_value());
  auto y = decide_twisted_conjugacy(Word(2), W("Ba", 2), swap, cert);
  REQUIRE(y.has_value());
  CHECK(verify_makanin(swap, Word(2), W("Ba", 2), *y));
}

TEST_CASE("normal form is invariant under the twisted action") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 150; ++i) {
    Fixture f = twist_test::sample_fixture(rng);
    Word v = random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 7), rng);
    Word x = random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 6), rng);
    CHECK(normal_form(twisted_action(f.phi, v, x), f.phi, f.cert).word ==
          normal_form(v, f.phi, f.cert).word);
  }
}

TEST_CASE("classes saturate: power translates add nothing beyond m") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 30; ++i) {
    Fixture f = twist_test::sample_fixture(rng);
    Word v = random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 6), rng);
    TwistedClass full = build_class(v, f.phi, f.cert);
    auto full_words = word_set(full);
    for (int k = f.cert.m; k < 2 * f.cert.m; ++k) {
      TwistedClass translate = build_class_core(apply_power(f.phi, f.cert, k, v), f.phi, f.cert);
      for (const auto& w : word_set(translate)) CHECK(full_words.count(w) == 1);
    }
  }
}

TEST_CASE("class membership determines the class") {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 25; ++i) {
    Fixture f = twist_test::sample_fixture(rng);
    Word v = random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 6), rng);
    TwistedClass cls = build_class(v, f.phi, f.cert);
    auto words = word_set(cls);
    std::size_t step = std::max<std::size_t>(1, cls.size() / 4);
    for (std::size_t j = 0; j < cls.size(); j += step) {
      TwistedClass other = build_class(cls.elements()[j].word, f.phi, f.cert);
      CHECK(word_set(other) == words);
    }
    // twisted translates generate the same class
    Word x = random_reduced_word(f.phi.rank(), 1 + static_cast<int>(rng() % 7), rng);
    TwistedClass shifted = build_class(twisted_action(f.phi, v, x), f.phi, f.cert);
    CHECK(word_set(shifted) == words);
  }
}

TEST_CASE("decide is an equivalence on constructed classes") {
  std::mt19937_64 rng(46);
  for (int i = 0; i < 25; ++i) {
    Fixture f = twist_test::sample_fixture(rng);
    Word v = random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 5), rng);
    Word a = twisted_action(f.phi, v, random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 5), rng));
    Word b = twisted_action(f.phi, v, random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 5), rng));
    Word c = twisted_action(f.phi, v, random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 5), rng));
    auto self = decide_twisted_conjugacy(a, a, f.phi, f.cert);
    REQUIRE(self.has_value());
    CHECK(verify_makanin(f.phi, a, a, *self));
    auto ab = decide_twisted_conjugacy(a, b, f.phi, f.cert);
    auto ba = decide_twisted_conjugacy(b, a, f.phi, f.cert);
    auto bc = decide_twisted_conjugacy(b, c, f.phi, f.cert);
    auto ac = decide_twisted_conjugacy(a, c, f.phi, f.cert);
    REQUIRE(ab.has_value());
    REQUIRE(ba.has_value());
    REQUIRE(bc.has_value());
    REQUIRE(ac.has_value());
    CHECK(verify_makanin(f.phi, a, b, *ab));
    CHECK(verify_makanin(f.phi, b, a, *ba));
    CHECK(verify_makanin(f.phi, b, c, *bc));
    CHECK(verify_makanin(f.phi, a, c, *ac));
  }
}

TEST_CASE("identity automorphism degenerates to ordinary conjugacy") {
  Automorphism id = Automorphism::identity(2);
  VirtuallyInnerCert cert{1, Word(2)};
  std::mt19937_64 rng(47);
  for (int i = 0; i < 150; ++i) {
    Word u = random_reduced_word(2, static_cast<int>(rng() % 7), rng);
    Word v = random_reduced_word(2, static_cast<int>(rng() % 7), rng);
    bool conjugate_words = is_cyclic_rotation(cyclic_reduce(u).core, cyclic_reduce(v).core);
    auto x = decide_twisted_conjugacy(u, v, id, cert);
    CHECK(x.has_value() == conjugate_words);
    if (x) CHECK(verify_makanin(id, u, v, *x));
  }
}

TEST_CASE("size cap aborts loudly") {
  Automorphism swap = swap_ab();
  VirtuallyInnerCert cert = swap_cert();
  BuildOptions opts;
  opts.size_cap = 1;
  CHECK_THROWS_AS(build_class(W("a", 2), swap, cert, opts), cap_exceeded);
}

TEST_CASE("serial and parallel closures are byte-identical") {
  std::mt19937_64 rng(48);
  for (int i = 0; i < 20; ++i) {
    Fixture f = twist_test::sample_fixture(rng);
    Word v = random_reduced_word(f.phi.rank(), 2 + static_cast<int>(rng() % 8), rng);
    BuildOptions serial;
    serial.exec = ExecMode::Serial;
    BuildOptions parallel;
    parallel.exec = ExecMode::Parallel;
    TwistedClass a = build_class(v, f.phi, f.cert, serial);
    TwistedClass b = build_class(v, f.phi, f.cert, parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
      CHECK(a.elements()[j].word == b.elements()[j].word);
      CHECK(a.elements()[j].witness == b.elements()[j].witness);
    }
  }
}

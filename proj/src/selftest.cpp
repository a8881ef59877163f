#include "twist/selftest.hpp"

#include <random>
#include <string>
#include <vector>

#include "twist/delta.hpp"
#include "twist/oracle.hpp"
#include "twist/twisted.hpp"

namespace twist {

namespace {

struct Tally {
  int passed = 0;
  int failed = 0;
  void check(bool ok) { ok ? ++passed : ++failed; }
};

Fixture pick_fixture(std::mt19937_64& rng) {
  const int rank = 2 + static_cast<int>(rng() % 2);
  static const int orders[] = {1, 1, 2, 2, 3, 4};
  int order = orders[rng() % 6];
  if (order > rank && order % 2 != 0) order = rank;
  const int wl = static_cast<int>(rng() % 3);
  return random_fixture(rank, order, wl, rng());
}

}  // namespace

int run_selftest(std::uint64_t seed, std::ostream& out) {
  std::mt19937_64 rng(seed);
  int total_passed = 0, total_failed = 0;
  auto report = [&](const char* name, const Tally& t) {
    out << name << ": " << t.passed << " passed, " << t.failed << " failed\n";
    total_passed += t.passed;
    total_failed += t.failed;
  };

  {
    Tally t;
    for (int i = 0; i < 300; ++i) {
      const int rank = 2 + static_cast<int>(rng() % 3);
      Word a = random_reduced_word(rank, static_cast<int>(rng() % 12), rng);
      Word b = random_reduced_word(rank, static_cast<int>(rng() % 12), rng);
      t.check(reduce(a) == a);
      Word ab = multiply(a, b);
      t.check(ab.size() <= a.size() + b.size());
      std::size_t lo = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
      t.check(ab.size() >= lo);
      CyclicReduction cr = cyclic_reduce(a);
      t.check(conjugate(cr.core, cr.conj) == a);
    }
    report("word algebra", t);
  }

  {
    Tally t;
    for (int i = 0; i < 40; ++i) {
      Fixture f = pick_fixture(rng);
      for (int g = 1; g <= f.phi.rank(); ++g) {
        Word gen = Word::generator(g, f.phi.rank());
        t.check(f.phi.apply(f.phi.inverse_image(g)) == gen);
        t.check(apply_power(f.phi, f.cert, f.cert.m, gen) == conjugate(gen, f.cert.delta));
      }
      t.check(f.phi.apply(f.cert.delta) == f.cert.delta);
      Word w = random_reduced_word(f.phi.rank(), 6, rng);
      long k = static_cast<long>(rng() % 9) - 4;
      Word via_cert = apply_power(f.phi, f.cert, k, w);
      Word naive = reduce(w);
      const Automorphism inv = inverse(f.phi);
      for (long j = 0; j < (k < 0 ? -k : k); ++j) naive = k >= 0 ? f.phi.apply(naive) : inv.apply(naive);
      t.check(via_cert == naive);
    }
    report("automorphism powers", t);
  }

  {
    Tally t;
    for (int i = 0; i < 150; ++i) {
      const int rank = 2 + static_cast<int>(rng() % 2);
      Word v = random_reduced_word(rank, 1 + static_cast<int>(rng() % 8), rng);
      Word d = random_reduced_word(rank, 1 + static_cast<int>(rng() % 5), rng);
      DeltaReduction fast = delta_reduce(v, d);
      DeltaReduction slow = delta_reduce_oracle(v, d, default_window(v, d));
      t.check(fast.word.size() == slow.word.size());
      t.check(conjugate_by_power(v, d, fast.power) == fast.word);
    }
    report("delta reduction", t);
  }

  {
    Tally t;
    for (int i = 0; i < 60; ++i) {
      Fixture f = pick_fixture(rng);
      Word v = random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 7), rng);
      Word x = random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 5), rng);
      Word shifted = twisted_action(f.phi, v, x);
      auto witness = decide_twisted_conjugacy(shifted, v, f.phi, f.cert);
      t.check(witness.has_value());
      if (witness) t.check(verify_makanin(f.phi, shifted, v, *witness));
      t.check(normal_form(shifted, f.phi, f.cert).word == normal_form(v, f.phi, f.cert).word);
    }
    report("twisted classes", t);
  }

  {
    Tally t;
    for (int i = 0; i < 80; ++i) {
      Fixture f = pick_fixture(rng);
      Word u = random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 6), rng);
      Word x = random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 5), rng);
      t.check(mapping_torus_check(twisted_action(f.phi, u, x), u, x, f.phi, f.cert));
    }
    report("mapping torus", t);
  }

  {
    Tally t;
    for (int i = 0; i < 40; ++i) {
      Fixture f = pick_fixture(rng);
      Word u = random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 5), rng);
      Word v = random_reduced_word(f.phi.rank(), static_cast<int>(rng() % 5), rng);
      auto brute = brute_force_decide(u, v, f.phi, 4);
      if (brute) {
        t.check(verify_makanin(f.phi, u, v, *brute));
        auto fast = decide_twisted_conjugacy(u, v, f.phi, f.cert);
        t.check(fast.has_value() && verify_makanin(f.phi, u, v, *fast));
      } else {
        t.check(true);
      }
    }
    report("oracle agreement", t);
  }

  out << "selftest: " << total_passed << " passed, " << total_failed << " failed\n";
  return total_failed;
}

}  // namespace twist

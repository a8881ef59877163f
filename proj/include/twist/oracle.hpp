// Independent ground truth: bounded brute-force witness search, arithmetic
// in the mapping torus of phi, and reproducible random fixtures of
// virtually inner automorphisms.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "twist/automorphism.hpp"
#include "twist/exec.hpp"
#include "twist/twisted.hpp"
#include "twist/word.hpp"

namespace twist {

// An element t^t_exp tail of the extension <x_1..x_n, t | t^-1 x_i t = phi(x_i)>.
// Multiplication: (a, w)(b, v) = (a + b, reduce(phi^b(w) v)).
struct TorusElement {
  long t_exp;
  Word tail;
};

TorusElement torus_identity(int rank);
TorusElement torus_multiply(const TorusElement& a, const TorusElement& b, const Automorphism& phi,
                            const VirtuallyInnerCert& cert);
TorusElement torus_inverse(const TorusElement& a, const Automorphism& phi, const VirtuallyInnerCert& cert);
bool torus_equal(const TorusElement& a, const TorusElement& b);

// Checks x^-1 (t v) x == t u two ways: in torus arithmetic and directly in
// the free group as reduce(phi(x^-1) v x) == reduce(u). True only when both
// routes agree and hold; a metamorphic check of the whole stack.
bool mapping_torus_check(const Word& u, const Word& v, const Word& x, const Automorphism& phi,
                         const VirtuallyInnerCert& cert);

// First reduced X in word_less order with |X| <= max_len and
// phi(X) u == v X, or nullopt if none exists within the bound (which is not
// evidence of non-conjugacy). The parallel path scans each length stratum
// with a deterministic least-index reduction and returns the same witness
// as the serial path.
std::optional<Word> brute_force_decide(const Word& u, const Word& v, const Automorphism& phi, int max_len,
                                       ExecMode exec = default_exec_mode());

// A virtually inner automorphism built as f |-> W^-1 sigma(f) W for a
// signed generator permutation sigma of exact order m and a random reduced
// word W; the certificate is (m, sigma^{m-1}(W)...sigma(W) W) and is
// verified before the fixture is returned.
struct Fixture {
  Automorphism phi;
  VirtuallyInnerCert cert;
  std::uint64_t seed;
  std::vector<Letter> sigma;  // sigma(x_i) as a single letter
  Word conjugator;            // W
};

// Deterministic in (rank, sigma_order, w_len, seed). Throws
// std::invalid_argument when no signed permutation of the rank has the
// requested order.
Fixture random_fixture(int rank, int sigma_order, int w_len, std::uint64_t seed);

// Fixture assembled from explicit parts (sigma images, conjugator).
Fixture fixture_from(const std::vector<Letter>& sigma, const Word& conjugator);

Word random_reduced_word(int rank, int len, std::mt19937_64& rng);

}  // namespace twist

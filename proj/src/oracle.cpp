#include "twist/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace twist {

TorusElement torus_identity(int rank) { return {0, Word(rank)}; }

TorusElement torus_multiply(const TorusElement& a, const TorusElement& b, const Automorphism& phi,
                            const VirtuallyInnerCert& cert) {
  return {a.t_exp + b.t_exp, multiply(apply_power(phi, cert, b.t_exp, a.tail), b.tail)};
}

TorusElement torus_inverse(const TorusElement& a, const Automorphism& phi, const VirtuallyInnerCert& cert) {
  return {-a.t_exp, apply_power(phi, cert, -a.t_exp, a.tail.inverse())};
}

bool torus_equal(const TorusElement& a, const TorusElement& b) {
  return a.t_exp == b.t_exp && reduce(a.tail) == reduce(b.tail);
}

bool mapping_torus_check(const Word& u, const Word& v, const Word& x, const Automorphism& phi,
                         const VirtuallyInnerCert& cert) {
  TorusElement xe{0, reduce(x)};
  TorusElement tv{1, reduce(v)};
  TorusElement lhs =
      torus_multiply(torus_multiply(torus_inverse(xe, phi, cert), tv, phi, cert), xe, phi, cert);
  bool torus_holds = torus_equal(lhs, TorusElement{1, reduce(u)});
  bool direct_holds = twisted_action(phi, v, x) == reduce(u);
  return torus_holds == direct_holds && direct_holds;
}

// --- brute-force enumeration ---------------------------------------------------

namespace {

std::uint64_t stratum_size(int rank, int len) {
  if (len == 0) return 1;
  std::uint64_t total = static_cast<std::uint64_t>(2 * rank);
  for (int i = 1; i < len; ++i) total *= static_cast<std::uint64_t>(2 * rank - 1);
  return total;
}

Letter letter_for_key(int key) { return Letter(key / 2 + 1, key % 2 == 0 ? 1 : -1); }

// idx-th reduced word of the given length, in word_less order.
Word word_at(int rank, int len, std::uint64_t idx) {
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(len));
  if (len == 0) return Word(rank);
  std::uint64_t radix = 1;
  for (int i = 1; i < len; ++i) radix *= static_cast<std::uint64_t>(2 * rank - 1);
  int digit = static_cast<int>(idx / radix);
  idx %= radix;
  letters.push_back(letter_for_key(digit));
  for (int pos = 1; pos < len; ++pos) {
    radix /= static_cast<std::uint64_t>(2 * rank - 1);
    int d = static_cast<int>(idx / radix);
    idx %= radix;
    const int banned = letters.back().inverse().order_key();
    if (d >= banned) ++d;
    letters.push_back(letter_for_key(d));
  }
  return Word(std::move(letters), rank);
}

}  // namespace

std::optional<Word> brute_force_decide(const Word& u, const Word& v, const Automorphism& phi, int max_len,
                                       ExecMode exec) {
  if (u.rank() != phi.rank() || v.rank() != phi.rank())
    throw std::invalid_argument("brute_force_decide: rank mismatch");
  const Word ur = reduce(u), vr = reduce(v);
  const int rank = phi.rank();

  auto hit = [&](const Word& x) { return multiply(phi.apply(x), ur) == multiply(vr, x); };

  for (int len = 0; len <= max_len; ++len) {
    const std::uint64_t total = stratum_size(rank, len);
#ifdef _OPENMP
    if (exec == ExecMode::Parallel && total > 256) {
      std::uint64_t best = total;
#pragma omp parallel
      {
        std::uint64_t local = total;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
          std::uint64_t idx = static_cast<std::uint64_t>(i);
          if (idx < local && hit(word_at(rank, len, idx))) local = idx;
        }
#pragma omp critical
        best = std::min(best, local);
      }
      if (best < total) return word_at(rank, len, best);
      continue;
    }
#endif
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Word x = word_at(rank, len, idx);
      if (hit(x)) return x;
    }
  }
  return std::nullopt;
}

// --- fixtures -------------------------------------------------------------------

namespace {

Word apply_signed_permutation(const std::vector<Letter>& sigma, const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w) {
    Letter img = sigma[static_cast<std::size_t>(l.index()) - 1];
    out.push_back(l.sign() > 0 ? img : img.inverse());
  }
  return Word(std::move(out), w.rank());
}

// Order as the lcm over signed cycles (a cycle of length l counts double
// when its sign product is -1); -1 when sigma is not a permutation.
int signed_permutation_order(const std::vector<Letter>& sigma, int rank) {
  std::vector<int> image_count(static_cast<std::size_t>(rank) + 1, 0);
  for (Letter l : sigma) {
    if (l.index() > rank) return -1;
    ++image_count[static_cast<std::size_t>(l.index())];
  }
  for (int i = 1; i <= rank; ++i)
    if (image_count[static_cast<std::size_t>(i)] != 1) return -1;

  std::vector<char> seen(static_cast<std::size_t>(rank) + 1, 0);
  long order = 1;
  for (int start = 1; start <= rank; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0, sign = 1, cur = start;
    do {
      seen[static_cast<std::size_t>(cur)] = 1;
      ++len;
      Letter img = sigma[static_cast<std::size_t>(cur) - 1];
      sign *= img.sign();
      cur = img.index();
    } while (cur != start);
    order = std::lcm(order, static_cast<long>(sign > 0 ? len : 2 * len));
    if (order > 1'000'000) return -1;
  }
  return static_cast<int>(order);
}

// A signed generator permutation of the requested exact order: a plain
// cycle of length `order`, or an inverting cycle of length order/2, with
// the remaining generators fixed (inverted only when that keeps the order).
std::vector<Letter> make_signed_permutation(int rank, int order, std::mt19937_64& rng) {
  if (order < 1) throw std::invalid_argument("sigma order must be positive");
  std::vector<int> labels(static_cast<std::size_t>(rank));
  std::iota(labels.begin(), labels.end(), 1);
  std::shuffle(labels.begin(), labels.end(), rng);

  std::vector<Letter> sigma;
  for (int i = 1; i <= rank; ++i) sigma.emplace_back(i, 1);
  auto set = [&](int from, int to, int sign) { sigma[static_cast<std::size_t>(from) - 1] = Letter(to, sign); };

  int cycle_len = 0;
  bool invert_last = false;
  if (order <= rank) {
    cycle_len = order;
  } else if (order % 2 == 0 && order / 2 <= rank) {
    cycle_len = order / 2;
    invert_last = true;
  } else {
    throw std::invalid_argument("sigma order " + std::to_string(order) + " not achievable at rank " +
                                std::to_string(rank));
  }
  for (int i = 0; i < cycle_len; ++i) {
    int from = labels[static_cast<std::size_t>(i)];
    int to = labels[static_cast<std::size_t>((i + 1) % cycle_len)];
    set(from, to, invert_last && i == cycle_len - 1 ? -1 : 1);
  }
  if (order % 2 == 0) {
    // free decoration: inverted fixed points have order 2, which divides order
    for (int i = cycle_len; i < rank; ++i)
      if (rng() % 2 == 0) {
        int g = labels[static_cast<std::size_t>(i)];
        set(g, g, -1);
      }
  }
  if (signed_permutation_order(sigma, rank) != order)
    throw std::logic_error("constructed permutation has the wrong order");
  return sigma;
}

}  // namespace

Word random_reduced_word(int rank, int len, std::mt19937_64& rng) {
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    int options = letters.empty() ? 2 * rank : 2 * rank - 1;
    int pick = static_cast<int>(rng() % static_cast<std::uint64_t>(options));
    if (!letters.empty() && pick >= letters.back().inverse().order_key()) ++pick;
    letters.push_back(Letter(pick / 2 + 1, pick % 2 == 0 ? 1 : -1));
  }
  return Word(std::move(letters), rank);
}

Fixture fixture_from(const std::vector<Letter>& sigma, const Word& conjugator) {
  const int rank = conjugator.rank();
  if (sigma.size() != static_cast<std::size_t>(rank))
    throw std::invalid_argument("fixture_from: sigma size mismatch");
  const int m = signed_permutation_order(sigma, rank);
  if (m < 1) throw std::invalid_argument("fixture_from: sigma is not a permutation of finite order");
  const Word w = reduce(conjugator);

  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i)
    images.push_back(conjugate(apply_signed_permutation(sigma, Word::generator(i, rank)), w));
  Automorphism phi = Automorphism::from_images(std::move(images));

  Word delta = w;
  Word translate = w;
  for (int j = 1; j < m; ++j) {
    translate = apply_signed_permutation(sigma, translate);
    delta = multiply(translate, delta);
  }
  VirtuallyInnerCert cert{m, delta};
  if (!verify_cert(phi, cert)) throw std::logic_error("fixture certificate failed verification");
  return Fixture{std::move(phi), std::move(cert), 0, sigma, w};
}

Fixture random_fixture(int rank, int sigma_order, int w_len, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0xd1b54a32d192ed03ull);
  std::vector<Letter> sigma = make_signed_permutation(rank, sigma_order, rng);
  Word w = random_reduced_word(rank, w_len, rng);
  Fixture f = fixture_from(sigma, w);
  f.seed = seed;
  return f;
}

}  // namespace twist

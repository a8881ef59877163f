#include "twist/automorphism.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace twist {

namespace {

void push_cancelling(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse())
    out.pop_back();
  else
    out.push_back(l);
}

Word substitute(const Word& w, const std::vector<Word>& pos, const std::vector<Word>& neg, int rank) {
  std::vector<Letter> out;
  out.reserve(w.size() * 2);
  for (Letter l : w) {
    const Word& img = l.sign() > 0 ? pos[static_cast<std::size_t>(l.index()) - 1]
                                   : neg[static_cast<std::size_t>(l.index()) - 1];
    for (Letter m : img) push_cancelling(out, m);
  }
  return Word(std::move(out), rank);
}

std::vector<Word> negated(const std::vector<Word>& images) {
  std::vector<Word> out;
  out.reserve(images.size());
  for (const Word& w : images) out.push_back(w.inverse());
  return out;
}

}  // namespace

Automorphism::Automorphism(int rank, std::vector<Word> images, std::vector<Word> inverse_images)
    : rank_(rank),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)),
      images_neg_(negated(images_)),
      inverse_images_neg_(negated(inverse_images_)) {}

Automorphism Automorphism::identity(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  std::vector<Word> gens;
  for (int i = 1; i <= rank; ++i) gens.push_back(Word::generator(i, rank));
  return Automorphism(rank, gens, gens);
}

Automorphism Automorphism::inner(const Word& delta) {
  const int rank = delta.rank();
  const Word d = reduce(delta);
  std::vector<Word> img, inv;
  for (int i = 1; i <= rank; ++i) {
    img.push_back(conjugate(Word::generator(i, rank), d));
    inv.push_back(conjugate(Word::generator(i, rank), d.inverse()));
  }
  return Automorphism(rank, std::move(img), std::move(inv));
}

Word Automorphism::apply(const Word& w) const {
  if (w.rank() != rank_) throw std::invalid_argument("automorphism/word rank mismatch");
  return substitute(w, images_, images_neg_, rank_);
}

Word Automorphism::apply_inverse(const Word& w) const {
  if (w.rank() != rank_) throw std::invalid_argument("automorphism/word rank mismatch");
  return substitute(w, inverse_images_, inverse_images_neg_, rank_);
}

Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  if (outer.rank() != inner.rank()) throw std::invalid_argument("automorphism rank mismatch");
  std::vector<Word> img, inv;
  for (int i = 1; i <= outer.rank(); ++i) {
    img.push_back(outer.apply(inner.image(i)));
    inv.push_back(inner.apply_inverse(outer.inverse_image(i)));
  }
  return Automorphism(outer.rank(), std::move(img), std::move(inv));
}

Automorphism inverse(const Automorphism& phi) {
  return Automorphism(phi.rank(), phi.inverse_images(), phi.images());
}

// --- Nielsen reduction -----------------------------------------------------
//
// from_images carries the image tuple to a tuple of single letters by
// elementary Nielsen moves (inversion of one entry, multiplication of one
// entry by another on either side), exploring every move that does not
// increase the entry's length. Any basis reaches a signed permutation of
// the generators along such a path; a tuple that exhausts the reachable set
// without doing so is not a basis. Alongside each entry we track its
// expression in the original images, which at the end spells out the
// inverse automorphism.

namespace {

struct NielsenState {
  std::vector<Word> words;
  std::vector<Word> exprs;  // words[i] == exprs[i] evaluated at the input tuple
  long total;
  std::uint64_t seq;
};

struct NielsenOrder {
  bool operator()(const NielsenState& a, const NielsenState& b) const {
    if (a.total != b.total) return a.total > b.total;
    return a.seq > b.seq;
  }
};

std::string nielsen_key(const std::vector<Word>& words) {
  std::vector<Word> canon;
  canon.reserve(words.size());
  for (const Word& w : words) {
    Word wi = w.inverse();
    canon.push_back(word_less(w, wi) ? w : wi);
  }
  std::sort(canon.begin(), canon.end(), [](const Word& a, const Word& b) { return word_less(a, b); });
  std::string key;
  for (const Word& w : canon) {
    for (Letter l : w) {
      key += std::to_string(l.order_key());
      key += ',';
    }
    key += '|';
  }
  return key;
}

bool is_signed_permutation(const std::vector<Word>& words, std::vector<int>& position_of_index) {
  const int n = static_cast<int>(words.size());
  position_of_index.assign(static_cast<std::size_t>(n) + 1, -1);
  for (int j = 0; j < n; ++j) {
    if (words[static_cast<std::size_t>(j)].size() != 1) return false;
    int idx = words[static_cast<std::size_t>(j)][0].index();
    if (position_of_index[static_cast<std::size_t>(idx)] != -1) return false;
    position_of_index[static_cast<std::size_t>(idx)] = j;
  }
  return true;
}

constexpr std::size_t kNielsenStateBudget = 200000;

}  // namespace

Automorphism Automorphism::from_images(std::vector<Word> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw std::invalid_argument("empty image tuple");
  for (Word& w : images) {
    if (w.rank() != n) throw std::invalid_argument("image rank does not match tuple size");
    w = reduce(w);
    if (w.empty()) throw not_an_automorphism("image tuple contains the identity: not an automorphism");
  }

  NielsenState start;
  start.words = images;
  for (int i = 1; i <= n; ++i) start.exprs.push_back(Word::generator(i, n));
  start.total = 0;
  for (const Word& w : start.words) start.total += static_cast<long>(w.size());
  start.seq = 0;

  std::priority_queue<NielsenState, std::vector<NielsenState>, NielsenOrder> queue;
  std::unordered_set<std::string> visited;
  std::uint64_t seq = 1;
  queue.push(start);
  visited.insert(nielsen_key(start.words));

  auto offer = [&](NielsenState&& st) {
    auto key = nielsen_key(st.words);
    if (visited.insert(std::move(key)).second) {
      st.seq = seq++;
      queue.push(std::move(st));
    }
  };

  while (!queue.empty()) {
    if (visited.size() > kNielsenStateBudget)
      throw cap_exceeded("nielsen reduction exceeded its state budget");
    NielsenState cur = queue.top();
    queue.pop();

    std::vector<int> pos;
    if (is_signed_permutation(cur.words, pos)) {
      std::vector<Word> inv(static_cast<std::size_t>(n), Word(n));
      for (int idx = 1; idx <= n; ++idx) {
        int j = pos[static_cast<std::size_t>(idx)];
        const Word& expr = cur.exprs[static_cast<std::size_t>(j)];
        inv[static_cast<std::size_t>(idx) - 1] =
            cur.words[static_cast<std::size_t>(j)][0].sign() > 0 ? expr : expr.inverse();
      }
      Automorphism result(n, images, inv);
      for (int i = 1; i <= n; ++i) {
        Word gen = Word::generator(i, n);
        if (result.apply(result.inverse_image(i)) != gen || result.apply_inverse(result.image(i)) != gen)
          throw std::logic_error("nielsen reduction produced an inconsistent inverse");
      }
      return result;
    }

    for (int i = 0; i < n; ++i) {
      // inversion of entry i
      {
        NielsenState next = cur;
        next.words[static_cast<std::size_t>(i)] = cur.words[static_cast<std::size_t>(i)].inverse();
        next.exprs[static_cast<std::size_t>(i)] = cur.exprs[static_cast<std::size_t>(i)].inverse();
        offer(std::move(next));
      }
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (int sign : {1, -1}) {
          const Word wj = sign > 0 ? cur.words[static_cast<std::size_t>(j)]
                                   : cur.words[static_cast<std::size_t>(j)].inverse();
          const Word ej = sign > 0 ? cur.exprs[static_cast<std::size_t>(j)]
                                   : cur.exprs[static_cast<std::size_t>(j)].inverse();
          for (int side = 0; side < 2; ++side) {
            Word wi2 = side == 0 ? multiply(cur.words[static_cast<std::size_t>(i)], wj)
                                 : multiply(wj, cur.words[static_cast<std::size_t>(i)]);
            if (wi2.size() > cur.words[static_cast<std::size_t>(i)].size()) continue;
            if (wi2.empty())
              throw not_an_automorphism("image tuple is not a basis: not an automorphism");
            NielsenState next = cur;
            next.words[static_cast<std::size_t>(i)] = wi2;
            next.exprs[static_cast<std::size_t>(i)] =
                side == 0 ? multiply(cur.exprs[static_cast<std::size_t>(i)], ej)
                          : multiply(ej, cur.exprs[static_cast<std::size_t>(i)]);
            next.total = cur.total - static_cast<long>(cur.words[static_cast<std::size_t>(i)].size()) +
                         static_cast<long>(wi2.size());
            offer(std::move(next));
          }
        }
      }
    }
  }
  throw not_an_automorphism("image tuple is not a basis: not an automorphism");
}

Automorphism Automorphism::from_images(std::vector<Word> images, const std::vector<Word>& inverse_images) {
  Automorphism result = from_images(std::move(images));
  if (inverse_images.size() != static_cast<std::size_t>(result.rank()))
    throw std::invalid_argument("inverse image tuple size mismatch");
  for (int i = 1; i <= result.rank(); ++i) {
    if (reduce(inverse_images[static_cast<std::size_t>(i) - 1]) != result.inverse_image(i))
      throw not_an_automorphism("supplied inverse images do not invert the automorphism");
  }
  return result;
}

// --- inner detection and certificates ---------------------------------------

std::optional<Word> detect_inner(const Automorphism& psi) {
  const int n = psi.rank();
  if (n == 1) {
    if (psi.image(1) == Word::generator(1, 1)) return Word(1);
    return std::nullopt;
  }

  // Conjugators sending x1 to psi(x1) form the coset x1^s z0; bound s and
  // check the remaining generators.
  const Word x1 = Word::generator(1, n);
  CyclicReduction cr = cyclic_reduce(psi.image(1));
  if (cr.core != x1) return std::nullopt;
  const Word z0 = cr.conj;

  long bound = 0;
  for (int i = 2; i <= n; ++i) bound = std::max(bound, static_cast<long>(psi.image(i).size()));
  bound += static_cast<long>(z0.size()) + 2;

  auto candidate_works = [&](const Word& delta) {
    for (int i = 1; i <= n; ++i)
      if (conjugate(Word::generator(i, n), delta) != psi.image(i)) return false;
    return true;
  };

  for (long t = 0; t <= bound; ++t) {
    for (long s : {t, -t}) {
      Word delta = multiply(power(x1, s), z0);
      if (candidate_works(delta)) return delta;
      if (t == 0) break;
    }
  }
  return std::nullopt;
}

namespace {

// Exponent-sum matrix; column j holds the abelianized image of x_j.
struct AbelianMatrix {
  int n;
  std::vector<long long> a;  // row-major n x n
  long long& at(int r, int c) { return a[static_cast<std::size_t>(r * n + c)]; }
  long long at(int r, int c) const { return a[static_cast<std::size_t>(r * n + c)]; }
};

AbelianMatrix abelianize(const Automorphism& phi) {
  const int n = phi.rank();
  AbelianMatrix m{n, std::vector<long long>(static_cast<std::size_t>(n) * n, 0)};
  for (int j = 1; j <= n; ++j)
    for (Letter l : phi.image(j)) m.at(l.index() - 1, j - 1) += l.sign();
  return m;
}

bool is_identity(const AbelianMatrix& m) {
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < m.n; ++c)
      if (m.at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

// Returns false when an entry leaves the safe exact range.
bool multiply_matrices(const AbelianMatrix& a, const AbelianMatrix& b, AbelianMatrix& out) {
  constexpr long long kLimit = 1ll << 50;
  out.n = a.n;
  out.a.assign(static_cast<std::size_t>(a.n) * a.n, 0);
  for (int r = 0; r < a.n; ++r)
    for (int k = 0; k < a.n; ++k) {
      long long arc = a.at(r, k);
      if (arc == 0) continue;
      for (int c = 0; c < a.n; ++c) {
        out.at(r, c) += arc * b.at(k, c);
        if (out.at(r, c) > kLimit || out.at(r, c) < -kLimit) return false;
      }
    }
  return true;
}

constexpr std::size_t kPowerGrowthCap = 4'000'000;

}  // namespace

std::optional<VirtuallyInnerCert> find_cert(const Automorphism& phi, int m_max) {
  if (m_max < 1) throw std::invalid_argument("m_max must be positive");
  const AbelianMatrix base = abelianize(phi);
  AbelianMatrix pow = base, scratch{0, {}};
  bool abelian_exact = true;

  // psi tracks phi^p lazily; it is only advanced to powers whose
  // abelianization is the identity.
  Automorphism psi = phi;
  int p = 1;
  for (int m = 1; m <= m_max; ++m) {
    bool candidate = abelian_exact ? is_identity(pow) : true;
    if (candidate) {
      while (p < m) {
        psi = compose(phi, psi);
        ++p;
        std::size_t total = 0;
        for (const Word& w : psi.images()) total += w.size();
        if (total > kPowerGrowthCap)
          throw cap_exceeded("automorphism power growth exceeded the search cap");
      }
      if (auto delta = detect_inner(psi)) return VirtuallyInnerCert{m, *delta};
    }
    if (abelian_exact && m < m_max) {
      if (!multiply_matrices(pow, base, scratch))
        abelian_exact = false;
      else
        std::swap(pow, scratch);
    }
  }
  return std::nullopt;
}

bool verify_cert(const Automorphism& phi, const VirtuallyInnerCert& cert) {
  if (cert.m < 1 || cert.delta.rank() != phi.rank() || !is_reduced(cert.delta)) return false;
  for (int i = 1; i <= phi.rank(); ++i) {
    Word w = Word::generator(i, phi.rank());
    for (int k = 0; k < cert.m; ++k) w = phi.apply(w);
    if (w != conjugate(Word::generator(i, phi.rank()), cert.delta)) return false;
  }
  return true;
}

bool verify_cert_minimal(const Automorphism& phi, const VirtuallyInnerCert& cert) {
  if (!verify_cert(phi, cert)) return false;
  Automorphism psi = phi;
  for (int j = 1; j < cert.m; ++j) {
    if (detect_inner(psi)) return false;
    psi = compose(phi, psi);
  }
  return true;
}

Word apply_power(const Automorphism& phi, const VirtuallyInnerCert& cert, long k, const Word& w) {
  const long m = cert.m;
  long r = ((k % m) + m) % m;
  long q = (k - r) / m;
  Word cur = q == 0 ? reduce(w) : conjugate(w, power(cert.delta, q));
  for (long i = 0; i < r; ++i) cur = phi.apply(cur);
  return cur;
}

// --- text format -------------------------------------------------------------

ParsedAutomorphism parse_automorphism(std::string_view text) {
  int rank = 0;
  std::vector<std::optional<Word>> images, inv_images;
  std::optional<int> m;
  std::optional<std::string> delta_text;

  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw parse_error("line " + std::to_string(line_no) + ": " + msg);
  };

  auto parse_arrow_line = [&](std::istringstream& ls, std::vector<std::optional<Word>>& dst,
                              const char* what) {
    if (rank == 0) fail(std::string("'") + what + "' before 'rank'");
    std::string gen, arrow;
    ls >> gen >> arrow;
    if (arrow != "->") fail("expected '->' after generator");
    Word g = parse_word(gen, rank);
    if (g.size() != 1 || g[0].sign() != 1) fail("left side must be a single generator");
    int idx = g[0].index();
    std::string rest;
    std::getline(ls, rest);
    if (dst[static_cast<std::size_t>(idx) - 1]) fail("duplicate line for generator " + gen);
    dst[static_cast<std::size_t>(idx) - 1] = parse_word(rest, rank);
  };

  while (std::getline(stream, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    try {
      if (head == "rank") {
        if (rank != 0) fail("duplicate 'rank'");
        if (!(ls >> rank) || rank < 1) fail("'rank' needs a positive integer");
        images.assign(static_cast<std::size_t>(rank), std::nullopt);
        inv_images.assign(static_cast<std::size_t>(rank), std::nullopt);
      } else if (head == "phi") {
        parse_arrow_line(ls, images, "phi");
      } else if (head == "inv") {
        parse_arrow_line(ls, inv_images, "inv");
      } else if (head == "m") {
        int value = 0;
        if (!(ls >> value) || value < 1) fail("'m' needs a positive integer");
        m = value;
      } else if (head == "delta") {
        std::string rest;
        std::getline(ls, rest);
        delta_text = rest;
      } else {
        fail("unknown directive '" + head + "'");
      }
    } catch (const parse_error&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

  if (rank == 0) throw parse_error("missing 'rank' line");
  std::vector<Word> imgs;
  for (int i = 1; i <= rank; ++i) {
    if (!images[static_cast<std::size_t>(i) - 1])
      throw parse_error("missing 'phi x" + std::to_string(i) + " -> ...' line");
    imgs.push_back(reduce(*images[static_cast<std::size_t>(i) - 1]));
  }

  bool any_inv = false, all_inv = true;
  for (const auto& w : inv_images) {
    if (w)
      any_inv = true;
    else
      all_inv = false;
  }
  if (any_inv && !all_inv) throw parse_error("'inv' lines must cover every generator or be absent");

  Automorphism phi = [&] {
    if (any_inv) {
      std::vector<Word> invs;
      for (const auto& w : inv_images) invs.push_back(reduce(*w));
      return Automorphism::from_images(std::move(imgs), invs);
    }
    return Automorphism::from_images(std::move(imgs));
  }();

  if (m.has_value() != delta_text.has_value())
    throw parse_error("'m' and 'delta' must be given together");
  std::optional<VirtuallyInnerCert> cert;
  if (m) {
    VirtuallyInnerCert c{*m, reduce(parse_word(*delta_text, rank))};
    if (!verify_cert_minimal(phi, c))
      throw parse_error("supplied (m, delta) is not a minimal inner-power certificate");
    cert = std::move(c);
  }
  return ParsedAutomorphism{std::move(phi), std::move(cert)};
}

std::string format_automorphism(const Automorphism& phi, const VirtuallyInnerCert* cert) {
  std::ostringstream out;
  out << "rank " << phi.rank() << '\n';
  for (int i = 1; i <= phi.rank(); ++i)
    out << "phi " << format_word(Word::generator(i, phi.rank())) << " -> " << format_word(phi.image(i))
        << '\n';
  if (cert) out << "m " << cert->m << '\n' << "delta " << format_word(cert->delta) << '\n';
  for (int i = 1; i <= phi.rank(); ++i)
    out << "inv " << format_word(Word::generator(i, phi.rank())) << " -> "
        << format_word(phi.inverse_image(i)) << '\n';
  return out.str();
}

}  // namespace twist

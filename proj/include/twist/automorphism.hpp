// Automorphisms of a finitely generated free group: application,
// composition, inversion via Nielsen moves, inner-automorphism detection,
// and virtually inner certificates (m, delta) with phi^m = conjugation by
// delta.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twist/word.hpp"

namespace twist {

// Thrown when an image tuple does not define an automorphism.
class not_an_automorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Automorphism {
 public:
  static Automorphism identity(int rank);
  // f |-> delta^-1 f delta
  static Automorphism inner(const Word& delta);
  // Derives the inverse images by Nielsen reduction of the tuple; throws
  // not_an_automorphism when the images are not a basis.
  static Automorphism from_images(std::vector<Word> images);
  // As above but cross-checks user-supplied inverse images.
  static Automorphism from_images(std::vector<Word> images, const std::vector<Word>& inverse_images);

  int rank() const { return rank_; }
  const Word& image(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
  const Word& inverse_image(int i) const { return inverse_images_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<Word>& images() const { return images_; }
  const std::vector<Word>& inverse_images() const { return inverse_images_; }

  Word apply(const Word& w) const;
  Word apply_inverse(const Word& w) const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.rank_ == b.rank_ && a.images_ == b.images_;
  }
  friend Automorphism compose(const Automorphism& outer, const Automorphism& inner);
  friend Automorphism inverse(const Automorphism& phi);

 private:
  Automorphism(int rank, std::vector<Word> images, std::vector<Word> inverse_images);
  int rank_;
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
  // cached images of inverse letters
  std::vector<Word> images_neg_;
  std::vector<Word> inverse_images_neg_;
};

// outer after inner: (compose(f, g))(w) == f(g(w))
Automorphism compose(const Automorphism& outer, const Automorphism& inner);
Automorphism inverse(const Automorphism& phi);

// The unique reduced delta with psi(f) = delta^-1 f delta for all f, if psi
// is inner (unique for rank >= 2; delta = 1 in rank 1).
std::optional<Word> detect_inner(const Automorphism& psi);

// Certificate that phi^m is the inner automorphism f |-> delta^-1 f delta,
// with m minimal.
struct VirtuallyInnerCert {
  int m;
  Word delta;
};

// Checks the defining identity phi^m(x_i) = delta^-1 x_i delta.
bool verify_cert(const Automorphism& phi, const VirtuallyInnerCert& cert);
// verify_cert plus minimality of m.
bool verify_cert_minimal(const Automorphism& phi, const VirtuallyInnerCert& cert);

// Least m <= m_max whose power is inner, with its conjugator. Powers whose
// abelianization is not the identity matrix are skipped without any
// word-level search; if no abelianized power returns to the identity the
// result is nullopt without composing phi at all.
std::optional<VirtuallyInnerCert> find_cert(const Automorphism& phi, int m_max);

// phi^k(w) for any integer k, folded through the certificate:
// with k = m q + r (0 <= r < m), phi^k(w) = phi^r(delta^-q w delta^q).
Word apply_power(const Automorphism& phi, const VirtuallyInnerCert& cert, long k, const Word& w);

// Line-based text format:
//   rank <n>
//   phi x<i> -> <word>        (one line per generator)
//   m <int>                   (optional, with delta)
//   delta <word>              (optional, with m)
//   inv x<i> -> <word>        (optional cross-check, all n lines or none)
// '#' starts a comment. A supplied (m, delta) pair is verified, including
// minimality of m, not trusted.
struct ParsedAutomorphism {
  Automorphism phi;
  std::optional<VirtuallyInnerCert> cert;
};
ParsedAutomorphism parse_automorphism(std::string_view text);
std::string format_automorphism(const Automorphism& phi, const VirtuallyInnerCert* cert = nullptr);

}  // namespace twist

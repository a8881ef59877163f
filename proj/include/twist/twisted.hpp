// Twisted conjugacy machinery for a virtually inner automorphism phi:
// cyclic phi-shifts, the finite class sets closed under shifts and
// delta-power conjugation, the length-lexicographic normal form, and the
// decision procedure with explicit witnesses.
//
// Throughout, the twisted action of x on v is
//   tau_x(v) = reduce(phi(x^-1) v x),
// and u, v are twisted conjugate when some x relates them; equivalently the
// equation phi(X) u = v X has a solution X.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twist/automorphism.hpp"
#include "twist/delta.hpp"
#include "twist/exec.hpp"
#include "twist/word.hpp"

namespace twist {

// A word together with the witness relating it to a contextual origin:
// word == reduce(phi(witness^-1) origin witness).
struct TwistedElement {
  Word word;
  Word witness;
};

struct BuildOptions {
  std::size_t size_cap = 100000;
  long window = 0;  // 0 = default_window per word
  ExecMode exec = default_exec_mode();
  std::vector<std::string>* trace = nullptr;
};

// The finite set of delta-reduced, cyclically phi-reduced words reachable
// from an origin word, each with a witness back to the origin. Elements are
// word_less-sorted and pairwise distinct.
class TwistedClass {
 public:
  TwistedClass(Word origin, Automorphism phi, VirtuallyInnerCert cert, std::vector<TwistedElement> elements)
      : origin_(std::move(origin)), phi_(std::move(phi)), cert_(std::move(cert)),
        elements_(std::move(elements)) {}

  const Word& origin() const { return origin_; }
  const Automorphism& phi() const { return phi_; }
  const VirtuallyInnerCert& cert() const { return cert_; }
  const std::vector<TwistedElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Word& w) const;
  std::vector<Word> words() const;

 private:
  Word origin_;
  Automorphism phi_;
  VirtuallyInnerCert cert_;
  std::vector<TwistedElement> elements_;
};

// reduce(phi(x^-1) v x)
Word twisted_action(const Automorphism& phi, const Word& v, const Word& x);

// word == tau_witness(origin), exactly after reduction
bool verify_twisted(const Automorphism& phi, const Word& origin, const TwistedElement& e);

// reduce(phi(x) u) == reduce(v x)
bool verify_makanin(const Automorphism& phi, const Word& u, const Word& v, const Word& x);

// Cyclic shift of a final or initial part through phi. v splits as
// head|tail at `split`; the final-side shift returns reduce(phi(tail) head)
// with witness tail^-1, the initial-side shift returns
// reduce(tail phi^-1(head)) with witness phi^-1(head). Splits with an empty
// side are allowed, so whole-word shifts give reduce(phi^{+-1}(v)).
enum class ShiftSide { Initial, Final };
TwistedElement phi_shift(const Word& v, std::size_t split, ShiftSide side, const Automorphism& phi);

// Neither single-letter shift shortens v.
bool is_cyclically_phi_reduced(const Word& v, const Automorphism& phi);

// Applies whichever single-letter shift strictly shortens the word
// (final side preferred) until none does; witnesses compose along the way.
TwistedElement cyclic_phi_reduce(const Word& v, const Automorphism& phi,
                                 std::vector<std::string>* trace = nullptr);

// Alternates delta-reduction and cyclic phi-reduction to a fixpoint.
TwistedElement normalize_twisted(const Word& v, const Automorphism& phi, const VirtuallyInnerCert& cert,
                                 std::vector<std::string>* trace = nullptr);

// Fixpoint closure of the normalized origin under (i) conjugation by delta
// powers within the minimal-length class, and (ii) all phi-shifts followed
// by renormalization. Aborts with cap_exceeded past options.size_cap.
TwistedClass build_class_core(const Word& v, const Automorphism& phi, const VirtuallyInnerCert& cert,
                              const BuildOptions& options = {});

// Union of the core classes of phi^k(v) for k = 0..m-1, with witnesses
// threaded back to v. This is the full canonical finite slice of the
// twisted conjugacy class of v.
TwistedClass build_class(const Word& v, const Automorphism& phi, const VirtuallyInnerCert& cert,
                         const BuildOptions& options = {});

// word_less-least element of build_class(v), witness from origin v.
TwistedElement normal_form(const Word& v, const Automorphism& phi, const VirtuallyInnerCert& cert,
                           const BuildOptions& options = {});

// Witness X with phi(X) u = v X when u and v are twisted conjugate,
// nullopt otherwise. The witness is re-verified before being returned.
std::optional<Word> decide_twisted_conjugacy(const Word& u, const Word& v, const Automorphism& phi,
                                             const VirtuallyInnerCert& cert,
                                             const BuildOptions& options = {});

}  // namespace twist

#include "twist/twisted.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace twist {

bool TwistedClass::contains(const Word& w) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), w,
                             [](const TwistedElement& e, const Word& x) { return word_less(e.word, x); });
  return it != elements_.end() && it->word == w;
}

std::vector<Word> TwistedClass::words() const {
  std::vector<Word> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.word);
  return out;
}

Word twisted_action(const Automorphism& phi, const Word& v, const Word& x) {
  return multiply(phi.apply(x.inverse()), reduce(v), reduce(x));
}

bool verify_twisted(const Automorphism& phi, const Word& origin, const TwistedElement& e) {
  return twisted_action(phi, origin, e.witness) == e.word;
}

bool verify_makanin(const Automorphism& phi, const Word& u, const Word& v, const Word& x) {
  return multiply(phi.apply(x), reduce(u)) == multiply(reduce(v), reduce(x));
}

TwistedElement phi_shift(const Word& v, std::size_t split, ShiftSide side, const Automorphism& phi) {
  if (split > v.size()) throw std::out_of_range("phi_shift: split out of range");
  Word head = v.slice(0, split);
  Word tail = v.slice(split, v.size());
  if (side == ShiftSide::Final) return {multiply(phi.apply(tail), head), tail.inverse()};
  Word x = phi.apply_inverse(head);
  return {multiply(tail, x), x};
}

bool is_cyclically_phi_reduced(const Word& v, const Automorphism& phi) {
  if (v.empty()) return true;
  if (phi_shift(v, v.size() - 1, ShiftSide::Final, phi).word.size() < v.size()) return false;
  if (phi_shift(v, 1, ShiftSide::Initial, phi).word.size() < v.size()) return false;
  return true;
}

TwistedElement cyclic_phi_reduce(const Word& v, const Automorphism& phi, std::vector<std::string>* trace) {
  Word cur = reduce(v);
  Word witness(v.rank());
  while (!cur.empty()) {
    TwistedElement f = phi_shift(cur, cur.size() - 1, ShiftSide::Final, phi);
    if (f.word.size() < cur.size()) {
      witness = multiply(witness, f.witness);
      cur = std::move(f.word);
      if (trace) trace->push_back("final-letter shift: " + format_word(cur));
      continue;
    }
    TwistedElement i = phi_shift(cur, 1, ShiftSide::Initial, phi);
    if (i.word.size() < cur.size()) {
      witness = multiply(witness, i.witness);
      cur = std::move(i.word);
      if (trace) trace->push_back("initial-letter shift: " + format_word(cur));
      continue;
    }
    break;
  }
  return {cur, witness};
}

TwistedElement normalize_twisted(const Word& v, const Automorphism& phi, const VirtuallyInnerCert& cert,
                                 std::vector<std::string>* trace) {
  Word cur = reduce(v);
  Word witness(v.rank());
  for (;;) {
    DeltaReduction dr = delta_reduce_quick(cur, cert.delta);
    bool changed = dr.power != 0;
    if (changed) {
      witness = multiply(witness, power(cert.delta, dr.power));
      cur = std::move(dr.word);
      if (trace) trace->push_back("delta-reduced with power " + std::to_string(dr.power));
    }
    TwistedElement cp = cyclic_phi_reduce(cur, phi, trace);
    if (cp.word.size() < cur.size()) {
      changed = true;
      witness = multiply(witness, cp.witness);
      cur = std::move(cp.word);
    }
    if (!changed) break;
  }
  return {cur, witness};
}

namespace {

// Per-element expansion relative to the element's own word; the closure
// loop composes the returned witnesses onto the element's absolute witness.
//
// Besides conjugation by delta powers and the part shifts, the move set
// includes twisted conjugation by every single letter. Shifts alone are not
// enough: their witnesses all have the form tail^-1 or phi^-1(head), and
// there are words (e.g. length-2 words in the class of the empty word under
// an involution) whose only shortening move is a plain letter conjugation.
std::vector<TwistedElement> expand_element(const Word& w, const Automorphism& phi,
                                           const VirtuallyInnerCert& cert, long window) {
  std::vector<TwistedElement> out;
  out.reserve(2 * (w.size() + 1) + 2 * w.rank() + 4);
  for (const DeltaReduction& dr : enumerate_delta_class(w, cert.delta, window)) {
    if (dr.power == 0) continue;
    TwistedElement n = normalize_twisted(dr.word, phi, cert);
    out.push_back({std::move(n.word), multiply(power(cert.delta, dr.power), n.witness)});
  }
  for (ShiftSide side : {ShiftSide::Final, ShiftSide::Initial}) {
    for (std::size_t split = 0; split <= w.size(); ++split) {
      TwistedElement s = phi_shift(w, split, side, phi);
      TwistedElement n = normalize_twisted(s.word, phi, cert);
      out.push_back({std::move(n.word), multiply(s.witness, n.witness)});
    }
  }
  for (int g = 1; g <= w.rank(); ++g) {
    for (int sign : {1, -1}) {
      Word x = Word::generator(g, w.rank(), sign);
      TwistedElement n = normalize_twisted(twisted_action(phi, w, x), phi, cert);
      out.push_back({std::move(n.word), multiply(x, n.witness)});
    }
  }
  return out;
}

TwistedClass close_over_moves(const Word& origin, std::vector<TwistedElement> seeds, const Automorphism& phi,
                              const VirtuallyInnerCert& cert, const BuildOptions& options) {
  std::unordered_map<Word, Word, WordHash> members;  // word -> absolute witness
  std::vector<TwistedElement> frontier;

  auto insert = [&](TwistedElement&& e) {
    auto [it, inserted] = members.emplace(e.word, e.witness);
    if (!inserted) return;
    if (members.size() > options.size_cap) {
      std::ostringstream msg;
      msg << "class size cap " << options.size_cap << " exceeded (frontier " << frontier.size()
          << " elements, last word " << format_word(e.word) << ")";
      throw cap_exceeded(msg.str());
    }
    frontier.push_back(std::move(e));
  };

  for (TwistedElement& seed : seeds) insert(std::move(seed));

  std::vector<TwistedElement> current;
  while (!frontier.empty()) {
    current.swap(frontier);
    frontier.clear();
    std::vector<std::vector<TwistedElement>> batches(current.size());

#ifdef _OPENMP
    if (options.exec == ExecMode::Parallel && current.size() > 1) {
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(current.size()); ++i)
        batches[static_cast<std::size_t>(i)] =
            expand_element(current[static_cast<std::size_t>(i)].word, phi, cert, options.window);
    } else
#endif
    {
      for (std::size_t i = 0; i < current.size(); ++i)
        batches[i] = expand_element(current[i].word, phi, cert, options.window);
    }

    for (std::size_t i = 0; i < current.size(); ++i)
      for (TwistedElement& cand : batches[i])
        insert({std::move(cand.word), multiply(current[i].witness, cand.witness)});

    if (options.trace)
      options.trace->push_back("closure generation done, " + std::to_string(members.size()) + " words");
  }

  std::vector<TwistedElement> elements;
  elements.reserve(members.size());
  for (auto& [word, witness] : members) elements.push_back({word, witness});
  std::sort(elements.begin(), elements.end(),
            [](const TwistedElement& a, const TwistedElement& b) { return word_less(a.word, b.word); });
  return TwistedClass(origin, phi, cert, std::move(elements));
}

}  // namespace

TwistedClass build_class_core(const Word& v, const Automorphism& phi, const VirtuallyInnerCert& cert,
                              const BuildOptions& options) {
  TwistedElement seed = normalize_twisted(v, phi, cert, options.trace);
  std::vector<TwistedElement> seeds;
  seeds.push_back(std::move(seed));
  return close_over_moves(reduce(v), std::move(seeds), phi, cert, options);
}

TwistedClass build_class(const Word& v, const Automorphism& phi, const VirtuallyInnerCert& cert,
                         const BuildOptions& options) {
  const Word origin = reduce(v);
  // Seeds are the power translates phi^k(v), k = 0..m-1; v is twisted
  // conjugate to phi^k(v) by v^-1 phi(v^-1) ... phi^{k-1}(v^-1). A shared
  // work queue computes exactly the union of the per-translate closures,
  // since every move path from one seed stays inside that seed's closure.
  std::vector<TwistedElement> seeds;
  Word translate = origin;
  Word witness(v.rank());
  for (int k = 0; k < cert.m; ++k) {
    if (k > 0) {
      witness = multiply(witness, apply_power(phi, cert, k - 1, origin.inverse()));
      translate = phi.apply(translate);
    }
    TwistedElement n = normalize_twisted(translate, phi, cert, nullptr);
    seeds.push_back({std::move(n.word), multiply(witness, n.witness)});
  }
  return close_over_moves(origin, std::move(seeds), phi, cert, options);
}

TwistedElement normal_form(const Word& v, const Automorphism& phi, const VirtuallyInnerCert& cert,
                           const BuildOptions& options) {
  TwistedClass cls = build_class(v, phi, cert, options);
  if (cls.elements().empty()) throw std::logic_error("twisted class is empty");
  const TwistedElement& least = cls.elements().front();
  if (options.trace)
    options.trace->push_back("class has " + std::to_string(cls.size()) + " words, least " +
                             format_word(least.word));
  return least;
}

std::optional<Word> decide_twisted_conjugacy(const Word& u, const Word& v, const Automorphism& phi,
                                             const VirtuallyInnerCert& cert, const BuildOptions& options) {
  TwistedElement nu = normal_form(u, phi, cert, options);
  TwistedElement nv = normal_form(v, phi, cert, options);
  if (nu.word != nv.word) return std::nullopt;
  Word x = multiply(nv.witness, nu.witness.inverse());
  if (!verify_makanin(phi, u, v, x))
    throw std::logic_error("decide: computed witness failed verification");
  return x;
}

}  // namespace twist

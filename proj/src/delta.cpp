#include "twist/delta.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace twist {

namespace {

bool starts_with(const Word& w, const Word& prefix) {
  if (prefix.size() > w.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (w[i] != prefix[i]) return false;
  return true;
}

bool ends_with(const Word& w, const Word& suffix) {
  if (suffix.size() > w.size()) return false;
  const std::size_t off = w.size() - suffix.size();
  for (std::size_t i = 0; i < suffix.size(); ++i)
    if (w[off + i] != suffix[i]) return false;
  return true;
}

// Graphical concatenation of several pieces; the caller guarantees the
// junctions do not cancel.
Word glue(std::initializer_list<const Word*> parts, int rank) {
  std::vector<Letter> out;
  for (const Word* p : parts) out.insert(out.end(), p->begin(), p->end());
  return Word(std::move(out), rank);
}

// w^k as a raw letter sequence; reduced whenever w is cyclically reduced.
Word raw_power(const Word& w, long k) {
  if (k == 0) return Word(w.rank());
  const Word base = k > 0 ? w : w.inverse();
  long reps = k > 0 ? k : -k;
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(reps) * base.size());
  for (long i = 0; i < reps; ++i) out.insert(out.end(), base.begin(), base.end());
  return Word(std::move(out), w.rank());
}

// Preference order for equal-minimal powers: smaller |k|, then positive.
bool power_preferred(long a, long b) {
  long aa = a < 0 ? -a : a, ab = b < 0 ? -b : b;
  if (aa != ab) return aa < ab;
  return a > b;
}

}  // namespace

long default_window(const Word& v, const Word& delta) {
  return 2 * (static_cast<long>(v.size()) + static_cast<long>(delta.size())) + 2;
}

Word conjugate_by_power(const Word& v, const Word& delta, long k) {
  if (k == 0) return reduce(v);
  return conjugate(v, power(delta, k));
}

// --- shortening jumps past one-step-stable words ------------------------------
//
// When delta is not cyclically reduced, a word can survive one-step
// conjugation yet shorten under delta^k for some |k| > 1. Writing
// delta == d1^-1 d2 d1 (d2 the cyclic core) and v == u^-1 w u (w the cyclic
// core), this happens exactly when d1 == d11 u with d11 nonempty and, for
// some split u == u2 u1 with u2 nonempty, one of
//   (a)  u2^-1 d11^-1 d2^-k d11 == f w^-m   with  w == f^-1 w0,
//   (b)  d11^-1 d2^k d11 u2     == w^-m f   with  w == w0 f^-1,
// where m >= 0 is maximal and w0 is nonempty, or w0 is empty and
// u1^-1 f^-1 u1 is reduced. The jump delta^-k v delta^k then lands on a
// strictly shorter word.

namespace {

bool shell_side_ok(const Word& u1, const Word& f, const Word& w0) {
  if (!w0.empty()) return true;
  if (f.empty()) return false;
  // with w0 empty, u1^-1 f^-1 u1 must be graphically reduced
  if (!u1.empty()) {
    Word fi = f.inverse();
    if (fi.front() == u1.front()) return false;
    if (fi.back() == u1.front().inverse()) return false;
  }
  return true;
}

bool match_shell_initial(const Word& w, const Word& d11, const Word& d2, const Word& u2, const Word& u1,
                         long k) {
  const Word d11i = d11.inverse();
  const Word u2i = u2.inverse();
  const Word core_pow = raw_power(d2, -k);
  Word left = glue({&u2i, &d11i, &core_pow, &d11}, w.rank());
  const Word wi = w.inverse();
  while (ends_with(left, wi)) left = left.slice(0, left.size() - wi.size());
  if (left.size() > w.size()) return false;
  if (!starts_with(w, left.inverse())) return false;
  Word w0 = w.slice(left.size(), w.size());
  return shell_side_ok(u1, left, w0);
}

bool match_shell_final(const Word& w, const Word& d11, const Word& d2, const Word& u2, const Word& u1,
                       long k) {
  const Word d11i = d11.inverse();
  const Word core_pow = raw_power(d2, k);
  Word right = glue({&d11i, &core_pow, &d11, &u2}, w.rank());
  const Word wi = w.inverse();
  std::size_t off = 0;
  while (right.size() - off >= wi.size()) {
    bool match = true;
    for (std::size_t i = 0; i < wi.size() && match; ++i) match = right[off + i] == wi[i];
    if (!match) break;
    off += wi.size();
  }
  Word f = right.slice(off, right.size());
  if (f.size() > w.size()) return false;
  if (!ends_with(w, f.inverse())) return false;
  Word w0 = w.slice(0, w.size() - f.size());
  return shell_side_ok(u1, f, w0);
}

std::optional<long> shell_jump(const Word& v, const Word& delta, long window) {
  CyclicReduction vc = cyclic_reduce(v);
  if (vc.conj.empty()) return std::nullopt;
  CyclicReduction dc = cyclic_reduce(delta);
  const Word& u = vc.conj;
  const Word& d1 = dc.conj;
  if (d1.size() <= u.size()) return std::nullopt;
  if (!ends_with(d1, u)) return std::nullopt;
  const Word d11 = d1.slice(0, d1.size() - u.size());

  const long kmax = window > 0 ? window : default_window(v, delta);
  for (long a = 2; a <= kmax; ++a) {
    for (long k : {a, -a}) {
      for (std::size_t s = 1; s <= u.size(); ++s) {
        Word u2 = u.slice(0, s), u1 = u.slice(s, u.size());
        if (match_shell_initial(vc.core, d11, dc.core, u2, u1, k)) return k;
        if (match_shell_final(vc.core, d11, dc.core, u2, u1, k)) return k;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<long> delta_shortening_power(const Word& v, const Word& delta, long window) {
  if (delta.empty() || v.empty()) return std::nullopt;
  if (conjugate_by_power(v, delta, 1).size() < v.size()) return 1;
  if (conjugate_by_power(v, delta, -1).size() < v.size()) return -1;
  if (is_cyclically_reduced(delta)) return std::nullopt;
  return shell_jump(v, delta, window);
}

bool is_delta_reduced(const Word& v, const Word& delta) {
  return !delta_shortening_power(v, delta).has_value();
}

namespace {

DeltaReduction descend(const Word& v, const Word& delta, std::vector<std::string>* trace) {
  Word cur = v;
  long k_total = 0;
  if (delta.empty()) return {cur, 0};
  for (;;) {
    for (;;) {
      Word up = conjugate_by_power(cur, delta, 1);
      if (up.size() < cur.size()) {
        cur = std::move(up);
        ++k_total;
        if (trace) trace->push_back("conjugate by delta: " + format_word(cur));
        continue;
      }
      Word down = conjugate_by_power(cur, delta, -1);
      if (down.size() < cur.size()) {
        cur = std::move(down);
        --k_total;
        if (trace) trace->push_back("conjugate by delta^-1: " + format_word(cur));
        continue;
      }
      break;
    }
    if (is_cyclically_reduced(delta)) break;
    auto jump = shell_jump(cur, delta, 0);
    if (!jump) break;
    cur = conjugate_by_power(cur, delta, *jump);
    k_total += *jump;
    if (trace)
      trace->push_back("conjugate by delta^" + std::to_string(*jump) + ": " + format_word(cur));
  }
  return {cur, k_total};
}

}  // namespace

DeltaReduction delta_reduce_quick(const Word& v, const Word& delta) { return descend(v, delta, nullptr); }

DeltaReduction delta_reduce(const Word& v, const Word& delta, std::vector<std::string>* trace) {
  DeltaReduction base = descend(v, delta, trace);
  if (delta.empty()) return base;

  // Re-anchor the power on the original word: among all conjugates of v in
  // the window that reach the minimal length, prefer the smallest |k|,
  // then positive k.
  const long window = default_window(v, delta);
  long best_k = base.power;
  Word best_word = base.word;
  for (long a = 0; a <= window; ++a) {
    for (long k : {a, -a}) {
      Word w = conjugate_by_power(v, delta, k);
      if (w.size() == base.word.size() && power_preferred(k, best_k)) {
        best_k = k;
        best_word = std::move(w);
      }
      if (a == 0) break;
    }
  }
  return {best_word, best_k};
}

std::vector<DeltaReduction> enumerate_delta_class(const Word& v, const Word& delta, long window) {
  if (!is_delta_reduced(v, delta))
    throw std::invalid_argument("enumerate_delta_class: input is not delta-reduced");
  std::unordered_map<Word, long, WordHash> best;
  best.emplace(v, 0);
  if (!delta.empty()) {
    const long limit = window > 0 ? window : default_window(v, delta);
    for (int dir : {1, -1}) {
      std::unordered_set<Word, WordHash> seen;
      seen.insert(v);
      Word cur = v;
      for (long step = 1; step <= limit; ++step) {
        cur = conjugate_by_power(cur, delta, dir);
        if (!seen.insert(cur).second) break;  // the orbit cycled
        if (cur.size() < v.size())
          throw std::logic_error("delta-reduced word shortened in the class scan");
        if (cur.size() == v.size()) {
          long k = dir * step;
          if (step == limit && !best.count(cur))
            throw std::runtime_error(
                "enumerate_delta_class: new minimal conjugate at the window boundary (window too small)");
          auto [it, inserted] = best.emplace(cur, k);
          if (!inserted && power_preferred(k, it->second)) it->second = k;
        }
      }
    }
  }
  std::vector<DeltaReduction> out;
  out.reserve(best.size());
  for (auto& [word, k] : best) out.push_back({word, k});
  std::sort(out.begin(), out.end(),
            [](const DeltaReduction& a, const DeltaReduction& b) { return word_less(a.word, b.word); });
  return out;
}

DeltaReduction delta_reduce_oracle(const Word& v, const Word& delta, long window) {
  Word best_word = reduce(v);
  long best_k = 0;
  for (long a = 1; a <= window; ++a) {
    for (long k : {a, -a}) {
      Word w = conjugate_by_power(v, delta, k);
      if (w.size() < best_word.size() || (w.size() == best_word.size() && power_preferred(k, best_k))) {
        best_word = std::move(w);
        best_k = k;
      }
    }
  }
  return {best_word, best_k};
}

std::optional<EqualLengthSplit> equal_length_split(const Word& v, const Word& delta, int direction) {
  if (direction != 1 && direction != -1) throw std::invalid_argument("direction must be +1 or -1");
  if (!is_delta_reduced(v, delta)) throw std::invalid_argument("equal_length_split: v is not delta-reduced");
  if (conjugate_by_power(v, delta, direction).size() != v.size())
    throw std::invalid_argument("equal_length_split: one-step conjugation does not preserve length");

  const int rank = v.rank();
  const std::size_t n = delta.size();
  const std::size_t len = v.size();

  auto try_parts = [&](const Word& p1, const Word& p2, const Word& p3,
                       const Word& p4) -> std::optional<EqualLengthSplit> {
    for (int variant : {0, 1}) {
      Word head(rank), tail(rank);
      if (direction == 1) {
        head = variant == 0 ? p1 : glue({&p1, &p2, &p3}, rank);
        Word p3i = p3.inverse(), p2i = p2.inverse(), p1i = p1.inverse();
        tail = variant == 0 ? glue({&p3i, &p2i, &p1i}, rank) : p1i;
      } else {
        Word p4i = p4.inverse();
        if (variant == 0) {
          head = p4i;
          tail = glue({&p3, &p2, &p4}, rank);
        } else {
          Word p2i = p2.inverse(), p3i = p3.inverse();
          head = glue({&p4i, &p2i, &p3i}, rank);
          tail = p4;
        }
      }
      if (head.size() + tail.size() > len) continue;
      if (!starts_with(v, head) || !ends_with(v, tail)) continue;
      Word core = v.slice(head.size(), len - tail.size());
      if (!core.empty() && !p2.empty()) continue;
      return EqualLengthSplit{direction, variant, p1, p2, p3, p4, core};
    }
    return std::nullopt;
  };

  for (std::size_t d = 0; 2 * d <= n; ++d) {
    for (std::size_t t = 0; 2 * d + 2 * t <= n; ++t) {
      Word p1 = delta.slice(0, d);
      Word p2 = delta.slice(d, d + t);
      Word p2_again = delta.slice(n - d - t, n - d);
      if (p2 != p2_again) continue;
      Word p3 = delta.slice(d + t, n - d - t);
      Word p4 = delta.slice(n - d, n);
      if (auto split = try_parts(p1, p2, p3, p4)) return split;
    }
  }
  return std::nullopt;
}

}  // namespace twist

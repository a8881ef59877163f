#include "twist/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace twist {

namespace {

void push_cancelling(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse())
    out.pop_back();
  else
    out.push_back(l);
}

void require_same_rank(const Word& a, const Word& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("word rank mismatch: " + std::to_string(a.rank()) + " vs " +
                                std::to_string(b.rank()));
}

}  // namespace

int Word::check_rank(int rank) {
  if (rank < 1) throw std::invalid_argument("word rank must be positive");
  return rank;
}

Word::Word(std::vector<Letter> letters, int rank) : letters_(std::move(letters)), rank_(check_rank(rank)) {
  for (Letter l : letters_)
    if (l.index() > rank_)
      throw std::invalid_argument("letter index " + std::to_string(l.index()) + " exceeds rank " +
                                  std::to_string(rank_));
}

Word Word::generator(int index, int rank, int sign) { return Word({Letter(index, sign)}, rank); }

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out), rank_);
}

Word Word::slice(std::size_t first, std::size_t last) const {
  if (first > last || last > letters_.size()) throw std::out_of_range("Word::slice");
  return Word(std::vector<Letter>(letters_.begin() + first, letters_.begin() + last), rank_);
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(w.rank());
  for (Letter l : w) {
    h ^= static_cast<std::size_t>(l.order_key()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1].inverse()) return false;
  return true;
}

Word reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w) push_cancelling(out, l);
  return Word(std::move(out), w.rank());
}

Word concat(const Word& a, const Word& b) {
  require_same_rank(a, b);
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out), a.rank());
}

Word multiply(const Word& a, const Word& b) {
  require_same_rank(a, b);
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  for (Letter l : a) push_cancelling(out, l);
  for (Letter l : b) push_cancelling(out, l);
  return Word(std::move(out), a.rank());
}

Word multiply(const Word& a, const Word& b, const Word& c) { return multiply(multiply(a, b), c); }

Word power(const Word& w, long k) {
  if (k == 0) return Word(w.rank());
  const Word base = k > 0 ? w : w.inverse();
  long reps = k > 0 ? k : -k;
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(reps) * base.size());
  for (long i = 0; i < reps; ++i)
    for (Letter l : base) push_cancelling(out, l);
  return Word(std::move(out), w.rank());
}

Word conjugate(const Word& w, const Word& g) {
  require_same_rank(w, g);
  std::vector<Letter> out;
  out.reserve(w.size() + 2 * g.size());
  for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it) push_cancelling(out, it->inverse());
  for (Letter l : w) push_cancelling(out, l);
  for (Letter l : g) push_cancelling(out, l);
  return Word(std::move(out), w.rank());
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == w[j - 1].inverse()) {
    ++i;
    --j;
  }
  return {w.slice(i, j), w.slice(j, w.size())};
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || w.front() != w.back().inverse();
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ka = a[i].order_key(), kb = b[i].order_key();
    if (ka != kb) return ka < kb;
  }
  return false;
}

bool is_cyclic_rotation(const Word& a, const Word& b) {
  if (a.rank() != b.rank() || a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t n = a.size();
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = a[(s + i) % n] == b[i];
    if (ok) return true;
  }
  return false;
}

namespace {

bool all_alpha(std::string_view tok) {
  if (tok.empty()) return false;
  for (char c : tok)
    if (!std::isalpha(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Word parse_word(std::string_view text, int rank) {
  if (rank < 1) throw std::invalid_argument("word rank must be positive");
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > start) tokens.push_back(text.substr(start, pos - start));
  }
  if (tokens.empty()) return Word(rank);
  if (tokens.size() == 1 && tokens[0] == "1") return Word(rank);

  bool seen_verbose = false, seen_compact = false;
  std::vector<Letter> letters;
  for (std::string_view tok : tokens) {
    if (tok.size() >= 2 && tok[0] == 'x' && std::isdigit(static_cast<unsigned char>(tok[1]))) {
      seen_verbose = true;
      std::size_t p = 1;
      long idx = 0;
      while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) {
        idx = idx * 10 + (tok[p] - '0');
        if (idx > 1'000'000) throw parse_error("generator index out of range in '" + std::string(tok) + "'");
        ++p;
      }
      int sign = 1;
      if (p < tok.size()) {
        if (tok.substr(p) != "^-1") throw parse_error("unknown token '" + std::string(tok) + "'");
        sign = -1;
      }
      if (idx < 1 || idx > rank)
        throw parse_error("generator index " + std::to_string(idx) + " exceeds rank " + std::to_string(rank) +
                          " in '" + std::string(tok) + "'");
      letters.emplace_back(static_cast<int>(idx), sign);
    } else if (all_alpha(tok)) {
      seen_compact = true;
      if (rank > 26) throw parse_error("compact word syntax requires rank <= 26");
      for (char c : tok) {
        int idx, sign;
        if (c >= 'a' && c <= 'z') {
          idx = c - 'a' + 1;
          sign = 1;
        } else {
          idx = c - 'A' + 1;
          sign = -1;
        }
        if (idx > rank)
          throw parse_error(std::string("letter '") + c + "' exceeds rank " + std::to_string(rank));
        letters.emplace_back(idx, sign);
      }
    } else {
      throw parse_error("unknown token '" + std::string(tok) + "'");
    }
    if (seen_verbose && seen_compact) throw parse_error("mixed word syntaxes in one token stream");
  }
  return Word(std::move(letters), rank);
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  if (w.rank() <= 26) {
    for (Letter l : w) out << static_cast<char>((l.sign() > 0 ? 'a' : 'A') + l.index() - 1);
  } else {
    bool first = true;
    for (Letter l : w) {
      if (!first) out << ' ';
      first = false;
      out << 'x' << l.index();
      if (l.sign() < 0) out << "^-1";
    }
  }
  return out.str();
}

}  // namespace twist

// Formal characters: finite multisets of residue words with the shuffle
// product and the suffix filters acting on them.
#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hatcrystal/cartan.hpp"

namespace hatcrystal {

using Word = std::vector<int>;

struct Character {
  int e = 0;  // residue modulus shared by every letter
  int n = 0;  // common word length
  std::map<Word, long long> terms;

  long long dim() const {
    long long d = 0;
    for (auto& [w, m] : terms) d += m;
    return d;
  }

  Character& operator+=(const Character& o) {
    if (e != o.e) throw std::invalid_argument("Character: mixed index sets");
    if (!o.terms.empty() && !terms.empty() && n != o.n)
      throw std::invalid_argument("Character: mixed word lengths");
    if (terms.empty()) n = o.n;
    for (auto& [w, m] : o.terms)
      if ((terms[w] += m) == 0) terms.erase(w);
    return *this;
  }
  friend Character operator+(Character a, const Character& b) { return a += b; }
  bool operator==(const Character&) const = default;
};

inline Character character_of_word(const IndexSet& idx, const Word& w, long long mult = 1) {
  Character c;
  c.e = idx.e;
  c.n = static_cast<int>(w.size());
  Word nw;
  nw.reserve(w.size());
  for (int x : w) nw.push_back(idx.norm(x));
  c.terms[nw] = mult;
  return c;
}

// All interleavings of w1 and w2, as a multiset of words.
inline void shuffle_words(const Word& w1, const Word& w2, long long mult,
                          std::map<Word, long long>& out) {
  size_t n1 = w1.size(), n2 = w2.size(), n = n1 + n2;
  // Selector: positions of w1-letters within the merged word, enumerated as
  // bitmasks in lexicographic combination order. n <= 20 at desk scale.
  if (n > 20) throw std::invalid_argument("shuffle: word too long");
  std::vector<int> pick(n1);
  for (size_t t = 0; t < n1; ++t) pick[t] = static_cast<int>(t);
  Word merged(n);
  while (true) {
    size_t p1 = 0, p2 = 0;
    for (size_t pos = 0; pos < n; ++pos) {
      if (p1 < n1 && pick[p1] == static_cast<int>(pos))
        merged[pos] = w1[p1++];
      else
        merged[pos] = w2[p2++];
    }
    out[merged] += mult;
    // next combination
    int t = static_cast<int>(n1) - 1;
    while (t >= 0 && pick[t] == static_cast<int>(n - n1 + t)) --t;
    if (t < 0) break;
    ++pick[t];
    for (size_t u = t + 1; u < n1; ++u) pick[u] = pick[u - 1] + 1;
  }
}

inline Character shuffle(const Character& c1, const Character& c2) {
  if (c1.e != c2.e) throw std::invalid_argument("shuffle: mixed index sets");
  Character out;
  out.e = c1.e;
  out.n = c1.n + c2.n;
  for (auto& [w1, m1] : c1.terms)
    for (auto& [w2, m2] : c2.terms) shuffle_words(w1, w2, m1 * m2, out.terms);
  return out;
}

// Keep the terms whose last |suffix| letters equal suffix.
inline Character delta_filter(const Character& c, const Word& suffix) {
  if (suffix.size() > static_cast<size_t>(c.n))
    throw std::invalid_argument("delta_filter: suffix longer than words");
  Character out;
  out.e = c.e;
  out.n = c.n;
  for (auto& [w, m] : c.terms) {
    bool match = std::equal(suffix.begin(), suffix.end(), w.end() - suffix.size());
    if (match) out.terms[w] = m;
  }
  return out;
}

// Keep the terms whose final 2m letters are a permutation of m copies of
// theta(i) and m copies of theta(i)+l.
inline Character delta_hat_filter(const Folding& fold, const Character& c, int i, int m) {
  if (2 * m > c.n) throw std::invalid_argument("delta_hat_filter: 2m exceeds word length");
  auto [lo, hi] = fold.hat_pair(i);
  Character out;
  out.e = c.e;
  out.n = c.n;
  for (auto& [w, mult] : c.terms) {
    int clo = 0, chi = 0;
    bool ok = true;
    for (int t = 0; t < 2 * m; ++t) {
      int letter = w[w.size() - 1 - t];
      if (letter == lo)
        ++clo;
      else if (letter == hi)
        ++chi;
      else {
        ok = false;
        break;
      }
    }
    if (ok && clo == m && chi == m) out.terms[w] = mult;
  }
  return out;
}

// Character of the simple module attached to one hat letter:
// [theta(i), theta(i)+l] + [theta(i)+l, theta(i)].
inline Character char_of_hat_letter(const Folding& fold, int i) {
  auto [lo, hi] = fold.hat_pair(i);
  IndexSet idx = fold.unfolded();
  return character_of_word(idx, {lo, hi}) + character_of_word(idx, {hi, lo});
}

// Stable serialization: {"n": n, "terms": [{"word": [...], "mult": m}, ...]}
// with terms in lexicographic word order.
inline std::string to_json(const Character& c) {
  std::ostringstream os;
  os << "{\"n\": " << c.n << ", \"terms\": [";
  bool first = true;
  for (auto& [w, m] : c.terms) {
    if (!first) os << ", ";
    first = false;
    os << "{\"word\": [";
    for (size_t t = 0; t < w.size(); ++t) os << (t ? "," : "") << w[t];
    os << "], \"mult\": " << m << "}";
  }
  os << "]}";
  return os.str();
}

}  // namespace hatcrystal

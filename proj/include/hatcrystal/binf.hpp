// The crystal B(infinity) in iterated-embedding coordinates: finitely
// supported nonnegative sequences along the cyclic residue word
// (base, base+1, base+2, ...) indexed by positions 1, 2, 3, ...
#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hatcrystal/cartan.hpp"
#include "hatcrystal/characters.hpp"

namespace hatcrystal {

struct BinfElement {
  int base = 0;
  std::vector<int> a;  // a[k-1] = coordinate at position k; no trailing zeros

  void strip() {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  bool is_highest() const { return a.empty(); }
  bool operator==(const BinfElement&) const = default;
  bool operator<(const BinfElement& o) const {
    return std::tie(base, a) < std::tie(o.base, o.a);
  }
};

// One element of the rank-one crystal B_i: b_i(-a) with a >= 0, so that
// eps_i = a, phi_i = -a and all other colors carry -infinity.
struct BiElement {
  int i = 0;
  int a = 0;
  bool operator==(const BiElement&) const = default;
};

// Tie-break convention for the raising/lowering positions. The checked-in
// convention is f at the smallest position attaining the maximum and e at the
// largest; `flipped` exists solely so the test suite can demonstrate that the
// opposite convention contradicts the multipartition oracle.
enum class BinfTieBreak { standard, flipped };

class BinfModel {
 public:
  using Element = BinfElement;

  IndexSet idx;
  BinfTieBreak tiebreak = BinfTieBreak::standard;

  explicit BinfModel(IndexSet idx_, BinfTieBreak tb = BinfTieBreak::standard)
      : idx(idx_), tiebreak(tb) {}

  Element highest(int base = 0) const { return Element{idx.norm(base), {}}; }

  std::vector<int> colors() const {
    std::vector<int> c(idx.e);
    for (int i = 0; i < idx.e; ++i) c[i] = i;
    return c;
  }

  int residue_at(int base, long long k) const { return idx.norm(base + k - 1); }

  // First position (>= 1) of residue i along the base sequence.
  int first_position(int base, int i) const { return idx.norm(i - base) + 1; }

  // sigma_k = a_k + sum_{j>k} <h_i, alpha_{i_j}> a_j, for positions with i_k = i.
  int sigma(const Element& x, int i, int k) const {
    if (residue_at(x.base, k) != idx.norm(i))
      throw std::invalid_argument("sigma: position residue mismatch");
    int s = (k <= static_cast<int>(x.a.size())) ? x.a[k - 1] : 0;
    for (int j = k + 1; j <= static_cast<int>(x.a.size()); ++j)
      s += idx.pairing(i, residue_at(x.base, j)) * x.a[j - 1];
    return s;
  }

  int eps(const Element& x, int i) const {
    int best = 0;  // positions beyond the support always give 0
    for (int k = first_position(x.base, i); k <= static_cast<int>(x.a.size()); k += idx.e)
      best = std::max(best, sigma(x, i, k));
    return best;
  }

  Weight wt(const Element& x) const {
    Weight w;
    for (int k = 1; k <= static_cast<int>(x.a.size()); ++k)
      w.add_alpha(residue_at(x.base, k), -x.a[k - 1]);
    return w;
  }

  int phi(const Element& x, int i) const { return eps(x, i) + pair_weight(idx, i, wt(x)); }

  Element f_apply(const Element& x, int i) const {
    int m = eps(x, i);
    int limit = static_cast<int>(x.a.size()) +
                (tiebreak == BinfTieBreak::standard ? idx.e : 2 * idx.e);
    int chosen = -1;
    for (int k = first_position(x.base, i); k <= limit; k += idx.e) {
      if (sigma(x, i, k) == m) {
        chosen = k;
        if (tiebreak == BinfTieBreak::standard) break;  // smallest attaining
      }
    }
    if (chosen < 0) throw std::logic_error("f_apply: no attaining position");
    Element y = x;
    if (chosen > static_cast<int>(y.a.size())) y.a.resize(chosen, 0);
    ++y.a[chosen - 1];
    return y;
  }

  std::optional<Element> e_apply(const Element& x, int i) const {
    int m = eps(x, i);
    if (m == 0) return std::nullopt;
    int chosen = -1;
    for (int k = first_position(x.base, i); k <= static_cast<int>(x.a.size()); k += idx.e) {
      if (sigma(x, i, k) == m && (tiebreak == BinfTieBreak::standard || x.a[k - 1] > 0)) {
        chosen = k;
        if (tiebreak == BinfTieBreak::flipped) break;
      }
    }
    if (chosen < 0) throw std::logic_error("e_apply: no attaining position");
    Element y = x;
    if (y.a[chosen - 1] <= 0) throw std::logic_error("e_apply: coordinate underflow");
    --y.a[chosen - 1];
    y.strip();
    return y;
  }

  // Generic aliases used by the graph and hat layers.
  std::optional<Element> f_op(const Element& x, int i) const { return f_apply(x, i); }
  std::optional<Element> e_op(const Element& x, int i) const { return e_apply(x, i); }

  // Apply f-letters leftmost first.
  Element from_word(const Word& w, int base = 0) const {
    Element x = highest(base);
    for (int i : w) x = f_apply(x, i);
    return x;
  }

  // Greedy removal at the smallest residue with eps > 0; the reversed removal
  // sequence is an f-word producing x.
  Word word_of(const Element& x) const {
    Element cur = x;
    Word removals;
    long long guard = 0;
    while (!cur.is_highest()) {
      int r = -1;
      for (int i = 0; i < idx.e; ++i)
        if (eps(cur, i) > 0) {
          r = i;
          break;
        }
      if (r < 0) throw std::logic_error("word_of: stuck above the highest element");
      auto nxt = e_apply(cur, r);
      if (!nxt) throw std::logic_error("word_of: raising failed");
      cur = *nxt;
      removals.push_back(r);
      if (++guard > 1000000) throw std::logic_error("word_of: no progress");
    }
    std::reverse(removals.begin(), removals.end());
    return removals;
  }

  Element rebase(const Element& x, int new_base) const {
    int nb = idx.norm(new_base);
    if (x.base == nb) return x;
    return from_word(word_of(x), nb);
  }

  Element canonical(const Element& x) const { return rebase(x, 0); }

  bool equal(const Element& x, const Element& y) const {
    return canonical(x) == canonical(y);
  }

  std::string key(const Element& x) const {
    Element c = canonical(x);
    std::ostringstream os;
    os << "[";
    for (size_t t = 0; t < c.a.size(); ++t) os << (t ? "," : "") << c.a[t];
    os << "]";
    return os.str();
  }

  // {"base": b, "coords": [...]} with trailing zeros already stripped.
  std::string to_json(const Element& x) const {
    std::ostringstream os;
    os << "{\"base\": " << x.base << ", \"coords\": [";
    for (size_t t = 0; t < x.a.size(); ++t) os << (t ? "," : "") << x.a[t];
    os << "]}";
    return os.str();
  }

  // Star structure: in coordinates over (i, i+1, ...) the starred eps is the
  // first coordinate, and the starred operators bump it.
  int eps_star(const Element& x, int i) const {
    Element y = rebase(x, i);
    return y.a.empty() ? 0 : y.a[0];
  }

  Element f_star(const Element& x, int i) const {
    Element y = rebase(x, i);
    if (y.a.empty()) y.a.resize(1, 0);
    ++y.a[0];
    return rebase(y, x.base);
  }

  std::optional<Element> e_star(const Element& x, int i) const {
    Element y = rebase(x, i);
    if (y.a.empty() || y.a[0] == 0) return std::nullopt;
    --y.a[0];
    y.strip();
    return rebase(y, x.base);
  }

  // Push an f-word through highest tensor b_i(0) by the tensor-product rule.
  // The resulting right factor is b_i(-a) with a = eps_star(from_word(w), i),
  // which makes this an independent cross-check for the star structure.
  std::pair<Element, BiElement> b_tensor_push(const Word& w, int i) const {
    Element x = highest(0);
    BiElement b{idx.norm(i), 0};
    for (int letter : w) {
      int j = idx.norm(letter);
      if (j != b.i) {
        x = f_apply(x, j);  // eps_j of the right factor is -infinity
      } else if (phi(x, j) > b.a) {
        x = f_apply(x, j);
      } else {
        ++b.a;
      }
    }
    return {x, b};
  }
};

}  // namespace hatcrystal

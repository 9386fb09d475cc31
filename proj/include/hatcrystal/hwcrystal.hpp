// Highest-weight crystals on multipartitions through the good-node signature
// rule. Doubles as the bounded-depth oracle for the B(infinity) coordinates
// via a multicharge containing many copies of every residue.
#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hatcrystal/cartan.hpp"
#include "hatcrystal/characters.hpp"

namespace hatcrystal {

using Partition = std::vector<int>;
using Multipartition = std::vector<Partition>;

struct NodeRef {
  int m = 0;  // component, 0-based
  int r = 0;  // row, 1-based
  int c = 0;  // column, 1-based
  bool operator==(const NodeRef&) const = default;
};

// Reading order of the signature. The checked-in convention scans components
// and rows in decreasing index; `flipped` exists solely so the test suite can
// demonstrate that the increasing order labels vertices by the wrong
// (conjugate) partition family.
enum class SignatureOrder { standard, flipped };

class HwModel {
 public:
  using Element = Multipartition;

  IndexSet idx;
  std::vector<int> charge;
  SignatureOrder order = SignatureOrder::standard;

  HwModel(IndexSet idx_, std::vector<int> charge_,
          SignatureOrder ord = SignatureOrder::standard)
      : idx(idx_), charge(std::move(charge_)), order(ord) {
    if (charge.empty()) throw std::invalid_argument("HwModel: empty multicharge");
    for (int& c : charge) c = idx.norm(c);
  }

  Element highest() const { return Multipartition(charge.size()); }

  std::vector<int> colors() const {
    std::vector<int> c(idx.e);
    for (int i = 0; i < idx.e; ++i) c[i] = i;
    return c;
  }

  int residue(const NodeRef& n) const { return idx.norm(charge[n.m] + (n.c - n.r)); }

  struct Signature {
    std::string letters;  // reduced sequence, 'R's then 'A's
    std::optional<NodeRef> good_addable;
    std::optional<NodeRef> good_removable;
    int eps = 0;
    int phi = 0;
  };

  Signature signature(const Element& mp, int i) const {
    int ni = idx.norm(i);
    struct Entry {
      bool addable;
      NodeRef node;
    };
    std::vector<Entry> seq;
    auto scan_component = [&](int m) {
      const Partition& lam = mp[m];
      int rows = static_cast<int>(lam.size());
      auto row_at = [&](int r) { return r >= 1 && r <= rows ? lam[r - 1] : 0; };
      auto visit_row = [&](int r) {
        // At most one addable and one removable node lives in row r, and for a
        // fixed residue at most one of them matches.
        if (r <= rows && row_at(r) > row_at(r + 1)) {
          NodeRef node{m, r, row_at(r)};
          if (residue(node) == ni) seq.push_back({false, node});
        }
        if (r == 1 || row_at(r) < row_at(r - 1)) {
          NodeRef node{m, r, row_at(r) + 1};
          if (residue(node) == ni) seq.push_back({true, node});
        }
      };
      if (order == SignatureOrder::standard)
        for (int r = rows + 1; r >= 1; --r) visit_row(r);
      else
        for (int r = 1; r <= rows + 1; ++r) visit_row(r);
    };
    int ncomp = static_cast<int>(mp.size());
    if (order == SignatureOrder::standard)
      for (int m = ncomp - 1; m >= 0; --m) scan_component(m);
    else
      for (int m = 0; m < ncomp; ++m) scan_component(m);

    // Cancel every addable letter immediately followed by a removable one.
    std::vector<Entry> stack;
    for (const Entry& en : seq) {
      if (!en.addable && !stack.empty() && stack.back().addable)
        stack.pop_back();
      else
        stack.push_back(en);
    }
    Signature sig;
    for (const Entry& en : stack) {
      sig.letters.push_back(en.addable ? 'A' : 'R');
      if (en.addable) {
        ++sig.phi;
        if (!sig.good_addable) sig.good_addable = en.node;  // leftmost A
      } else {
        ++sig.eps;
        sig.good_removable = en.node;  // rightmost R
      }
    }
    return sig;
  }

  int eps(const Element& mp, int i) const { return signature(mp, i).eps; }
  int phi(const Element& mp, int i) const { return signature(mp, i).phi; }

  Weight wt(const Element& mp) const {
    Weight w;
    for (int c : charge) w.add_lambda(c, 1);
    for (int m = 0; m < static_cast<int>(mp.size()); ++m)
      for (int r = 1; r <= static_cast<int>(mp[m].size()); ++r)
        for (int c = 1; c <= mp[m][r - 1]; ++c) w.add_alpha(residue({m, r, c}), -1);
    return w;
  }

  std::optional<Element> f_apply(const Element& mp, int i) const {
    Signature sig = signature(mp, i);
    if (!sig.good_addable) return std::nullopt;
    Element out = mp;
    Partition& lam = out[sig.good_addable->m];
    int r = sig.good_addable->r;
    if (r == static_cast<int>(lam.size()) + 1)
      lam.push_back(1);
    else
      ++lam[r - 1];
    return out;
  }

  std::optional<Element> e_apply(const Element& mp, int i) const {
    Signature sig = signature(mp, i);
    if (!sig.good_removable) return std::nullopt;
    Element out = mp;
    Partition& lam = out[sig.good_removable->m];
    int r = sig.good_removable->r;
    if (--lam[r - 1] == 0) lam.erase(lam.begin() + (r - 1));
    return out;
  }

  std::optional<Element> f_op(const Element& x, int i) const { return f_apply(x, i); }
  std::optional<Element> e_op(const Element& x, int i) const { return e_apply(x, i); }

  // Greedy peeling with the smallest-residue tie-break; multipartitions in the
  // crystal reach the empty one.
  bool is_kleshchev(const Element& mp) const {
    Element cur = mp;
    while (true) {
      bool empty = true;
      for (const Partition& lam : cur)
        if (!lam.empty()) empty = false;
      if (empty) return true;
      int r = -1;
      for (int i = 0; i < idx.e; ++i)
        if (eps(cur, i) > 0) {
          r = i;
          break;
        }
      if (r < 0) return false;
      cur = *e_apply(cur, r);
    }
  }

  // Peel to the highest element and return the f-word (leftmost letter first)
  // that rebuilds mp. Throws when mp is not a crystal vertex.
  Word word_of(const Element& mp) const {
    Element cur = mp;
    Word removals;
    while (true) {
      bool empty = true;
      for (const Partition& lam : cur)
        if (!lam.empty()) empty = false;
      if (empty) break;
      int r = -1;
      for (int i = 0; i < idx.e; ++i)
        if (eps(cur, i) > 0) {
          r = i;
          break;
        }
      if (r < 0) throw std::invalid_argument("word_of: not a crystal vertex");
      cur = *e_apply(cur, r);
      removals.push_back(r);
    }
    std::reverse(removals.begin(), removals.end());
    return removals;
  }

  std::optional<Element> from_word(const Word& w) const {
    Element mp = highest();
    for (int i : w) {
      auto nxt = f_apply(mp, i);
      if (!nxt) return std::nullopt;
      mp = *nxt;
    }
    return mp;
  }

  // Partitions label vertices uniquely, so elementwise comparison decides.
  bool equal(const Element& x, const Element& y) const { return x == y; }

  // Rows comma-joined, components ";"-joined, empty component prints empty.
  std::string key(const Element& mp) const { return mp_to_string(mp); }

  static std::string mp_to_string(const Multipartition& mp) {
    std::ostringstream os;
    for (size_t m = 0; m < mp.size(); ++m) {
      if (m) os << ";";
      for (size_t r = 0; r < mp[m].size(); ++r) os << (r ? "," : "") << mp[m][r];
    }
    return os.str();
  }

  std::string to_json(const Element& mp) const {
    std::ostringstream os;
    os << "[";
    for (size_t m = 0; m < mp.size(); ++m) {
      if (m) os << ",";
      os << "[";
      for (size_t r = 0; r < mp[m].size(); ++r) os << (r ? "," : "") << mp[m][r];
      os << "]";
    }
    os << "]";
    return os.str();
  }
};

inline Multipartition mp_from_string(const std::string& s) {
  Multipartition mp;
  Partition cur;
  int value = -1;
  auto flush_value = [&]() {
    if (value >= 0) cur.push_back(value);
    value = -1;
  };
  for (char ch : s) {
    if (ch >= '0' && ch <= '9') {
      value = (value < 0 ? 0 : value * 10) + (ch - '0');
    } else if (ch == ',') {
      flush_value();
    } else if (ch == ';') {
      flush_value();
      mp.push_back(cur);
      cur.clear();
    } else if (ch == ' ') {
      continue;
    } else {
      throw std::invalid_argument("mp_from_string: bad character");
    }
  }
  flush_value();
  mp.push_back(cur);
  for (const Partition& lam : mp)
    for (size_t r = 1; r < lam.size(); ++r)
      if (lam[r - 1] < lam[r]) throw std::invalid_argument("mp_from_string: rows not weakly decreasing");
  return mp;
}

// Oracle embedding: apply the word inside B(Lambda) where Lambda contains N
// copies of every fundamental weight; faithful to B(infinity) at depth <= N.
inline HwModel big_lambda_model(const IndexSet& idx, int N,
                                SignatureOrder ord = SignatureOrder::standard) {
  std::vector<int> charge;
  charge.reserve(static_cast<size_t>(N) * idx.e);
  for (int rep = 0; rep < N; ++rep)
    for (int i = 0; i < idx.e; ++i) charge.push_back(i);
  return HwModel(idx, charge, ord);
}

inline Multipartition big_lambda_embed(const IndexSet& idx, const Word& w, int N,
                                       SignatureOrder ord = SignatureOrder::standard) {
  if (static_cast<int>(w.size()) > N)
    throw std::invalid_argument("big_lambda_embed: word longer than the depth bound");
  HwModel model = big_lambda_model(idx, N, ord);
  auto mp = model.from_word(w);
  if (!mp) throw std::logic_error("big_lambda_embed: lowering died below the bound");
  return *mp;
}

}  // namespace hatcrystal

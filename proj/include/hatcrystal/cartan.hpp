// Affine type A Cartan data: residues mod e, the Cartan pairing, sparse
// weights over fundamental weights and simple roots, and the folding maps
// between Z/2lZ and Z/lZ used by the two-step ("hat") layer.
#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace hatcrystal {

struct IndexSet {
  int e;

  explicit IndexSet(int e_) : e(e_) {
    if (e < 2) throw std::invalid_argument("IndexSet: e must be >= 2");
  }

  int norm(long long i) const {
    long long r = i % e;
    return static_cast<int>(r < 0 ? r + e : r);
  }

  // Cartan matrix of affine A_{e-1}: 2 on the diagonal, -1 between cyclic
  // neighbours (-2 when e = 2, where the two neighbour slots coincide).
  int pairing(long long i, long long j) const {
    int a = norm(i), b = norm(j);
    if (a == b) return 2;
    if (e == 2) return -2;
    int d = norm(a - b);
    return (d == 1 || d == e - 1) ? -1 : 0;
  }

  bool operator==(const IndexSet&) const = default;
};

// Sparse integer weight: lambda holds coefficients of fundamental weights,
// alpha holds signed coefficients of simple roots. Zero entries are erased so
// that equality is structural.
struct Weight {
  std::map<int, int> lambda;
  std::map<int, int> alpha;

  static void bump(std::map<int, int>& m, int key, int by) {
    if (by == 0) return;
    auto it = m.find(key);
    if (it == m.end()) {
      m.emplace(key, by);
    } else if ((it->second += by) == 0) {
      m.erase(it);
    }
  }

  void add_lambda(int i, int by) { bump(lambda, i, by); }
  void add_alpha(int i, int by) { bump(alpha, i, by); }

  Weight& operator+=(const Weight& o) {
    for (auto& [i, c] : o.lambda) add_lambda(i, c);
    for (auto& [i, c] : o.alpha) add_alpha(i, c);
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (auto& [i, c] : o.lambda) add_lambda(i, -c);
    for (auto& [i, c] : o.alpha) add_alpha(i, -c);
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  bool operator==(const Weight&) const = default;

  bool is_zero() const { return lambda.empty() && alpha.empty(); }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](char sym, int i, int c) {
      if (!first || c < 0) os << (c < 0 ? "-" : "+");
      first = false;
      if (c != 1 && c != -1) os << (c < 0 ? -c : c) << "*";
      os << sym << i;
    };
    for (auto& [i, c] : lambda) emit('L', i, c);
    for (auto& [i, c] : alpha) emit('a', i, c);
    return os.str();
  }
};

inline Weight fundamental_weight(const IndexSet& idx, int i) {
  Weight w;
  w.add_lambda(idx.norm(i), 1);
  return w;
}

inline Weight simple_root(const IndexSet& idx, int i) {
  Weight w;
  w.add_alpha(idx.norm(i), 1);
  return w;
}

// <h_i, w> where w is expressed over idx.
inline int pair_weight(const IndexSet& idx, int i, const Weight& w) {
  int a = idx.norm(i);
  int v = 0;
  if (auto it = w.lambda.find(a); it != w.lambda.end()) v += it->second;
  for (auto& [j, c] : w.alpha) v += c * idx.pairing(a, j);
  return v;
}

// The index folding Z/2lZ -> Z/lZ together with its section theta. The hat
// layer requires l > 2; l = 2 is accepted only behind an explicit opt-in.
struct Folding {
  int ell;

  explicit Folding(int ell_, bool allow_l2 = false) : ell(ell_) {
    if (ell < 2 || (ell == 2 && !allow_l2))
      throw std::invalid_argument("Folding: requires ell > 2 (pass allow_l2 to experiment with ell = 2)");
  }

  IndexSet folded() const { return IndexSet(ell); }
  IndexSet unfolded() const { return IndexSet(2 * ell); }

  // Representative of i mod l viewed inside [0, 2l).
  int theta(long long i) const { return folded().norm(i); }
  int fold(long long i) const { return unfolded().norm(i) % ell; }
  std::pair<int, int> hat_pair(long long i) const {
    int t = theta(i);
    return {t, t + ell};
  }

  // Fold the alpha part: the coefficients of alpha_i and alpha_{i+l} must
  // agree and become the coefficient of the folded alpha_i. Any lambda part
  // is the caller's responsibility and is rejected here.
  Weight fold_weight(const Weight& w) const {
    if (!w.lambda.empty())
      throw std::invalid_argument("fold_weight: lambda part must be handled by the caller");
    Weight out;
    for (int i = 0; i < ell; ++i) {
      auto coeff = [&](int k) {
        auto it = w.alpha.find(k);
        return it == w.alpha.end() ? 0 : it->second;
      };
      int lo = coeff(i), hi = coeff(i + ell);
      if (lo != hi)
        throw std::invalid_argument("fold_weight: alpha coefficients are not balanced at residue " + std::to_string(i));
      out.add_alpha(i, lo);
    }
    return out;
  }
};

}  // namespace hatcrystal

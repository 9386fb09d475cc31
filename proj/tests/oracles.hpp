// Brute-force oracles kept deliberately independent of the library code
// paths they check.
#pragma once

#include <map>
#include <vector>

namespace oracles {

using Word = std::vector<int>;

// Recursive interleaving, structurally different from the combination
// enumeration used by the library shuffle.
inline void naive_shuffle_rec(const Word& a, size_t ia, const Word& b, size_t ib,
                              Word& acc, std::map<Word, long long>& out) {
  if (ia == a.size() && ib == b.size()) {
    out[acc] += 1;
    return;
  }
  if (ia < a.size()) {
    acc.push_back(a[ia]);
    naive_shuffle_rec(a, ia + 1, b, ib, acc, out);
    acc.pop_back();
  }
  if (ib < b.size()) {
    acc.push_back(b[ib]);
    naive_shuffle_rec(a, ia, b, ib + 1, acc, out);
    acc.pop_back();
  }
}

inline std::map<Word, long long> naive_shuffle(const Word& a, const Word& b) {
  std::map<Word, long long> out;
  Word acc;
  naive_shuffle_rec(a, 0, b, 0, acc, out);
  return out;
}

// All partitions of n with consecutive differences (including the last part)
// at most l-1, enumerated directly.
inline void restricted_rec(int n, int maxpart, int ell, std::vector<int>& acc,
                           std::vector<std::vector<int>>& out) {
  if (n == 0) {
    if (acc.empty() || acc.back() <= ell - 1) out.push_back(acc);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    if (!acc.empty() && acc.back() - p > ell - 1) break;
    acc.push_back(p);
    restricted_rec(n - p, p, ell, acc, out);
    acc.pop_back();
  }
}

inline std::vector<std::vector<int>> restricted_partitions(int n, int ell) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  restricted_rec(n, n, ell, acc, out);
  return out;
}

}  // namespace oracles

// Named machine checks for the folded crystal layer: each check states a
// structural claim about the models, sweeps it at a configurable desk scale,
// and reports either a pass or a replayable counterexample.
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "hatcrystal/binf.hpp"
#include "hatcrystal/cartan.hpp"
#include "hatcrystal/characters.hpp"
#include "hatcrystal/graphs.hpp"
#include "hatcrystal/hatlayer.hpp"
#include "hatcrystal/hwcrystal.hpp"

namespace hatcrystal {

struct CheckParams {
  int ell = 3;
  bool allow_l2 = false;
  int depth = 4;         // BFS depth for hat-reachable and unfolded sweeps
  int hw_depth = 6;      // BFS depth for highest-weight comparisons
  int star_depth = 3;    // BFS depth for starred-operator sweeps
  int word_len = 4;      // exhaustive word length for cross-checks
  int prefix_len = 2;    // prefix word bound in the rewriting checks
  int random_words = 100;
  unsigned seed = 1u;
  BinfTieBreak tiebreak = BinfTieBreak::standard;
  SignatureOrder sigorder = SignatureOrder::standard;
};

struct CheckResult {
  std::string name;
  CheckParams params;
  bool pass = false;
  std::string detail;  // empty on pass unless the check reports a statistic
  size_t failures = 0;
  double seconds = 0.0;
};

namespace harness_detail {

// First counterexample plus a total, so a sweep never aborts early silently.
struct Collector {
  std::string first;
  size_t count = 0;
  void fail(const std::string& msg) {
    if (count == 0) first = msg;
    ++count;
  }
  bool ok() const { return count == 0; }
  void finish(CheckResult& r) const {
    r.pass = ok();
    r.failures = count;
    if (!ok()) {
      std::ostringstream os;
      os << count << " violation" << (count == 1 ? "" : "s") << "; first: " << first;
      r.detail = os.str();
    }
  }
};

inline std::string word_str(const Word& w) {
  std::ostringstream os;
  os << "(";
  for (size_t t = 0; t < w.size(); ++t) os << (t ? "," : "") << w[t];
  os << ")";
  return os.str();
}

inline std::vector<Word> words_over(const std::vector<int>& letters, int maxlen) {
  std::vector<Word> out{Word{}};
  size_t start = 0;
  for (int len = 1; len <= maxlen; ++len) {
    size_t stop = out.size();
    for (size_t t = start; t < stop; ++t)
      for (int a : letters) {
        Word w = out[t];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    start = stop;
  }
  return out;
}

inline std::vector<Word> all_words(int e, int maxlen) {
  std::vector<int> letters(e);
  for (int i = 0; i < e; ++i) letters[i] = i;
  return words_over(letters, maxlen);
}

inline Word rep(int letter, int count) { return Word(static_cast<size_t>(count), letter); }

inline Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Alternating word i j i j ... with k pairs.
inline Word alt(int i, int j, int k) {
  Word out;
  for (int t = 0; t < k; ++t) {
    out.push_back(i);
    out.push_back(j);
  }
  return out;
}

// Partitions of n whose consecutive parts differ by less than ell and whose
// last part is below ell. Enumerated directly, independent of any crystal.
inline void restricted_rec(int remaining, int prev, int ell, std::vector<int>& acc,
                           std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    if (acc.empty() || acc.back() <= ell - 1) out.push_back(acc);
    return;
  }
  int top = std::min(remaining, prev);
  for (int part = top; part >= 1; --part) {
    if (prev - part > ell - 1) break;
    acc.push_back(part);
    restricted_rec(remaining - part, part, ell, acc, out);
    acc.pop_back();
  }
}

inline std::vector<std::vector<int>> enumerate_restricted(int n, int ell) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  // A fresh first part has no predecessor constraint; model that by a large
  // previous part cap.
  int top = n;
  for (int part = top; part >= 1; --part) {
    acc.push_back(part);
    restricted_rec(n - part, part, ell, acc, out);
    acc.pop_back();
  }
  if (n == 0) out.push_back({});
  return out;
}

inline void partitions_rec(int remaining, int prev, std::vector<int>& acc,
                           std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (int part = std::min(remaining, prev); part >= 1; --part) {
    acc.push_back(part);
    partitions_rec(remaining - part, part, acc, out);
    acc.pop_back();
  }
}

inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  partitions_rec(n, n, acc, out);
  if (n == 0) out.push_back({});
  return out;
}

inline std::vector<std::set<std::string>> layer_key_sets(const CrystalGraph& g) {
  std::vector<std::set<std::string>> out(static_cast<size_t>(g.max_depth()) + 1);
  for (const auto& [k, v] : g.vertices) out[static_cast<size_t>(v.depth)].insert(k);
  return out;
}

inline bool unfolded_adjacent(const IndexSet& idx, int a, int b) {
  int d = idx.norm(a - b);
  return d == 1 || d == idx.e - 1;
}

inline void refuse_if(double estimate, double budget, const std::string& what) {
  if (estimate > budget) {
    std::ostringstream os;
    os << "run_check: infeasible parameters, estimated " << what << " state count "
       << static_cast<long long>(estimate) << " exceeds budget "
       << static_cast<long long>(budget);
    throw std::invalid_argument(os.str());
  }
}

}  // namespace harness_detail

// Every hat-reachable element has equal raising counts at the two members of
// each index pair, matching the folded count; the hat-reachable set is closed
// under both hat operators, raising is defined exactly on positive count, and
// on the highest-weight side lowering is defined exactly on positive phi with
// the folded phi agreeing at both pair members.
inline CheckResult check_crystal1(const CheckParams& p) {
  using namespace harness_detail;
  CheckResult r;
  r.name = "crystal1";
  r.params = p;
  Collector c;

  auto sweep = [&](auto&& hat, const std::string& label, bool hw_side) {
    auto gen = bfs_generate(hat, p.depth, label);
    auto layers = layer_key_sets(gen.graph);
    for (const auto& [k, x] : gen.elems) {
      int d = gen.graph.vertices.at(k).depth;
      for (int ih : hat.colors()) {
        auto [lo, hi] = hat.fold.hat_pair(ih);
        int elo = hat.model.eps(x, lo);
        int ehi = hat.model.eps(x, hi);
        int eh = hat.eps(x, ih);
        if (elo != ehi || eh != elo)
          c.fail(label + " " + k + ": eps at pair (" + std::to_string(lo) + "," +
                 std::to_string(hi) + ") gives (" + std::to_string(elo) + "," +
                 std::to_string(ehi) + ") with folded " + std::to_string(eh));
        auto up = hat.e_op(x, ih);
        if (up.has_value() != (eh > 0))
          c.fail(label + " " + k + ": raising at " + std::to_string(ih) +
                 " defined exactly on positive eps fails");
        if (up) {
          std::string uk = hat.key(*up);
          if (d == 0 || static_cast<size_t>(d - 1) >= layers.size() ||
              !layers[static_cast<size_t>(d - 1)].count(uk))
            c.fail(label + " " + k + ": raising leaves the hat-reachable set");
        }
        if (hw_side) {
          int plo = hat.model.phi(x, lo);
          int phi_ = hat.model.phi(x, hi);
          int ph = hat.phi(x, ih);
          if (plo != phi_ || ph != plo)
            c.fail(label + " " + k + ": phi at pair (" + std::to_string(lo) + "," +
                   std::to_string(hi) + ") gives (" + std::to_string(plo) + "," +
                   std::to_string(phi_) + ") with folded " + std::to_string(ph));
        }
        if (d < p.depth) {
          auto dn = hat.f_op(x, ih);
          if (hw_side) {
            if (dn.has_value() != (hat.phi(x, ih) > 0))
              c.fail(label + " " + k + ": lowering at " + std::to_string(ih) +
                     " defined exactly on positive phi fails");
          } else if (!dn) {
            c.fail(label + " " + k + ": lowering at " + std::to_string(ih) +
                   " died on the free model");
          }
          if (dn) {
            std::string dk = hat.key(*dn);
            if (static_cast<size_t>(d + 1) >= layers.size() ||
                !layers[static_cast<size_t>(d + 1)].count(dk))
              c.fail(label + " " + k + ": lowering leaves the hat-reachable set");
          }
        }
      }
    }
  };

  sweep(hat_binf_model(p.ell, p.allow_l2), "hat-binf", false);
  {
    Folding fold(p.ell, p.allow_l2);
    HatModel<HwModel> hat(
        HwModel(fold.unfolded(), {0, fold.unfolded().norm(fold.ell)}, p.sigorder), fold);
    sweep(hat, "hat-hw", true);
  }
  c.finish(r);
  return r;
}

// The folded truncations satisfy the crystal axioms edge by edge, raising
// inverts lowering, hat operators at non-adjacent folded indices commute and
// preserve each other's raising counts, and one hat lowering moves any free
// element's folded raising count at an adjacent unfolded index by at most one
// downward and never upward.
inline CheckResult check_hat_axioms(const CheckParams& p) {
  using namespace harness_detail;
  CheckResult r;
  r.name = "hat_axioms";
  r.params = p;
  Collector c;
  Folding fold(p.ell, p.allow_l2);
  IndexSet folded = fold.folded();

  auto sweep = [&](auto&& hat, const std::string& label) {
    auto gen = bfs_generate(hat, p.depth, label);
    for (const std::string& v : axiom_violations(folded, gen.graph)) c.fail(label + ": " + v);
    for (const std::string& v : inversion_violations(hat, gen)) c.fail(label + ": " + v);
    for (const auto& [k, x] : gen.elems) {
      int d = gen.graph.vertices.at(k).depth;
      if (d + 2 > p.depth) continue;
      for (int i : hat.colors())
        for (int j : hat.colors()) {
          if (i >= j || unfolded_adjacent(folded, i, j)) continue;
          auto fi = hat.f_op(x, i);
          auto fj = hat.f_op(x, j);
          std::optional<typename std::decay_t<decltype(hat)>::Element> fij, fji;
          if (fi) fij = hat.f_op(*fi, j);
          if (fj) fji = hat.f_op(*fj, i);
          if (fij.has_value() != fji.has_value())
            c.fail(label + " " + k + ": lowering at non-adjacent " + std::to_string(i) +
                   "," + std::to_string(j) + " dies in one order only");
          else if (fij && !hat.equal(*fij, *fji))
            c.fail(label + " " + k + ": lowering at non-adjacent " + std::to_string(i) +
                   "," + std::to_string(j) + " does not commute");
          if (fj && hat.eps(*fj, i) != hat.eps(x, i))
            c.fail(label + " " + k + ": lowering at " + std::to_string(j) +
                   " moves the raising count at non-adjacent " + std::to_string(i));
        }
    }
  };

  sweep(hat_binf_model(p.ell, p.allow_l2), "hat-binf");
  {
    HatModel<HwModel> hat(
        HwModel(fold.unfolded(), {0, fold.unfolded().norm(fold.ell)}, p.sigorder), fold);
    sweep(hat, "hat-hw");
  }

  // Transfer bound on the whole free crystal, hat-reachable or not.
  {
    auto hat = hat_binf_model(p.ell, p.allow_l2);
    BinfModel plain(fold.unfolded(), p.tiebreak);
    auto gen = bfs_generate(plain, p.depth, "binf-unfolded");
    for (const auto& [k, x] : gen.elems)
      for (int i = 0; i < plain.idx.e; ++i)
        for (int step : {-1, 1}) {
          int j = plain.idx.norm(i + step);
          int ip = plain.idx.norm(i + fold.ell);
          int before = std::min(plain.eps(x, i), plain.eps(x, ip));
          auto y = hat.f_op(x, fold.fold(j));
          if (!y) {
            c.fail("transfer " + k + ": hat lowering died at class of " + std::to_string(j));
            continue;
          }
          int after = std::min(plain.eps(*y, i), plain.eps(*y, ip));
          if (after > before || after < before - 1)
            c.fail("transfer " + k + ": folded eps at class of " + std::to_string(i) +
                   " moved from " + std::to_string(before) + " to " + std::to_string(after) +
                   " under hat lowering at class of " + std::to_string(j));
        }
  }
  c.finish(r);
  return r;
}

// The hat layer over the free crystal at modulus 2*ell is isomorphic, as a
// colored graded graph with statistics, to the free crystal at modulus ell.
inline CheckResult check_binf_fold_iso(const CheckParams& p) {
  using namespace harness_detail;
  CheckResult r;
  r.name = "binf_fold_iso";
  r.params = p;
  Collector c;
  auto g1 = bfs_generate(hat_binf_model(p.ell, p.allow_l2), p.depth, "hat-binf").graph;
  auto g2 = bfs_generate(BinfModel(IndexSet(p.ell), p.tiebreak), p.depth, "binf").graph;
  IsoResult iso = check_isomorphism(g1, g2);
  if (!iso.ok) c.fail(iso.detail);
  if (iso.ok && iso.vmap.size() != g1.vertices.size()) c.fail("forced map is not total");
  c.finish(r);
  return r;
}

// Starred hat lowering generates the same layered set as plain hat lowering,
// the starred raising count agrees at both members of each index pair with
// the folded value, starred raising is defined exactly on positive count, and
// starred raising undoes starred lowering.
inline CheckResult check_star_eps(const CheckParams& p) {
  using namespace harness_detail;
  CheckResult r;
  r.name = "star_eps";
  r.params = p;
  Collector c;
  auto hat = hat_binf_model(p.ell, p.allow_l2);
  auto gen = bfs_generate(hat, p.star_depth, "hat-binf");
  auto layers = layer_key_sets(gen.graph);

  std::vector<std::set<std::string>> star_layers(static_cast<size_t>(p.star_depth) + 1);
  std::vector<BinfElement> frontier{hat.highest()};
  star_layers[0].insert(hat.key(hat.highest()));
  for (int d = 1; d <= p.star_depth; ++d) {
    std::vector<BinfElement> next;
    for (const BinfElement& x : frontier)
      for (int i : hat.colors()) {
        BinfElement y = hat.f_star(x, i);
        std::string k = hat.key(y);
        if (star_layers[static_cast<size_t>(d)].insert(k).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  for (int d = 0; d <= p.star_depth; ++d)
    if (star_layers[static_cast<size_t>(d)] != layers[static_cast<size_t>(d)])
      c.fail("starred and plain generation disagree at depth " + std::to_string(d));

  for (const auto& [k, x] : gen.elems) {
    int d = gen.graph.vertices.at(k).depth;
    for (int i : hat.colors()) {
      auto [lo, hi] = hat.fold.hat_pair(i);
      int slo = hat.model.eps_star(x, lo);
      int shi = hat.model.eps_star(x, hi);
      int sh = hat.eps_star(x, i);
      if (slo != shi || sh != slo)
        c.fail(k + ": starred eps at pair (" + std::to_string(lo) + "," + std::to_string(hi) +
               ") gives (" + std::to_string(slo) + "," + std::to_string(shi) +
               ") with folded " + std::to_string(sh));
      auto up = hat.e_star(x, i);
      if (up.has_value() != (sh > 0))
        c.fail(k + ": starred raising at " + std::to_string(i) +
               " defined exactly on positive starred eps fails");
      if (up) {
        std::string uk = hat.key(*up);
        if (d == 0 || !layers[static_cast<size_t>(d - 1)].count(uk))
          c.fail(k + ": starred raising leaves the hat-reachable set");
        if (!hat.equal(hat.f_star(*up, i), x))
          c.fail(k + ": starred lowering does not undo starred raising at " + std::to_string(i));
      }
      BinfElement dn = hat.f_star(x, i);
      auto back = hat.e_star(dn, i);
      if (!back || !hat.equal(*back, x))
        c.fail(k + ": starred raising does not undo starred lowering at " + std::to_string(i));
    }
  }
  c.finish(r);
  return r;
}

// The hat layer over the doubled highest-weight crystal with paired charges
// is isomorphic to the folded highest-weight crystal, whose vertex labels per
// layer are exactly the restricted partitions counted by an independent
// enumerator.
inline CheckResult check_hw_fold_iso(const CheckParams& p) {
  using namespace harness_detail;
  CheckResult r;
  r.name = "hw_fold_iso";
  r.params = p;
  Collector c;
  Folding fold(p.ell, p.allow_l2);
  HatModel<HwModel> hat(
      HwModel(fold.unfolded(), {0, fold.unfolded().norm(fold.ell)}, p.sigorder), fold);
  HwModel plain(fold.folded(), {0}, p.sigorder);
  auto g1 = bfs_generate(hat, p.hw_depth, "hat-hw").graph;
  auto g2full = bfs_generate(plain, p.hw_depth, "hw");
  IsoResult iso = check_isomorphism(g1, g2full.graph);
  if (!iso.ok) c.fail(iso.detail);

  auto layers = layer_key_sets(g2full.graph);
  for (int n = 0; n <= p.hw_depth; ++n) {
    std::set<std::string> expect;
    for (const std::vector<int>& lam : enumerate_restricted(n, p.ell))
      expect.insert(HwModel::mp_to_string({lam}));
    if (layers[static_cast<size_t>(n)] != expect) {
      std::ostringstream os;
      os << "folded labels at size " << n << " differ from the restricted partitions: got {";
      bool first = true;
      for (const std::string& k : layers[static_cast<size_t>(n)]) {
        os << (first ? "" : " | ") << k;
        first = false;
      }
      os << "} want {";
      first = true;
      for (const std::string& k : expect) {
        os << (first ? "" : " | ") << k;
        first = false;
      }
      os << "}";
      c.fail(os.str());
    }
    if (g1.layer_counts().size() > static_cast<size_t>(n) &&
        g1.layer_counts()[static_cast<size_t>(n)] != expect.size())
      c.fail("hat layer count at depth " + std::to_string(n) + " is " +
             std::to_string(g1.layer_counts()[static_cast<size_t>(n)]) + ", want " +
             std::to_string(expect.size()));
  }
  c.finish(r);
  return r;
}

// The doubling map from the folded highest-weight crystal into the doubled
// crystal is well defined along every edge, path independent, injective, and
// its image at each size is exactly the fixed-point set of the involution
// that shifts every residue by ell.
inline CheckResult check_iota(const CheckParams& p) {
  using namespace harness_detail;
  CheckResult r;
  r.name = "iota_welldef_and_fixedpoints";
  r.params = p;
  Collector c;
  Folding fold(p.ell, p.allow_l2);
  HwModel plain(fold.folded(), {0});
  HatModel<HwModel> hat = hat_hw_model(p.ell, 0, p.allow_l2);
  auto gen = bfs_generate(plain, p.hw_depth, "hw");
  auto out = gen.graph.out_edges();

  // Image map built along breadth-first edges; a revisit must agree.
  std::map<std::string, Multipartition> img;
  std::vector<std::vector<std::string>> by_depth(static_cast<size_t>(p.hw_depth) + 1);
  for (const auto& [k, v] : gen.graph.vertices)
    by_depth[static_cast<size_t>(v.depth)].push_back(k);
  img[plain.key(plain.highest())] = hat.highest();
  for (int d = 0; d <= p.hw_depth; ++d)
    for (const std::string& k : by_depth[static_cast<size_t>(d)]) {
      auto it = img.find(k);
      if (it == img.end()) {
        c.fail("vertex " + k + " was reached before its image was known");
        continue;
      }
      for (int i : plain.colors()) {
        auto edge = out.find({k, i});
        if (edge == out.end()) continue;
        auto step = hat.f_op(it->second, i);
        if (!step) {
          c.fail("vertex " + k + ": paired lowering at " + std::to_string(i) +
                 " died although the folded edge exists");
          continue;
        }
        auto [prev, fresh] = img.emplace(edge->second, *step);
        if (!fresh && !hat.equal(prev->second, *step))
          c.fail("vertex " + edge->second + ": image depends on the path taken");
      }
    }

  // Injectivity.
  std::map<std::string, std::string> back;
  for (const auto& [k, mp] : img) {
    auto [it, fresh] = back.emplace(hat.key(mp), k);
    if (!fresh) c.fail("vertices " + it->second + " and " + k + " share one image");
  }

  // Raising counts transfer through the embedding.
  for (const auto& [k, mp] : img) {
    const Multipartition& source = gen.elems.at(k);
    for (int i : plain.colors())
      if (plain.eps(source, i) != hat.eps(mp, i))
        c.fail("vertex " + k + ": eps at " + std::to_string(i) +
               " changes across the embedding");
  }

  // Spot agreement with the word-driven front door.
  for (int d = 0; d <= std::min(p.hw_depth, 3); ++d)
    for (const std::string& k : by_depth[static_cast<size_t>(d)]) {
      Word w = plain.word_of(gen.elems.at(k));
      if (!hat.equal(iota_image(p.ell, w, p.allow_l2), img.at(k)))
        c.fail("vertex " + k + ": edge image and word image disagree");
    }

  // Fixed points of the shift involution, per size, on the doubled side.
  HwModel doubled(fold.unfolded(), {0, fold.unfolded().norm(fold.ell)});
  auto big = bfs_generate(doubled, 2 * p.hw_depth, "hw-doubled");
  HAuto h(p.ell, p.allow_l2);
  std::vector<std::set<std::string>> fixed(static_cast<size_t>(2 * p.hw_depth) + 1);
  for (const auto& [k, mp] : big.elems) {
    int d = big.graph.vertices.at(k).depth;
    if (h.is_fixed(mp)) fixed[static_cast<size_t>(d)].insert(k);
  }
  std::vector<std::set<std::string>> image(static_cast<size_t>(p.hw_depth) + 1);
  for (const auto& [k, mp] : img)
    image[static_cast<size_t>(gen.graph.vertices.at(k).depth)].insert(hat.key(mp));
  for (int n = 0; n <= 2 * p.hw_depth; ++n) {
    if (n % 2 == 1) {
      if (!fixed[static_cast<size_t>(n)].empty())
        c.fail("a fixed point of odd size " + std::to_string(n) + " exists: " +
               *fixed[static_cast<size_t>(n)].begin());
      continue;
    }
    if (fixed[static_cast<size_t>(n)] != image[static_cast<size_t>(n / 2)])
      c.fail("fixed points at size " + std::to_string(n) +
             " differ from the embedded image of size " + std::to_string(n / 2));
  }
  c.finish(r);
  return r;
}

// Two-step removals at the two members of an index pair commute on every
// element; on hat-reachable elements the removal lands back in the
// hat-reachable set and arises from exactly the two orderings of its pair,
// no other ordered pair of indices.
inline CheckResult check_mult_two_shadow(const CheckParams& p) {
  using namespace harness_detail;
  CheckResult r;
  r.name = "mult_two_shadow";
  r.params = p;
  Collector c;
  Folding fold(p.ell, p.allow_l2);

  auto sweep = [&](auto&& hat, const std::string& label) {
    auto gen = bfs_generate(hat, p.depth, label);
    auto layers = layer_key_sets(gen.graph);
    const auto& plain = hat.model;
    int e = plain.idx.e;
    for (const auto& [k, x] : gen.elems) {
      int d = gen.graph.vertices.at(k).depth;
      for (int i = 0; i < e; ++i)
        for (int j = i + 1; j < e; ++j) {
          if (unfolded_adjacent(plain.idx, i, j)) continue;
          auto a = plain.e_op(x, i);
          auto b = plain.e_op(x, j);
          std::optional<typename std::decay_t<decltype(hat)>::Element> ab, ba;
          if (a) ab = plain.e_op(*a, j);
          if (b) ba = plain.e_op(*b, i);
          bool both = plain.eps(x, i) > 0 && plain.eps(x, j) > 0;
          if (ab.has_value() != both || ba.has_value() != both)
            c.fail(label + " " + k + ": paired removal at " + std::to_string(i) + "," +
                   std::to_string(j) + " defined exactly on positive counts fails");
          if (ab && ba && !plain.equal(*ab, *ba))
            c.fail(label + " " + k + ": removals at non-adjacent " + std::to_string(i) +
                   "," + std::to_string(j) + " do not commute");
        }
      for (int ih : hat.colors()) {
        if (hat.eps(x, ih) == 0) continue;
        auto target = hat.e_op(x, ih);
        if (!target) continue;
        std::string tk = hat.key(*target);
        if (d == 0 || !layers[static_cast<size_t>(d - 1)].count(tk))
          c.fail(label + " " + k + ": paired removal leaves the hat-reachable set");
        auto [lo, hi] = fold.hat_pair(ih);
        std::vector<std::pair<int, int>> producing;
        for (int i = 0; i < e; ++i)
          for (int j = 0; j < e; ++j) {
            auto first = plain.e_op(x, i);
            if (!first) continue;
            auto second = plain.e_op(*first, j);
            if (second && plain.equal(*second, *target)) producing.push_back({i, j});
          }
        std::vector<std::pair<int, int>> expect{{lo, hi}, {hi, lo}};
        std::sort(producing.begin(), producing.end());
        std::sort(expect.begin(), expect.end());
        if (producing != expect) {
          std::ostringstream os;
          os << label << " " << k << ": removal to " << tk << " arises from " << producing.size()
             << " ordered pairs instead of the two orderings of (" << lo << "," << hi << ")";
          c.fail(os.str());
        }
      }
    }
  };

  sweep(hat_binf_model(p.ell, p.allow_l2), "hat-binf");
  {
    HatModel<HwModel> hat(
        HwModel(fold.unfolded(), {0, fold.unfolded().norm(fold.ell)}, p.sigorder), fold);
    sweep(hat, "hat-hw");
  }
  c.finish(r);
  return r;
}

// Word rewriting identities for adjacent indices in the free crystal, plain
// and folded: pulling a single adjacent letter through a run, straightening
// an alternating block against a clean prefix, and the two tail-absorption
// rules that either extend the alternating block or grow the inner run.
inline CheckResult check_word_lemmas(const CheckParams& p) {
  using namespace harness_detail;
  CheckResult r;
  r.name = "word_lemmas";
  r.params = p;
  Collector c;
  const int bound = 2;  // block length, run length, and inner run bound

  // model: lowering by word; eps_fn(x, i); equal_fn(x, y); adjacency on idx.
  auto sweep = [&](auto&& lower, auto&& eps_fn, auto&& equal_fn, int e,
                   const std::vector<Word>& prefixes, const std::string& label) {
    for (int i = 0; i < e; ++i)
      for (int step : {-1, 1}) {
        int j = ((i + step) % e + e) % e;
        if (j == i) continue;

        // Pulling one adjacent letter left through a run.
        for (int rr = 1; rr <= bound; ++rr)
          for (int s = 0; s <= bound; ++s) {
            auto lhs = lower(cat({rep(i, rr), {j}, rep(i, s)}));
            auto rhs = lower(cat({{i, j}, rep(i, rr + s - 1)}));
            if (!equal_fn(lhs, rhs))
              c.fail(label + ": run pull fails at i=" + std::to_string(i) +
                     " j=" + std::to_string(j) + " r=" + std::to_string(rr) +
                     " s=" + std::to_string(s));
          }

        for (const Word& ua : prefixes) {
          auto base = lower(ua);
          bool clean_j = eps_fn(base, j) == 0;
          bool clean_i = eps_fn(base, i) == 0;

          if (clean_j) {
            for (int kk = 0; kk <= bound; ++kk) {
              // Alternating block straightens into two runs.
              auto lhs = lower(cat({ua, alt(i, j, kk)}));
              auto rhs = lower(cat({ua, rep(i, kk), rep(j, kk)}));
              if (!equal_fn(lhs, rhs))
                c.fail(label + ": block straightening fails at ua=" + word_str(ua) +
                       " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                       " k=" + std::to_string(kk));
              // A trailing run slides across the alternating block.
              for (int ee = 1; ee <= bound; ++ee) {
                auto a = lower(cat({ua, alt(i, j, kk), rep(i, ee)}));
                auto b = lower(cat({ua, rep(i, ee), alt(i, j, kk)}));
                auto d2 = lower(cat({ua, rep(i, kk + ee), rep(j, kk)}));
                if (!equal_fn(a, b) || !equal_fn(a, d2))
                  c.fail(label + ": run slide fails at ua=" + word_str(ua) +
                         " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                         " k=" + std::to_string(kk) + " e=" + std::to_string(ee));
              }
            }
          }

          if (clean_i && clean_j) {
            for (int kk = 0; kk <= bound; ++kk)
              for (int ee = 1; ee <= bound; ++ee) {
                // Small inner run: the trailing letter extends the block.
                for (int e2 = 0; e2 < ee && e2 <= bound; ++e2) {
                  auto m = lower(cat({ua, alt(i, j, kk), rep(j, e2), rep(i, ee), {j}}));
                  if (eps_fn(m, i) != ee - 1)
                    c.fail(label + ": absorbed eps fails at ua=" + word_str(ua) +
                           " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                           " k=" + std::to_string(kk) + " run=" + std::to_string(ee) +
                           " inner=" + std::to_string(e2));
                  auto want = lower(cat({ua, alt(i, j, kk + 1), rep(j, e2), rep(i, ee - 1)}));
                  if (!equal_fn(m, want))
                    c.fail(label + ": block extension fails at ua=" + word_str(ua) +
                           " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                           " k=" + std::to_string(kk) + " run=" + std::to_string(ee) +
                           " inner=" + std::to_string(e2));
                }
                // Large inner run: the trailing letter joins the inner run.
                for (int e2 = ee; e2 <= bound; ++e2) {
                  auto m = lower(cat({ua, alt(i, j, kk), rep(j, e2), rep(i, ee), {j}}));
                  if (eps_fn(m, i) != ee)
                    c.fail(label + ": absorbed eps fails at ua=" + word_str(ua) +
                           " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                           " k=" + std::to_string(kk) + " run=" + std::to_string(ee) +
                           " inner=" + std::to_string(e2));
                  auto want = lower(cat({ua, alt(i, j, kk), rep(j, e2 + 1), rep(i, ee)}));
                  if (!equal_fn(m, want))
                    c.fail(label + ": run growth fails at ua=" + word_str(ua) +
                           " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                           " k=" + std::to_string(kk) + " run=" + std::to_string(ee) +
                           " inner=" + std::to_string(e2));
                }
              }
          }
        }
      }
  };

  {
    BinfModel m(IndexSet(2 * p.ell), p.tiebreak);
    auto lower = [&](const Word& w) { return m.from_word(w); };
    auto eps_fn = [&](const BinfElement& x, int i) { return m.eps(x, i); };
    auto equal_fn = [&](const BinfElement& x, const BinfElement& y) { return m.equal(x, y); };
    sweep(lower, eps_fn, equal_fn, m.idx.e, all_words(m.idx.e, p.prefix_len), "plain");
  }
  {
    auto hat = hat_binf_model(p.ell, p.allow_l2);
    auto lower = [&](const Word& w) {
      auto x = hat.from_word(w);
      if (!x) throw std::logic_error("hat lowering died on the free model");
      return *x;
    };
    auto eps_fn = [&](const BinfElement& x, int i) { return hat.eps(x, i); };
    auto equal_fn = [&](const BinfElement& x, const BinfElement& y) { return hat.equal(x, y); };
    sweep(lower, eps_fn, equal_fn, p.ell, all_words(p.ell, p.prefix_len), "hat");
  }
  c.finish(r);
  return r;
}

// Every two-letter word whose raising count at i survives removing one j
// factors as alternating block, j-run, i-run, final j, with the block size
// and run sizes forced by the letter counts. Checked for plain and folded
// adjacent index pairs. A nonempty two-letter prefix would end in i or j and
// carry a positive raising count there, so the clean prefix is always empty.
inline CheckResult check_two_cases(const CheckParams& p) {
  using namespace harness_detail;
  CheckResult r;
  r.name = "two_cases";
  r.params = p;
  Collector c;

  auto sweep = [&](auto&& lower, auto&& eps_fn, auto&& raise_fn, auto&& equal_fn, int e,
                   const std::string& label) {
    for (int i = 0; i < e; ++i)
      for (int step : {-1, 1}) {
        int j = ((i + step) % e + e) % e;
        if (j == i) continue;
        for (const Word& w : words_over({i, j}, p.word_len)) {
          if (w.empty()) continue;
          auto m = lower(w);
          int eps = eps_fn(m, i);
          if (eps < 1) continue;
          auto up = raise_fn(m, j);
          if (!up) continue;
          if (eps_fn(*up, i) != eps) continue;
          int ni = static_cast<int>(std::count(w.begin(), w.end(), i));
          int nj = static_cast<int>(std::count(w.begin(), w.end(), j));
          int kk = ni - eps;
          int ep = nj - kk - 1;
          if (kk < 0 || ep < 0) {
            c.fail(label + ": no factorization shape for word " + word_str(w) +
                   " at i=" + std::to_string(i) + " j=" + std::to_string(j));
            continue;
          }
          auto want = lower(cat({alt(i, j, kk), rep(j, ep), rep(i, eps), {j}}));
          if (!equal_fn(m, want))
            c.fail(label + ": word " + word_str(w) + " at i=" + std::to_string(i) +
                   " j=" + std::to_string(j) + " does not match block=" + std::to_string(kk) +
                   " jrun=" + std::to_string(ep) + " irun=" + std::to_string(eps));
        }
      }
  };

  {
    BinfModel m(IndexSet(2 * p.ell), p.tiebreak);
    auto lower = [&](const Word& w) { return m.from_word(w); };
    auto eps_fn = [&](const BinfElement& x, int i) { return m.eps(x, i); };
    auto raise_fn = [&](const BinfElement& x, int i) { return m.e_op(x, i); };
    auto equal_fn = [&](const BinfElement& x, const BinfElement& y) { return m.equal(x, y); };
    sweep(lower, eps_fn, raise_fn, equal_fn, m.idx.e, "plain");
  }
  {
    auto hat = hat_binf_model(p.ell, p.allow_l2);
    auto lower = [&](const Word& w) {
      auto x = hat.from_word(w);
      if (!x) throw std::logic_error("hat lowering died on the free model");
      return *x;
    };
    auto eps_fn = [&](const BinfElement& x, int i) { return hat.eps(x, i); };
    auto raise_fn = [&](const BinfElement& x, int i) { return hat.e_op(x, i); };
    auto equal_fn = [&](const BinfElement& x, const BinfElement& y) { return hat.equal(x, y); };
    sweep(lower, eps_fn, raise_fn, equal_fn, p.ell, "hat");
  }
  c.finish(r);
  return r;
}

// Character arithmetic: the shuffle square of a two-letter word splits with
// multiplicities four and two, and the shuffle square of a paired-letter
// character has dimension 24 of which the ordered-pair head accounts for 6,
// leaving a complement of dimension 18 with nonnegative multiplicities.
inline CheckResult check_char_identities(const CheckParams& p) {
  using namespace harness_detail;
  CheckResult r;
  r.name = "char_identities";
  r.params = p;
  Collector c;
  IndexSet idx(2 * p.ell);
  for (int i = 0; i < idx.e; ++i)
    for (int step : {-1, 1}) {
      int j = idx.norm(i + step);
      Character base = character_of_word(idx, {i, j});
      Character sq = shuffle(base, base);
      Character expect = character_of_word(idx, {i, i, j, j}, 4);
      expect += character_of_word(idx, {i, j, i, j}, 2);
      if (!(sq == expect))
        c.fail("shuffle square of a two-letter word at i=" + std::to_string(i) +
               " j=" + std::to_string(j) + " does not split as 4 + 2");
    }

  Folding fold(p.ell, p.allow_l2);
  long long complement = -1;
  for (int ih = 0; ih < p.ell; ++ih) {
    Character cs = char_of_hat_letter(fold, ih);
    if (cs.dim() != 2) c.fail("paired-letter character dimension is not 2");
    Character sq = shuffle(cs, cs);
    if (sq.dim() != 24)
      c.fail("shuffle square dimension is " + std::to_string(sq.dim()) + ", want 24");
    auto [lo, hi] = fold.hat_pair(ih);
    std::map<Word, long long> head;
    shuffle_words({lo, hi}, {lo, hi}, 1, head);
    long long head_dim = 0;
    for (const auto& [w, m] : head) {
      head_dim += m;
      auto it = sq.terms.find(w);
      if (it == sq.terms.end() || it->second < m)
        c.fail("head term " + word_str(w) + " exceeds the shuffle square");
    }
    if (head_dim != 6)
      c.fail("ordered-pair head dimension is " + std::to_string(head_dim) + ", want 6");
    long long dim = sq.dim() - head_dim;
    if (complement < 0) complement = dim;
    if (dim != 18 || dim != complement)
      c.fail("complement dimension is " + std::to_string(dim) + ", want 18");
  }
  c.finish(r);
  if (r.pass) r.detail = "dim = " + std::to_string(complement);
  return r;
}

// The coordinate model and the wide-charge highest-weight embedding agree on
// raising counts, on shifted co-counts, and on which words collapse to the
// same element, over an exhaustive sweep plus seeded random words.
inline CheckResult check_oracle_xcheck(const CheckParams& p) {
  using namespace harness_detail;
  CheckResult r;
  r.name = "oracle_xcheck";
  r.params = p;
  Collector c;
  IndexSet idx(2 * p.ell);
  const int N = 10;
  BinfModel m(idx, p.tiebreak);

  std::vector<Word> words = all_words(idx.e, p.word_len);
  std::mt19937 rng(p.seed);
  std::uniform_int_distribution<int> len_dist(1, std::min(8, N));
  std::uniform_int_distribution<int> letter_dist(0, idx.e - 1);
  for (int t = 0; t < p.random_words; ++t) {
    Word w(static_cast<size_t>(len_dist(rng)));
    for (int& a : w) a = letter_dist(rng);
    words.push_back(std::move(w));
  }

  HwModel wide = big_lambda_model(idx, N, p.sigorder);
  std::map<std::string, std::string> fwd, bwd;
  for (const Word& w : words) {
    BinfElement x = m.from_word(w);
    Multipartition y = big_lambda_embed(idx, w, N, p.sigorder);
    for (int i = 0; i < idx.e; ++i) {
      if (m.eps(x, i) != wide.eps(y, i)) {
        c.fail("word " + word_str(w) + ": eps at " + std::to_string(i) +
               " is " + std::to_string(m.eps(x, i)) + " in coordinates but " +
               std::to_string(wide.eps(y, i)) + " in the wide embedding");
        break;
      }
      if (m.phi(x, i) + N != wide.phi(y, i)) {
        c.fail("word " + word_str(w) + ": phi at " + std::to_string(i) +
               " shifted by the charge width disagrees");
        break;
      }
    }
    std::string bk = m.key(x), wk = wide.key(y);
    auto [f, fn] = fwd.emplace(bk, wk);
    if (!fn && f->second != wk)
      c.fail("word " + word_str(w) + ": one coordinate class maps to two embedded classes");
    auto [b, bn] = bwd.emplace(wk, bk);
    if (!bn && b->second != bk)
      c.fail("word " + word_str(w) + ": two coordinate classes collapse in the embedding");
  }
  c.finish(r);
  return r;
}

// Level-one vertex labels per layer are exactly the restricted partitions at
// the calibration modulus 2 and at the working modulus, every vertex is
// accepted by the greedy peel, and every non-restricted partition of small
// size is rejected by it.
inline CheckResult check_klesh_count(const CheckParams& p) {
  using namespace harness_detail;
  CheckResult r;
  r.name = "klesh_count";
  r.params = p;
  Collector c;
  std::set<int> moduli{2, p.ell};
  for (int e : moduli) {
    HwModel hw(IndexSet(e), {0}, p.sigorder);
    auto gen = bfs_generate(hw, p.hw_depth, "hw");
    auto layers = layer_key_sets(gen.graph);
    for (int n = 0; n <= p.hw_depth; ++n) {
      std::set<std::string> expect;
      for (const std::vector<int>& lam : enumerate_restricted(n, e))
        expect.insert(HwModel::mp_to_string({lam}));
      if (layers[static_cast<size_t>(n)] != expect)
        c.fail("modulus " + std::to_string(e) + ": labels at size " + std::to_string(n) +
               " differ from the restricted partitions");
    }
    for (const auto& [k, mp] : gen.elems)
      if (!hw.is_kleshchev(mp))
        c.fail("modulus " + std::to_string(e) + ": vertex " + k + " fails the greedy peel");
    for (int n = 0; n <= std::min(p.hw_depth, 5); ++n) {
      std::set<std::vector<int>> good;
      for (const std::vector<int>& lam : enumerate_restricted(n, e)) good.insert(lam);
      for (const std::vector<int>& lam : all_partitions(n))
        if (hw.is_kleshchev({lam}) != static_cast<bool>(good.count(lam)))
          c.fail("modulus " + std::to_string(e) + ": greedy peel misjudges " +
                 HwModel::mp_to_string({lam}));
    }
  }
  c.finish(r);
  return r;
}

// Interaction of hat operators with their starred mates on hat-reachable
// elements: a starred lowering moves the plain raising count by zero or one
// at its own index and not at all elsewhere, symmetrically with the roles
// swapped; when the count is preserved, full raising commutes with the other
// family's lowering; full raisings in the two families detect each other's
// count preservation symmetrically; and when the count jumps, one raising of
// the same index undoes the lowering.
inline CheckResult check_lemmas_10x(const CheckParams& p) {
  using namespace harness_detail;
  CheckResult r;
  r.name = "lemmas_10x";
  r.params = p;
  Collector c;
  auto hat = hat_binf_model(p.ell, p.allow_l2);
  auto gen = bfs_generate(hat, p.star_depth, "hat-binf");

  auto raise_n = [&](BinfElement x, int i, int n) {
    for (int t = 0; t < n; ++t) {
      auto y = hat.e_op(x, i);
      if (!y) throw std::logic_error("raising chain died early");
      x = *y;
    }
    return x;
  };
  auto raise_star_n = [&](BinfElement x, int i, int n) {
    for (int t = 0; t < n; ++t) {
      auto y = hat.e_star(x, i);
      if (!y) throw std::logic_error("starred raising chain died early");
      x = *y;
    }
    return x;
  };

  for (const auto& [k, x] : gen.elems) {
    for (int i : hat.colors()) {
      int eh = hat.eps(x, i);
      int sh = hat.eps_star(x, i);

      BinfElement xs = hat.f_star(x, i);
      int v = hat.eps(xs, i);
      if (v != eh && v != eh + 1)
        c.fail(k + ": starred lowering at " + std::to_string(i) + " moves eps from " +
               std::to_string(eh) + " to " + std::to_string(v));
      if (v == eh + 1) {
        auto back = hat.e_op(xs, i);
        if (!back || !hat.equal(*back, x))
          c.fail(k + ": raising does not undo the eps-jumping starred lowering at " +
                 std::to_string(i));
      }

      BinfElement xf = *hat.f_op(x, i);
      int vs = hat.eps_star(xf, i);
      if (vs != sh && vs != sh + 1)
        c.fail(k + ": lowering at " + std::to_string(i) + " moves starred eps from " +
               std::to_string(sh) + " to " + std::to_string(vs));
      if (vs == sh + 1) {
        auto back = hat.e_star(xf, i);
        if (!back || !hat.equal(*back, x))
          c.fail(k + ": starred raising does not undo the starred-eps-jumping lowering at " +
                 std::to_string(i));
      }

      for (int j : hat.colors()) {
        if (j != i) {
          if (hat.eps(hat.f_star(x, j), i) != eh)
            c.fail(k + ": starred lowering at " + std::to_string(j) +
                   " moves eps at " + std::to_string(i));
          if (hat.eps_star(*hat.f_op(x, j), i) != sh)
            c.fail(k + ": lowering at " + std::to_string(j) + " moves starred eps at " +
                   std::to_string(i));
        }
        BinfElement y = hat.f_star(x, j);
        if (hat.eps(y, i) == eh) {
          BinfElement lhs = raise_n(y, i, eh);
          BinfElement rhs = hat.f_star(raise_n(x, i, eh), j);
          if (!hat.equal(lhs, rhs))
            c.fail(k + ": full raising at " + std::to_string(i) +
                   " does not commute with starred lowering at " + std::to_string(j));
        }
        BinfElement z = *hat.f_op(x, j);
        if (hat.eps_star(z, i) == sh) {
          BinfElement lhs = raise_star_n(z, i, sh);
          auto rhs = hat.f_op(raise_star_n(x, i, sh), j);
          if (!rhs || !hat.equal(lhs, *rhs))
            c.fail(k + ": full starred raising at " + std::to_string(i) +
                   " does not commute with lowering at " + std::to_string(j));
        }
      }

      BinfElement m1 = raise_n(x, i, eh);
      BinfElement m2 = raise_star_n(x, i, sh);
      bool left = hat.eps_star(m1, i) == sh;
      bool right = hat.eps(m2, i) == eh;
      if (left != right)
        c.fail(k + ": count preservation under full raising is one-sided at " +
               std::to_string(i));
    }
  }
  c.finish(r);
  return r;
}

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "crystal1",      "hat_axioms", "binf_fold_iso",
      "star_eps",      "hw_fold_iso", "iota_welldef_and_fixedpoints",
      "mult_two_shadow", "word_lemmas", "two_cases",
      "char_identities", "oracle_xcheck", "klesh_count",
      "lemmas_10x"};
  return names;
}

inline CheckResult run_check(const std::string& name, const CheckParams& p) {
  using namespace harness_detail;
  using Fn = CheckResult (*)(const CheckParams&);
  static const std::map<std::string, Fn> table = {
      {"crystal1", check_crystal1},
      {"hat_axioms", check_hat_axioms},
      {"binf_fold_iso", check_binf_fold_iso},
      {"star_eps", check_star_eps},
      {"hw_fold_iso", check_hw_fold_iso},
      {"iota_welldef_and_fixedpoints", check_iota},
      {"mult_two_shadow", check_mult_two_shadow},
      {"word_lemmas", check_word_lemmas},
      {"two_cases", check_two_cases},
      {"char_identities", check_char_identities},
      {"oracle_xcheck", check_oracle_xcheck},
      {"klesh_count", check_klesh_count},
      {"lemmas_10x", check_lemmas_10x}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("run_check: unknown check " + name);

  const double budget = 5e6;
  double branch = 2.0 * p.ell;
  if (name == "crystal1" || name == "hat_axioms" || name == "binf_fold_iso" ||
      name == "mult_two_shadow")
    refuse_if(std::pow(branch, p.depth), budget, "breadth-first");
  if (name == "star_eps" || name == "lemmas_10x")
    refuse_if(std::pow(branch, p.star_depth), budget, "starred breadth-first");
  if (name == "hw_fold_iso" || name == "klesh_count" ||
      name == "iota_welldef_and_fixedpoints")
    refuse_if(std::pow(2.0, p.hw_depth), 1 << 14, "highest-weight breadth-first");
  if (name == "oracle_xcheck")
    refuse_if(std::pow(branch, p.word_len) + p.random_words, budget, "word sweep");
  if (name == "word_lemmas" || name == "two_cases")
    refuse_if(std::pow(2.0, p.word_len) * branch * branch +
                  std::pow(branch, p.prefix_len) * branch * branch,
              budget, "word sweep");

  auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = it->second(p);
  } catch (const std::exception& ex) {
    r.name = name;
    r.params = p;
    r.pass = false;
    r.failures = 1;
    r.detail = std::string("exception: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

struct SuiteReport {
  std::string profile;
  std::vector<CheckResult> results;
  bool all_pass() const {
    for (const CheckResult& r : results)
      if (!r.pass) return false;
    return true;
  }
};

inline size_t harness_thread_count(size_t njobs) {
  size_t n = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("HATCRYSTAL_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) n = static_cast<size_t>(v);
  }
  if (n == 0) n = 1;
  return std::min(n, njobs ? njobs : size_t{1});
}

inline SuiteReport run_suite(const std::string& profile) {
  if (profile != "quick" && profile != "full")
    throw std::invalid_argument("run_suite: unknown profile " + profile);

  std::vector<std::pair<std::string, CheckParams>> jobs;
  if (profile == "quick") {
    CheckParams p;  // defaults are the quick scale
    for (const std::string& name : check_names()) jobs.push_back({name, p});
  } else {
    CheckParams p;
    p.depth = 5;
    p.star_depth = 4;
    p.word_len = 5;
    p.random_words = 1000;
    for (int ell : {3, 4}) {
      p.ell = ell;
      for (const std::string& name : check_names()) jobs.push_back({name, p});
    }
  }

  SuiteReport report;
  report.profile = profile;
  report.results.resize(jobs.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      size_t t = cursor.fetch_add(1);
      if (t >= jobs.size()) break;
      report.results[t] = run_check(jobs[t].first, jobs[t].second);
    }
  };
  size_t nthreads = harness_thread_count(jobs.size());
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
  return report;
}

inline nlohmann::json result_json(const CheckResult& r) {
  nlohmann::json j;
  j["check"] = r.name;
  j["pass"] = r.pass;
  j["ell"] = r.params.ell;
  j["depth"] = r.params.depth;
  j["hw_depth"] = r.params.hw_depth;
  j["star_depth"] = r.params.star_depth;
  j["word_len"] = r.params.word_len;
  j["prefix_len"] = r.params.prefix_len;
  j["random_words"] = r.params.random_words;
  j["seed"] = r.params.seed;
  j["allow_l2"] = r.params.allow_l2;
  j["tiebreak"] = r.params.tiebreak == BinfTieBreak::standard ? "standard" : "flipped";
  j["sigorder"] = r.params.sigorder == SignatureOrder::standard ? "standard" : "flipped";
  j["failures"] = r.failures;
  j["seconds"] = r.seconds;
  j["detail"] = r.detail;
  return j;
}

inline std::string to_json_lines(const SuiteReport& report) {
  std::ostringstream os;
  for (const CheckResult& r : report.results) os << result_json(r).dump() << "\n";
  return os.str();
}

inline std::string summary_table(const SuiteReport& report) {
  std::ostringstream os;
  size_t width = 5;
  for (const CheckResult& r : report.results) width = std::max(width, r.name.size());
  os << "check";
  os << std::string(width - 5 + 2, ' ') << "ell  status  seconds\n";
  size_t passed = 0;
  for (const CheckResult& r : report.results) {
    os << r.name << std::string(width - r.name.size() + 2, ' ');
    os << r.params.ell << "    " << (r.pass ? "pass" : "FAIL") << "    ";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
    os << buf << "\n";
    if (r.pass) ++passed;
  }
  os << "passed " << passed << "/" << report.results.size() << "\n";
  return os.str();
}

}  // namespace hatcrystal

// Folded crystal operators: each folded color acts through the pair of
// unfolded residues half a turn apart. The two single steps commute, and the
// layer asserts that on every application instead of assuming it.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "hatcrystal/binf.hpp"
#include "hatcrystal/cartan.hpp"
#include "hatcrystal/hwcrystal.hpp"

namespace hatcrystal {

struct UnsupportedOperation : std::logic_error {
  using std::logic_error::logic_error;
};

// Lambda part of the folded highest weight. The free model carries none; the
// highest-weight model must pair residues half a turn apart and contributes a
// single folded fundamental weight.
inline Weight folded_lambda_part(const BinfModel&, const Folding&) { return {}; }

inline Weight folded_lambda_part(const HwModel& m, const Folding& f) {
  if (m.charge.size() != 2 || m.idx.norm(m.charge[0] + f.ell) != m.charge[1])
    throw std::invalid_argument(
        "folded weight: multicharge must be a pair of residues half a turn apart");
  Weight w;
  w.add_lambda(f.fold(m.charge[0]), 1);
  return w;
}

template <class Model>
class HatModel {
 public:
  using Element = typename Model::Element;

  Model model;  // over 2l residues
  Folding fold;

  HatModel(Model model_, Folding fold_) : model(std::move(model_)), fold(fold_) {
    if (model.idx.e != 2 * fold.ell)
      throw std::invalid_argument("hat layer: model must live over twice the folded residues");
  }

  Element highest() const { return model.highest(); }

  std::vector<int> colors() const {
    std::vector<int> c(fold.ell);
    for (int i = 0; i < fold.ell; ++i) c[i] = i;
    return c;
  }

  bool equal(const Element& x, const Element& y) const { return model.equal(x, y); }
  std::string key(const Element& x) const { return model.key(x); }

  int eps(const Element& x, int i) const {
    auto [lo, hi] = fold.hat_pair(i);
    return std::min(model.eps(x, lo), model.eps(x, hi));
  }

  Weight wt(const Element& x) const {
    Weight full = model.wt(x);
    Weight alpha_only;
    alpha_only.alpha = full.alpha;
    return fold.fold_weight(alpha_only) + folded_lambda_part(model, fold);
  }

  int phi(const Element& x, int i) const {
    return eps(x, i) + pair_weight(fold.folded(), i, wt(x));
  }

  // Lower along the pair, upper residue first. Both orders are computed and
  // compared; a mismatch means the pair failed to commute.
  std::optional<Element> f_op(const Element& x, int i) const {
    auto [lo, hi] = fold.hat_pair(i);
    auto a = chain_f(x, hi, lo);
    auto b = chain_f(x, lo, hi);
    require_agreement(a, b, "hat lowering");
    return a;
  }

  std::optional<Element> e_op(const Element& x, int i) const {
    if (eps(x, i) == 0) return std::nullopt;
    auto [lo, hi] = fold.hat_pair(i);
    auto a = chain_e(x, hi, lo);
    auto b = chain_e(x, lo, hi);
    require_agreement(a, b, "hat raising");
    if (!a) throw std::logic_error("hat raising: positive eps but a single step died");
    return a;
  }

  std::optional<Element> from_word(const Word& w) const {
    Element x = highest();
    for (int i : w) {
      auto nxt = f_op(x, i);
      if (!nxt) return std::nullopt;
      x = *nxt;
    }
    return x;
  }

  // Greedy raising word in folded letters, leftmost letter first.
  Word word_of(const Element& x) const {
    Element cur = x;
    Word removals;
    long long guard = 0;
    while (true) {
      int r = -1;
      for (int i = 0; i < fold.ell; ++i)
        if (eps(cur, i) > 0) {
          r = i;
          break;
        }
      if (r < 0) break;
      cur = *e_op(cur, r);
      removals.push_back(r);
      if (++guard > 1000000) throw std::logic_error("hat word_of: no progress");
    }
    if (!model.equal(cur, highest()))
      throw std::invalid_argument("hat word_of: raising stalled before the highest element");
    std::reverse(removals.begin(), removals.end());
    return removals;
  }

  // Starred structure, defined only when the underlying model carries one.
  int eps_star(const Element& x, int i) const {
    if constexpr (has_star) {
      auto [lo, hi] = fold.hat_pair(i);
      return std::min(model.eps_star(x, lo), model.eps_star(x, hi));
    } else {
      throw UnsupportedOperation("starred operators need the free model");
    }
  }

  Element f_star(const Element& x, int i) const {
    if constexpr (has_star) {
      auto [lo, hi] = fold.hat_pair(i);
      Element a = model.f_star(model.f_star(x, hi), lo);
      Element b = model.f_star(model.f_star(x, lo), hi);
      if (!model.equal(a, b)) throw std::logic_error("hat starred lowering: order mismatch");
      return a;
    } else {
      throw UnsupportedOperation("starred operators need the free model");
    }
  }

  std::optional<Element> e_star(const Element& x, int i) const {
    if constexpr (has_star) {
      if (eps_star(x, i) == 0) return std::nullopt;
      auto [lo, hi] = fold.hat_pair(i);
      auto a1 = model.e_star(x, hi);
      if (!a1) throw std::logic_error("hat starred raising: positive eps but a step died");
      auto a2 = model.e_star(*a1, lo);
      if (!a2) throw std::logic_error("hat starred raising: positive eps but a step died");
      auto b1 = model.e_star(x, lo);
      std::optional<Element> b2;
      if (b1) b2 = model.e_star(*b1, hi);
      if (!b2 || !model.equal(*a2, *b2))
        throw std::logic_error("hat starred raising: order mismatch");
      return a2;
    } else {
      throw UnsupportedOperation("starred operators need the free model");
    }
  }

 private:
  static constexpr bool has_star = requires(const Model m, const typename Model::Element& e) {
    m.eps_star(e, 0);
    m.f_star(e, 0);
    m.e_star(e, 0);
  };

  std::optional<Element> chain_f(const Element& x, int first, int second) const {
    auto y = model.f_op(x, first);
    if (!y) return std::nullopt;
    return model.f_op(*y, second);
  }

  std::optional<Element> chain_e(const Element& x, int first, int second) const {
    auto y = model.e_op(x, first);
    if (!y) return std::nullopt;
    return model.e_op(*y, second);
  }

  void require_agreement(const std::optional<Element>& a, const std::optional<Element>& b,
                         const char* what) const {
    if (a.has_value() != b.has_value())
      throw std::logic_error(std::string(what) + ": one order died and the other survived");
    if (a && !model.equal(*a, *b))
      throw std::logic_error(std::string(what) + ": the two orders disagree");
  }
};

inline HatModel<BinfModel> hat_binf_model(int ell, bool allow_l2 = false) {
  Folding fold(ell, allow_l2);
  return HatModel<BinfModel>(BinfModel(fold.unfolded()), fold);
}

inline HatModel<HwModel> hat_hw_model(int ell, int charge0 = 0, bool allow_l2 = false) {
  Folding fold(ell, allow_l2);
  IndexSet idx = fold.unfolded();
  int c = idx.norm(charge0);
  return HatModel<HwModel>(HwModel(idx, {c, idx.norm(c + fold.ell)}), fold);
}

// Embedding of a highest-weight path over the folded residues into the
// doubled highest-weight crystal, one folded letter becoming the pair of
// unfolded letters. Rejects words that already die over the folded residues.
inline Multipartition iota_image(int ell, const Word& w, bool allow_l2 = false) {
  Folding fold(ell, allow_l2);
  HwModel probe_model(fold.folded(), {0});
  HatModel<HwModel> big = hat_hw_model(ell, 0, allow_l2);
  Multipartition probe = probe_model.highest();
  Multipartition image = big.highest();
  for (size_t t = 0; t < w.size(); ++t) {
    int i = fold.theta(w[t]);
    auto p = probe_model.f_apply(probe, i);
    if (!p)
      throw std::invalid_argument("iota: letter " + std::to_string(i) + " at step " +
                                  std::to_string(t + 1) + " leaves the folded crystal");
    probe = *p;
    auto nxt = big.f_op(image, i);
    if (!nxt)
      throw std::logic_error("iota: paired lowering died at step " + std::to_string(t + 1));
    image = *nxt;
  }
  return image;
}

// The relabeling automorphism of the doubled highest-weight crystal induced
// by shifting every residue half a turn; computed by replaying a defining
// word with shifted letters, with memoization.
class HAuto {
 public:
  explicit HAuto(int ell, bool allow_l2 = false)
      : fold_(ell, allow_l2), model_(fold_.unfolded(), {0, ell}) {}

  const HwModel& model() const { return model_; }

  Multipartition operator()(const Multipartition& mp) {
    auto it = cache_.find(mp);
    if (it != cache_.end()) return it->second;
    Word w = model_.word_of(mp);
    for (int& letter : w) letter = model_.idx.norm(letter + fold_.ell);
    auto img = model_.from_word(w);
    if (!img) throw std::logic_error("relabeling automorphism: shifted word dies");
    cache_.emplace(mp, *img);
    return *img;
  }

  bool is_fixed(const Multipartition& mp) { return operator()(mp) == mp; }

 private:
  Folding fold_;
  HwModel model_;
  std::map<Multipartition, Multipartition> cache_;
};

}  // namespace hatcrystal

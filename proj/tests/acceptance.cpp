// Acceptance sweep: one line per criterion, nonzero exit when any fails.
// Each criterion either recomputes its target directly from the library or
// drives the named verification checks at a pinned scale, so a silently
// broken convention shows up here as a red line rather than a wrong answer.

#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hatcrystal/harness.hpp"

using namespace hatcrystal;

namespace {

int failures = 0;

void report(int num, const std::string& label, bool pass, const std::string& why) {
  std::printf("%2d  %-62s %s\n", num, label.c_str(), pass ? "pass" : "FAIL");
  if (!pass) {
    ++failures;
    if (!why.empty()) std::printf("      %s\n", why.c_str());
  }
}

bool check_ok(const std::string& name, const CheckParams& p, std::string& why) {
  CheckResult r = run_check(name, p);
  if (!r.pass) why = name + ": " + r.detail;
  return r.pass;
}

bool check_fails(const std::string& name, const CheckParams& p, std::string& why) {
  CheckResult r = run_check(name, p);
  if (r.pass) why = name + " still passes under the flipped convention";
  return !r.pass;
}

// Shuffle square of a length-two adjacent-residue word splits as four copies
// of the sorted word plus two of the alternating word, with nothing else.
bool crit_shuffle_split(std::string& why) {
  IndexSet idx(6);
  for (int i = 0; i < idx.e; ++i)
    for (int d : {1, 5}) {
      int j = idx.norm(i + d);
      Character sq = shuffle(character_of_word(idx, {i, j}), character_of_word(idx, {i, j}));
      Character expect = character_of_word(idx, {i, i, j, j}, 4);
      expect += character_of_word(idx, {i, j, i, j}, 2);
      if (!(sq == expect)) {
        why = "split fails for pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        return false;
      }
    }
  return true;
}

// The induced product of two adjacent paired letters has a 24 dimensional
// character; the head accounts for one 6 dimensional shuffle, leaving an
// 18 dimensional kernel with nonnegative multiplicities everywhere.
bool crit_kernel_dim(std::string& why) {
  Folding fold(3);
  IndexSet idx = fold.unfolded();
  for (int i = 0; i < idx.e; ++i)
    for (int d : {1, 5}) {
      int j = idx.norm(i + d);
      std::string pair = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      Character prod =
          shuffle(char_of_hat_letter(fold, fold.fold(i)), char_of_hat_letter(fold, fold.fold(j)));
      if (prod.dim() != 24) {
        why = "product dim " + std::to_string(prod.dim()) + " for " + pair;
        return false;
      }
      std::map<Word, long long> head;
      shuffle_words({i, j}, {idx.norm(i + 3), idx.norm(j + 3)}, 1, head);
      long long head_dim = 0;
      for (const auto& [w, c] : head) {
        head_dim += c;
        auto it = prod.terms.find(w);
        if (it == prod.terms.end() || it->second < c) {
          why = "head word not contained in the product for " + pair;
          return false;
        }
      }
      if (head_dim != 6 || prod.dim() - head_dim != 18) {
        why = "kernel dim " + std::to_string(prod.dim() - head_dim) + " for " + pair;
        return false;
      }
    }
  return true;
}

// Layer sizes of a generated truncation must match frozen values.
bool layers_equal(const std::vector<size_t>& got, const std::vector<size_t>& want,
                  const std::string& what, std::string& why) {
  if (got == want) return true;
  why = what + " layers";
  for (size_t v : got) why += " " + std::to_string(v);
  return false;
}

// Starred statistics against the tensor-product rule: pushing the word
// through the right factor counts exactly the starred removals.
bool crit_tensor_rule(std::string& why) {
  IndexSet idx(6);
  BinfModel m(idx);
  std::mt19937 rng(7u);
  for (int t = 0; t < 500; ++t) {
    Word w(1 + rng() % 8);
    for (int& letter : w) letter = static_cast<int>(rng() % idx.e);
    BinfModel::Element x = m.from_word(w);
    for (int i = 0; i < idx.e; ++i) {
      int pushed = m.b_tensor_push(w, i).second.a;
      if (m.eps_star(x, i) != pushed) {
        why = "starred count mismatch at color " + std::to_string(i);
        return false;
      }
    }
  }
  return true;
}

bool guarded(bool (*fn)(std::string&), std::string& why) {
  try {
    return fn(why);
  } catch (const std::exception& e) {
    why = std::string("exception: ") + e.what();
    return false;
  }
}

}  // namespace

int main() {
  std::string why;

  why.clear();
  report(1, "shuffle square of an adjacent pair splits 4 + 2 at e = 6",
         guarded(crit_shuffle_split, why), why);

  why.clear();
  report(2, "induced product of paired letters leaves an 18 dim kernel",
         guarded(crit_kernel_dim, why), why);

  {
    why.clear();
    CheckParams p;
    p.depth = 4;
    bool ok = true;
    try {
      for (int ell : {3, 4}) {
        p.ell = ell;
        ok = ok && check_ok("crystal1", p, why);
      }
    } catch (const std::exception& e) {
      ok = false;
      why = std::string("exception: ") + e.what();
    }
    report(3, "folded eps agreement and closure on levels 3 and 4", ok, why);
  }

  {
    why.clear();
    CheckParams p;
    p.depth = 4;
    bool ok = true;
    try {
      ok = check_ok("mult_two_shadow", p, why);
    } catch (const std::exception& e) {
      ok = false;
      why = std::string("exception: ") + e.what();
    }
    report(4, "paired removals commute and reach each target twice", ok, why);
  }

  {
    why.clear();
    CheckParams p;
    p.depth = 4;
    bool ok = true;
    try {
      ok = check_ok("binf_fold_iso", p, why);
      std::vector<size_t> want = {1, 3, 9, 21, 48};
      ok = ok && layers_equal(bfs_generate(hat_binf_model(3), 4).graph.layer_counts(), want,
                              "paired free crystal", why);
      ok = ok && layers_equal(bfs_generate(BinfModel(IndexSet(3)), 4).graph.layer_counts(), want,
                              "rank 3 free crystal", why);
    } catch (const std::exception& e) {
      ok = false;
      why = std::string("exception: ") + e.what();
    }
    report(5, "free folded crystal matches the rank 3 free crystal to depth 4", ok, why);
  }

  {
    why.clear();
    CheckParams p;
    p.hw_depth = 6;
    bool ok = true;
    try {
      ok = check_ok("hw_fold_iso", p, why);
      std::vector<size_t> want = {1, 1, 2, 2, 4, 5, 7};
      ok = ok &&
           layers_equal(bfs_generate(HwModel(IndexSet(3), {0}), 6).graph.layer_counts(), want,
                        "level one highest-weight crystal", why);
    } catch (const std::exception& e) {
      ok = false;
      why = std::string("exception: ") + e.what();
    }
    report(6, "highest-weight layers count restricted partitions 1,1,2,2,4,5,7", ok, why);
  }

  {
    why.clear();
    CheckParams p;
    p.hw_depth = 6;
    bool ok = true;
    try {
      ok = check_ok("iota_welldef_and_fixedpoints", p, why);
    } catch (const std::exception& e) {
      ok = false;
      why = std::string("exception: ") + e.what();
    }
    report(7, "doubling embedding is well defined with exactly the fixed image", ok, why);
  }

  {
    why.clear();
    CheckParams p;
    p.star_depth = 3;
    bool ok = true;
    try {
      ok = check_ok("star_eps", p, why);
      ok = ok && check_ok("lemmas_10x", p, why);
      ok = ok && guarded(crit_tensor_rule, why);
    } catch (const std::exception& e) {
      ok = false;
      why = std::string("exception: ") + e.what();
    }
    report(8, "starred statistics agree three ways and match the tensor rule", ok, why);
  }

  {
    why.clear();
    CheckParams p;
    bool ok = true;
    try {
      ok = check_ok("word_lemmas", p, why);
      ok = ok && check_ok("two_cases", p, why);
    } catch (const std::exception& e) {
      ok = false;
      why = std::string("exception: ") + e.what();
    }
    report(9, "word identity lemmas hold for all small parameters", ok, why);
  }

  {
    why.clear();
    CheckParams p;
    p.word_len = 5;
    p.random_words = 1000;
    bool ok = true;
    try {
      ok = check_ok("oracle_xcheck", p, why);
    } catch (const std::exception& e) {
      ok = false;
      why = std::string("exception: ") + e.what();
    }
    report(10, "free crystal agrees with the wide highest-weight oracle", ok, why);
  }

  {
    why.clear();
    bool ok = true;
    try {
      CheckParams p;
      p.word_len = 3;
      p.random_words = 50;
      p.tiebreak = BinfTieBreak::flipped;
      ok = check_fails("oracle_xcheck", p, why);
      CheckParams q;
      q.hw_depth = 4;
      q.sigorder = SignatureOrder::flipped;
      ok = ok && check_fails("hw_fold_iso", q, why);
    } catch (const std::exception& e) {
      ok = false;
      why = std::string("exception: ") + e.what();
    }
    report(11, "flipped conventions are caught by the discriminating checks", ok, why);
  }

  std::printf("acceptance: %d/11 passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}

#include <catch2/catch_amalgamated.hpp>

#include "hatcrystal/cartan.hpp"

using namespace hatcrystal;

TEST_CASE("cartan pairing values") {
  IndexSet e6(6);
  CHECK(e6.pairing(0, 0) == 2);
  CHECK(e6.pairing(0, 1) == -1);
  CHECK(e6.pairing(0, 5) == -1);
  CHECK(e6.pairing(0, 3) == 0);
  CHECK(e6.pairing(0, 2) == 0);

  IndexSet e2(2);
  CHECK(e2.pairing(0, 0) == 2);
  CHECK(e2.pairing(0, 1) == -2);
  CHECK(e2.pairing(1, 0) == -2);

  CHECK_THROWS_AS(IndexSet(1), std::invalid_argument);
}

TEST_CASE("cartan pairing symmetry and zero row sums") {
  for (int e : {2, 3, 4, 6, 8}) {
    IndexSet idx(e);
    for (int i = 0; i < e; ++i) {
      int row = 0;
      for (int j = 0; j < e; ++j) {
        CHECK(idx.pairing(i, j) == idx.pairing(j, i));
        row += idx.pairing(i, j);
      }
      CHECK(row == 0);
    }
  }
}

TEST_CASE("residue normalization") {
  IndexSet e6(6);
  CHECK(e6.norm(-1) == 5);
  CHECK(e6.norm(6) == 0);
  CHECK(e6.norm(-7) == 5);
  CHECK(e6.norm(13) == 1);
}

TEST_CASE("pair_weight") {
  IndexSet e2(2);
  Weight w = fundamental_weight(e2, 0) - simple_root(e2, 0);
  CHECK(pair_weight(e2, 1, w) == 2);  // <h1,L0> = 0, <h1,-a0> = 2

  IndexSet e6(6);
  CHECK(pair_weight(e6, 0, fundamental_weight(e6, 0)) == 1);
  Weight neg_a1;
  neg_a1.add_alpha(1, -1);
  CHECK(pair_weight(e6, 0, neg_a1) == 1);
}

TEST_CASE("pair_weight is additive") {
  IndexSet e6(6);
  Weight w1 = fundamental_weight(e6, 2) - simple_root(e6, 3);
  Weight w2 = simple_root(e6, 0) + simple_root(e6, 1) - fundamental_weight(e6, 5);
  for (int i = 0; i < 6; ++i)
    CHECK(pair_weight(e6, i, w1 + w2) == pair_weight(e6, i, w1) + pair_weight(e6, i, w2));
}

TEST_CASE("weight arithmetic erases zeros") {
  IndexSet e6(6);
  Weight w = simple_root(e6, 1) - simple_root(e6, 1);
  CHECK(w.is_zero());
  CHECK(w == Weight{});
  CHECK(w.str() == "0");
}

TEST_CASE("folding maps") {
  Folding f3(3);
  CHECK(f3.theta(2) == 2);
  CHECK(f3.fold(5) == 2);
  CHECK(f3.hat_pair(0) == std::pair{0, 3});
  CHECK(f3.hat_pair(2) == std::pair{2, 5});
  for (int i = 0; i < 3; ++i) CHECK(f3.fold(f3.theta(i)) == i);

  Folding f4(4);
  CHECK(f4.theta(0) == 0);
  CHECK(f4.hat_pair(1) == std::pair{1, 5});

  CHECK_THROWS_AS(Folding(2), std::invalid_argument);
  CHECK_NOTHROW(Folding(2, true));
  CHECK_THROWS_AS(Folding(1, true), std::invalid_argument);
}

TEST_CASE("fold_weight") {
  Folding f3(3);
  IndexSet e6(6);
  Weight w;
  w.add_alpha(0, -1);
  w.add_alpha(3, -1);
  Weight folded = f3.fold_weight(w);
  Weight expect;
  expect.add_alpha(0, -1);
  CHECK(folded == expect);

  CHECK(f3.fold_weight(Weight{}) == Weight{});

  Weight w2;
  for (int i : {0, 3, 1, 4}) w2.add_alpha(i, -1);
  Weight expect2;
  expect2.add_alpha(0, -1);
  expect2.add_alpha(1, -1);
  CHECK(f3.fold_weight(w2) == expect2);

  Weight bad;
  bad.add_alpha(0, -1);
  CHECK_THROWS_AS(f3.fold_weight(bad), std::invalid_argument);

  Weight lam = fundamental_weight(e6, 0);
  CHECK_THROWS_AS(f3.fold_weight(lam), std::invalid_argument);

  // additivity on balanced inputs
  Weight a, b;
  a.add_alpha(2, 2);
  a.add_alpha(5, 2);
  b.add_alpha(0, -1);
  b.add_alpha(3, -1);
  CHECK(f3.fold_weight(a + b) == f3.fold_weight(a) + f3.fold_weight(b));
}

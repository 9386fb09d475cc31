#include <catch2/catch_amalgamated.hpp>

#include "hatcrystal/hatlayer.hpp"

using namespace hatcrystal;

namespace {

std::vector<Word> all_words(int letters, int maxlen) {
  std::vector<Word> out{{}};
  size_t lo = 0;
  for (int len = 1; len <= maxlen; ++len) {
    size_t hi = out.size();
    for (size_t t = lo; t < hi; ++t)
      for (int i = 0; i < letters; ++i) {
        Word w = out[t];
        w.push_back(i);
        out.push_back(std::move(w));
      }
    lo = hi;
  }
  return out;
}

}  // namespace

TEST_CASE("hat model construction guards") {
  CHECK_THROWS_AS(hat_binf_model(2), std::invalid_argument);
  CHECK_NOTHROW(hat_binf_model(2, true));
  CHECK_THROWS_AS(HatModel<BinfModel>(BinfModel(IndexSet(5)), Folding(3)),
                  std::invalid_argument);
  auto bad_charge = HwModel(IndexSet(6), {0, 1});
  HatModel<HwModel> bad(bad_charge, Folding(3));
  CHECK_THROWS_AS(bad.wt(bad.highest()), std::invalid_argument);
}

TEST_CASE("hat lowering on the free model acts through the residue pair") {
  auto hat = hat_binf_model(3);
  auto u = hat.highest();
  auto x = hat.f_op(u, 0);
  REQUIRE(x);
  CHECK(*x == hat.model.from_word({3, 0}));
  CHECK(hat.eps(*x, 0) == 1);
  CHECK(hat.eps(*x, 1) == 0);
  Weight expect;
  expect.add_alpha(0, -1);
  CHECK(hat.wt(*x) == expect);
  CHECK(hat.phi(*x, 0) == -1);
  CHECK(hat.phi(*x, 1) == 1);

  auto back = hat.e_op(*x, 0);
  REQUIRE(back);
  CHECK(back->is_highest());
  CHECK(!hat.e_op(u, 0));
}

TEST_CASE("hat lowering on the doubled highest-weight model") {
  auto hat = hat_hw_model(3);
  auto u = hat.highest();
  CHECK(u == Multipartition{{}, {}});
  CHECK(hat.wt(u) == fundamental_weight(IndexSet(3), 0));
  CHECK(hat.phi(u, 0) == 1);
  CHECK(hat.phi(u, 1) == 0);
  CHECK(!hat.f_op(u, 1));

  auto x = hat.f_op(u, 0);
  REQUIRE(x);
  CHECK(*x == Multipartition{{1}, {1}});
  CHECK(hat.eps(*x, 0) == 1);
  Weight expect = fundamental_weight(IndexSet(3), 0);
  expect.add_alpha(0, -1);
  CHECK(hat.wt(*x) == expect);
  auto back = hat.e_op(*x, 0);
  REQUIRE(back);
  CHECK(*back == u);
}

TEST_CASE("hat words replay and reduce") {
  auto hat = hat_binf_model(3);
  for (const Word& w : all_words(3, 3)) {
    auto x = hat.from_word(w);
    REQUIRE(x);
    auto replay = hat.from_word(hat.word_of(*x));
    REQUIRE(replay);
    CHECK(hat.equal(*replay, *x));
  }
  auto unreachable = hat.model.from_word({0});
  CHECK_THROWS_AS(hat.word_of(unreachable), std::invalid_argument);
}

TEST_CASE("hat colors at distance two commute") {
  auto hat = hat_binf_model(4);
  for (const Word& w : all_words(4, 2)) {
    auto x = hat.from_word(w);
    REQUIRE(x);
    auto ab = hat.f_op(*hat.f_op(*x, 0), 2);
    auto ba = hat.f_op(*hat.f_op(*x, 2), 0);
    REQUIRE(ab);
    REQUIRE(ba);
    CHECK(hat.equal(*ab, *ba));
    CHECK(hat.eps(*hat.f_op(*x, 2), 0) == hat.eps(*x, 0));
  }
}

TEST_CASE("hat starred operators on the free model") {
  auto hat = hat_binf_model(3);
  auto u = hat.highest();
  auto x = *hat.f_op(u, 0);
  CHECK(hat.eps_star(x, 0) == 1);
  CHECK(hat.eps_star(x, 1) == 0);
  CHECK(hat.equal(hat.f_star(u, 0), x));
  CHECK(!hat.e_star(u, 0));

  for (const Word& w : all_words(3, 3)) {
    auto x0 = hat.from_word(w);
    REQUIRE(x0);
    for (int i = 0; i < 3; ++i) {
      auto fx = hat.f_star(*x0, i);
      CHECK(hat.eps_star(fx, i) == hat.eps_star(*x0, i) + 1);
      auto back = hat.e_star(fx, i);
      REQUIRE(back);
      CHECK(hat.equal(*back, *x0));
    }
  }
}

TEST_CASE("hat starred operators reject the highest-weight model") {
  auto hat = hat_hw_model(3);
  auto u = hat.highest();
  CHECK_THROWS_AS(hat.eps_star(u, 0), UnsupportedOperation);
  CHECK_THROWS_AS(hat.f_star(u, 0), UnsupportedOperation);
  CHECK_THROWS_AS(hat.e_star(u, 0), UnsupportedOperation);
}

TEST_CASE("iota images of small folded paths") {
  CHECK(iota_image(3, {}) == Multipartition{{}, {}});
  CHECK(iota_image(3, {0}) == Multipartition{{1}, {1}});
  CHECK(iota_image(3, {0, 2}) == Multipartition{{1, 1}, {1, 1}});
  CHECK(HwModel::mp_to_string(iota_image(3, {0})) == "1;1");
  CHECK_THROWS_AS(iota_image(3, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(iota_image(3, {1}), std::invalid_argument);
  CHECK_THROWS_AS(iota_image(2, {0}), std::invalid_argument);
  CHECK_NOTHROW(iota_image(2, {0}, true));
}

TEST_CASE("iota error names the failing step") {
  CHECK_NOTHROW(iota_image(3, {0, 2, 1}));
  try {
    iota_image(3, {0, 0});
    FAIL("expected a throw");
  } catch (const std::invalid_argument& ex) {
    CHECK(std::string(ex.what()).find("step 2") != std::string::npos);
  }
}

TEST_CASE("relabeling automorphism swaps the residue pair") {
  HAuto h(3);
  CHECK(h(Multipartition{{}, {1}}) == Multipartition{{1}, {}});
  CHECK(h(Multipartition{{1}, {}}) == Multipartition{{}, {1}});
  CHECK(h.is_fixed(Multipartition{{}, {}}));
  CHECK(h.is_fixed(Multipartition{{1}, {1}}));
  CHECK(h.is_fixed(iota_image(3, {0, 2})));
  CHECK_THROWS_AS(h(Multipartition{{1, 1, 1, 1}, {}}), std::invalid_argument);

  // Involution over everything at depth <= 4.
  HwModel m(IndexSet(6), {0, 3});
  std::set<Multipartition> layer{m.highest()};
  for (int depth = 0; depth < 4; ++depth) {
    std::set<Multipartition> next;
    for (const auto& mp : layer) {
      CHECK(h(h(mp)) == mp);
      for (int i = 0; i < 6; ++i)
        if (auto fx = m.f_apply(mp, i)) next.insert(*fx);
    }
    layer = std::move(next);
  }
}

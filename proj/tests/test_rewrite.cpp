#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "torilink/rewrite.hpp"

using namespace torilink;

namespace {

// Path graph on three labels: 0-1 and 1-2 adjacent, 0-2 not.
LabelRewriter path_rewriter() {
  std::vector<std::vector<bool>> adj(3, std::vector<bool>(3, false));
  adj[0][1] = adj[1][0] = true;
  adj[1][2] = adj[2][1] = true;
  return LabelRewriter(adj, {0b001, 0b010, 0b100});
}

bool one_move_apart(const LabelRewriter& rw, const LabelWord& a,
                    const LabelWord& b) {
  const int cap = static_cast<int>(std::max(a.size(), b.size())) + 2;
  const auto nb = rw.neighbours(a, cap);
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

}  // namespace

TEST_CASE("inverse and commutator words") {
  const LabelWord w{0, 1, 2};
  CHECK(label_inverse(w) == LabelWord{2, 1, 0});
  CHECK(label_commutator({0}, {1}) == LabelWord{0, 1, 0, 1});
  CHECK(label_commutator({0, 1}, {2}) == LabelWord{0, 1, 2, 1, 0, 2});
}

TEST_CASE("words from facet names") {
  const auto p = CombinatorialPolytope::builtin("cube2");
  CHECK(label_word_from_names(p, {"X0", "Y1", "X0"}) == LabelWord{0, 3, 0});
}

TEST_CASE("endpoint accumulates colours") {
  const LabelRewriter rw = path_rewriter();
  CHECK(rw.endpoint({}) == 0);
  CHECK(rw.endpoint({0, 1}) == 0b011);
  CHECK(rw.endpoint({0, 1, 0}) == 0b010);
  CHECK(rw.endpoint({2, 2}) == 0);
  CHECK_THROWS(rw.endpoint({3}));
}

TEST_CASE("neighbours enumerate single moves") {
  const LabelRewriter rw = path_rewriter();
  // From 00: one cancellation, plus insertions while length allows.
  const auto nb = rw.neighbours({0, 0}, 4);
  CHECK(std::count(nb.begin(), nb.end(), LabelWord{}) == 1);
  CHECK(nb.size() == 1 + 3 * 3);  // cancel + 3 positions x 3 labels
  CHECK(rw.neighbours({0, 0}, 2).size() == 1);

  // Adjacent labels swap, non-adjacent ones do not.
  const auto nb2 = rw.neighbours({0, 1}, 2);
  CHECK(std::count(nb2.begin(), nb2.end(), LabelWord{1, 0}) == 1);
  const auto nb3 = rw.neighbours({0, 2}, 2);
  CHECK(std::count(nb3.begin(), nb3.end(), LabelWord{2, 0}) == 0);
}

TEST_CASE("equivalence by a single swap") {
  const LabelRewriter rw = path_rewriter();
  const auto der = rw.equivalent({0, 1}, {1, 0});
  REQUIRE(der.found);
  CHECK(der.steps.size() == 2);
  CHECK(der.steps.front() == LabelWord{0, 1});
  CHECK(der.steps.back() == LabelWord{1, 0});
}

TEST_CASE("doubled letters cancel") {
  const LabelRewriter rw = path_rewriter();
  const auto der = rw.equivalent({2, 2}, {});
  REQUIRE(der.found);
  CHECK(der.steps.size() == 2);

  const auto grow = rw.equivalent({}, {1, 1, 0, 0});
  REQUIRE(grow.found);
  CHECK(grow.steps.size() == 3);
}

TEST_CASE("identical words need no moves") {
  const LabelRewriter rw = path_rewriter();
  const auto der = rw.equivalent({0, 1, 2}, {0, 1, 2});
  REQUIRE(der.found);
  CHECK(der.steps.size() == 1);
  CHECK(der.explored == 0);
}

TEST_CASE("mismatched endpoints fail immediately") {
  const LabelRewriter rw = path_rewriter();
  const auto der = rw.equivalent({0}, {1});
  CHECK_FALSE(der.found);
  CHECK(der.explored == 0);
}

TEST_CASE("non-adjacent letters do not commute") {
  // 02 and 20 have equal endpoints but no derivation: every move keeps
  // the subword order of the odd-weight letters 0 and 2.
  const LabelRewriter rw = path_rewriter();
  const auto der = rw.equivalent({0, 2}, {2, 0});
  CHECK_FALSE(der.found);
}

TEST_CASE("sliding across the middle label") {
  // 0 and 2 commute after conjugating past 1: 012 ~ 021 ~ 201.
  const LabelRewriter rw = path_rewriter();
  const auto der = rw.equivalent({0, 1, 2}, {2, 1, 0}, 16);
  CHECK_FALSE(der.found);  // endpoints match but the braid is blocked

  const auto der2 = rw.equivalent({1, 0, 1, 2}, {1, 0, 2, 1});
  REQUIRE(der2.found);
}

TEST_CASE("derivations are chains of legal moves") {
  const LabelRewriter rw = path_rewriter();
  const LabelWord a{0, 0, 1, 2, 2, 1};
  const auto der = rw.equivalent(a, {});
  REQUIRE(der.found);
  REQUIRE(der.steps.size() >= 2);
  CHECK(der.steps.front() == a);
  CHECK(der.steps.back() == LabelWord{});
  for (size_t i = 0; i + 1 < der.steps.size(); ++i) {
    CHECK(one_move_apart(rw, der.steps[i], der.steps[i + 1]));
    CHECK(rw.endpoint(der.steps[i]) == rw.endpoint(der.steps[i + 1]));
  }
}

TEST_CASE("depth bound cuts the search off") {
  const LabelRewriter rw = path_rewriter();
  // Three insertions split across the two directions always leave one
  // side needing two moves, so one move per direction cannot meet.
  const LabelWord target{1, 1, 0, 0, 2, 2};
  CHECK_FALSE(rw.equivalent({}, target, 1).found);
  const auto der = rw.equivalent({}, target);
  REQUIRE(der.found);
  CHECK(der.steps.size() == 4);
}

TEST_CASE("size mismatches are rejected") {
  CHECK_THROWS(LabelRewriter({{false}}, {1, 2}));
  CHECK_THROWS(LabelRewriter({{false, false}}, {1}));
}

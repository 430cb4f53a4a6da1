#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "torilink/words.hpp"

using namespace torilink;

namespace {

const std::vector<std::string> kAb{"a", "b"};

Word w(std::initializer_list<Letter> ls) {
  return Word::from_letters(std::vector<Letter>(ls));
}

}  // namespace

TEST_CASE("free reduction") {
  const Word a = Word::generator(0);
  CHECK((a * a.inverse()).empty());
  CHECK(w({{0, 1}, {1, 1}, {1, -1}, {0, -1}}).empty());
  CHECK(w({{0, 1}, {1, 1}, {1, -1}, {0, 1}}) == w({{0, 1}, {0, 1}}));
  CHECK(Word::generator(0, -1).inverse() == a);
  CHECK(a.length() == 1);
}

TEST_CASE("commutators") {
  const Word a = Word::generator(0), b = Word::generator(1);
  const Word k = Word::commutator(a, b);
  CHECK(k.length() == 4);
  CHECK(k.str(kAb) == "a b a^-1 b^-1");
  CHECK(Word::commutator(a, a).empty());
  CHECK(k.inverse() == Word::commutator(b, a));
}

TEST_CASE("cyclic reduction") {
  const Word a = Word::generator(0), b = Word::generator(1);
  const Word conj = a * b * a.inverse();
  CHECK(conj.cyclically_reduced() == b);
  CHECK(Word::commutator(a, b).cyclically_reduced() == Word::commutator(a, b));
}

TEST_CASE("abelianization of words") {
  const Word a = Word::generator(0), b = Word::generator(1);
  CHECK((a * a * b.inverse()).abelianized(3) == std::vector<long>{2, -1, 0});
  CHECK(Word::commutator(a, b).abelianized(2) == std::vector<long>{0, 0});
}

TEST_CASE("presentation text parsing") {
  const Presentation p = parse_presentation_text("a b\n[a,b]\n");
  CHECK(p.generators == std::vector<std::string>{"a", "b"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] ==
        Word::commutator(Word::generator(0), Word::generator(1)));

  const Presentation q = parse_presentation_text("x y\nx^3 y^-2\n");
  CHECK(q.relators[0].abelianized(2) == std::vector<long>{3, -2});

  const Presentation r = parse_presentation_text("a b c\n[a,[b,c]]\n");
  CHECK(r.relators[0] ==
        Word::commutator(Word::generator(0),
                         Word::commutator(Word::generator(1),
                                          Word::generator(2))));

  const Presentation s = parse_presentation_text("a b\n(a b)^2\n");
  CHECK(s.relators[0].length() == 4);

  CHECK_THROWS(parse_presentation_text("a b\nq\n"));
}

TEST_CASE("presentation text round trip") {
  const Presentation p = ivansic_presentation();
  const Presentation q = parse_presentation_text(presentation_to_text(p));
  CHECK(q.generators == p.generators);
  CHECK(q.relators == p.relators);
}

TEST_CASE("link group presentation shape") {
  const Presentation p = ivansic_presentation();
  CHECK(p.generators == std::vector<std::string>{"a", "b", "c", "d", "e"});
  REQUIRE(p.relators.size() == 10);
  for (const Word& r : p.relators) {
    CHECK(r.length() == 10);
    CHECK(r.cyclically_reduced() == r);
    CHECK(r.abelianized(5) == std::vector<long>(5, 0));
  }
  CHECK(p.index_of("c") == 2);
  CHECK(p.index_of("z") == -1);
}

TEST_CASE("peripheral triples follow the index pattern") {
  for (int i = 0; i < 5; ++i) {
    const auto [m, l1, l2] = peripheral_triple(i);
    CHECK(m == Word::generator(i));
    CHECK(l1 == Word::commutator(Word::generator((i + 2) % 5),
                                 Word::generator((i + 3) % 5)));
    CHECK(l2 == Word::commutator(Word::generator((i + 1) % 5, -1),
                                 Word::generator((i + 4) % 5, -1)));
  }
}

TEST_CASE("surgery longitudes in cyclic order") {
  const auto longs = surgery_longitudes();
  REQUIRE(longs.size() == 5);
  const int pairs[5][2] = {{2, 3}, {3, 4}, {4, 0}, {0, 1}, {1, 2}};
  for (int i = 0; i < 5; ++i)
    CHECK(longs[i] == Word::commutator(Word::generator(pairs[i][0]),
                                       Word::generator(pairs[i][1])));
}

TEST_CASE("killing generators") {
  const Presentation p = parse_presentation_text("a b\n[a,b]\n");
  const Presentation q = kill_generators(p, {"a"});
  CHECK(q.generators == std::vector<std::string>{"b"});
  CHECK(q.relators.empty());

  // Surviving relators are rewritten over the renumbered generators.
  const Presentation r = parse_presentation_text("a b c\na b^-1\n[b,c]\n");
  const Presentation s = kill_generators(r, {"a"});
  CHECK(s.generators == std::vector<std::string>{"b", "c"});
  REQUIRE(s.relators.size() == 2);
  CHECK(s.relators[0] == Word::generator(0, -1));
  CHECK(s.relators[1] ==
        Word::commutator(Word::generator(0), Word::generator(1)));
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants(parse_presentation_text("a b\n[a,b]\n")) ==
        std::vector<mpz_class>{0, 0});
  CHECK(abelian_invariants(parse_presentation_text("a\na^2\n")) ==
        std::vector<mpz_class>{2});
  CHECK(abelian_invariants(parse_presentation_text("a b\na^2 b^-3\n")) ==
        std::vector<mpz_class>{0});
  CHECK(abelian_invariants(ivansic_presentation()) ==
        std::vector<mpz_class>(5, 0));
}

TEST_CASE("rewriting with relators") {
  const Word a = Word::generator(0), b = Word::generator(1);
  const Word k = Word::commutator(a, b);
  CHECK(simplify_with_relators(a * k, {k}).empty() == false);
  CHECK(simplify_with_relators(a * k, {k}) == a);
  // Rotations and inverses of the relator are removed too.
  CHECK(simplify_with_relators(b * a.inverse() * b.inverse() * a, {k}).empty());
  CHECK(simplify_with_relators(k.inverse(), {k}).empty());
  CHECK(simplify_with_relators(a, {k}) == a);
}

TEST_CASE("surgery quotient abelianizes to five copies of Z") {
  const SurgeryQuotient s = surgery_quotient();
  CHECK(s.longitudes.size() == 5);
  CHECK(s.presentation.relators.size() == 15);
  CHECK(s.abelian_invariants == std::vector<mpz_class>(5, 0));
}

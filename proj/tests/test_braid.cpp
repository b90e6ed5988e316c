#include "fixtures.hpp"
#include "knotsig/errors.hpp"
#include "knotsig/invariants.hpp"

#include <doctest.h>

using namespace knotsig;

TEST_CASE("braid parsing")
{
    const BraidWord b = BraidWord::parse("[-1,3,3,3,2,1,1,-3,2]");
    CHECK(b.length() == 9);
    CHECK(b.strands() == 4);
    CHECK(b.str() == "[-1,3,3,3,2,1,1,-3,2]");
    CHECK(BraidWord::parse(" [ 1 , -2 ,1,-2 ] ") == BraidWord{1, -2, 1, -2});
    CHECK_THROWS_AS(BraidWord::parse("[]"), ParseError);
    CHECK_THROWS_AS(BraidWord::parse("[1,0,1]"), ParseError);
    CHECK_THROWS_AS(BraidWord::parse("[1,2"), ParseError);
    CHECK_THROWS_AS(BraidWord::parse("1,2]"), ParseError);
    CHECK_THROWS_AS(BraidWord::parse("[1,a]"), ParseError);
    CHECK_THROWS(BraidWord(std::vector<int>{}));
}

TEST_CASE("components")
{
    CHECK(BraidWord{1, 1, 1}.components() == 1);
    CHECK(BraidWord{1, 1}.components() == 2);
    CHECK(BraidWord{2, 2, 2}.components() == 2);
    for (const auto& k : fixtures::catalog()) CHECK(k.braid.is_knot());
    CHECK_THROWS_AS(seifert_matrix(BraidWord{1, 1}), Error);
}

TEST_CASE("crossing edits")
{
    CHECK(flip_crossing(BraidWord{1, 1, 1}, 0) == BraidWord{-1, 1, 1});
    const BraidWord b73{1, 1, 2, -1, 2, 2, 2, 2};
    CHECK(flip_crossing(b73, 3) == BraidWord{1, 1, 2, 1, 2, 2, 2, 2});
    CHECK(flip_crossing(flip_crossing(b73, 5), 5) == b73);
    CHECK_THROWS_AS(flip_crossing(b73, 8), std::out_of_range);

    CHECK(mirror(BraidWord{1, 1, 1}) == BraidWord{-1, -1, -1});
    CHECK(mirror(mirror(b73)) == b73);

    CHECK(insert_trivial_pair(BraidWord{1, 1, 1}, 1, 1) == BraidWord{1, 1, -1, 1, 1});
    CHECK(insert_trivial_pair(BraidWord{1, 1, 1}, 3, 1) == BraidWord{1, 1, 1, 1, -1});
    CHECK_THROWS(insert_trivial_pair(BraidWord{1, 1, 1}, 4, 1));
    CHECK_THROWS(insert_trivial_pair(BraidWord{1, 1, 1}, 0, 2));
    CHECK_THROWS(insert_trivial_pair(BraidWord{1, 1, 1}, 0, 0));

    CHECK(stabilize(BraidWord{1, 1, 1}, true) == BraidWord{1, 1, 1, 2});
    CHECK(stabilize(BraidWord{1, 1, 1}, false) == BraidWord{1, 1, 1, -2});
    CHECK(connected_sum(BraidWord{1, 1, 1}, BraidWord{1, -2, 1, -2}) == BraidWord{1, 1, 1, 2, -3, 2, -3});
}

TEST_CASE("Seifert matrix examples")
{
    const IntMatrix v = seifert_matrix(BraidWord{1, 1, 1});
    CHECK(v.size() == 2);
    CHECK(alexander(v) == SymPoly{1, 1});
    CHECK(signature_at(v, 0.5) == -2);
    CHECK(alexander(seifert_matrix(BraidWord{1, -2, 1, -2})) == SymPoly{1, -1});
    CHECK(seifert_matrix(BraidWord{1}).size() == 0);
    CHECK(seifert_matrix(BraidWord{1, -1, 1}).size() == 2);
    CHECK(alexander(seifert_matrix(BraidWord{1, -1, 1})) == SymPoly{1});
}

TEST_CASE("Alexander and signature oracles on the catalog")
{
    for (const auto& k : fixtures::catalog()) {
        CAPTURE(k.name);
        const IntMatrix v = seifert_matrix(k.braid);
        const SymPoly d = alexander(v);
        if (k.delta) CHECK(d == *k.delta);
        CHECK(d(mpq_class(0)) == 1);
        CHECK(v.size() % 2 == 0);
        CHECK(signature_at(v, 0.5) == k.sigma);
    }
}

TEST_CASE("invariance under Reidemeister II and Markov stabilization")
{
    for (const auto& k : fixtures::catalog()) {
        CAPTURE(k.name);
        const IntMatrix v = seifert_matrix(k.braid);
        const SymPoly d = alexander(v);
        for (std::size_t pos = 0; pos <= k.braid.length(); pos += 3)
            for (int gen = 1; gen < k.braid.strands(); ++gen) {
                const BraidWord w = insert_trivial_pair(k.braid, pos, gen);
                CHECK(w.components() == 1);
                const IntMatrix vw = seifert_matrix(w);
                CHECK(alexander(vw) == d);
                CHECK(signature_at(vw, 0.5) == k.sigma);
            }
        for (bool positive : {true, false}) {
            const IntMatrix vs = seifert_matrix(stabilize(k.braid, positive));
            CHECK(alexander(vs) == d);
            CHECK(signature_at(vs, 0.5) == k.sigma);
        }
    }
}

TEST_CASE("mirror at the Seifert level")
{
    for (const auto& k : fixtures::catalog()) {
        CAPTURE(k.name);
        const IntMatrix vm = seifert_matrix(mirror(k.braid));
        CHECK(alexander(vm) == alexander(seifert_matrix(k.braid)));
        CHECK(signature_at(vm, 0.5) == -k.sigma);
        CHECK(signature_at(-seifert_matrix(k.braid).transposed(), 0.5) == -k.sigma);
    }
}

TEST_CASE("connected sum multiplies Alexander polynomials")
{
    const auto cat = fixtures::catalog();
    for (std::size_t i = 0; i < cat.size(); ++i)
        for (std::size_t j = i; j < cat.size(); j += 3) {
            const BraidWord b = connected_sum(cat[i].braid, cat[j].braid);
            REQUIRE(b.is_knot());
            const IntMatrix v = seifert_matrix(b);
            CHECK(alexander(v) == alexander(seifert_matrix(cat[i].braid)) * alexander(seifert_matrix(cat[j].braid)));
            CHECK(signature_at(v, 0.5) == cat[i].sigma + cat[j].sigma);
        }
}

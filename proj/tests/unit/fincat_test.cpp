#include <doctest.h>

#include "twocat/fincat.hpp"

using namespace twocat;

TEST_SUITE("fincat") {

TEST_CASE("builders produce valid categories") {
    for (const FinCat& c : {terminal_cat(), arrow_cat(), cospan_cat(),
                            isopair_cat(), chain3_cat(), parallel_pair_cat()}) {
        auto rep = validate_fincat(c);
        CAPTURE(rep.to_string());
        CHECK(rep.ok());
    }
}

TEST_CASE("compose and hom behave on the chain") {
    FinCat c = chain3_cat();
    int a = c.morphism_index("a01");
    int b = c.morphism_index("a12");
    int ab = c.morphism_index("a02");
    CHECK(c.compose(b, a) == ab);
    CHECK(c.hom(0, 2) == std::vector<int>{ab});
    CHECK(c.hom(2, 0).empty());
    CHECK_THROWS_AS((void)c.compose(a, b), NotComposable);
    CHECK_THROWS_AS((void)c.compose(a, 99), UnknownCell);
    CHECK(c.compose_chain({a, b}) == ab);
}

TEST_CASE("isomorphism detection") {
    FinCat c = isopair_cat();
    int a = c.morphism_index("a");
    CHECK(c.is_iso(a));
    CHECK(c.inverse(a) == c.morphism_index("b"));
    FinCat d = arrow_cat();
    CHECK_FALSE(d.is_iso(d.morphism_index("a01")));
    CHECK(d.is_iso(d.id_of[0]));
}

TEST_CASE("final object detection") {
    CHECK(terminal_cat().final_objects() == std::vector<int>{0});
    CHECK(chain3_cat().final_objects() == std::vector<int>{2});
    CHECK(cospan_cat().final_objects() == std::vector<int>{2});
    CHECK(parallel_pair_cat().final_objects().empty());
    // an isomorphism pair: both objects receive exactly one arrow from each
    CHECK(isopair_cat().final_objects() == std::vector<int>{0, 1});
}

TEST_CASE("validator flags a missing composite") {
    FinCat c = chain3_cat();
    int a = c.morphism_index("a01");
    int b = c.morphism_index("a12");
    c.comp[b][a] = -1;
    auto rep = validate_fincat(c);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations[0].law == "comp-missing");
}

TEST_CASE("validator flags broken associativity") {
    // 0 -> 1 -> 2 -> 3 with all composites, then corrupt one entry.
    FinCat c;
    for (int i = 0; i < 4; ++i) c.add_object(std::to_string(i));
    int m01 = c.add_morphism("m01", 0, 1);
    int m12 = c.add_morphism("m12", 1, 2);
    int m23 = c.add_morphism("m23", 2, 3);
    int m02 = c.add_morphism("m02", 0, 2);
    int m13 = c.add_morphism("m13", 1, 3);
    int m03 = c.add_morphism("m03", 0, 3);
    int m03x = c.add_morphism("m03x", 0, 3);
    c.set_comp(m12, m01, m02);
    c.set_comp(m23, m12, m13);
    c.set_comp(m23, m02, m03);
    c.set_comp(m13, m01, m03);
    c.fill_identity_composites();
    REQUIRE(validate_fincat(c).ok());
    c.set_comp(m13, m01, m03x); // (m23∘m12)∘m01 now differs from m23∘(m12∘m01)
    auto rep = validate_fincat(c);
    REQUIRE_FALSE(rep.ok());
    bool saw_assoc = false;
    for (const auto& v : rep.violations) saw_assoc |= v.law == "assoc";
    CHECK(saw_assoc);
}

TEST_CASE("validator flags dangling indices without deeper checks") {
    FinCat c = arrow_cat();
    c.src[c.morphism_index("a01")] = 7;
    auto rep = validate_fincat(c);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations[0].law == "dangling-src");
}

TEST_CASE("validator flags spurious and misbounded composites") {
    FinCat c = parallel_pair_cat();
    int a = c.morphism_index("a");
    int b = c.morphism_index("b");
    c.set_comp(b, a, c.id_of[0]); // not composable
    auto rep = validate_fincat(c);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations[0].law == "comp-spurious");

    FinCat d = chain3_cat();
    d.set_comp(d.morphism_index("a12"), d.morphism_index("a01"),
               d.morphism_index("a01")); // wrong endpoints
    rep = validate_fincat(d);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations[0].law == "comp-boundary");
}

} // TEST_SUITE

#include <doctest.h>

#include "twocat/cat2.hpp"

using namespace twocat;

TEST_SUITE("cat2") {

TEST_CASE("functor enumeration counts") {
    FinCat pt = terminal_cat();
    FinCat ar = arrow_cat();
    FinCat pp = parallel_pair_cat();
    CHECK(all_functors(pt, pt).size() == 1);
    CHECK(all_functors(pt, ar).size() == 2);
    CHECK(all_functors(ar, pt).size() == 1);
    // arrow -> arrow: constant 0, constant 1, identity
    CHECK(all_functors(ar, ar).size() == 3);
    // parallel pair -> arrow: two constants plus ob=(0,1) with both arrows
    // forced onto the unique a01
    CHECK(all_functors(pp, ar).size() == 3);
    for (const auto& F : all_functors(pp, pp))
        CHECK(validate_functor(F).ok());
}

TEST_CASE("natural transformation enumeration") {
    FinCat ar = arrow_cat();
    auto fs = all_functors(ar, ar);
    // identify the three endo-functors
    const CatFunctor* c0 = nullptr;
    const CatFunctor* c1 = nullptr;
    const CatFunctor* idf = nullptr;
    for (const auto& F : fs) {
        if (F.ob == std::vector<int>{0, 0}) c0 = &F;
        if (F.ob == std::vector<int>{1, 1}) c1 = &F;
        if (F.ob == std::vector<int>{0, 1}) idf = &F;
    }
    REQUIRE(c0);
    REQUIRE(c1);
    REQUIRE(idf);
    CHECK(all_nattrans(*c0, *c1).size() == 1);
    CHECK(all_nattrans(*c1, *c0).empty());
    CHECK(all_nattrans(*idf, *idf).size() == 1);
    CHECK(all_nattrans(*c0, *idf).size() == 1);
    for (const auto& comp : all_nattrans(*c0, *c1)) {
        NatTrans t{c0, c1, comp};
        CHECK(validate_nattrans(t).ok());
    }
}

TEST_CASE("the 2-category of {point, arrow} validates") {
    CatTwoCat u = cat_2cat({terminal_cat(), arrow_cat()});
    CHECK(u.two.ob_count() == 2);
    CHECK(u.two.one_count() == 1 + 2 + 1 + 3);
    auto rep = validate_twocat(u.two);
    CAPTURE(rep.to_string());
    CHECK(rep.ok());
}

TEST_CASE("the 2-category of two points is discrete") {
    CatTwoCat u = cat_2cat({terminal_cat(), terminal_cat()});
    CHECK(u.two.one_count() == 4);
    CHECK(u.two.two_count() == 4);
    CHECK(validate_twocat(u.two).ok());
}

TEST_CASE("decoded cells match the tables") {
    CatTwoCat u = cat_2cat({arrow_cat()});
    const TwoCat& t = u.two;
    for (int g = 0; g < t.one_count(); ++g)
        for (int f = 0; f < t.one_count(); ++f) {
            if (!t.composable1(g, f)) continue;
            CatFunctor gf = compose_functor(u.fun[g], u.fun[f]);
            CHECK(u.find_one(t.src1[f], t.tgt1[g], gf) == t.hcomp1[g][f]);
        }
    // vertical composites decode to composed components
    for (int b = 0; b < t.two_count(); ++b)
        for (int a = 0; a < t.two_count(); ++a) {
            if (!t.vcomposable(b, a)) continue;
            const FinCat& cod = *u.cats[t.tgt1[t.src2[a]]];
            int r = t.vcomp[b][a];
            for (size_t x = 0; x < u.nat[a].size(); ++x)
                CHECK(u.nat[r][x] == cod.comp[u.nat[b][x]][u.nat[a][x]]);
        }
}

} // TEST_SUITE

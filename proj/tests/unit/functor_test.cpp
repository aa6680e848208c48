#include <doctest.h>

#include "twocat/functor.hpp"

using namespace twocat;

TEST_SUITE("functor") {

TEST_CASE("identity and composition validate") {
    FinCat c = chain3_cat();
    CatFunctor id = identity_functor(c);
    CHECK(validate_functor(id).ok());
    CatFunctor sq = compose_functor(id, id);
    CHECK(validate_functor(sq).ok());
    CHECK(sq.ob == id.ob);
    CHECK(injective_on_cells(id));
}

TEST_CASE("validator flags non-functorial tables") {
    FinCat a = arrow_cat();
    FinCat c = chain3_cat();
    CatFunctor F;
    F.dom = &a;
    F.cod = &c;
    F.ob = {0, 2};
    F.mor.resize(a.mor_count());
    F.mor[a.id_of[0]] = c.id_of[0];
    F.mor[a.id_of[1]] = c.id_of[2];
    F.mor[a.morphism_index("a01")] = c.morphism_index("a02");
    CHECK(validate_functor(F).ok());

    SUBCASE("boundary break") {
        F.mor[a.morphism_index("a01")] = c.morphism_index("a12");
        auto rep = validate_functor(F);
        REQUIRE_FALSE(rep.ok());
        CHECK(rep.violations[0].law == "boundary");
    }
    SUBCASE("identity break") {
        F.mor[a.id_of[0]] = c.morphism_index("a01");
        auto rep = validate_functor(F);
        REQUIRE_FALSE(rep.ok());
        bool saw = false;
        for (const auto& v : rep.violations) saw |= v.law == "identity";
        CHECK(saw);
    }
}

TEST_CASE("composition preservation is checked") {
    FinCat c3 = chain3_cat();
    // Target has a second parallel arrow 0 -> 2, so redirecting the image of
    // the composite breaks composition without breaking boundaries.
    FinCat d = c3;
    int extra = d.add_morphism("a02x", 0, 2);
    d.set_comp(d.morphism_index("a12"), d.morphism_index("a01"),
               d.morphism_index("a02"));
    d.fill_identity_composites();
    REQUIRE(validate_fincat(d).ok());
    CatFunctor F;
    F.dom = &c3;
    F.cod = &d;
    F.ob = {0, 1, 2};
    F.mor.resize(c3.mor_count());
    for (int m = 0; m < c3.mor_count(); ++m)
        F.mor[m] = d.morphism_index(c3.morphisms[m]);
    REQUIRE(validate_functor(F).ok());
    F.mor[c3.morphism_index("a02")] = extra;
    auto rep = validate_functor(F);
    REQUIRE_FALSE(rep.ok());
    bool saw = false;
    for (const auto& v : rep.violations) saw |= v.law == "composition";
    CHECK(saw);
}

TEST_CASE("natural transformation validation") {
    FinCat a = parallel_pair_cat();
    FinCat c = chain3_cat();
    // F sends both arrows to a01, G sends both to a02∘... keep simple:
    // F = const 0, G = const 1, components must be a01.
    CatFunctor F;
    F.dom = &a;
    F.cod = &c;
    F.ob = {0, 0};
    F.mor.assign(a.mor_count(), c.id_of[0]);
    REQUIRE(validate_functor(F).ok());
    CatFunctor G = F;
    G.ob = {1, 1};
    G.mor.assign(a.mor_count(), c.id_of[1]);
    REQUIRE(validate_functor(G).ok());

    NatTrans t{&F, &G, {c.morphism_index("a01"), c.morphism_index("a01")}};
    CHECK(validate_nattrans(t).ok());

    NatTrans bad{&F, &G, {c.morphism_index("a01"), c.morphism_index("a02")}};
    auto rep = validate_nattrans(bad);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations[0].law == "component-boundary");
}

TEST_CASE("naturality square is enforced") {
    FinCat a = arrow_cat();
    FinCat c = chain3_cat();
    CatFunctor F; // picks out a01
    F.dom = &a;
    F.cod = &c;
    F.ob = {0, 1};
    F.mor.resize(a.mor_count());
    F.mor[a.id_of[0]] = c.id_of[0];
    F.mor[a.id_of[1]] = c.id_of[1];
    F.mor[a.morphism_index("a01")] = c.morphism_index("a01");
    CatFunctor G; // picks out id at 2... needs components F(x) -> G(x)
    G.dom = &a;
    G.cod = &c;
    G.ob = {1, 2};
    G.mor.resize(a.mor_count());
    G.mor[a.id_of[0]] = c.id_of[1];
    G.mor[a.id_of[1]] = c.id_of[2];
    G.mor[a.morphism_index("a01")] = c.morphism_index("a12");
    REQUIRE(validate_functor(F).ok());
    REQUIRE(validate_functor(G).ok());
    NatTrans t{&F, &G,
               {c.morphism_index("a01"), c.morphism_index("a12")}};
    CHECK(validate_nattrans(t).ok());
}

TEST_CASE("equivalence: iso-pair collapses to the point") {
    FinCat pt = terminal_cat();
    FinCat ip = isopair_cat();
    CatFunctor F;
    F.dom = &ip;
    F.cod = &pt;
    F.ob = {0, 0};
    F.mor.assign(ip.mor_count(), pt.id_of[0]);
    REQUIRE(validate_functor(F).ok());
    auto w = equivalence_of_categories(F);
    REQUIRE(w.has_value());
    CHECK(validate_functor(w->inverse).ok());
    CHECK(explain_equivalence(F).ok);
}

TEST_CASE("equivalence: inclusion of the point into the iso-pair") {
    FinCat pt = terminal_cat();
    FinCat ip = isopair_cat();
    CatFunctor F;
    F.dom = &pt;
    F.cod = &ip;
    F.ob = {0};
    F.mor = {};
    F.mor.resize(pt.mor_count());
    F.mor[pt.id_of[0]] = ip.id_of[0];
    REQUIRE(validate_functor(F).ok());
    auto w = equivalence_of_categories(F);
    REQUIRE(w.has_value());
    // counit at object 1 must be the iso b: 1 -> ... F(G(1)) = 0 -> 1 is a.
    CHECK(ip.is_iso(w->counit[1]));
}

TEST_CASE("non-equivalences are rejected with reasons") {
    FinCat pt = terminal_cat();
    FinCat ar = arrow_cat();
    CatFunctor F; // point into the arrow at 0: not essentially surjective
    F.dom = &pt;
    F.cod = &ar;
    F.ob = {0};
    F.mor.resize(pt.mor_count());
    F.mor[pt.id_of[0]] = ar.id_of[0];
    REQUIRE(validate_functor(F).ok());
    CHECK_FALSE(equivalence_of_categories(F).has_value());
    CHECK(explain_equivalence(F).reason.find("essentially surjective") !=
          std::string::npos);

    // Collapsing the arrow to the point is not fully faithful: hom(1,0) is
    // empty but hom(*,*) is not.
    CatFunctor C;
    C.dom = &ar;
    C.cod = &pt;
    C.ob = {0, 0};
    C.mor.assign(ar.mor_count(), pt.id_of[0]);
    REQUIRE(validate_functor(C).ok());
    CHECK_FALSE(equivalence_of_categories(C).has_value());
    CHECK(explain_equivalence(C).reason.find("fully faithful") !=
          std::string::npos);
}

} // TEST_SUITE

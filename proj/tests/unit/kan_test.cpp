#include <doctest.h>

#include "twocat/kan.hpp"

using namespace twocat;

namespace {

// The cyclic group of order two as a one-object category.
FinCat z2_cat() {
    FinCat c;
    c.add_object("o");
    int s = c.add_morphism("s", 0, 0);
    c.set_comp(s, s, c.id_of[0]);
    c.fill_identity_composites();
    return c;
}

FinCat two_point_cat() {
    FinCat c;
    c.add_object("p");
    c.add_object("q");
    c.fill_identity_composites();
    return c;
}

// Two parallel 1-cells joined by a free invertible 2-cell.
TwoCat parallel_pair_inv2() {
    TwoCat I;
    int x = I.add_object("x");
    int y = I.add_object("y");
    int a = I.add_one_cell("a", x, y);
    int b = I.add_one_cell("b", x, y);
    int mu = I.add_two_cell("mu", a, b);
    int nu = I.add_two_cell("nu", b, a);
    I.set_vcomp(nu, mu, I.id2[a]);
    I.set_vcomp(mu, nu, I.id2[b]);
    I.fill_identity_composites();
    return I;
}

// Same value category everywhere, identity functors, identity cells.
Cat2Functor constant_diagram(const TwoCat& I, const FinCat& A) {
    Cat2Functor F;
    F.dom = &I;
    for (int i = 0; i < I.ob_count(); ++i)
        F.value.push_back(std::make_unique<FinCat>(A));
    for (int u = 0; u < I.one_count(); ++u) {
        CatFunctor f = identity_functor(*F.value[I.src1[u]]);
        f.cod = F.value[I.tgt1[u]].get();
        F.fmap.push_back(std::move(f));
    }
    for (int t = 0; t < I.two_count(); ++t) {
        const FinCat& src = *F.value[I.src1[I.src2[t]]];
        const FinCat& cod = *F.value[I.tgt1[I.src2[t]]];
        std::vector<int> comp(src.ob_count());
        for (int C = 0; C < src.ob_count(); ++C)
            comp[C] = cod.id_of[F.fmap[I.src2[t]].ob[C]];
        F.nmap.push_back(std::move(comp));
    }
    return F;
}

// Arrow-shaped index; the arrow squashes an interval onto a point.
Cat2Functor collapse_diagram(const TwoCat& I) {
    Cat2Functor F;
    F.dom = &I;
    F.value.push_back(std::make_unique<FinCat>(arrow_cat()));
    F.value.push_back(std::make_unique<FinCat>(terminal_cat()));
    for (int u = 0; u < I.one_count(); ++u) {
        CatFunctor f;
        f.dom = F.value[I.src1[u]].get();
        f.cod = F.value[I.tgt1[u]].get();
        if (I.src1[u] == I.tgt1[u]) {
            f.ob = identity_functor(*f.dom).ob;
            f.mor = identity_functor(*f.dom).mor;
        } else {
            f.ob = {0, 0};
            f.mor = {0, 0, 0};
        }
        F.fmap.push_back(std::move(f));
    }
    for (int t = 0; t < I.two_count(); ++t) {
        const FinCat& src = *F.value[I.src1[I.src2[t]]];
        const FinCat& cod = *F.value[I.tgt1[I.src2[t]]];
        std::vector<int> comp(src.ob_count());
        for (int C = 0; C < src.ob_count(); ++C)
            comp[C] = cod.id_of[F.fmap[I.src2[t]].ob[C]];
        F.nmap.push_back(std::move(comp));
    }
    return F;
}

// Over the free-invertible-2-cell index: both values are Z/2, both
// functors are the identity, and the invertible index 2-cell acts by the
// nontrivial central element.
Cat2Functor twisted_diagram(const TwoCat& I2) {
    Cat2Functor F;
    F.dom = &I2;
    F.value.push_back(std::make_unique<FinCat>(z2_cat()));
    F.value.push_back(std::make_unique<FinCat>(z2_cat()));
    for (int u = 0; u < I2.one_count(); ++u) {
        CatFunctor f = identity_functor(*F.value[I2.src1[u]]);
        f.cod = F.value[I2.tgt1[u]].get();
        F.fmap.push_back(std::move(f));
    }
    for (int t = 0; t < I2.two_count(); ++t) {
        bool ident = t == I2.id2[I2.src2[t]];
        F.nmap.push_back({ident ? 0 : 1}); // morphism 0 = id, 1 = s
    }
    return F;
}

} // namespace

TEST_SUITE("kan") {

TEST_CASE("diagram validation accepts strict data and flags strictness breaks") {
    TwoCat I = discrete2(chain3_cat());
    Cat2Functor F = constant_diagram(I, z2_cat());
    CHECK(validate_cat2functor(F).ok());

    SUBCASE("value on a composite must be the composite of values") {
        int a02 = 2 + 3; // three identity 1-cells precede the morphisms
        REQUIRE(I.one_cells[a02] == "a02");
        F.fmap[a02].mor[1] = 0; // squash s on the long edge only
        auto rep = validate_cat2functor(F);
        CHECK_FALSE(rep.ok());
        bool found = false;
        for (const auto& v : rep.violations)
            found = found || v.law == "fmap-composition";
        CHECK(found);
    }
    SUBCASE("identity 1-cells must act trivially") {
        F.fmap[I.id1[0]].mor[1] = 0;
        auto rep = validate_cat2functor(F);
        CHECK_FALSE(rep.ok());
        bool found = false;
        for (const auto& v : rep.violations)
            found = found || v.law == "fmap-identity";
        CHECK(found);
    }
    SUBCASE("identity 2-cells must have identity components") {
        int a02 = 5;
        F.nmap[I.id2[a02]][0] = 1; // s is central, so still natural
        auto rep = validate_cat2functor(F);
        CHECK_FALSE(rep.ok());
        bool found = false;
        for (const auto& v : rep.violations)
            found = found || v.law == "nmap-identity";
        CHECK(found);
    }
}

TEST_CASE("colimit over a sink-shaped index is the value at the sink") {
    TwoCat I = discrete2(cospan_cat());
    FinCat A = arrow_cat();
    Cat2Functor F = constant_diagram(I, A);
    LLColimit L = ll_colimit(F);

    CHECK(L.cat.ob_count() == 6);
    CHECK(L.cat.mor_count() == 27); // one class per arrow-morphism per index pair
    CHECK(check_conjugation(L).ok());

    for (int i = 0; i < 3; ++i) CHECK(validate_functor(L.leg(i)).ok());
    CatFunctor lam = L.leg(2); // index object "2" receives the whole index
    CHECK(equivalence_of_categories(lam).has_value());
}

TEST_CASE("colimit legs and cells form a cocone whose mediator is the identity") {
    TwoCat I = discrete2(cospan_cat());
    FinCat A = arrow_cat();
    Cat2Functor F = constant_diagram(I, A);
    LLColimit L = ll_colimit(F);

    CatCocone c;
    c.diagram = &F;
    c.vertex = &L.cat;
    for (int i = 0; i < I.ob_count(); ++i) c.leg.push_back(L.leg(i));
    for (int u = 0; u < I.one_count(); ++u) c.cell.push_back(L.leg_nat(u));
    CHECK(check_cat_cocone(c).ok());

    CatFunctor m = factor_through(L, c);
    CatFunctor id = identity_functor(L.cat);
    CHECK(m.ob == id.ob);
    CHECK(m.mor == id.mor);
}

TEST_CASE("cocones onto the common value factor through the colimit") {
    TwoCat I = discrete2(cospan_cat());
    FinCat A = arrow_cat();
    Cat2Functor F = constant_diagram(I, A);
    LLColimit L = ll_colimit(F);

    CatCocone c;
    c.diagram = &F;
    c.vertex = &A;
    for (int i = 0; i < I.ob_count(); ++i) {
        CatFunctor leg = identity_functor(*F.value[i]);
        leg.cod = &A;
        c.leg.push_back(std::move(leg));
        (void)i;
    }
    for (int u = 0; u < I.one_count(); ++u) {
        std::vector<int> cell(A.ob_count());
        for (int C = 0; C < A.ob_count(); ++C) cell[C] = A.id_of[C];
        c.cell.push_back(std::move(cell));
    }
    CHECK(check_cat_cocone(c).ok());

    CatFunctor m = factor_through(L, c);
    for (int s = 0; s < L.cat.ob_count(); ++s)
        CHECK(m.ob[s] == L.ob_pair[s].second);

    SUBCASE("a cocone over a different diagram is rejected") {
        Cat2Functor F2 = constant_diagram(I, A);
        LLColimit L2 = ll_colimit(F2);
        CHECK_THROWS_AS(factor_through(L2, c), Error);
    }
}

TEST_CASE("a squashing diagram collapses the colimit onto the terminal value") {
    TwoCat I = discrete2(arrow_cat());
    Cat2Functor F = collapse_diagram(I);
    CHECK(validate_cat2functor(F).ok());

    LLColimit L = ll_colimit(F);
    CHECK(L.cat.ob_count() == 3);
    CHECK(L.cat.mor_count() == 9); // every hom-set collapses to a point
    for (int m = 0; m < L.cat.mor_count(); ++m) CHECK(L.cat.is_iso(m));
    CHECK(check_conjugation(L).ok());
    CatFunctor lam = L.leg(1);
    CHECK(equivalence_of_categories(lam).has_value());
}

TEST_CASE("colimit over a discrete index is the disjoint union") {
    FinCat P = two_point_cat();
    TwoCat I = discrete2(P);
    FinCat A = arrow_cat();
    Cat2Functor F = constant_diagram(I, A);
    LLColimit L = ll_colimit(F);
    CHECK(L.cat.ob_count() == 4);
    CHECK(L.cat.mor_count() == 6);
    CHECK(L.cat.hom(L.object_of(0, 0), L.object_of(1, 0)).empty());
    CHECK(check_conjugation(L).ok());

    SUBCASE("classify rejects data that is not a premorphism") {
        CHECK_THROWS_AS(
            L.classify(L.object_of(0, 0), L.object_of(1, 0), I.id1[0],
                       A.id_of[0], I.id1[1]),
            UnknownCell);
    }
}

TEST_CASE("parallel arrows without a joining 2-cell break the homotopy relation") {
    TwoCat I = discrete2(parallel_pair_cat());
    Cat2Functor F = constant_diagram(I, terminal_cat());
    CHECK_THROWS_AS(ll_colimit(F), HomotopyNotEquivalence);
}

TEST_CASE("a free invertible 2-cell repairs the parallel-arrow index") {
    TwoCat I2 = parallel_pair_inv2();
    REQUIRE(validate_twocat(I2).ok());
    Cat2Functor F = constant_diagram(I2, arrow_cat());
    LLColimit L = ll_colimit(F);
    CHECK(L.cat.ob_count() == 4);
    CHECK(L.cat.mor_count() == 12);
    CHECK(check_conjugation(L).ok());
    CatFunctor lam = L.leg(1);
    CHECK(equivalence_of_categories(lam).has_value());
}

TEST_CASE("the index 2-cell can act by a nontrivial natural transformation") {
    TwoCat I2 = parallel_pair_inv2();
    Cat2Functor F = twisted_diagram(I2);
    REQUIRE(validate_cat2functor(F).ok());

    LLColimit L = ll_colimit(F);
    CHECK(L.cat.ob_count() == 2);
    CHECK(L.cat.mor_count() == 8); // each hom-set is a Z/2 torsor of classes
    CHECK(check_conjugation(L).ok());
    CatFunctor lam = L.leg(1);
    CHECK(equivalence_of_categories(lam).has_value());

    // the two shifted copies of s are identified across the 2-cell twist
    int odd = L.classify(L.object_of(0, 0), L.object_of(1, 0), 2 /*a*/, 1 /*s*/,
                         I2.id1[1]);
    int even = L.classify(L.object_of(0, 0), L.object_of(1, 0), 3 /*b*/,
                          0 /*id*/, I2.id1[1]);
    CHECK(odd == even);
}

TEST_CASE("restriction along a cofinal sink inclusion compares equivalently") {
    TwoCat I = discrete2(cospan_cat());
    FinCat A = arrow_cat();
    Cat2Functor G = constant_diagram(I, A);
    LLColimit LG = ll_colimit(G);

    TwoCat T = terminal_twocat();
    PseudoFunctor R = make_strict(T, I, {2}, {I.id1[2]}, {I.id2[I.id1[2]]});
    CHECK(validate_pseudofunctor(R).ok());

    Cat2Functor GR = reindex_cat2(G, R);
    CHECK(validate_cat2functor(GR).ok());
    LLColimit LR = ll_colimit(GR);
    CHECK(LR.cat.ob_count() == 2);
    CHECK(LR.cat.mor_count() == 3);

    CatFunctor h = comparison_functor(LR, LG, R);
    CHECK(equivalence_of_categories(h).has_value());
}

TEST_CASE("descent families over a sink-shaped index recover the value") {
    TwoCat I = discrete2(cospan_cat());

    SUBCASE("rigid value: only identity descent isos") {
        Cat2Functor H = constant_diagram(I, arrow_cat());
        DescentCat D = pseudo_limit_cat(H);
        CHECK(D.cat.ob_count() == 2);
        CHECK(D.cat.mor_count() == 3);
        CatFunctor p = D.projection(2);
        CHECK(validate_functor(p).ok());
        CHECK(equivalence_of_categories(p).has_value());
    }
    SUBCASE("groupoid value: one iso per pair, eight families") {
        Cat2Functor H = constant_diagram(I, isopair_cat());
        DescentCat D = pseudo_limit_cat(H);
        CHECK(D.cat.ob_count() == 8);
        CHECK(D.cat.mor_count() == 64);
        CatFunctor p = D.projection(2);
        CHECK(equivalence_of_categories(p).has_value());
    }
}

TEST_CASE("descent over the twisted diagram pairs the isos off") {
    TwoCat I2 = parallel_pair_inv2();
    Cat2Functor H = twisted_diagram(I2);
    DescentCat D = pseudo_limit_cat(H);
    CHECK(D.cat.ob_count() == 2);  // (e,s) and (s,e)
    CHECK(D.cat.mor_count() == 8); // two Z/2 components per object pair
    CatFunctor p = D.projection(0);
    CHECK(equivalence_of_categories(p).has_value());
}

TEST_CASE("projections and their cells form a cone whose mediator is the identity") {
    TwoCat I = discrete2(cospan_cat());
    Cat2Functor H = constant_diagram(I, isopair_cat());
    DescentCat D = pseudo_limit_cat(H);

    CatCone c;
    c.diagram = &H;
    c.vertex = &D.cat;
    for (int k = 0; k < I.ob_count(); ++k) c.leg.push_back(D.projection(k));
    for (int u = 0; u < I.one_count(); ++u)
        c.cell.push_back(D.projection_nat(u));
    CHECK(check_cat_cone(c).ok());

    CatFunctor m = factor_into(D, c);
    CatFunctor id = identity_functor(D.cat);
    CHECK(m.ob == id.ob);
    CHECK(m.mor == id.mor);

    SUBCASE("a corrupted cone cell is flagged") {
        c.cell[3][0] = D.diagram->value[2]->id_of[0] == c.cell[3][0]
                           ? D.diagram->value[2]->inverse(c.cell[3][0])
                           : D.diagram->value[2]->id_of[0];
        // force a different (still in-range) component
        c.cell[3][0] = (c.cell[3][0] + 1) % D.diagram->value[2]->mor_count();
        CHECK_FALSE(check_cat_cone(c).ok());
    }
}

TEST_CASE("cones from the value factor into the descent category") {
    TwoCat I = discrete2(cospan_cat());
    FinCat A = isopair_cat();
    Cat2Functor H = constant_diagram(I, A);
    DescentCat D = pseudo_limit_cat(H);

    CatCone c;
    c.diagram = &H;
    c.vertex = &A;
    for (int k = 0; k < I.ob_count(); ++k) {
        CatFunctor leg;
        leg.dom = &A;
        leg.cod = H.value[k].get();
        leg.ob = identity_functor(A).ob;
        leg.mor = identity_functor(A).mor;
        c.leg.push_back(std::move(leg));
    }
    for (int u = 0; u < I.one_count(); ++u) {
        std::vector<int> cell(A.ob_count());
        for (int C = 0; C < A.ob_count(); ++C) cell[C] = A.id_of[C];
        c.cell.push_back(std::move(cell));
    }
    CHECK(check_cat_cone(c).ok());
    CatFunctor m = factor_into(D, c);
    CHECK(validate_functor(m).ok());
    CHECK(equivalence_of_categories(m).has_value());
}

} // TEST_SUITE

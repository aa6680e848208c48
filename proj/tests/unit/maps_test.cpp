#include <doctest.h>

#include "support/fixtures.hpp"
#include "twocat/maps.hpp"

using namespace twocat;

TEST_SUITE("maps") {

TEST_CASE("strict functors validate") {
    TwoCat c = fixtures::cell2_inv();
    PseudoFunctor id = identity_pseudofunctor(c);
    CHECK(id.is_strict());
    auto rep = validate_pseudofunctor(id);
    CAPTURE(rep.to_string());
    CHECK(rep.ok());

    TwoCat t = terminal_twocat();
    PseudoFunctor k = constant_pseudofunctor(c, t, 0);
    CHECK(validate_pseudofunctor(k).ok());
    PseudoFunctor comp = compose_pseudofunctor(k, id);
    CHECK(validate_pseudofunctor(comp).ok());
}

TEST_CASE("a genuinely pseudo functor validates") {
    // Domain: chain 0 -> 1 -> 2 (discrete); codomain: suspension of Z3.
    // All 1-cells map to the unique endo-1-cell; the compositor on the one
    // composable non-identity pair may be any 2-cell, and r1 satisfies the
    // unit laws (they only constrain pairs with identities) and the
    // associativity pastings (no triple of non-identities exists).
    TwoCat s = fixtures::suspension_z3();
    TwoCat d = discrete2(chain3_cat());
    std::vector<int> ob(d.ob_count(), 0);
    std::vector<int> one(d.one_count(), s.id1[0]);
    std::vector<int> two(d.two_count(), s.id2[s.id1[0]]);
    PseudoFunctor F = make_strict(d, s, ob, one, two);
    int a01 = d.one_index("a01");
    int a12 = d.one_index("a12");
    F.compositor[a12][a01] = s.two_index("r1");
    auto rep = validate_pseudofunctor(F);
    CAPTURE(rep.to_string());
    CHECK(rep.ok());
    CHECK_FALSE(F.is_strict());

    SUBCASE("breaking a unit law is caught") {
        F.compositor[a01][d.id1[0]] = s.two_index("r1");
        auto bad = validate_pseudofunctor(F);
        REQUIRE_FALSE(bad.ok());
        bool saw = false;
        for (const auto& v : bad.violations) saw |= v.law == "unit-coherence";
        CHECK(saw);
    }
    SUBCASE("hom functoriality is enforced") {
        F.two[d.id2[a01]] = s.two_index("r1");
        auto bad = validate_pseudofunctor(F);
        REQUIRE_FALSE(bad.ok());
        CHECK(bad.violations[0].law == "hom-identity");
    }
}

TEST_CASE("associativity coherence is enforced") {
    // Chain of three composable arrows into the suspension of Z3: a
    // compositor assignment with c(a12,a01) = r1 but the compositors on the
    // longer pairs both identity breaks the pasting around a23∘a12∘a01.
    FinCat chain4;
    for (int i = 0; i < 4; ++i) chain4.add_object(std::to_string(i));
    int m01 = chain4.add_morphism("m01", 0, 1);
    int m12 = chain4.add_morphism("m12", 1, 2);
    int m23 = chain4.add_morphism("m23", 2, 3);
    int m02 = chain4.add_morphism("m02", 0, 2);
    int m13 = chain4.add_morphism("m13", 1, 3);
    int m03 = chain4.add_morphism("m03", 0, 3);
    chain4.set_comp(m12, m01, m02);
    chain4.set_comp(m23, m12, m13);
    chain4.set_comp(m23, m02, m03);
    chain4.set_comp(m13, m01, m03);
    chain4.fill_identity_composites();
    REQUIRE(validate_fincat(chain4).ok());
    TwoCat d = discrete2(chain4);
    TwoCat s = fixtures::suspension_z3();
    std::vector<int> ob(d.ob_count(), 0);
    std::vector<int> one(d.one_count(), s.id1[0]);
    std::vector<int> two(d.two_count(), s.id2[s.id1[0]]);
    PseudoFunctor F = make_strict(d, s, ob, one, two);
    F.compositor[m12][m01] = s.two_index("r1");
    auto rep = validate_pseudofunctor(F);
    REQUIRE_FALSE(rep.ok());
    bool saw = false;
    for (const auto& v : rep.violations) saw |= v.law == "assoc-coherence";
    CHECK(saw);
    // repairing with the matching twist on the long pair restores coherence
    F.compositor[m23][m02] = s.two_index("r2");
    F.compositor[m13][m01] = s.two_index("r2");
    F.compositor[m23][m12] = s.two_index("r1");
    auto rep2 = validate_pseudofunctor(F);
    CAPTURE(rep2.to_string());
    CHECK(rep2.ok());
}

TEST_CASE("pseudo-natural identity and composition validate") {
    TwoCat c = fixtures::cell2_inv();
    PseudoFunctor F = identity_pseudofunctor(c);
    PseudoNatural id = identity_pseudonatural(F);
    auto rep = validate_pseudonatural(id);
    CAPTURE(rep.to_string());
    CHECK(rep.ok());
    CHECK(id.is_2natural(*F.dom));
    PseudoNatural sq = compose_pseudonatural(id, id);
    CHECK(validate_pseudonatural(sq).ok());
}

TEST_CASE("pseudo-natural with non-identity structure cells") {
    // Domain: walking arrow (discrete); codomain: cell2_inv.  Constant
    // functors at A and B; components f and g glued by mu along a01.
    TwoCat d = discrete2(arrow_cat());
    TwoCat c = fixtures::cell2_inv();
    PseudoFunctor F = constant_pseudofunctor(d, c, 0);
    PseudoFunctor G = constant_pseudofunctor(d, c, 1);
    PseudoNatural th;
    th.src = &F;
    th.tgt = &G;
    th.component = {c.one_index("f"), c.one_index("g")};
    th.cell.assign(d.one_count(), -1);
    th.cell[d.id1[0]] = c.id2[c.one_index("f")];
    th.cell[d.id1[1]] = c.id2[c.one_index("g")];
    th.cell[d.one_index("a01")] = c.two_index("mu");
    auto rep = validate_pseudonatural(th);
    CAPTURE(rep.to_string());
    CHECK(rep.ok());
    CHECK_FALSE(th.is_2natural(d));

    SUBCASE("structure cells must have matching boundaries") {
        th.cell[d.one_index("a01")] = c.id2[c.one_index("f")];
        auto bad = validate_pseudonatural(th);
        REQUIRE_FALSE(bad.ok());
        CHECK(bad.violations[0].law == "cell-boundary");
    }
}

TEST_CASE("unit and composition laws catch a twisted cell") {
    // Identity functor on the suspension of Z3; the only 1-cell is the
    // identity, so a non-identity structure cell violates the unit law.
    TwoCat s = fixtures::suspension_z3();
    PseudoFunctor F = identity_pseudofunctor(s);
    PseudoNatural th = identity_pseudonatural(F);
    th.cell[s.id1[0]] = s.two_index("r1");
    auto rep = validate_pseudonatural(th);
    REQUIRE_FALSE(rep.ok());
    bool saw_unit = false;
    for (const auto& v : rep.violations) saw_unit |= v.law == "unit";
    CHECK(saw_unit);
}

TEST_CASE("modifications: identity and exchange law") {
    TwoCat d = discrete2(arrow_cat());
    TwoCat c = fixtures::cell2_inv();
    PseudoFunctor F = constant_pseudofunctor(d, c, 0);
    PseudoFunctor G = constant_pseudofunctor(d, c, 1);
    PseudoNatural th;
    th.src = &F;
    th.tgt = &G;
    th.component = {c.one_index("f"), c.one_index("g")};
    th.cell.assign(d.one_count(), -1);
    th.cell[d.id1[0]] = c.id2[c.one_index("f")];
    th.cell[d.id1[1]] = c.id2[c.one_index("g")];
    th.cell[d.one_index("a01")] = c.two_index("mu");
    REQUIRE(validate_pseudonatural(th).ok());
    PseudoNatural et;
    et.src = &F;
    et.tgt = &G;
    et.component = {c.one_index("g"), c.one_index("g")};
    et.cell.assign(d.one_count(), -1);
    et.cell[d.id1[0]] = c.id2[c.one_index("g")];
    et.cell[d.id1[1]] = c.id2[c.one_index("g")];
    et.cell[d.one_index("a01")] = c.id2[c.one_index("g")];
    REQUIRE(validate_pseudonatural(et).ok());

    Modification rho{&th, &et, {c.two_index("mu"), c.id2[c.one_index("g")]}};
    auto rep = validate_modification(rho);
    CAPTURE(rep.to_string());
    CHECK(rep.ok());

    SUBCASE("component boundaries are enforced") {
        Modification bad{&th, &et,
                         {c.two_index("nu"), c.id2[c.one_index("g")]}};
        auto r2 = validate_modification(bad);
        REQUIRE_FALSE(r2.ok());
        CHECK(r2.violations[0].law == "component-boundary");
    }
    SUBCASE("vertical composition of modifications") {
        Modification idm{&et, &et,
                         {c.id2[c.one_index("g")], c.id2[c.one_index("g")]}};
        auto comp = compose_modification_vertical(c, idm, rho);
        Modification both{&th, &et, comp};
        CHECK(validate_modification(both).ok());
        CHECK(comp == rho.component);
    }
}

TEST_CASE("cones and cocones over a discrete diagram") {
    TwoCat d = discrete2(arrow_cat());
    TwoCat c = fixtures::cell2_inv();
    PseudoFunctor H = constant_pseudofunctor(d, c, 0);
    PseudoCone cone;
    cone.diagram = &H;
    cone.vertex = 0;
    cone.leg = {c.id1[0], c.id1[0]};
    cone.cell.assign(d.one_count(), c.id2[c.id1[0]]);
    auto rep = check_pseudo_cone(cone);
    CAPTURE(rep.to_string());
    CHECK(rep.ok());

    PseudoCocone cocone;
    cocone.diagram = &H;
    cocone.vertex = 1;
    cocone.leg = {c.one_index("f"), c.one_index("f")};
    cocone.cell.assign(d.one_count(), c.id2[c.one_index("f")]);
    auto rep2 = check_pseudo_cocone(cocone);
    CAPTURE(rep2.to_string());
    CHECK(rep2.ok());
    CHECK(is_strict_cocone(cocone));

    PseudoCocone lax;
    lax.diagram = &H;
    lax.vertex = 1;
    lax.leg = {c.one_index("f"), c.one_index("g")};
    lax.cell.assign(d.one_count(), -1);
    lax.cell[d.id1[0]] = c.id2[c.one_index("f")];
    lax.cell[d.id1[1]] = c.id2[c.one_index("g")];
    lax.cell[d.one_index("a01")] = c.two_index("mu");
    auto rep3 = check_pseudo_cocone(lax);
    CAPTURE(rep3.to_string());
    CHECK(rep3.ok());
    CHECK_FALSE(is_strict_cocone(lax));

    PseudoCone cone2 = cone;
    ConeMorphism cm{&cone, &cone2, {c.id2[c.id1[0]], c.id2[c.id1[0]]}};
    CHECK(check_cone_morphism(cm).ok());
}

TEST_CASE("equivalence 1-cells") {
    TwoCat c = fixtures::cell2_inv();
    CHECK_FALSE(check_equivalence_1cell(c, c.one_index("f")).has_value());
    CHECK(check_equivalence_1cell(c, c.id1[0]).has_value());

    TwoCat iso = fixtures::isopair2();
    auto w = check_equivalence_1cell(iso, iso.one_index("a"));
    REQUIRE(w.has_value());
    CHECK(w->inverse == iso.one_index("b"));
}

} // TEST_SUITE

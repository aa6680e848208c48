#include <doctest.h>

#include <algorithm>

#include "support/fixtures.hpp"
#include "twocat/shape.hpp"

using namespace twocat;

namespace {

bool has_law(const ValidationReport& rep, const std::string& law) {
    return std::any_of(rep.violations.begin(), rep.violations.end(),
                       [&](const Violation& v) { return v.law == law; });
}

FinCat two_point_cat() {
    FinCat c;
    c.add_object("p");
    c.add_object("q");
    c.fill_identity_composites();
    return c;
}

// Parallel 2-cells mu, nu : f => g that become equal after composing with
// the collapsing 1-cell k (both whiskers are the identity of m = k f = k g).
TwoCat squashed_pair2() {
    TwoCat c;
    int x = c.add_object("x");
    int y = c.add_object("y");
    int z = c.add_object("z");
    int f = c.add_one_cell("f", x, y);
    int g = c.add_one_cell("g", x, y);
    int k = c.add_one_cell("k", y, z);
    int m = c.add_one_cell("m", x, z);
    int mu = c.add_two_cell("mu", f, g);
    int nu = c.add_two_cell("nu", f, g);
    c.set_hcomp1(k, f, m);
    c.set_hcomp1(k, g, m);
    c.fill_identity_composites();
    c.set_hcomp2(c.id2[k], mu, c.id2[m]);
    c.set_hcomp2(c.id2[k], nu, c.id2[m]);
    c.set_hcomp2(c.id2[k], c.id2[f], c.id2[m]);
    c.set_hcomp2(c.id2[k], c.id2[g], c.id2[m]);
    return c;
}

MJElement diagram_of(FinCat shape, std::vector<int> ob, std::vector<int> mor,
                     int star) {
    MJElement d;
    d.shape = std::move(shape);
    d.ob = std::move(ob);
    d.mor = std::move(mor);
    d.star = star;
    return d;
}

// A map out of the one-object one-cell index picking the object `x` of J.
PseudoFunctor pick_object(const TwoCat& I, const TwoCat& J, int x) {
    return make_strict(I, J, {x}, {J.id1[x]}, {J.id2[J.id1[x]]});
}

} // namespace

TEST_SUITE("shape") {

TEST_CASE("filtered indexes pass the axiom checks") {
    CHECK(check_2filtered(terminal_twocat()).ok());
    TwoCat cospan = discrete2(cospan_cat());
    CHECK(check_2filtered(cospan).ok());
    TwoCat chain = discrete2(chain3_cat());
    CHECK(check_2filtered(chain).ok());
    CHECK(check_2filtered(fixtures::parallel_pair_inv2()).ok());
    CHECK(check_2filtered(fixtures::idempotent_monoid2()).ok());
    TwoCat squash = squashed_pair2();
    CHECK(validate_twocat(squash).ok());
    CHECK(check_2filtered(squash).ok());
}

TEST_CASE("non-filtered indexes are reported axiom by axiom") {
    TwoCat empty;
    CHECK(has_law(check_2filtered(empty), "non-empty"));

    TwoCat points = discrete2(two_point_cat());
    auto rep0 = check_2filtered(points);
    CHECK_FALSE(rep0.ok());
    CHECK(has_law(rep0, "F0"));

    TwoCat pp = discrete2(parallel_pair_cat());
    auto rep1 = check_2filtered(pp);
    CHECK_FALSE(rep1.ok());
    CHECK(has_law(rep1, "F1"));
    CHECK_FALSE(has_law(rep1, "F0"));

    auto rep2 = check_2filtered(fixtures::suspension_z3());
    CHECK_FALSE(rep2.ok());
    CHECK(has_law(rep2, "F2"));
    CHECK_FALSE(has_law(rep2, "F1"));
}

TEST_CASE("cofinality of object inclusions") {
    TwoCat point = terminal_twocat();

    TwoCat cospan = discrete2(cospan_cat());
    CHECK(check_2cofinal(pick_object(point, cospan, 2)).ok());
    auto bad = check_2cofinal(pick_object(point, cospan, 0));
    CHECK_FALSE(bad.ok());
    CHECK(has_law(bad, "CF0"));

    TwoCat pp = fixtures::parallel_pair_inv2();
    CHECK(check_2cofinal(pick_object(point, pp, 1)).ok());
    CHECK(has_law(check_2cofinal(pick_object(point, pp, 0)), "CF0"));
}

TEST_CASE("diagram classes over the terminal index") {
    TwoCat J = terminal_twocat();
    MJPoset M = build_MJ(J, 3);
    REQUIRE(M.elems.size() == 2);
    CHECK(M.report.ok());
    CHECK(diagram_cells(M.elems[0]) == 1);
    CHECK(diagram_cells(M.elems[1]) == 3);
    CHECK(M.leq[0][1]);
    CHECK_FALSE(M.leq[1][0]);
    CHECK(M.downset_size(1) == 2);
    CHECK(validate_pseudofunctor(M.phi).ok());

    MJElement interval = diagram_of(arrow_cat(), {0, 0}, {0, 0, 0}, 1);
    CHECK(validate_diagram(J, interval).ok());
    CHECK(M.find_class(interval) == 1);

    MJElement wide = diagram_of(cospan_cat(), {0, 0, 0}, {0, 0, 0, 0, 0}, 2);
    CHECK(validate_diagram(J, wide).ok());
    CHECK(M.find_class(wide) == -1);

    MJElement skew = interval;
    skew.star = 0;
    CHECK(has_law(validate_diagram(J, skew), "star"));

    CHECK(check_MJ_filtered(M, 0).ok());
    CHECK(check_phi_cofinal(M, 0).ok());
}

TEST_CASE("diagram classes over the interval") {
    TwoCat J = discrete2(arrow_cat());
    MJPoset M = build_MJ(J, 3);
    REQUIRE(M.elems.size() == 5);
    CHECK(M.report.ok());

    MJElement pt0 = diagram_of(terminal_cat(), {0}, {0}, 0);
    MJElement pt1 = diagram_of(terminal_cat(), {1}, {1}, 0);
    MJElement arr = diagram_of(arrow_cat(), {0, 1}, {0, 1, 2}, 1);
    MJElement lo = diagram_of(arrow_cat(), {0, 0}, {0, 0, 0}, 1);
    MJElement hi = diagram_of(arrow_cat(), {1, 1}, {1, 1, 1}, 1);
    int cp0 = M.find_class(pt0), cp1 = M.find_class(pt1);
    int ca = M.find_class(arr), cl = M.find_class(lo), ch = M.find_class(hi);
    REQUIRE(cp0 >= 0);
    REQUIRE(cp1 >= 0);
    REQUIRE(ca >= 0);
    REQUIRE(cl >= 0);
    REQUIRE(ch >= 0);
    CHECK(M.leq[cp0][ca]);
    CHECK(M.leq[cp1][ca]);
    CHECK(M.leq[cp0][cl]);
    CHECK_FALSE(M.leq[cp0][cp1]);
    CHECK_FALSE(M.leq[cl][ca]);
    CHECK(M.downset_size(ca) == 3);

    // The projection sends the connecting relations to the expected 1-cells.
    CHECK(M.phi.ob[cp0] == 0);
    CHECK(M.phi.ob[ca] == 1);
    int rel = M.poset.hom(cp0, ca).front();
    CHECK(M.phi.one[rel] == 2); // the generating arrow of the interval
    CHECK(check_phi_cofinal(M, 0).ok());
}

TEST_CASE("directedness of the interval truncation within slack") {
    TwoCat J = discrete2(arrow_cat());
    MJPoset M = build_MJ(J, 3);
    CHECK(check_MJ_filtered(M, 5).ok());
    auto tight = check_MJ_filtered(M, 4);
    CHECK_FALSE(tight.ok());
    CHECK(tight.violations.size() == 3);
    for (const Violation& v : tight.violations) CHECK(v.law == "filtered");
}

TEST_CASE("idempotent index needs a constructed cofinality witness") {
    TwoCat J = fixtures::idempotent_monoid2();
    MJPoset M = build_MJ(J, 2);
    REQUIRE(M.elems.size() == 1);
    CHECK(M.report.ok());
    CHECK(check_MJ_filtered(M, 0).ok());
    CHECK(check_phi_cofinal(M, 1).ok());
    auto tight = check_phi_cofinal(M, 0);
    CHECK_FALSE(tight.ok());
    CHECK(tight.violations.size() == 2);
    for (const Violation& v : tight.violations) CHECK(v.law == "CF1");
}

TEST_CASE("path 2-category of a chain") {
    FinCat A = chain3_cat();
    HatTwoCat hat = build_hat(A, 2);
    CHECK(hat.cat.one_count() == 7);
    CHECK(hat.cat.two_count() == 9);
    CHECK(validate_twocat(hat.cat).ok());

    int pair = hat.tuple_cell(0, {3, 4});  // (a01, a12)
    int direct = hat.tuple_cell(0, {5});   // (a02)
    REQUIRE(pair >= 0);
    REQUIRE(direct >= 0);
    CHECK(hat.composite_of(pair) == 5);
    CHECK(hat.composite_of(direct) == 5);
    CHECK(hat.theta[pair][direct] >= 0);
    CHECK(hat.theta[direct][pair] >= 0);
    CHECK(hat.cat.is_invertible2(hat.theta[pair][direct]));
    int a01 = hat.tuple_cell(0, {3}), a12 = hat.tuple_cell(1, {4});
    CHECK(hat.cat.hcomp1[a12][a01] == pair);
    CHECK(hat.composite_of(hat.cat.id1[0]) == 0);

    CHECK(check_2filtered(hat.cat).ok());

    CHECK_THROWS_AS(build_hat(A, 1), BoundTooSmall);
    CHECK_THROWS_AS(build_hat(isopair_cat(), 5), BoundTooSmall);
}

TEST_CASE("path embedding is cofinal and the unit transports trivially") {
    FinCat A = chain3_cat();
    HatTwoCat hat = build_hat(A, 2);
    TwoCat A2 = discrete2(A);
    PseudoFunctor T = hat_unit(hat, A2);
    CHECK(validate_pseudofunctor(T).ok());
    CHECK(check_2cofinal(T).ok());

    HatTransport tr = transport_along_hat(hat, T);
    CHECK(check_transport(hat, tr).ok());
    for (int u = 0; u < hat.cat.one_count(); ++u) CHECK(tr.apply1[u] == u);
    for (int a = 0; a < hat.cat.two_count(); ++a) CHECK(tr.apply2[a] == a);
}

TEST_CASE("transport recovers coherence cells") {
    FinCat A = chain3_cat();
    HatTwoCat hat = build_hat(A, 2);
    TwoCat A2 = discrete2(A);
    TwoCat Z = fixtures::suspension_z3();

    PseudoFunctor F;
    F.dom = &A2;
    F.cod = &Z;
    F.ob = {0, 0, 0};
    F.one.assign(A2.one_count(), Z.id1[0]);
    F.two.assign(A2.two_count(), Z.id2[Z.id1[0]]);
    F.unitor.assign(3, Z.id2[Z.id1[0]]);
    F.compositor.assign(A2.one_count(), std::vector<int>(A2.one_count(), -1));
    for (int f = 0; f < A2.one_count(); ++f)
        for (int g = 0; g < A2.one_count(); ++g)
            if (A2.composable1(g, f)) F.compositor[g][f] = Z.id2[Z.id1[0]];
    F.compositor[4][3] = 1; // r1 on the one non-trivial composite
    REQUIRE(validate_pseudofunctor(F).ok());

    HatTransport tr = transport_along_hat(hat, F);
    CHECK(check_transport(hat, tr).ok());
    int pair = hat.tuple_cell(0, {3, 4});
    int direct = hat.tuple_cell(0, {5});
    CHECK(tr.apply2[hat.theta[pair][direct]] == 1);

    HatTransport broken = tr;
    broken.apply2[hat.theta[pair][direct]] = Z.id2[Z.id1[0]];
    auto rep = check_transport(hat, broken);
    CHECK_FALSE(rep.ok());
    CHECK(has_law(rep, "coherence"));
}

} // TEST_SUITE

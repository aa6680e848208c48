#include <doctest.h>

#include "support/fixtures.hpp"
#include "twocat/elevator.hpp"

using namespace twocat;

TEST_SUITE("elevator") {

TEST_CASE("atoms, identities, grouping") {
    TwoCat c = fixtures::cell2_inv();
    CHECK(eval_elevator(c, "mu") == c.two_index("mu"));
    CHECK(eval_elevator(c, "id(f)") == c.id2[c.one_index("f")]);
    CHECK(eval_elevator(c, "(mu)") == c.two_index("mu"));
    CHECK(eval_elevator(c, "  mu  ") == c.two_index("mu"));
}

TEST_CASE("vertical stacks read top to bottom") {
    TwoCat c = fixtures::cell2_inv();
    // mu: f => g then nu: g => f
    CHECK(eval_elevator(c, "mu v nu") == c.id2[c.one_index("f")]);
    CHECK(eval_elevator(c, "nu v mu") == c.id2[c.one_index("g")]);
    CHECK(eval_elevator(c, "mu v nu v mu") == c.two_index("mu"));
}

TEST_CASE("juxtaposition reads right to left") {
    TwoCat c = fixtures::suspension_z3();
    CHECK(eval_elevator(c, "r1 . r1") == c.two_index("r2"));
    CHECK(eval_elevator(c, "r1 . r2") == c.id2[0]);
    CHECK(eval_elevator(c, "r1 . r1 . r1") == c.id2[0]);
    CHECK(eval_elevator(c, "r1 v r1") == c.two_index("r2"));
}

TEST_CASE("dot binds tighter than v") {
    TwoCat c = fixtures::suspension_z3();
    // r1 . r1 v r1 must parse as (r1 . r1) v r1 = r2 v r1 = id... staged:
    CHECK(eval_elevator(c, "r1 . r1 v r1") ==
          eval_elevator(c, "(r1 . r1) v r1"));
    CHECK(eval_elevator(c, "r1 . r1 v r1") == c.id2[0]);
}

TEST_CASE("whisker expressions against table whiskers") {
    TwoCat c = fixtures::cell2_inv();
    int mu = c.two_index("mu");
    CHECK(eval_elevator(c, "id(id_B) . mu") == c.whisker_left(c.id1[1], mu));
    CHECK(eval_elevator(c, "mu . id(id_A)") == c.whisker_right(mu, c.id1[0]));
}

TEST_CASE("syntax errors carry positions") {
    TwoCat c = fixtures::cell2();
    CHECK_THROWS_AS((void)eval_elevator(c, "mu v"), SyntaxError);
    CHECK_THROWS_AS((void)eval_elevator(c, "(mu"), SyntaxError);
    CHECK_THROWS_AS((void)eval_elevator(c, "mu mu"), SyntaxError);
    CHECK_THROWS_AS((void)eval_elevator(c, "id mu"), SyntaxError);
    CHECK_THROWS_AS((void)eval_elevator(c, "&"), SyntaxError);
    try {
        (void)eval_elevator(c, "mu v ");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("reserved words cannot name cells") {
    TwoCat c = fixtures::cell2();
    CHECK_THROWS_AS((void)eval_elevator(c, "v"), SyntaxError);
    CHECK_THROWS_AS((void)eval_elevator(c, "id"), SyntaxError);
}

TEST_CASE("unknown atoms are distinguished from syntax errors") {
    TwoCat c = fixtures::cell2();
    CHECK_THROWS_AS((void)eval_elevator(c, "zeta"), UnknownAtom);
    CHECK_THROWS_AS((void)eval_elevator(c, "id(zeta)"), UnknownAtom);
    try {
        (void)eval_elevator(c, "id(zeta)");
    } catch (const UnknownAtom& e) {
        CHECK(e.atom == "zeta");
    }
}

TEST_CASE("boundary mismatches quote the offending subtree") {
    TwoCat c = fixtures::cell2();
    CHECK_THROWS_AS((void)eval_elevator(c, "mu v mu"), BoundaryMismatch);
    try {
        (void)eval_elevator(c, "id(f) v (mu v mu)");
    } catch (const BoundaryMismatch& e) {
        CHECK(e.subtree == "(mu v mu)");
    }
    // horizontally: two cells in hom(A,B) cannot be juxtaposed
    CHECK_THROWS_AS((void)eval_elevator(c, "mu . mu"), BoundaryMismatch);
}

TEST_CASE("grid readings agree on valid structures") {
    TwoCat c = fixtures::suspension_z3();
    for (int a = 0; a < c.two_count(); ++a)
        for (int b = 0; b < c.two_count(); ++b) {
            if (!c.hcomposable(b, a)) continue;
            auto r = grid_readings(c, a, b);
            CHECK(r[0] == r[1]);
            CHECK(r[1] == r[2]);
        }
}

TEST_CASE("primes are legal in identifiers") {
    TwoCat c;
    int A = c.add_object("A");
    int f = c.add_one_cell("f'", A, A);
    int m = c.add_two_cell("a'", f, f);
    c.set_vcomp(m, m, m);
    c.fill_identity_composites();
    CHECK(eval_elevator(c, "a' v a'") == m);
    CHECK(eval_elevator(c, "id(f')") == c.id2[f]);
}

} // TEST_SUITE

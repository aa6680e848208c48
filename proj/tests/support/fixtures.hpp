#pragma once

// Small hand-checked 2-categories reused across test binaries.  Each builder
// returns a fully validated structure (tests re-validate anyway).

#include "twocat/twocat.hpp"

namespace twocat::fixtures {

/// Two objects A, B joined by an isomorphism pair; only identity 2-cells.
inline TwoCat isopair2() { return discrete2(isopair_cat()); }

/// Two objects, parallel 1-cells f, g : A -> B and a single non-identity
/// 2-cell mu : f => g.  The smallest 2-category with a non-trivial 2-cell.
inline TwoCat cell2() {
    TwoCat c;
    int A = c.add_object("A");
    int B = c.add_object("B");
    int f = c.add_one_cell("f", A, B);
    int g = c.add_one_cell("g", A, B);
    int mu = c.add_two_cell("mu", f, g);
    c.fill_identity_composites();
    // whiskers by identity 1-cells
    c.set_hcomp2(mu, c.id2[c.id1[A]], mu);
    c.set_hcomp2(c.id2[c.id1[B]], mu, mu);
    return c;
}

/// Same shape as cell2 plus the inverse cell nu : g => f.  hom(A,B) is the
/// contractible groupoid on {f, g}.
inline TwoCat cell2_inv() {
    TwoCat c;
    int A = c.add_object("A");
    int B = c.add_object("B");
    int f = c.add_one_cell("f", A, B);
    int g = c.add_one_cell("g", A, B);
    int mu = c.add_two_cell("mu", f, g);
    int nu = c.add_two_cell("nu", g, f);
    c.fill_identity_composites();
    c.set_vcomp(nu, mu, c.id2[f]);
    c.set_vcomp(mu, nu, c.id2[g]);
    c.set_hcomp2(mu, c.id2[c.id1[A]], mu);
    c.set_hcomp2(c.id2[c.id1[B]], mu, mu);
    c.set_hcomp2(nu, c.id2[c.id1[A]], nu);
    c.set_hcomp2(c.id2[c.id1[B]], nu, nu);
    return c;
}

/// One object, one 1-cell, 2-cells forming the cyclic group of order three
/// under both compositions.
inline TwoCat suspension_z3() {
    TwoCat c;
    int s = c.add_object("s");
    int e = c.id1[s];
    int r1 = c.add_two_cell("r1", e, e);
    int r2 = c.add_two_cell("r2", e, e);
    int r0 = c.id2[e];
    auto mult = [&](int a, int b) {
        int ia = a == r0 ? 0 : (a == r1 ? 1 : 2);
        int ib = b == r0 ? 0 : (b == r1 ? 1 : 2);
        int ir = (ia + ib) % 3;
        return ir == 0 ? r0 : (ir == 1 ? r1 : r2);
    };
    for (int a : {r0, r1, r2})
        for (int b : {r0, r1, r2}) {
            c.set_vcomp(b, a, mult(a, b));
            c.set_hcomp2(b, a, mult(a, b));
        }
    c.fill_identity_composites();
    return c;
}

/// Objects A, B; 1-cells f, g : A -> B; an invertible mu : f => g with
/// inverse nu, plus an endo-cell structure making every juxtaposition with
/// identity 1-cells explicit.  hom(A,A) and hom(B,B) are trivial.
inline TwoCat invertible_pair() { return cell2_inv(); }

/// Objects x, y with parallel 1-cells a, b : x -> y joined by a free
/// invertible 2-cell mu (inverse nu).
inline TwoCat parallel_pair_inv2() {
    TwoCat c;
    int x = c.add_object("x");
    int y = c.add_object("y");
    int a = c.add_one_cell("a", x, y);
    int b = c.add_one_cell("b", x, y);
    int mu = c.add_two_cell("mu", a, b);
    int nu = c.add_two_cell("nu", b, a);
    c.set_vcomp(nu, mu, c.id2[a]);
    c.set_vcomp(mu, nu, c.id2[b]);
    c.fill_identity_composites();
    return c;
}

/// One object j carrying a non-identity idempotent 1-cell e (e e = e) and
/// only identity 2-cells.
inline TwoCat idempotent_monoid2() {
    TwoCat c;
    int j = c.add_object("j");
    int e = c.add_one_cell("e", j, j);
    c.set_hcomp1(e, e, e);
    c.fill_identity_composites();
    c.set_hcomp2(c.id2[e], c.id2[e], c.id2[e]);
    return c;
}

} // namespace twocat::fixtures

#include "twocat/maps.hpp"

namespace twocat {

bool PseudoFunctor::is_strict() const {
    const TwoCat& B = *cod;
    for (int u : unitor)
        if (B.id2[B.src2[u]] != u) return false;
    for (const auto& row : compositor)
        for (int c : row)
            if (c >= 0 && B.id2[B.src2[c]] != c) return false;
    return true;
}

PseudoFunctor make_strict(const TwoCat& dom, const TwoCat& cod,
                          std::vector<int> ob, std::vector<int> one,
                          std::vector<int> two) {
    PseudoFunctor F;
    F.dom = &dom;
    F.cod = &cod;
    F.ob = std::move(ob);
    F.one = std::move(one);
    F.two = std::move(two);
    F.compositor.assign(dom.one_count(), std::vector<int>(dom.one_count(), -1));
    for (int g = 0; g < dom.one_count(); ++g)
        for (int f = 0; f < dom.one_count(); ++f)
            if (dom.composable1(g, f))
                F.compositor[g][f] = cod.id2[cod.hcomp1[F.one[g]][F.one[f]]];
    F.unitor.resize(dom.ob_count());
    for (int x = 0; x < dom.ob_count(); ++x)
        F.unitor[x] = cod.id2[cod.id1[F.ob[x]]];
    return F;
}

PseudoFunctor identity_pseudofunctor(const TwoCat& c) {
    std::vector<int> ob(c.ob_count()), one(c.one_count()), two(c.two_count());
    for (int x = 0; x < c.ob_count(); ++x) ob[x] = x;
    for (int f = 0; f < c.one_count(); ++f) one[f] = f;
    for (int a = 0; a < c.two_count(); ++a) two[a] = a;
    return make_strict(c, c, std::move(ob), std::move(one), std::move(two));
}

PseudoFunctor constant_pseudofunctor(const TwoCat& dom, const TwoCat& cod,
                                     int x) {
    std::vector<int> ob(dom.ob_count(), x);
    std::vector<int> one(dom.one_count(), cod.id1[x]);
    std::vector<int> two(dom.two_count(), cod.id2[cod.id1[x]]);
    return make_strict(dom, cod, std::move(ob), std::move(one), std::move(two));
}

namespace {

/// Runs one equation check, converting table accidents (missing entries,
/// bad boundaries discovered mid-computation) into report entries instead
/// of exceptions.
template <typename Fn>
void checked(ValidationReport& rep, const std::string& law,
             const std::string& where, Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        rep.add(law + "-error", where, e.what());
    }
}

} // namespace

ValidationReport validate_pseudofunctor(const PseudoFunctor& F) {
    ValidationReport rep;
    const TwoCat& A = *F.dom;
    const TwoCat& B = *F.cod;
    if (static_cast<int>(F.ob.size()) != A.ob_count() ||
        static_cast<int>(F.one.size()) != A.one_count() ||
        static_cast<int>(F.two.size()) != A.two_count() ||
        static_cast<int>(F.unitor.size()) != A.ob_count() ||
        static_cast<int>(F.compositor.size()) != A.one_count()) {
        rep.add("shape", "tables", "value table sizes differ from domain");
        return rep;
    }
    for (const auto& row : F.compositor)
        if (static_cast<int>(row.size()) != A.one_count()) {
            rep.add("shape", "compositor", "row size differs from 1-cell count");
            return rep;
        }
    bool dangling = false;
    auto in = [&dangling, &rep](int v, int n, const std::string& what) {
        if (v < 0 || v >= n) {
            rep.add("dangling", what, "value out of range");
            dangling = true;
        }
    };
    for (int x = 0; x < A.ob_count(); ++x) in(F.ob[x], B.ob_count(), A.objects[x]);
    for (int f = 0; f < A.one_count(); ++f)
        in(F.one[f], B.one_count(), A.one_cells[f]);
    for (int a = 0; a < A.two_count(); ++a)
        in(F.two[a], B.two_count(), A.two_cells[a]);
    for (int x = 0; x < A.ob_count(); ++x)
        in(F.unitor[x], B.two_count(), "unitor " + A.objects[x]);
    for (int g = 0; g < A.one_count(); ++g)
        for (int f = 0; f < A.one_count(); ++f) {
            if (A.composable1(g, f)) {
                in(F.compositor[g][f], B.two_count(),
                   "compositor " + A.one_cells[g] + "," + A.one_cells[f]);
            } else if (F.compositor[g][f] >= 0) {
                rep.add("compositor-spurious",
                        A.one_cells[g] + "," + A.one_cells[f],
                        "entry on a non-composable pair");
            }
        }
    if (dangling) return rep;

    for (int f = 0; f < A.one_count(); ++f)
        if (B.src1[F.one[f]] != F.ob[A.src1[f]] ||
            B.tgt1[F.one[f]] != F.ob[A.tgt1[f]])
            rep.add("boundary-1", A.one_cells[f], "image has wrong endpoints");
    for (int a = 0; a < A.two_count(); ++a)
        if (B.src2[F.two[a]] != F.one[A.src2[a]] ||
            B.tgt2[F.two[a]] != F.one[A.tgt2[a]])
            rep.add("boundary-2", A.two_cells[a], "image has wrong boundary");
    if (!rep.ok()) return rep;

    for (int f = 0; f < A.one_count(); ++f)
        if (F.two[A.id2[f]] != B.id2[F.one[f]])
            rep.add("hom-identity", A.one_cells[f],
                    "identity 2-cell not preserved");
    for (int b = 0; b < A.two_count(); ++b)
        for (int a = 0; a < A.two_count(); ++a) {
            if (!A.vcomposable(b, a)) continue;
            checked(rep, "hom-composition",
                    A.two_cells[b] + "∘" + A.two_cells[a], [&] {
                        if (F.two[A.vcompose(b, a)] !=
                            B.vcompose(F.two[b], F.two[a]))
                            rep.add("hom-composition",
                                    A.two_cells[b] + "∘" + A.two_cells[a],
                                    "F(b∘a) != F(b)∘F(a)");
                    });
        }

    for (int x = 0; x < A.ob_count(); ++x) {
        int u = F.unitor[x];
        if (B.src2[u] != B.id1[F.ob[x]] || B.tgt2[u] != F.one[A.id1[x]])
            rep.add("unitor-boundary", A.objects[x],
                    "unitor is not id_{FC} => F(id_C)");
        else if (!B.is_invertible2(u))
            rep.add("unitor-invertible", A.objects[x], "unitor has no inverse");
    }
    for (int g = 0; g < A.one_count(); ++g)
        for (int f = 0; f < A.one_count(); ++f) {
            if (!A.composable1(g, f)) continue;
            int c = F.compositor[g][f];
            const std::string where = A.one_cells[g] + "," + A.one_cells[f];
            checked(rep, "compositor-boundary", where, [&] {
                if (B.src2[c] != B.hcompose1(F.one[g], F.one[f]) ||
                    B.tgt2[c] != F.one[A.hcompose1(g, f)])
                    rep.add("compositor-boundary", where,
                            "compositor is not F(g)F(f) => F(g∘f)");
                else if (!B.is_invertible2(c))
                    rep.add("compositor-invertible", where,
                            "compositor has no inverse");
            });
        }
    if (!rep.ok()) return rep;

    // Naturality of the compositor in both arguments.
    for (int beta = 0; beta < A.two_count(); ++beta)
        for (int alpha = 0; alpha < A.two_count(); ++alpha) {
            if (!A.hcomposable(beta, alpha)) continue;
            const std::string where =
                A.two_cells[beta] + " " + A.two_cells[alpha];
            checked(rep, "compositor-natural", where, [&] {
                int lhs = B.vcompose(F.two[A.hcompose2(beta, alpha)],
                                     F.compositor[A.src2[beta]][A.src2[alpha]]);
                int rhs = B.vcompose(F.compositor[A.tgt2[beta]][A.tgt2[alpha]],
                                     B.hcompose2(F.two[beta], F.two[alpha]));
                if (lhs != rhs)
                    rep.add("compositor-natural", where,
                            "F(beta alpha)∘comp != comp∘(F beta F alpha)");
            });
        }

    // Unit coherence on both sides of every 1-cell.
    for (int f = 0; f < A.one_count(); ++f) {
        int C = A.src1[f], D = A.tgt1[f];
        checked(rep, "unit-coherence", A.one_cells[f], [&] {
            int left = B.vcompose(F.compositor[A.id1[D]][f],
                                  B.hcompose2(F.unitor[D], B.id2[F.one[f]]));
            if (left != B.id2[F.one[f]])
                rep.add("unit-coherence", A.one_cells[f],
                        "comp_{f,id}∘(unitor F f) != id");
            int right = B.vcompose(F.compositor[f][A.id1[C]],
                                   B.hcompose2(B.id2[F.one[f]], F.unitor[C]));
            if (right != B.id2[F.one[f]])
                rep.add("unit-coherence", A.one_cells[f],
                        "comp_{id,f}∘(F f unitor) != id");
        });
    }

    // Associativity coherence for every composable triple h∘g∘f.
    for (int h = 0; h < A.one_count(); ++h)
        for (int g = 0; g < A.one_count(); ++g) {
            if (!A.composable1(h, g)) continue;
            for (int f = 0; f < A.one_count(); ++f) {
                if (!A.composable1(g, f)) continue;
                const std::string where = A.one_cells[h] + "∘" +
                                          A.one_cells[g] + "∘" + A.one_cells[f];
                checked(rep, "assoc-coherence", where, [&] {
                    int gf = A.hcompose1(g, f);
                    int hg = A.hcompose1(h, g);
                    int lhs = B.vcompose(
                        F.compositor[h][gf],
                        B.hcompose2(B.id2[F.one[h]], F.compositor[g][f]));
                    int rhs = B.vcompose(
                        F.compositor[hg][f],
                        B.hcompose2(F.compositor[h][g], B.id2[F.one[f]]));
                    if (lhs != rhs)
                        rep.add("assoc-coherence", where,
                                "the two compositor pastings differ");
                });
            }
        }
    return rep;
}

PseudoFunctor compose_pseudofunctor(const PseudoFunctor& G,
                                    const PseudoFunctor& F) {
    if (F.cod != G.dom)
        throw NotComposable("compose_pseudofunctor: middle 2-categories differ");
    const TwoCat& A = *F.dom;
    const TwoCat& C = *G.cod;
    PseudoFunctor H;
    H.dom = F.dom;
    H.cod = G.cod;
    H.ob.resize(A.ob_count());
    H.one.resize(A.one_count());
    H.two.resize(A.two_count());
    for (int x = 0; x < A.ob_count(); ++x) H.ob[x] = G.ob[F.ob[x]];
    for (int f = 0; f < A.one_count(); ++f) H.one[f] = G.one[F.one[f]];
    for (int a = 0; a < A.two_count(); ++a) H.two[a] = G.two[F.two[a]];
    H.compositor.assign(A.one_count(), std::vector<int>(A.one_count(), -1));
    for (int g = 0; g < A.one_count(); ++g)
        for (int f = 0; f < A.one_count(); ++f)
            if (A.composable1(g, f))
                H.compositor[g][f] =
                    C.vcompose(G.two[F.compositor[g][f]],
                               G.compositor[F.one[g]][F.one[f]]);
    H.unitor.resize(A.ob_count());
    for (int x = 0; x < A.ob_count(); ++x)
        H.unitor[x] = C.vcompose(G.two[F.unitor[x]], G.unitor[F.ob[x]]);
    return H;
}

bool PseudoNatural::is_2natural(const TwoCat& dom) const {
    const TwoCat& B = *src->cod;
    for (int f = 0; f < dom.one_count(); ++f)
        if (cell[f] != B.id2[B.src2[cell[f]]]) return false;
    return true;
}

ValidationReport validate_pseudonatural(const PseudoNatural& t) {
    ValidationReport rep;
    const PseudoFunctor& F = *t.src;
    const PseudoFunctor& G = *t.tgt;
    if (F.dom != G.dom || F.cod != G.cod) {
        rep.add("shape", "functors", "source and target are not parallel");
        return rep;
    }
    const TwoCat& A = *F.dom;
    const TwoCat& B = *F.cod;
    if (static_cast<int>(t.component.size()) != A.ob_count() ||
        static_cast<int>(t.cell.size()) != A.one_count()) {
        rep.add("shape", "tables", "component/cell table sizes differ from domain");
        return rep;
    }
    bool dangling = false;
    for (int x = 0; x < A.ob_count(); ++x) {
        int c = t.component[x];
        if (c < 0 || c >= B.one_count()) {
            rep.add("dangling-component", A.objects[x], "out of range");
            dangling = true;
        } else if (B.src1[c] != F.ob[x] || B.tgt1[c] != G.ob[x]) {
            rep.add("component-boundary", A.objects[x],
                    "component is not F(x) -> G(x)");
            dangling = true;
        }
    }
    if (dangling) return rep;
    for (int f = 0; f < A.one_count(); ++f) {
        int c = t.cell[f];
        if (c < 0 || c >= B.two_count()) {
            rep.add("dangling-cell", A.one_cells[f], "out of range");
            dangling = true;
            continue;
        }
        checked(rep, "cell-boundary", A.one_cells[f], [&] {
            int C = A.src1[f], D = A.tgt1[f];
            int want_src = B.hcompose1(G.one[f], t.component[C]);
            int want_tgt = B.hcompose1(t.component[D], F.one[f]);
            if (B.src2[c] != want_src || B.tgt2[c] != want_tgt) {
                rep.add("cell-boundary", A.one_cells[f],
                        "structure cell is not G(f) t_C => t_D F(f)");
                dangling = true;
            } else if (!B.is_invertible2(c)) {
                rep.add("cell-invertible", A.one_cells[f],
                        "structure cell has no inverse");
            }
        });
    }
    if (dangling || !rep.ok()) return rep;

    for (int x = 0; x < A.ob_count(); ++x) {
        checked(rep, "unit", A.objects[x], [&] {
            int lhs = B.vcompose(
                t.cell[A.id1[x]],
                B.hcompose2(G.unitor[x], B.id2[t.component[x]]));
            int rhs = B.hcompose2(B.id2[t.component[x]], F.unitor[x]);
            if (lhs != rhs)
                rep.add("unit", A.objects[x],
                        "t_{id}∘(unitor^G t) != t unitor^F");
        });
    }

    for (int g = 0; g < A.one_count(); ++g)
        for (int f = 0; f < A.one_count(); ++f) {
            if (!A.composable1(g, f)) continue;
            const std::string where = A.one_cells[g] + "∘" + A.one_cells[f];
            checked(rep, "composition", where, [&] {
                int C = A.src1[f], E = A.tgt1[g];
                int lhs = B.vcompose(
                    B.hcompose2(B.id2[t.component[E]], F.compositor[g][f]),
                    B.vcompose(
                        B.hcompose2(t.cell[g], B.id2[F.one[f]]),
                        B.hcompose2(B.id2[G.one[g]], t.cell[f])));
                int rhs = B.vcompose(
                    t.cell[A.hcompose1(g, f)],
                    B.hcompose2(G.compositor[g][f], B.id2[t.component[C]]));
                if (lhs != rhs)
                    rep.add("composition", where,
                            "pasting along the composite disagrees");
            });
        }

    for (int mu = 0; mu < A.two_count(); ++mu) {
        if (A.id2[A.src2[mu]] == mu) continue; // identities hold by units
        const std::string where = A.two_cells[mu];
        checked(rep, "naturality", where, [&] {
            int f = A.src2[mu], fp = A.tgt2[mu];
            int C = A.src1[f], D = A.tgt1[f];
            int lhs = B.vcompose(
                t.cell[fp], B.hcompose2(G.two[mu], B.id2[t.component[C]]));
            int rhs = B.vcompose(
                B.hcompose2(B.id2[t.component[D]], F.two[mu]), t.cell[f]);
            if (lhs != rhs)
                rep.add("naturality", where,
                        "t_{f'}∘(G mu t) != (t F mu)∘t_f");
        });
    }
    return rep;
}

PseudoNatural compose_pseudonatural(const PseudoNatural& tp,
                                    const PseudoNatural& t) {
    if (t.tgt != tp.src)
        throw NotComposable("compose_pseudonatural: middle functor differs");
    const PseudoFunctor& F = *t.src;
    const TwoCat& A = *F.dom;
    const TwoCat& B = *F.cod;
    PseudoNatural r;
    r.src = t.src;
    r.tgt = tp.tgt;
    r.component.resize(A.ob_count());
    r.cell.resize(A.one_count());
    for (int x = 0; x < A.ob_count(); ++x)
        r.component[x] = B.hcompose1(tp.component[x], t.component[x]);
    for (int f = 0; f < A.one_count(); ++f) {
        int C = A.src1[f], D = A.tgt1[f];
        r.cell[f] = B.vcompose(
            B.hcompose2(B.id2[tp.component[D]], t.cell[f]),
            B.hcompose2(tp.cell[f], B.id2[t.component[C]]));
    }
    return r;
}

PseudoNatural identity_pseudonatural(const PseudoFunctor& F) {
    const TwoCat& A = *F.dom;
    const TwoCat& B = *F.cod;
    PseudoNatural t;
    t.src = &F;
    t.tgt = &F;
    t.component.resize(A.ob_count());
    t.cell.resize(A.one_count());
    for (int x = 0; x < A.ob_count(); ++x) t.component[x] = B.id1[F.ob[x]];
    for (int f = 0; f < A.one_count(); ++f) t.cell[f] = B.id2[F.one[f]];
    return t;
}

ValidationReport validate_modification(const Modification& m) {
    ValidationReport rep;
    const PseudoNatural& th = *m.src;
    const PseudoNatural& et = *m.tgt;
    if (th.src != et.src || th.tgt != et.tgt) {
        rep.add("shape", "transformations", "not parallel");
        return rep;
    }
    const PseudoFunctor& F = *th.src;
    const PseudoFunctor& G = *th.tgt;
    const TwoCat& A = *F.dom;
    const TwoCat& B = *F.cod;
    if (static_cast<int>(m.component.size()) != A.ob_count()) {
        rep.add("shape", "components", "size differs from object count");
        return rep;
    }
    bool dangling = false;
    for (int x = 0; x < A.ob_count(); ++x) {
        int r = m.component[x];
        if (r < 0 || r >= B.two_count()) {
            rep.add("dangling-component", A.objects[x], "out of range");
            dangling = true;
        } else if (B.src2[r] != th.component[x] ||
                   B.tgt2[r] != et.component[x]) {
            rep.add("component-boundary", A.objects[x],
                    "component is not theta_x => eta_x");
            dangling = true;
        }
    }
    if (dangling) return rep;

    for (int f = 0; f < A.one_count(); ++f) {
        const std::string where = A.one_cells[f];
        checked(rep, "exchange", where, [&] {
            int C = A.src1[f], D = A.tgt1[f];
            int lhs = B.vcompose(
                B.hcompose2(m.component[D], B.id2[F.one[f]]), th.cell[f]);
            int rhs = B.vcompose(
                et.cell[f], B.hcompose2(B.id2[G.one[f]], m.component[C]));
            if (lhs != rhs)
                rep.add("exchange", where,
                        "(rho F f)∘theta_f != eta_f∘(G f rho)");
        });
    }
    return rep;
}

std::vector<int> compose_modification_vertical(const TwoCat& cod,
                                               const Modification& e,
                                               const Modification& r) {
    std::vector<int> out(r.component.size());
    for (size_t x = 0; x < out.size(); ++x)
        out[x] = cod.vcompose(e.component[x], r.component[x]);
    return out;
}

std::vector<int> compose_modification_horizontal(const TwoCat& cod,
                                                 const Modification& outer,
                                                 const Modification& inner) {
    std::vector<int> out(inner.component.size());
    for (size_t x = 0; x < out.size(); ++x)
        out[x] = cod.hcompose2(outer.component[x], inner.component[x]);
    return out;
}

ValidationReport check_pseudo_cone(const PseudoCone& cone) {
    const PseudoFunctor& H = *cone.diagram;
    PseudoFunctor delta =
        constant_pseudofunctor(*H.dom, *H.cod, cone.vertex);
    PseudoNatural t{&delta, &H, cone.leg, cone.cell};
    return validate_pseudonatural(t);
}

ValidationReport check_pseudo_cocone(const PseudoCocone& cone) {
    const PseudoFunctor& F = *cone.diagram;
    PseudoFunctor delta =
        constant_pseudofunctor(*F.dom, *F.cod, cone.vertex);
    PseudoNatural t{&F, &delta, cone.leg, cone.cell};
    return validate_pseudonatural(t);
}

bool is_strict_cocone(const PseudoCocone& cone) {
    const TwoCat& B = *cone.diagram->cod;
    for (int c : cone.cell)
        if (c != B.id2[B.src2[c]]) return false;
    return true;
}

ValidationReport check_cone_morphism(const ConeMorphism& m) {
    ValidationReport rep;
    const PseudoCone& th = *m.src;
    const PseudoCone& et = *m.tgt;
    if (th.diagram != et.diagram) {
        rep.add("shape", "cones", "different diagrams");
        return rep;
    }
    if (th.vertex != et.vertex) {
        rep.add("shape", "cones", "different vertices");
        return rep;
    }
    const PseudoFunctor& H = *th.diagram;
    PseudoFunctor delta =
        constant_pseudofunctor(*H.dom, *H.cod, th.vertex);
    PseudoNatural a{&delta, &H, th.leg, th.cell};
    PseudoNatural b{&delta, &H, et.leg, et.cell};
    Modification mod{&a, &b, m.component};
    return validate_modification(mod);
}

std::optional<EquivalenceCellWitness> check_equivalence_1cell(const TwoCat& c,
                                                              int f) {
    int X = c.src1[f], Y = c.tgt1[f];
    for (int g : c.one_hom(Y, X)) {
        int gf = c.hcomp1[g][f], fg = c.hcomp1[f][g];
        if (gf < 0 || fg < 0) continue;
        for (int unit : c.two_hom(gf, c.id1[X])) {
            if (!c.is_invertible2(unit)) continue;
            for (int counit : c.two_hom(fg, c.id1[Y])) {
                if (!c.is_invertible2(counit)) continue;
                return EquivalenceCellWitness{g, unit, counit};
            }
        }
    }
    return std::nullopt;
}

} // namespace twocat

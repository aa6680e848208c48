#include "twocat/pro.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>

namespace twocat {

namespace {

std::string num(int x) { return std::to_string(x); }

/// Structural equality of index 2-categories (names aside), enough to
/// transport cell indices between a pro-object and its clones.
bool same_shape(const TwoCat& a, const TwoCat& b) {
    return a.objects.size() == b.objects.size() && a.src1 == b.src1 &&
           a.tgt1 == b.tgt1 && a.id1 == b.id1 && a.src2 == b.src2 &&
           a.tgt2 == b.tgt2 && a.id2 == b.id2 && a.hcomp1 == b.hcomp1 &&
           a.vcomp == b.vcomp && a.hcomp2 == b.hcomp2;
}

} // namespace

// ---------------------------------------------------------------------------
// pro-objects

int ProObject::ob(int i) const {
    if (i < 0 || i >= index->ob_count())
        throw UnknownCell("pro-object: index object " + num(i) + " out of range");
    return fun.ob[i];
}

int ProObject::one(int u) const {
    if (u < 0 || u >= index->one_count())
        throw UnknownCell("pro-object: index 1-cell " + num(u) + " out of range");
    return fun.one[u];
}

int ProObject::two(int mu) const {
    if (mu < 0 || mu >= index->two_count())
        throw UnknownCell("pro-object: index 2-cell " + num(mu) + " out of range");
    return fun.two[mu];
}

ProObject make_pro_object(const TwoCat& I, const TwoCat& C,
                          std::vector<int> ob, std::vector<int> one,
                          std::vector<int> two) {
    if (static_cast<int>(ob.size()) != I.ob_count() ||
        static_cast<int>(one.size()) != I.one_count() ||
        static_cast<int>(two.size()) != I.two_count())
        throw InputError("make_pro_object: value tables do not match the index "
                         "cell counts");
    ProObject X;
    X.index = &I;
    X.target = &C;
    X.iop = std::make_unique<TwoCat>(op(I));
    X.fun = make_strict(*X.iop, C, std::move(ob), std::move(one), std::move(two));
    return X;
}

ProObject constant_pro_object(const TwoCat& C, int c) {
    if (c < 0 || c >= C.ob_count())
        throw UnknownCell("constant_pro_object: no target object " + num(c));
    ProObject X;
    X.owned_index = std::make_unique<TwoCat>(terminal_twocat());
    X.index = X.owned_index.get();
    X.target = &C;
    X.iop = std::make_unique<TwoCat>(op(*X.index));
    X.fun = make_strict(*X.iop, C, {c}, {C.id1[c]}, {C.id2[C.id1[c]]});
    return X;
}

ProObject clone_pro_object(const ProObject& X) {
    ProObject Y;
    if (X.owned_index) {
        Y.owned_index = std::make_unique<TwoCat>(*X.owned_index);
        Y.index = Y.owned_index.get();
    } else {
        Y.index = X.index;
    }
    Y.target = X.target;
    Y.iop = std::make_unique<TwoCat>(op(*Y.index));
    Y.fun = make_strict(*Y.iop, *Y.target, X.fun.ob, X.fun.one, X.fun.two);
    return Y;
}

ValidationReport validate_pro_object(const ProObject& X) {
    ValidationReport rep;
    if (!X.index || !X.target || !X.iop) {
        rep.add("wiring", "pro-object", "index, target or opposite index unset");
        return rep;
    }
    rep.merge(check_2filtered(*X.index), "index");
    rep.merge(validate_pseudofunctor(X.fun), "value");
    if (!X.fun.is_strict())
        rep.add("strict", "pro-object",
                "value tables carry non-identity coherence cells");
    return rep;
}

// ---------------------------------------------------------------------------
// hom levels

int HomLevel::object_of(int i, int r) const {
    const ProObject& X = *source;
    const TwoCat& C = *X.target;
    if (i < 0 || i >= X.index->ob_count())
        throw InputError("hom level: index object " + num(i) + " out of range");
    if (r < 0 || r >= C.one_count() || C.src1[r] != X.ob(i) ||
        C.tgt1[r] != target_ob)
        throw InputError("hom level: cell " + num(r) +
                         " is not a 1-cell from the value at index object " +
                         num(i) + " to the target object");
    return colim->object_of(i, dec[i].ob_of_one[r]);
}

std::pair<int, int> HomLevel::pair_of(int o) const {
    if (o < 0 || o >= static_cast<int>(colim->ob_pair.size()))
        throw UnknownCell("hom level: presentation object " + num(o) +
                          " out of range");
    auto [i, c] = colim->ob_pair[o];
    return {i, dec[i].one_of_ob[c]};
}

int HomLevel::leg_class(int i, int theta) const {
    const ProObject& X = *source;
    const TwoCat& C = *X.target;
    if (i < 0 || i >= X.index->ob_count())
        throw InputError("hom level: index object " + num(i) + " out of range");
    if (theta < 0 || theta >= C.two_count())
        throw InputError("hom level: 2-cell " + num(theta) + " out of range");
    int m = dec[i].mor_of_two[theta];
    if (m < 0)
        throw InputError("hom level: 2-cell " + num(theta) +
                         " does not run between 1-cells from the value at "
                         "index object " + num(i) + " to the target object");
    return colim->leg(i).mor[m];
}

int HomLevel::transition(int u, int r) const {
    const ProObject& X = *source;
    const TwoCat& I = *X.index;
    if (u < 0 || u >= I.one_count())
        throw InputError("hom level: index 1-cell " + num(u) + " out of range");
    int i = I.src1[u];
    object_of(i, r); // boundary check on r
    int cell = colim->leg_nat(u)[dec[i].ob_of_one[r]];
    int inv = colim->cat.inverse(cell);
    if (inv < 0)
        throw Error("hom level: structural class at 1-cell " + num(u) +
                    " is not invertible; the index is not 2-filtered");
    return inv;
}

HomLevel hom_level(const ProObject& X, int d) {
    const TwoCat& C = *X.target;
    const TwoCat& I = *X.index;
    if (d < 0 || d >= C.ob_count())
        throw UnknownCell("hom_level: no target object " + num(d));

    HomLevel L;
    L.source = &X;
    L.target_ob = d;
    L.dec.reserve(I.ob_count());
    for (int i = 0; i < I.ob_count(); ++i)
        L.dec.push_back(hom_category(C, X.ob(i), d));

    auto F = std::make_unique<Cat2Functor>();
    F->dom = &I;
    F->value.reserve(I.ob_count());
    for (int i = 0; i < I.ob_count(); ++i)
        F->value.push_back(std::make_unique<FinCat>(L.dec[i].cat));
    F->fmap.resize(I.one_count());
    for (int u = 0; u < I.one_count(); ++u) {
        int i = I.src1[u], ip = I.tgt1[u];
        CatFunctor f;
        f.dom = F->value[i].get();
        f.cod = F->value[ip].get();
        f.ob.resize(L.dec[i].cat.ob_count());
        for (int o = 0; o < L.dec[i].cat.ob_count(); ++o)
            f.ob[o] = L.dec[ip].ob_of_one[C.hcompose1(L.dec[i].one_of_ob[o],
                                                      X.one(u))];
        f.mor.resize(L.dec[i].cat.mor_count());
        for (int m = 0; m < L.dec[i].cat.mor_count(); ++m)
            f.mor[m] = L.dec[ip].mor_of_two[C.whisker_right(
                L.dec[i].two_of_mor[m], X.one(u))];
        F->fmap[u] = std::move(f);
    }
    F->nmap.resize(I.two_count());
    for (int mu = 0; mu < I.two_count(); ++mu) {
        int i = I.src1[I.src2[mu]], ip = I.tgt1[I.src2[mu]];
        std::vector<int> comp(L.dec[i].cat.ob_count());
        for (int o = 0; o < L.dec[i].cat.ob_count(); ++o)
            comp[o] = L.dec[ip].mor_of_two[C.whisker_left(L.dec[i].one_of_ob[o],
                                                          X.two(mu))];
        F->nmap[mu] = std::move(comp);
    }
    validate_cat2functor(*F).expect_ok("hom-level diagram");
    L.diagram = std::move(F);
    L.colim = std::make_unique<LLColimit>(ll_colimit(*L.diagram));
    return L;
}

// ---------------------------------------------------------------------------
// postcomposition between levels

namespace {

void check_postcompose_shape(const HomLevel& from, const HomLevel& to, int h) {
    if (from.source != to.source)
        throw InputError("postcompose: the hom levels present different "
                         "pro-objects");
    const TwoCat& C = *from.source->target;
    if (h < 0 || h >= C.one_count() || C.src1[h] != from.target_ob ||
        C.tgt1[h] != to.target_ob)
        throw InputError("postcompose: cell " + num(h) +
                         " is not a 1-cell between the two target objects");
}

} // namespace

int postcompose_object(const HomLevel& from, const HomLevel& to, int h, int o) {
    check_postcompose_shape(from, to, h);
    const TwoCat& C = *from.source->target;
    auto [i, t] = from.pair_of(o);
    return to.object_of(i, C.hcompose1(h, t));
}

int postcompose_class(const HomLevel& from, const HomLevel& to, int h, int m) {
    check_postcompose_shape(from, to, h);
    const ProObject& X = *from.source;
    const TwoCat& C = *X.target;
    const TwoCat& I = *X.index;
    if (m < 0 || m >= from.colim->cat.mor_count())
        throw UnknownCell("postcompose: class " + num(m) + " out of range");
    int result = -1;
    for (int p : from.colim->members[m]) {
        const auto& pm = from.colim->premors[p];
        int k = I.tgt1[pm.u];
        int rho = from.dec[k].two_of_mor[pm.r];
        int img = to.dec[k].mor_of_two[C.whisker_left(h, rho)];
        int cls = to.colim->classify(postcompose_object(from, to, h, pm.src_ob),
                                     postcompose_object(from, to, h, pm.tgt_ob),
                                     pm.u, img, pm.v);
        if (result >= 0 && cls != result)
            throw Error("postcompose: members of class " + num(m) +
                        " map to different classes");
        result = cls;
    }
    if (result < 0)
        throw Error("postcompose: class " + num(m) + " has no members");
    return result;
}

// ---------------------------------------------------------------------------
// the pro-morphism category

int ProHom::component(int f, int j) const {
    if (f < 0 || f >= cat().ob_count())
        throw UnknownCell("pro-morphism " + num(f) + " out of range");
    if (j < 0 || j >= static_cast<int>(level.size()))
        throw UnknownCell("pro-morphism level " + num(j) + " out of range");
    return desc->ob_comp[f][j];
}

int ProHom::coherence(int f, int a) const {
    if (f < 0 || f >= cat().ob_count())
        throw UnknownCell("pro-morphism " + num(f) + " out of range");
    if (a < 0 || a >= tgt->index->one_count())
        throw UnknownCell("pro-morphism coherence 1-cell " + num(a) +
                          " out of range");
    return desc->ob_iso[f][a];
}

int ProHom::component_mor(int m, int j) const {
    if (m < 0 || m >= cat().mor_count())
        throw UnknownCell("pro-2-cell " + num(m) + " out of range");
    if (j < 0 || j >= static_cast<int>(level.size()))
        throw UnknownCell("pro-2-cell level " + num(j) + " out of range");
    return desc->mor_comp[m][j];
}

ProHom pro_hom(const ProObject& X, const ProObject& Y) {
    validate_pro_object(X).expect_ok("pro_hom source");
    validate_pro_object(Y).expect_ok("pro_hom target");
    if (X.target != Y.target)
        throw InputError("pro_hom: the pro-objects map into different targets");
    const TwoCat& C = *X.target;
    const TwoCat& J = *Y.index;

    ProHom E;
    E.src = &X;
    E.tgt = &Y;
    E.level.reserve(J.ob_count());
    for (int j = 0; j < J.ob_count(); ++j)
        E.level.push_back(hom_level(X, Y.ob(j)));

    auto H = std::make_unique<Cat2Functor>();
    H->dom = Y.iop.get();
    H->value.reserve(J.ob_count());
    for (int j = 0; j < J.ob_count(); ++j)
        H->value.push_back(std::make_unique<FinCat>(E.level[j].colim->cat));
    H->fmap.resize(J.one_count());
    for (int a = 0; a < J.one_count(); ++a) {
        int jp = J.tgt1[a]; // source in the opposite index
        int j = J.src1[a];  // target in the opposite index
        const HomLevel& from = E.level[jp];
        const HomLevel& to = E.level[j];
        CatFunctor f;
        f.dom = H->value[jp].get();
        f.cod = H->value[j].get();
        f.ob.resize(from.colim->cat.ob_count());
        for (int o = 0; o < static_cast<int>(f.ob.size()); ++o)
            f.ob[o] = postcompose_object(from, to, Y.one(a), o);
        f.mor.resize(from.colim->cat.mor_count());
        for (int m = 0; m < static_cast<int>(f.mor.size()); ++m)
            f.mor[m] = postcompose_class(from, to, Y.one(a), m);
        H->fmap[a] = std::move(f);
    }
    H->nmap.resize(J.two_count());
    for (int alpha = 0; alpha < J.two_count(); ++alpha) {
        int a = J.src2[alpha];
        const HomLevel& from = E.level[J.tgt1[a]];
        const HomLevel& to = E.level[J.src1[a]];
        std::vector<int> comp(from.colim->cat.ob_count());
        for (int o = 0; o < static_cast<int>(comp.size()); ++o) {
            auto [i, t] = from.pair_of(o);
            comp[o] = to.leg_class(i, C.whisker_right(Y.two(alpha), t));
        }
        H->nmap[alpha] = std::move(comp);
    }
    validate_cat2functor(*H).expect_ok("pro-morphism diagram");
    E.outer = std::move(H);
    E.desc = std::make_unique<DescentCat>(pseudo_limit_cat(*E.outer));
    return E;
}

int identity_prohom(const ProHom& E) {
    const ProObject& X = *E.src;
    const ProObject& Y = *E.tgt;
    if (!(X.index == Y.index || same_shape(*X.index, *Y.index)) ||
        X.fun.ob != Y.fun.ob || X.fun.one != Y.fun.one || X.fun.two != Y.fun.two)
        throw InputError("identity_prohom: source and target do not carry the "
                         "same value tables");
    const TwoCat& C = *X.target;
    const TwoCat& J = *Y.index;
    std::vector<int> comps(J.ob_count());
    for (int j = 0; j < J.ob_count(); ++j)
        comps[j] = E.level[j].object_of(j, C.id1[X.ob(j)]);
    std::vector<int> isos(J.one_count());
    for (int a = 0; a < J.one_count(); ++a) {
        int j = J.src1[a], jp = J.tgt1[a];
        const HomLevel& L = E.level[j];
        isos[a] = L.colim->classify(L.object_of(jp, Y.one(a)), comps[j],
                                    J.id1[jp],
                                    L.dec[jp].mor_of_two[C.id2[Y.one(a)]], a);
    }
    int ob = E.desc->find_object(comps, isos);
    if (ob < 0)
        throw Error("identity_prohom: the canonical identity data is not a "
                    "descent object");
    return ob;
}

// ---------------------------------------------------------------------------
// precomposition with a pro-morphism

namespace {

void check_precompose_shape(const HomLevel& from, const HomLevel& to,
                            const ProHom& G, int g) {
    if (from.source != G.tgt || to.source != G.src)
        throw InputError("precompose: the hom levels do not match the "
                         "pro-morphism category");
    if (from.target_ob != to.target_ob)
        throw InputError("precompose: the hom levels sit at different target "
                         "objects");
    if (g < 0 || g >= G.cat().ob_count())
        throw UnknownCell("precompose: no pro-morphism " + num(g));
}

} // namespace

int precompose_object(const HomLevel& from, const HomLevel& to,
                      const ProHom& G, int g, int o) {
    check_precompose_shape(from, to, G, g);
    auto [m, t] = from.pair_of(o);
    return postcompose_object(G.level[m], to, t, G.component(g, m));
}

int precompose_class(const HomLevel& from, const HomLevel& to,
                     const ProHom& G, int g, int x) {
    check_precompose_shape(from, to, G, g);
    const ProObject& V = *G.tgt;
    const TwoCat& C = *V.target;
    const TwoCat& IV = *V.index;
    if (x < 0 || x >= from.colim->cat.mor_count())
        throw UnknownCell("precompose: class " + num(x) + " out of range");
    const FinCat& K = to.colim->cat;
    int result = -1;
    for (int p : from.colim->members[x]) {
        const auto& pm = from.colim->premors[p];
        int k = IV.tgt1[pm.u];
        auto [m, t] = from.pair_of(pm.src_ob);
        auto [mp, tp] = from.pair_of(pm.tgt_ob);
        int rho = from.dec[k].two_of_mor[pm.r];
        auto [nk, qk] = G.level[k].pair_of(G.component(g, k));
        int left = postcompose_class(G.level[m], to, t, G.coherence(g, pm.u));
        int left_inv = K.inverse(left);
        if (left_inv < 0)
            throw Error("precompose: coherence image is not invertible");
        int mid = to.leg_class(nk, C.whisker_right(rho, qk));
        int right =
            postcompose_class(G.level[mp], to, tp, G.coherence(g, pm.v));
        int cls = K.compose(right, K.compose(mid, left_inv));
        if (result >= 0 && cls != result)
            throw Error("precompose: members of class " + num(x) +
                        " map to different classes");
        result = cls;
    }
    if (result < 0)
        throw Error("precompose: class " + num(x) + " has no members");
    return result;
}

// ---------------------------------------------------------------------------
// the projection cone

ValidationReport check_projection_cone(const ProObject& X) {
    ValidationReport rep = validate_pro_object(X);
    if (!rep.ok()) return rep;
    const TwoCat& C = *X.target;
    const TwoCat& I = *X.index;

    std::vector<HomLevel> lv;
    lv.reserve(I.ob_count());
    for (int i = 0; i < I.ob_count(); ++i) lv.push_back(hom_level(X, X.ob(i)));
    std::vector<int> pi(I.ob_count());
    for (int i = 0; i < I.ob_count(); ++i)
        pi[i] = lv[i].object_of(i, C.id1[X.ob(i)]);
    auto pi_cell = [&](int u) {
        int i = I.src1[u], ip = I.tgt1[u];
        return lv[i].colim->classify(lv[i].object_of(ip, X.one(u)), pi[i],
                                     I.id1[ip],
                                     lv[i].dec[ip].mor_of_two[C.id2[X.one(u)]],
                                     u);
    };

    for (int i = 0; i < I.ob_count(); ++i) {
        int got = pi_cell(I.id1[i]);
        int want = lv[i].colim->cat.id_of[pi[i]];
        if (got != want)
            rep.add("PC0", I.objects[i],
                    "identity projection class " + num(got) +
                        " differs from the identity " + num(want));
    }
    for (int u = 0; u < I.one_count(); ++u)
        for (int up = 0; up < I.one_count(); ++up) {
            if (!I.composable1(up, u)) continue;
            int i = I.src1[u];
            int shifted =
                postcompose_class(lv[I.src1[up]], lv[i], X.one(u), pi_cell(up));
            int lhs = lv[i].colim->cat.compose(pi_cell(u), shifted);
            int rhs = pi_cell(I.hcompose1(up, u));
            if (lhs != rhs)
                rep.add("PC1", I.one_cells[up] + " . " + I.one_cells[u],
                        "pasted projection class " + num(lhs) +
                            " differs from the composite's class " + num(rhs));
        }
    for (int mu = 0; mu < I.two_count(); ++mu) {
        int u = I.src2[mu], v = I.tgt2[mu];
        int i = I.src1[u], ip = I.tgt1[u];
        int lhs = lv[i].colim->cat.compose(pi_cell(v),
                                           lv[i].leg_class(ip, X.two(mu)));
        int rhs = pi_cell(u);
        if (lhs != rhs)
            rep.add("PC2", I.two_cells[mu],
                    "pasted projection class " + num(lhs) +
                        " differs from the source projection " + num(rhs));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// representatives

bool check_represents(const ProHom& E, const Representative& rep, int f) {
    const ProObject& X = *E.src;
    const ProObject& Y = *E.tgt;
    const TwoCat& C = *X.target;
    if (f < 0 || f >= E.cat().ob_count())
        throw InputError("check_represents: no pro-morphism " + num(f));
    if (rep.i < 0 || rep.i >= X.index->ob_count() || rep.j < 0 ||
        rep.j >= Y.index->ob_count())
        throw InputError("check_represents: index object out of range");
    if (rep.r < 0 || rep.r >= C.one_count() || C.src1[rep.r] != X.ob(rep.i) ||
        C.tgt1[rep.r] != Y.ob(rep.j))
        throw InputError("check_represents: cell " + num(rep.r) +
                         " is not a 1-cell between the named values");
    const FinCat& K = E.level[rep.j].colim->cat;
    if (rep.phi < 0 || rep.phi >= K.mor_count())
        throw InputError("check_represents: witness class out of range");
    int o = E.level[rep.j].object_of(rep.i, rep.r);
    return K.src[rep.phi] == o && K.tgt[rep.phi] == E.component(f, rep.j) &&
           K.is_iso(rep.phi);
}

Representative find_representative(const ProHom& E, int f, int j) {
    if (f < 0 || f >= E.cat().ob_count())
        throw InputError("find_representative: no pro-morphism " + num(f));
    if (j < 0 || j >= E.tgt->index->ob_count())
        throw InputError("find_representative: level " + num(j) +
                         " out of range");
    int comp = E.component(f, j);
    auto [i, r] = E.level[j].pair_of(comp);
    return Representative{i, j, r, E.level[j].colim->cat.id_of[comp]};
}

bool check_represents_2cell(const ProHom& E, const TwoCellRepresentative& w,
                            int m) {
    const TwoCat& C = *E.src->target;
    const FinCat& D = E.cat();
    if (m < 0 || m >= D.mor_count())
        throw InputError("check_represents_2cell: no pro-2-cell " + num(m));
    if (w.left.i != w.right.i || w.left.j != w.right.j)
        throw InputError("check_represents_2cell: the two representatives sit "
                         "at different index objects");
    if (w.theta < 0 || w.theta >= C.two_count() ||
        C.src2[w.theta] != w.left.r || C.tgt2[w.theta] != w.right.r)
        throw InputError("check_represents_2cell: the mediating 2-cell does "
                         "not run between the representing 1-cells");
    if (!check_represents(E, w.left, D.src[m]) ||
        !check_represents(E, w.right, D.tgt[m]))
        return false;
    const HomLevel& L = E.level[w.left.j];
    const FinCat& K = L.colim->cat;
    return K.compose(w.right.phi, L.leg_class(w.left.i, w.theta)) ==
           K.compose(E.component_mor(m, w.left.j), w.left.phi);
}

TwoCellRepresentative find_representative_2cell(const ProHom& E, int m, int j) {
    const FinCat& D = E.cat();
    if (m < 0 || m >= D.mor_count())
        throw InputError("find_representative_2cell: no pro-2-cell " + num(m));
    if (j < 0 || j >= E.tgt->index->ob_count())
        throw InputError("find_representative_2cell: level " + num(j) +
                         " out of range");
    const ProObject& X = *E.src;
    const TwoCat& C = *X.target;
    const HomLevel& L = E.level[j];
    Straightened st = straighten(L, E.component_mor(m, j));
    auto [fi, r] = L.pair_of(E.component(D.src[m], j));
    auto [gi, s] = L.pair_of(E.component(D.tgt[m], j));
    (void)fi;
    (void)gi;
    TwoCellRepresentative w;
    w.left = Representative{st.k, j, C.hcompose1(r, X.one(st.u)),
                            L.transition(st.u, r)};
    w.right = Representative{st.k, j, C.hcompose1(s, X.one(st.v)),
                             L.transition(st.v, s)};
    w.theta = st.theta;
    return w;
}

// ---------------------------------------------------------------------------
// straightening and equalization

Straightened straighten(const HomLevel& L, int m) {
    const ProObject& X = *L.source;
    const TwoCat& C = *X.target;
    const TwoCat& I = *X.index;
    const FinCat& K = L.colim->cat;
    if (m < 0 || m >= K.mor_count())
        throw InputError("straighten: class " + num(m) + " out of range");
    auto [i, r] = L.pair_of(K.src[m]);
    auto [ip, s] = L.pair_of(K.tgt[m]);
    bool want_equal_shift = (i == ip);
    bool want_invertible = K.is_iso(m);

    bool found = false;
    std::tuple<int, int, int, int, int> best{};
    for (int p : L.colim->members[m]) {
        const auto& pm = L.colim->premors[p];
        int theta = L.dec[I.tgt1[pm.u]].two_of_mor[pm.r];
        if (want_equal_shift && pm.u != pm.v) continue;
        if (want_invertible && !C.is_invertible2(theta)) continue;
        int off_identity =
            (pm.u == I.id1[i] && pm.v == I.id1[ip]) ? 0 : 1;
        std::tuple<int, int, int, int, int> key{off_identity, I.tgt1[pm.u],
                                                pm.u, pm.v, theta};
        if (!found || key < best) {
            best = key;
            found = true;
        }
    }
    if (!found)
        throw Error(
            "straighten: no member of class " + num(m) +
            " satisfies the applicable restrictions; the index is not "
            "2-filtered enough");
    Straightened st{std::get<1>(best), std::get<2>(best), std::get<3>(best),
                    std::get<4>(best)};
    int lhs = K.compose(m, L.transition(st.u, r));
    int rhs = K.compose(L.transition(st.v, s), L.leg_class(st.k, st.theta));
    if (lhs != rhs)
        throw Error("straighten: extracted data fails the straightening "
                    "equation");
    return st;
}

int equalize(const ProObject& X, int i,
             const std::vector<std::pair<int, int>>& pairs) {
    const TwoCat& C = *X.target;
    const TwoCat& I = *X.index;
    if (i < 0 || i >= I.ob_count())
        throw InputError("equalize: index object " + num(i) + " out of range");
    if (pairs.empty()) throw InputError("equalize: no pairs given");
    for (auto [th, thp] : pairs) {
        if (th < 0 || th >= C.two_count() || thp < 0 || thp >= C.two_count())
            throw InputError("equalize: 2-cell out of range");
        if (C.src2[th] != C.src2[thp] || C.tgt2[th] != C.tgt2[thp])
            throw InputError("equalize: the 2-cells are not parallel");
        if (C.src1[C.src2[th]] != X.ob(i))
            throw InputError("equalize: the 2-cells do not start at the value "
                             "of index object " + num(i));
    }

    std::map<int, HomLevel> levels; // keyed by the common target object
    for (auto [th, thp] : pairs) {
        int d = C.tgt1[C.src2[th]];
        auto it = levels.find(d);
        if (it == levels.end()) it = levels.emplace(d, hom_level(X, d)).first;
        if (it->second.leg_class(i, th) != it->second.leg_class(i, thp))
            throw HypothesisFails(
                "equalize: the classes of 2-cells " + num(th) + " and " +
                num(thp) + " differ at the hom level, so no 1-cell out of "
                "index object " + num(i) + " can equalize them");
    }

    std::vector<int> order{I.id1[i]};
    for (int u = 0; u < I.one_count(); ++u)
        if (I.src1[u] == i && u != I.id1[i]) order.push_back(u);
    for (int u : order) {
        bool all = true;
        for (auto [th, thp] : pairs)
            if (C.whisker_right(th, X.one(u)) !=
                C.whisker_right(thp, X.one(u))) {
                all = false;
                break;
            }
        if (all) return u;
    }
    throw Error("equalize: the hom level identifies every pair but no single "
                "1-cell out of index object " + num(i) + " equalizes them; "
                "the index is not 2-filtered enough");
}

// ---------------------------------------------------------------------------
// the representative 2-category of one pro-morphism

MfTruncation build_Mf(const ProHom& E, int f, int bound) {
    const ProObject& X = *E.src;
    const ProObject& Y = *E.tgt;
    const TwoCat& C = *X.target;
    const TwoCat& I = *X.index;
    const TwoCat& J = *Y.index;
    if (f < 0 || f >= E.cat().ob_count())
        throw InputError("build_Mf: no pro-morphism " + num(f));
    if (bound < 0) throw InputError("build_Mf: negative bound");

    MfTruncation M;
    M.hom = &E;
    M.f = f;
    M.cells = std::make_unique<TwoCat>();
    TwoCat& T = *M.cells;

    std::map<std::tuple<int, int, int, int, int>, int> one_lookup;
    std::map<std::tuple<int, int, int, int>, int> two_lookup;

    // objects: every representative of f
    for (int j = 0; j < J.ob_count(); ++j) {
        const HomLevel& L = E.level[j];
        const FinCat& K = L.colim->cat;
        int comp = E.component(f, j);
        for (int i = 0; i < I.ob_count(); ++i)
            for (int r : C.one_hom(X.ob(i), Y.ob(j))) {
                int o = L.object_of(i, r);
                for (int phi = 0; phi < K.mor_count(); ++phi) {
                    if (K.src[phi] != o || K.tgt[phi] != comp || !K.is_iso(phi))
                        continue;
                    int ob = T.add_object("(" + I.objects[i] + "|" +
                                          J.objects[j] + "|" + C.one_cells[r] +
                                          "|#" + num(phi) + ")");
                    M.ob_data.push_back(Representative{i, j, r, phi});
                    M.one_data.push_back({I.id1[i], J.id1[j], C.id2[r]});
                    one_lookup[{ob, ob, I.id1[i], J.id1[j], C.id2[r]}] =
                        T.id1[ob];
                    M.two_data.push_back(
                        {I.id2[I.id1[i]], J.id2[J.id1[j]]});
                    two_lookup[{T.id1[ob], T.id1[ob], I.id2[I.id1[i]],
                                J.id2[J.id1[j]]}] = T.id2[T.id1[ob]];
                }
            }
    }
    if (T.ob_count() > bound)
        throw BoundTooSmall("build_Mf: " + num(T.ob_count()) +
                            " objects exceed the bound " + num(bound));

    // 1-cells: triples satisfying the defining pasting equation
    int n_ob = T.ob_count();
    for (int p = 0; p < n_ob; ++p)
        for (int q = 0; q < n_ob; ++q) {
            const Representative& P = M.ob_data[p];
            const Representative& Q = M.ob_data[q];
            const HomLevel& L = E.level[P.j];
            const FinCat& K = L.colim->cat;
            for (int u : I.one_hom(P.i, Q.i))
                for (int a : J.one_hom(P.j, Q.j)) {
                    int src_one = C.hcompose1(Y.one(a), Q.r);
                    int tgt_one = C.hcompose1(P.r, X.one(u));
                    for (int theta : C.two_hom(src_one, tgt_one)) {
                        if (!C.is_invertible2(theta)) continue;
                        int lhs = K.compose(
                            P.phi, K.compose(L.transition(u, P.r),
                                             L.leg_class(Q.i, theta)));
                        int rhs = K.compose(
                            E.coherence(f, a),
                            postcompose_class(E.level[Q.j], L, Y.one(a),
                                              Q.phi));
                        if (lhs != rhs) continue;
                        if (p == q && u == I.id1[P.i] && a == J.id1[P.j] &&
                            theta == C.id2[P.r])
                            continue; // already present as the identity
                        int c = T.add_one_cell(
                            "[" + I.one_cells[u] + "|" + J.one_cells[a] + "|" +
                                C.two_cells[theta] + "|" + num(p) + ">" +
                                num(q) + "]",
                            p, q);
                        M.one_data.push_back({u, a, theta});
                        one_lookup[{p, q, u, a, theta}] = c;
                        M.two_data.push_back({I.id2[u], J.id2[a]});
                        two_lookup[{c, c, I.id2[u], J.id2[a]}] = T.id2[c];
                    }
                }
        }
    if (T.one_count() > bound)
        throw BoundTooSmall("build_Mf: " + num(T.one_count()) +
                            " 1-cells exceed the bound " + num(bound));

    // 2-cells: pairs satisfying the exchange equation
    int n_one = T.one_count();
    for (int c = 0; c < n_one; ++c)
        for (int cp = 0; cp < n_one; ++cp) {
            if (T.src1[c] != T.src1[cp] || T.tgt1[c] != T.tgt1[cp]) continue;
            const Representative& P = M.ob_data[T.src1[c]];
            const Representative& Q = M.ob_data[T.tgt1[c]];
            const auto& dc = M.one_data[c];
            const auto& dcp = M.one_data[cp];
            for (int mu : I.two_hom(dc.u, dcp.u))
                for (int alpha : J.two_hom(dc.a, dcp.a)) {
                    int lhs = C.vcompose(
                        dcp.theta, C.whisker_right(Y.two(alpha), Q.r));
                    int rhs = C.vcompose(C.whisker_left(P.r, X.two(mu)),
                                         dc.theta);
                    if (lhs != rhs) continue;
                    if (c == cp && mu == I.id2[dc.u] && alpha == J.id2[dc.a])
                        continue; // already present as the identity
                    int w = T.add_two_cell(
                        "{" + I.two_cells[mu] + "|" + J.two_cells[alpha] +
                            "|" + num(c) + ">" + num(cp) + "}",
                        c, cp);
                    M.two_data.push_back({mu, alpha});
                    two_lookup[{c, cp, mu, alpha}] = w;
                }
        }
    if (T.two_count() > bound)
        throw BoundTooSmall("build_Mf: " + num(T.two_count()) +
                            " 2-cells exceed the bound " + num(bound));

    // composition tables, looked up against the enumeration
    auto find_one = [&](int sp, int tq, int u, int a, int theta) {
        auto it = one_lookup.find({sp, tq, u, a, theta});
        if (it == one_lookup.end())
            throw Error("build_Mf: composite 1-cell witness is not in the "
                        "enumeration");
        return it->second;
    };
    auto find_two = [&](int sc, int tc, int mu, int alpha) {
        auto it = two_lookup.find({sc, tc, mu, alpha});
        if (it == two_lookup.end())
            throw Error("build_Mf: composite 2-cell witness is not in the "
                        "enumeration");
        return it->second;
    };
    for (int p = 0; p < T.one_count(); ++p)
        for (int q = 0; q < T.one_count(); ++q) {
            if (!T.composable1(q, p)) continue;
            const auto& dp = M.one_data[p];
            const auto& dq = M.one_data[q];
            int theta = C.vcompose(C.whisker_right(dp.theta, X.one(dq.u)),
                                   C.whisker_left(Y.one(dp.a), dq.theta));
            T.set_hcomp1(q, p,
                         find_one(T.src1[p], T.tgt1[q],
                                  I.hcompose1(dq.u, dp.u),
                                  J.hcompose1(dq.a, dp.a), theta));
        }
    for (int x = 0; x < T.two_count(); ++x)
        for (int y = 0; y < T.two_count(); ++y) {
            if (T.vcomposable(y, x)) {
                const auto& dx = M.two_data[x];
                const auto& dy = M.two_data[y];
                T.set_vcomp(y, x,
                            find_two(T.src2[x], T.tgt2[y],
                                     I.vcompose(dy.mu, dx.mu),
                                     J.vcompose(dy.alpha, dx.alpha)));
            }
            if (T.hcomposable(y, x)) {
                const auto& dx = M.two_data[x];
                const auto& dy = M.two_data[y];
                T.set_hcomp2(y, x,
                             find_two(T.hcomp1[T.src2[y]][T.src2[x]],
                                      T.hcomp1[T.tgt2[y]][T.tgt2[x]],
                                      I.hcompose2(dy.mu, dx.mu),
                                      J.hcompose2(dy.alpha, dx.alpha)));
            }
        }
    validate_twocat(T).expect_ok("representative 2-category");

    std::vector<int> ob_i(T.ob_count()), ob_j(T.ob_count());
    for (int o = 0; o < T.ob_count(); ++o) {
        ob_i[o] = M.ob_data[o].i;
        ob_j[o] = M.ob_data[o].j;
    }
    std::vector<int> one_i(T.one_count()), one_j(T.one_count());
    for (int c = 0; c < T.one_count(); ++c) {
        one_i[c] = M.one_data[c].u;
        one_j[c] = M.one_data[c].a;
    }
    std::vector<int> two_i(T.two_count()), two_j(T.two_count());
    for (int w = 0; w < T.two_count(); ++w) {
        two_i[w] = M.two_data[w].mu;
        two_j[w] = M.two_data[w].alpha;
    }
    M.to_source_index = make_strict(T, I, ob_i, one_i, two_i);
    validate_pseudofunctor(M.to_source_index)
        .expect_ok("projection to the source index");
    M.to_target_index = make_strict(T, J, ob_j, one_j, two_j);
    validate_pseudofunctor(M.to_target_index)
        .expect_ok("projection to the target index");

    M.filtered = check_2filtered(T);
    M.source_cofinal = check_2cofinal(M.to_source_index);
    M.target_cofinal = check_2cofinal(M.to_target_index);
    return M;
}

// ---------------------------------------------------------------------------
// strict diagrams of pro-objects

const ProHom& ProDiagram::hom_of(int a) const {
    const TwoCat& J = *index;
    if (a < 0 || a >= J.one_count())
        throw UnknownCell("pro-diagram: 1-cell " + num(a) + " out of range");
    return *hom[J.src1[a]][J.tgt1[a]];
}

int ProDiagram::two_of(int alpha) const {
    const TwoCat& J = *index;
    if (alpha < 0 || alpha >= J.two_count())
        throw UnknownCell("pro-diagram: 2-cell " + num(alpha) +
                          " out of range");
    int a = J.src2[alpha];
    if (alpha == J.id2[a]) return hom_of(a).cat().id_of[one[a]];
    return two[alpha];
}

ProDiagram init_pro_diagram(const TwoCat& J, std::vector<ProObject> value) {
    if (value.empty()) throw InputError("init_pro_diagram: empty diagram");
    if (static_cast<int>(value.size()) != J.ob_count())
        throw InputError("init_pro_diagram: one pro-object per index object "
                         "required");
    for (const auto& X : value)
        if (X.target != value[0].target)
            throw InputError("init_pro_diagram: the pro-objects map into "
                             "different targets");
    ProDiagram D;
    D.index = &J;
    D.target = value[0].target;
    D.value = std::move(value);
    int n = J.ob_count();
    D.hom.resize(n);
    for (int j = 0; j < n; ++j) {
        D.hom[j].resize(n);
        for (int jp = 0; jp < n; ++jp)
            D.hom[j][jp] =
                std::make_unique<ProHom>(pro_hom(D.value[jp], D.value[j]));
    }
    D.one.assign(J.one_count(), -1);
    D.two.assign(J.two_count(), -1);
    for (int j = 0; j < n; ++j)
        D.one[J.id1[j]] = identity_prohom(*D.hom[j][j]);
    return D;
}

ProDiagram constant_pro_diagram(const TwoCat& J, const ProObject& X) {
    std::vector<ProObject> vals;
    vals.reserve(J.ob_count());
    for (int j = 0; j < J.ob_count(); ++j) vals.push_back(clone_pro_object(X));
    ProDiagram D = init_pro_diagram(J, std::move(vals));
    for (int a = 0; a < J.one_count(); ++a)
        D.one[a] = identity_prohom(*D.hom[J.src1[a]][J.tgt1[a]]);
    for (int alpha = 0; alpha < J.two_count(); ++alpha) {
        int a = J.src2[alpha];
        if (alpha == J.id2[a]) continue;
        D.two[alpha] = D.hom_of(a).cat().id_of[D.one[a]];
    }
    return D;
}

ValidationReport validate_pro_diagram(const ProDiagram& D) {
    ValidationReport rep;
    const TwoCat& J = *D.index;
    for (int a = 0; a < J.one_count(); ++a)
        if (D.one[a] < 0 || D.one[a] >= D.hom_of(a).cat().ob_count())
            rep.add("pd-one", J.one_cells[a],
                    "transition pro-morphism unset or out of range");
    if (!rep.ok()) return rep;

    for (int j = 0; j < J.ob_count(); ++j)
        if (D.one[J.id1[j]] != identity_prohom(*D.hom[j][j]))
            rep.add("pd-identity", J.objects[j],
                    "identity transition is not the canonical identity "
                    "pro-morphism");
    for (int alpha = 0; alpha < J.two_count(); ++alpha) {
        int a = J.src2[alpha], b = J.tgt2[alpha];
        if (alpha == J.id2[a]) continue;
        const FinCat& K = D.hom_of(a).cat();
        int m = D.two[alpha];
        if (m < 0 || m >= K.mor_count()) {
            rep.add("pd-two", J.two_cells[alpha],
                    "transition pro-2-cell unset or out of range");
            continue;
        }
        if (K.src[m] != D.one[a] || K.tgt[m] != D.one[b])
            rep.add("pd-two", J.two_cells[alpha],
                    "transition pro-2-cell does not run between the named "
                    "transitions");
    }
    if (!rep.ok()) return rep;

    for (int alpha = 0; alpha < J.two_count(); ++alpha)
        for (int beta = 0; beta < J.two_count(); ++beta) {
            if (!J.vcomposable(beta, alpha)) continue;
            const FinCat& K = D.hom_of(J.src2[alpha]).cat();
            int want = K.compose(D.two_of(beta), D.two_of(alpha));
            if (D.two_of(J.vcompose(beta, alpha)) != want)
                rep.add("pd-two-vertical",
                        J.two_cells[beta] + " . " + J.two_cells[alpha],
                        "vertical composite transition differs from the "
                        "composite of transitions");
        }

    for (int a = 0; a < J.one_count(); ++a)
        for (int ap = 0; ap < J.one_count(); ++ap) {
            if (!J.composable1(ap, a)) continue;
            int j = J.src1[a], jp = J.tgt1[a], jpp = J.tgt1[ap];
            int aa = J.hcompose1(ap, a);
            const ProHom& Ha = *D.hom[j][jp];
            const ProHom& Hpp = *D.hom[j][jpp];
            const TwoCat& Ij = *D.value[j].index;
            for (int i = 0; i < Ij.ob_count(); ++i) {
                int got = precompose_object(Ha.level[i], Hpp.level[i],
                                            *D.hom[jp][jpp], D.one[ap],
                                            Ha.component(D.one[a], i));
                if (got != Hpp.component(D.one[aa], i))
                    rep.add("pd-compose",
                            J.one_cells[ap] + " . " + J.one_cells[a] +
                                " at level " + num(i),
                            "precomposed transition lands off the composite "
                            "transition's component");
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------
// the glued index of a diagram of pro-objects

KXTruncation build_KX(const ProDiagram& D, int bound) {
    {
        ValidationReport vr = validate_pro_diagram(D);
        if (!vr.ok())
            throw InputError("build_KX: the diagram does not validate:\n" +
                             vr.to_string());
    }
    if (bound < 0) throw InputError("build_KX: negative bound");
    const TwoCat& J = *D.index;
    const TwoCat& C = *D.target;

    KXTruncation KX;
    KX.diagram = &D;
    KX.cells = std::make_unique<TwoCat>();
    TwoCat& T = *KX.cells;

    std::map<std::tuple<int, int, int, int, int>, int> one_lookup;
    std::map<std::tuple<int, int, int, int>, int> two_lookup;

    // 0-cells
    for (int j = 0; j < J.ob_count(); ++j) {
        const TwoCat& Ij = *D.value[j].index;
        for (int i = 0; i < Ij.ob_count(); ++i) {
            const ProHom& H = *D.hom[j][j];
            int comp = H.component(D.one[J.id1[j]], i);
            int idr = C.id1[D.value[j].ob(i)];
            int idphi = H.level[i].colim->cat.id_of[comp];
            int ob = T.add_object("(" + Ij.objects[i] + "|" + J.objects[j] +
                                  ")");
            KX.ob_data.push_back({i, j});
            KX.one_data.push_back({J.id1[j], idr, idphi});
            one_lookup[{ob, ob, J.id1[j], idr, idphi}] = T.id1[ob];
            KX.two_data.push_back({J.id2[J.id1[j]], C.id2[idr]});
            two_lookup[{T.id1[ob], T.id1[ob], J.id2[J.id1[j]], C.id2[idr]}] =
                T.id2[T.id1[ob]];
        }
    }
    if (T.ob_count() > bound)
        throw BoundTooSmall("build_KX: " + num(T.ob_count()) +
                            " 0-cells exceed the bound " + num(bound));

    // 1-cells
    int n_ob = T.ob_count();
    for (int p = 0; p < n_ob; ++p)
        for (int q = 0; q < n_ob; ++q) {
            auto [i, j] = KX.ob_data[p];
            auto [ip, jp] = KX.ob_data[q];
            for (int a : J.one_hom(j, jp)) {
                const ProHom& H = *D.hom[j][jp];
                const HomLevel& L = H.level[i];
                const FinCat& K = L.colim->cat;
                int comp = H.component(D.one[a], i);
                for (int r : C.one_hom(D.value[jp].ob(ip), D.value[j].ob(i))) {
                    int o = L.object_of(ip, r);
                    for (int phi = 0; phi < K.mor_count(); ++phi) {
                        if (K.src[phi] != o || K.tgt[phi] != comp ||
                            !K.is_iso(phi))
                            continue;
                        if (p == q && a == J.id1[j] &&
                            r == C.id1[D.value[j].ob(i)] &&
                            phi == K.id_of[comp])
                            continue; // already present as the identity
                        int c = T.add_one_cell(
                            "[" + J.one_cells[a] + "|" + C.one_cells[r] +
                                "|#" + num(phi) + "|" + num(p) + ">" + num(q) +
                                "]",
                            p, q);
                        KX.one_data.push_back({a, r, phi});
                        one_lookup[{p, q, a, r, phi}] = c;
                        KX.two_data.push_back({J.id2[a], C.id2[r]});
                        two_lookup[{c, c, J.id2[a], C.id2[r]}] = T.id2[c];
                    }
                }
            }
        }
    if (T.one_count() > bound)
        throw BoundTooSmall("build_KX: " + num(T.one_count()) +
                            " 1-cells exceed the bound " + num(bound));

    // 2-cells
    int n_one = T.one_count();
    for (int c = 0; c < n_one; ++c)
        for (int cp = 0; cp < n_one; ++cp) {
            if (T.src1[c] != T.src1[cp] || T.tgt1[c] != T.tgt1[cp]) continue;
            auto [i, j] = KX.ob_data[T.src1[c]];
            auto [ip, jp] = KX.ob_data[T.tgt1[c]];
            const auto& dc = KX.one_data[c];
            const auto& dcp = KX.one_data[cp];
            const ProHom& H = *D.hom[j][jp];
            const HomLevel& L = H.level[i];
            const FinCat& K = L.colim->cat;
            for (int alpha : J.two_hom(dc.a, dcp.a))
                for (int theta : C.two_hom(dc.r, dcp.r)) {
                    int lhs = K.compose(dcp.phi, L.leg_class(ip, theta));
                    int rhs = K.compose(
                        H.component_mor(D.two_of(alpha), i), dc.phi);
                    if (lhs != rhs) continue;
                    if (c == cp && alpha == J.id2[dc.a] &&
                        theta == C.id2[dc.r])
                        continue; // already present as the identity
                    int w = T.add_two_cell(
                        "{" + J.two_cells[alpha] + "|" + C.two_cells[theta] +
                            "|" + num(c) + ">" + num(cp) + "}",
                        c, cp);
                    KX.two_data.push_back({alpha, theta});
                    two_lookup[{c, cp, alpha, theta}] = w;
                }
        }
    if (T.two_count() > bound)
        throw BoundTooSmall("build_KX: " + num(T.two_count()) +
                            " 2-cells exceed the bound " + num(bound));

    // composition tables
    auto find_one = [&](int sp, int tq, int a, int r, int phi) {
        auto it = one_lookup.find({sp, tq, a, r, phi});
        if (it == one_lookup.end())
            throw Error("build_KX: composite 1-cell witness is not in the "
                        "enumeration; the transition tables are not strictly "
                        "functorial");
        return it->second;
    };
    auto find_two = [&](int sc, int tc, int alpha, int theta) {
        auto it = two_lookup.find({sc, tc, alpha, theta});
        if (it == two_lookup.end())
            throw Error("build_KX: composite 2-cell witness is not in the "
                        "enumeration");
        return it->second;
    };
    for (int p = 0; p < T.one_count(); ++p)
        for (int q = 0; q < T.one_count(); ++q) {
            if (!T.composable1(q, p)) continue;
            auto [i, j] = KX.ob_data[T.src1[p]];
            int jp = KX.ob_data[T.tgt1[p]].second;
            int jpp = KX.ob_data[T.tgt1[q]].second;
            int ipmid = KX.ob_data[T.tgt1[p]].first;
            const auto& dp = KX.one_data[p];
            const auto& dq = KX.one_data[q];
            int left = precompose_class(D.hom[j][jp]->level[i],
                                        D.hom[j][jpp]->level[i],
                                        *D.hom[jp][jpp], D.one[dq.a], dp.phi);
            int right = postcompose_class(D.hom[jp][jpp]->level[ipmid],
                                          D.hom[j][jpp]->level[i], dp.r,
                                          dq.phi);
            int phi = D.hom[j][jpp]->level[i].colim->cat.compose(left, right);
            T.set_hcomp1(q, p,
                         find_one(T.src1[p], T.tgt1[q],
                                  J.hcompose1(dq.a, dp.a),
                                  C.hcompose1(dp.r, dq.r), phi));
        }
    for (int x = 0; x < T.two_count(); ++x)
        for (int y = 0; y < T.two_count(); ++y) {
            if (T.vcomposable(y, x)) {
                const auto& dx = KX.two_data[x];
                const auto& dy = KX.two_data[y];
                T.set_vcomp(y, x,
                            find_two(T.src2[x], T.tgt2[y],
                                     J.vcompose(dy.alpha, dx.alpha),
                                     C.vcompose(dy.theta, dx.theta)));
            }
            if (T.hcomposable(y, x)) {
                // the target 1-cell parts compose the other way around, so
                // the inner 2-cell is juxtaposed as the outer factor in C
                const auto& dx = KX.two_data[x];
                const auto& dy = KX.two_data[y];
                T.set_hcomp2(y, x,
                             find_two(T.hcomp1[T.src2[y]][T.src2[x]],
                                      T.hcomp1[T.tgt2[y]][T.tgt2[x]],
                                      J.hcompose2(dy.alpha, dx.alpha),
                                      C.hcompose2(dx.theta, dy.theta)));
            }
        }
    validate_twocat(T).expect_ok("glued diagram index");

    std::vector<int> ob_j(T.ob_count()), one_a(T.one_count()),
        two_alpha(T.two_count());
    for (int o = 0; o < T.ob_count(); ++o) ob_j[o] = KX.ob_data[o].second;
    for (int c = 0; c < T.one_count(); ++c) one_a[c] = KX.one_data[c].a;
    for (int w = 0; w < T.two_count(); ++w) two_alpha[w] = KX.two_data[w].alpha;
    KX.to_outer_index = make_strict(T, J, ob_j, one_a, two_alpha);
    validate_pseudofunctor(KX.to_outer_index)
        .expect_ok("projection to the outer index");

    std::vector<int> tot_ob(T.ob_count()), tot_one(T.one_count()),
        tot_two(T.two_count());
    for (int o = 0; o < T.ob_count(); ++o)
        tot_ob[o] = D.value[KX.ob_data[o].second].ob(KX.ob_data[o].first);
    for (int c = 0; c < T.one_count(); ++c) tot_one[c] = KX.one_data[c].r;
    for (int w = 0; w < T.two_count(); ++w) tot_two[w] = KX.two_data[w].theta;
    KX.total = make_pro_object(T, C, tot_ob, tot_one, tot_two);

    KX.filtered = check_2filtered(T);
    return KX;
}

// ---------------------------------------------------------------------------
// reindexing along a 2-cofinal functor

bool ReindexResult::equivalent() const {
    for (const auto& c : certificate)
        if (!c.verdict.ok) return false;
    return true;
}

ReindexResult reindex_pro(const ProObject& X, const PseudoFunctor& F) {
    if (F.cod != X.index)
        throw InputError("reindex_pro: the functor does not land in the "
                         "pro-object's index");
    if (!validate_pseudofunctor(F).ok())
        throw InputError("reindex_pro: the reindexing functor does not "
                         "validate");
    if (!F.is_strict())
        throw InputError("reindex_pro: the reindexing functor must be strict");
    if (!check_2filtered(*F.dom).ok())
        throw InputError("reindex_pro: the new index is not 2-filtered");
    if (!check_2cofinal(F).ok())
        throw InputError("reindex_pro: the reindexing functor is not "
                         "2-cofinal");
    validate_pro_object(X).expect_ok("reindex_pro input");

    const TwoCat& Ip = *F.dom;
    const TwoCat& C = *X.target;
    std::vector<int> ob(Ip.ob_count()), one(Ip.one_count()),
        two(Ip.two_count());
    for (int i = 0; i < Ip.ob_count(); ++i) ob[i] = X.ob(F.ob[i]);
    for (int u = 0; u < Ip.one_count(); ++u) one[u] = X.one(F.one[u]);
    for (int mu = 0; mu < Ip.two_count(); ++mu) two[mu] = X.two(F.two[mu]);

    ReindexResult R;
    R.object = make_pro_object(Ip, C, std::move(ob), std::move(one),
                               std::move(two));
    R.certificate.reserve(C.ob_count());
    for (int d = 0; d < C.ob_count(); ++d) {
        ReindexCertificate cert;
        cert.target_ob = d;
        cert.original = hom_level(X, d);
        cert.restricted = std::make_unique<Cat2Functor>(
            reindex_cat2(*cert.original.diagram, F));
        cert.restricted_colim =
            std::make_unique<LLColimit>(ll_colimit(*cert.restricted));
        cert.comparison = comparison_functor(*cert.restricted_colim,
                                             *cert.original.colim, F);
        cert.verdict = explain_equivalence(cert.comparison);
        R.certificate.push_back(std::move(cert));
    }
    return R;
}

} // namespace twocat

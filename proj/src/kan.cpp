#include "twocat/kan.hpp"

#include <map>

namespace twocat {

ValidationReport validate_cat2functor(const Cat2Functor& F) {
    ValidationReport rep;
    const TwoCat& I = *F.dom;
    if (static_cast<int>(F.value.size()) != I.ob_count() ||
        static_cast<int>(F.fmap.size()) != I.one_count() ||
        static_cast<int>(F.nmap.size()) != I.two_count()) {
        rep.add("shape", "tables", "value table sizes differ from index");
        return rep;
    }
    for (int i = 0; i < I.ob_count(); ++i)
        rep.merge(validate_fincat(*F.value[i]), "value " + I.objects[i] + ": ");
    for (int u = 0; u < I.one_count(); ++u) {
        const CatFunctor& f = F.fmap[u];
        if (f.dom != F.value[I.src1[u]].get() ||
            f.cod != F.value[I.tgt1[u]].get()) {
            rep.add("fmap-endpoints", I.one_cells[u],
                    "functor does not run between the boundary categories");
            continue;
        }
        rep.merge(validate_functor(f), "fmap " + I.one_cells[u] + ": ");
    }
    if (!rep.ok()) return rep;

    for (int x = 0; x < I.ob_count(); ++x) {
        CatFunctor id = identity_functor(*F.value[x]);
        if (F.fmap[I.id1[x]].ob != id.ob || F.fmap[I.id1[x]].mor != id.mor)
            rep.add("fmap-identity", I.objects[x],
                    "identity 1-cell does not map to the identity functor");
    }
    for (int g = 0; g < I.one_count(); ++g)
        for (int f = 0; f < I.one_count(); ++f) {
            if (!I.composable1(g, f)) continue;
            CatFunctor gf = compose_functor(F.fmap[g], F.fmap[f]);
            const CatFunctor& got = F.fmap[I.hcomp1[g][f]];
            if (got.ob != gf.ob || got.mor != gf.mor)
                rep.add("fmap-composition", I.one_cells[g] + "∘" + I.one_cells[f],
                        "value on the composite differs from the composite of values");
        }

    for (int a = 0; a < I.two_count(); ++a) {
        NatTrans t{&F.fmap[I.src2[a]], &F.fmap[I.tgt2[a]], F.nmap[a]};
        rep.merge(validate_nattrans(t), "nmap " + I.two_cells[a] + ": ");
    }
    if (!rep.ok()) return rep;
    for (int f = 0; f < I.one_count(); ++f) {
        const FinCat& cod = *F.value[I.tgt1[f]];
        for (size_t x = 0; x < F.nmap[I.id2[f]].size(); ++x)
            if (F.nmap[I.id2[f]][x] != cod.id_of[F.fmap[f].ob[x]]) {
                rep.add("nmap-identity", I.one_cells[f],
                        "identity 2-cell has a non-identity component");
                break;
            }
    }
    for (int b = 0; b < I.two_count(); ++b)
        for (int a = 0; a < I.two_count(); ++a) {
            if (I.vcomposable(b, a)) {
                const FinCat& cod = *F.value[I.tgt1[I.src2[a]]];
                const auto& got = F.nmap[I.vcomp[b][a]];
                for (size_t x = 0; x < got.size(); ++x)
                    if (got[x] != cod.comp[F.nmap[b][x]][F.nmap[a][x]]) {
                        rep.add("nmap-vertical",
                                I.two_cells[b] + "∘" + I.two_cells[a],
                                "stacked value differs at component " +
                                    std::to_string(x));
                        break;
                    }
            }
            if (I.hcomposable(b, a)) {
                const CatFunctor& inner = F.fmap[I.src2[a]];
                const CatFunctor& outerp = F.fmap[I.tgt2[b]];
                const FinCat& cod = *F.value[I.tgt1[I.src2[b]]];
                const auto& got = F.nmap[I.hcomp2[b][a]];
                for (size_t x = 0; x < got.size(); ++x) {
                    int want = cod.comp[outerp.mor[F.nmap[a][x]]]
                                       [F.nmap[b][inner.ob[x]]];
                    if (got[x] != want) {
                        rep.add("nmap-horizontal",
                                I.two_cells[b] + " " + I.two_cells[a],
                                "juxtaposed value differs at component " +
                                    std::to_string(x));
                        break;
                    }
                }
            }
        }
    return rep;
}

Cat2Functor reindex_cat2(const Cat2Functor& G, const PseudoFunctor& R) {
    if (R.cod != G.dom)
        throw NotComposable("reindex_cat2: index map does not land in the diagram index");
    if (!R.is_strict())
        throw Error("reindex_cat2: index map must be strict");
    const TwoCat& J = *R.dom;
    Cat2Functor out;
    out.dom = &J;
    out.value.reserve(J.ob_count());
    for (int j = 0; j < J.ob_count(); ++j)
        out.value.push_back(std::make_unique<FinCat>(*G.value[R.ob[j]]));
    out.fmap.reserve(J.one_count());
    for (int u = 0; u < J.one_count(); ++u) {
        CatFunctor f = G.fmap[R.one[u]];
        f.dom = out.value[J.src1[u]].get();
        f.cod = out.value[J.tgt1[u]].get();
        out.fmap.push_back(std::move(f));
    }
    out.nmap.reserve(J.two_count());
    for (int a = 0; a < J.two_count(); ++a) out.nmap.push_back(G.nmap[R.two[a]]);
    return out;
}

namespace {

/// First object receiving 1-cells from both k1 and k2, with the first such
/// pair of 1-cells (deterministic refinement data).
std::pair<int, int> find_cospan(const TwoCat& I, int k1, int k2) {
    for (int k = 0; k < I.ob_count(); ++k) {
        auto w1 = I.one_hom(k1, k);
        auto w2 = I.one_hom(k2, k);
        if (!w1.empty() && !w2.empty()) return {w1[0], w2[0]};
    }
    throw Error("no cospan over " + I.objects[k1] + ", " + I.objects[k2] +
                ": the index is not 2-filtered");
}

/// First 1-cell h out of the common target of parallel a, b together with
/// an invertible 2-cell  h a => h b.
std::pair<int, int> find_inverter(const TwoCat& I, int a, int b) {
    for (int h = 0; h < I.one_count(); ++h) {
        if (I.src1[h] != I.tgt1[a]) continue;
        int ha = I.hcomp1[h][a], hb = I.hcomp1[h][b];
        for (int eta : I.two_hom(ha, hb))
            if (I.is_invertible2(eta)) return {h, eta};
    }
    throw Error("no invertible 2-cell equates " + I.one_cells[a] + " and " +
                I.one_cells[b] + " after a shift: the index is not 2-filtered");
}

bool direct_homotopy(const Cat2Functor& F, const LLColimit& L, int pi, int qi) {
    const auto& p = L.premors[pi];
    const auto& q = L.premors[qi];
    if (p.src_ob != q.src_ob || p.tgt_ob != q.tgt_ob) return false;
    const TwoCat& I = *F.dom;
    int C = L.ob_pair[p.src_ob].second;
    int D = L.ob_pair[p.tgt_ob].second;
    int k1 = I.tgt1[p.u], k2 = I.tgt1[q.u];
    for (int w1 = 0; w1 < I.one_count(); ++w1) {
        if (I.src1[w1] != k1) continue;
        for (int w2 = 0; w2 < I.one_count(); ++w2) {
            if (I.src1[w2] != k2 || I.tgt1[w2] != I.tgt1[w1]) continue;
            const FinCat& Fk = *F.value[I.tgt1[w1]];
            int w1v1 = I.hcomp1[w1][p.v], w2v2 = I.hcomp1[w2][q.v];
            int w1u1 = I.hcomp1[w1][p.u], w2u2 = I.hcomp1[w2][q.u];
            int fr1 = F.fmap[w1].mor[p.r];
            int fr2 = F.fmap[w2].mor[q.r];
            for (int alpha : I.two_hom(w1v1, w2v2)) {
                if (!I.is_invertible2(alpha)) continue;
                int lhs = Fk.comp[F.nmap[alpha][D]][fr1];
                for (int beta : I.two_hom(w1u1, w2u2)) {
                    if (!I.is_invertible2(beta)) continue;
                    if (lhs == Fk.comp[fr2][F.nmap[beta][C]]) return true;
                }
            }
        }
    }
    return false;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// Composite premorphism of p then q via the canonical refinement; the
/// middle object of the pair must match.
LLColimit::Premorphism compose_premor(const Cat2Functor& F, const LLColimit& L,
                                      const LLColimit::Premorphism& p,
                                      const LLColimit::Premorphism& q) {
    const TwoCat& I = *F.dom;
    int D = L.ob_pair[p.tgt_ob].second;
    auto [w, wp] = find_cospan(I, I.tgt1[p.u], I.tgt1[q.u]);
    int a = I.hcompose1(w, p.v);
    int b = I.hcompose1(wp, q.u);
    auto [h, eta] = find_inverter(I, a, b);
    int hw = I.hcompose1(h, w), hwp = I.hcompose1(h, wp);
    int u2 = I.hcompose1(hw, p.u);
    int v2 = I.hcompose1(hwp, q.v);
    const FinCat& Fk = *F.value[I.tgt1[h]];
    int step1 = Fk.compose(F.nmap[eta][D], F.fmap[hw].mor[p.r]);
    int r2 = Fk.compose(F.fmap[hwp].mor[q.r], step1);
    return {p.src_ob, q.tgt_ob, u2, v2, r2};
}

} // namespace

int LLColimit::classify(int src_ob, int tgt_ob, int u, int r, int v) const {
    for (size_t p = 0; p < premors.size(); ++p) {
        const auto& m = premors[p];
        if (m.src_ob == src_ob && m.tgt_ob == tgt_ob && m.u == u && m.v == v &&
            m.r == r)
            return class_of[p];
    }
    throw UnknownCell("classify: no such premorphism was enumerated");
}

bool LLColimit::homotopic(int p, int q) const {
    return direct_homotopy(*diagram, *this, p, q);
}

CatFunctor LLColimit::leg(int i) const {
    const Cat2Functor& F = *diagram;
    const TwoCat& I = *F.dom;
    const FinCat& Fi = *F.value[i];
    CatFunctor lam;
    lam.dom = &Fi;
    lam.cod = &cat;
    lam.ob.resize(Fi.ob_count());
    lam.mor.resize(Fi.mor_count());
    for (int C = 0; C < Fi.ob_count(); ++C) lam.ob[C] = ob_index[i][C];
    for (int r = 0; r < Fi.mor_count(); ++r)
        lam.mor[r] = classify(ob_index[i][Fi.src[r]], ob_index[i][Fi.tgt[r]],
                              I.id1[i], r, I.id1[i]);
    return lam;
}

std::vector<int> LLColimit::leg_nat(int u) const {
    const Cat2Functor& F = *diagram;
    const TwoCat& I = *F.dom;
    int i = I.src1[u], j = I.tgt1[u];
    const FinCat& Fi = *F.value[i];
    const FinCat& Fj = *F.value[j];
    std::vector<int> out(Fi.ob_count());
    for (int C = 0; C < Fi.ob_count(); ++C) {
        int FC = F.fmap[u].ob[C];
        out[C] = classify(ob_index[i][C], ob_index[j][FC], u, Fj.id_of[FC],
                          I.id1[j]);
    }
    return out;
}

LLColimit ll_colimit(const Cat2Functor& F) {
    validate_cat2functor(F).expect_ok("colimit diagram");
    const TwoCat& I = *F.dom;
    if (I.ob_count() == 0) throw Error("colimit of an empty index");

    LLColimit L;
    L.diagram = &F;
    L.ob_index.assign(I.ob_count(), {});
    for (int i = 0; i < I.ob_count(); ++i) {
        const FinCat& Fi = *F.value[i];
        L.ob_index[i].resize(Fi.ob_count());
        for (int C = 0; C < Fi.ob_count(); ++C) {
            L.ob_index[i][C] = static_cast<int>(L.ob_pair.size());
            L.ob_pair.push_back({i, C});
            L.cat.objects.push_back(Fi.objects[C] + "@" + I.objects[i]);
        }
    }
    int nob = static_cast<int>(L.ob_pair.size());

    for (int s = 0; s < nob; ++s)
        for (int t = 0; t < nob; ++t) {
            auto [i, C] = L.ob_pair[s];
            auto [j, D] = L.ob_pair[t];
            for (int u = 0; u < I.one_count(); ++u) {
                if (I.src1[u] != i) continue;
                for (int v = 0; v < I.one_count(); ++v) {
                    if (I.src1[v] != j || I.tgt1[v] != I.tgt1[u]) continue;
                    const FinCat& Fk = *F.value[I.tgt1[u]];
                    for (int r :
                         Fk.hom(F.fmap[u].ob[C], F.fmap[v].ob[D]))
                        L.premors.push_back({s, t, u, v, r});
                }
            }
        }
    int np = static_cast<int>(L.premors.size());

    // Direct homotopy relation, bucketed by endpoints.
    std::vector<std::vector<int>> bucket(nob * nob);
    for (int p = 0; p < np; ++p)
        bucket[L.premors[p].src_ob * nob + L.premors[p].tgt_ob].push_back(p);
    UnionFind uf(np);
    std::map<std::pair<int, int>, bool> direct;
    for (const auto& b : bucket)
        for (size_t x = 0; x < b.size(); ++x)
            for (size_t y = x + 1; y < b.size(); ++y) {
                bool d = direct_homotopy(F, L, b[x], b[y]);
                bool dr = direct_homotopy(F, L, b[y], b[x]);
                if (d != dr)
                    throw HomotopyNotEquivalence(
                        "homotopy relation is not symmetric between "
                        "premorphisms " + std::to_string(b[x]) + " and " +
                        std::to_string(b[y]));
                direct[{b[x], b[y]}] = d;
                if (d) uf.unite(b[x], b[y]);
            }
    for (const auto& b : bucket)
        for (size_t x = 0; x < b.size(); ++x)
            for (size_t y = x + 1; y < b.size(); ++y)
                if (uf.find(b[x]) == uf.find(b[y]) && !direct[{b[x], b[y]}])
                    throw HomotopyNotEquivalence(
                        "homotopy relation is not transitive: premorphisms " +
                        std::to_string(b[x]) + " and " + std::to_string(b[y]) +
                        " are related only through intermediaries");

    // Classes in order of their smallest member.
    L.class_of.assign(np, -1);
    for (int p = 0; p < np; ++p) {
        int root = uf.find(p);
        if (L.class_of[root] < 0) {
            int cls = static_cast<int>(L.members.size());
            L.class_of[root] = cls;
            L.members.push_back({});
            const auto& m = L.premors[p];
            std::string name = "[" + I.one_cells[m.u] + "|" +
                               F.value[I.tgt1[m.u]]->morphisms[m.r] + "|" +
                               I.one_cells[m.v] + "]";
            for (const auto& other : L.cat.morphisms)
                if (other == name) {
                    name += "#" + std::to_string(cls);
                    break;
                }
            L.cat.morphisms.push_back(name);
            L.cat.src.push_back(m.src_ob);
            L.cat.tgt.push_back(m.tgt_ob);
        }
        L.class_of[p] = L.class_of[root];
        L.members[L.class_of[p]].push_back(p);
    }
    int nm = static_cast<int>(L.members.size());

    L.cat.id_of.resize(nob);
    for (int s = 0; s < nob; ++s) {
        auto [i, C] = L.ob_pair[s];
        L.cat.id_of[s] =
            L.classify(s, s, I.id1[i], F.value[i]->id_of[C], I.id1[i]);
    }

    L.cat.comp.assign(nm, std::vector<int>(nm, -1));
    for (int m1 = 0; m1 < nm; ++m1)
        for (int m2 = 0; m2 < nm; ++m2) {
            // m2 after m1
            int mid = L.cat.tgt[m1];
            if (L.cat.src[m2] != mid) continue;
            int result = -1;
            for (int p : L.members[m1])
                for (int q : L.members[m2]) {
                    auto comp =
                        compose_premor(F, L, L.premors[p], L.premors[q]);
                    int cls = L.classify(comp.src_ob, comp.tgt_ob, comp.u,
                                         comp.r, comp.v);
                    if (result < 0)
                        result = cls;
                    else if (result != cls)
                        throw HomotopyNotEquivalence(
                            "composition of classes depends on the chosen "
                            "representatives for " + L.cat.morphisms[m2] +
                            " after " + L.cat.morphisms[m1]);
                }
            L.cat.comp[m2][m1] = result;
        }

    validate_fincat(L.cat).expect_ok("colimit category");
    return L;
}

ValidationReport check_conjugation(const LLColimit& L) {
    ValidationReport rep;
    const Cat2Functor& F = *L.diagram;
    const TwoCat& I = *F.dom;
    for (int m = 0; m < L.cat.mor_count(); ++m) {
        const auto& p = L.premors[L.members[m][0]];
        auto [i, C] = L.ob_pair[p.src_ob];
        auto [j, D] = L.ob_pair[p.tgt_ob];
        (void)i;
        (void)j;
        int k = I.tgt1[p.u];
        int lu = L.leg_nat(p.u)[C];
        int lv = L.leg_nat(p.v)[D];
        int lkr = L.leg(k).mor[p.r];
        int lv_inv = L.cat.inverse(lv);
        if (lv_inv < 0) {
            rep.add("leg-not-invertible", L.cat.morphisms[m],
                    "structural injection component has no inverse");
            continue;
        }
        int got = L.cat.compose(lv_inv, L.cat.compose(lkr, lu));
        if (got != m)
            rep.add("conjugation", L.cat.morphisms[m],
                    "class is not recovered from its cocone conjugate");
    }
    return rep;
}

ValidationReport check_cat_cocone(const CatCocone& c) {
    ValidationReport rep;
    const Cat2Functor& F = *c.diagram;
    const TwoCat& I = *F.dom;
    const FinCat& M = *c.vertex;
    if (static_cast<int>(c.leg.size()) != I.ob_count() ||
        static_cast<int>(c.cell.size()) != I.one_count()) {
        rep.add("shape", "tables", "leg/cell table sizes differ from index");
        return rep;
    }
    rep.merge(validate_fincat(M), "vertex: ");
    if (!rep.ok()) return rep;
    for (int i = 0; i < I.ob_count(); ++i) {
        if (c.leg[i].dom != F.value[i].get() || c.leg[i].cod != &M) {
            rep.add("leg-endpoints", I.objects[i],
                    "leg does not run from the value category to the vertex");
            return rep;
        }
        rep.merge(validate_functor(c.leg[i]), "leg " + I.objects[i] + ": ");
    }
    if (!rep.ok()) return rep;

    for (int u = 0; u < I.one_count(); ++u) {
        int i = I.src1[u], j = I.tgt1[u];
        const FinCat& Fi = *F.value[i];
        if (static_cast<int>(c.cell[u].size()) != Fi.ob_count()) {
            rep.add("cell-shape", I.one_cells[u], "component count mismatch");
            return rep;
        }
        for (int C = 0; C < Fi.ob_count(); ++C) {
            int m = c.cell[u][C];
            if (m < 0 || m >= M.mor_count() ||
                M.src[m] != c.leg[i].ob[C] ||
                M.tgt[m] != c.leg[j].ob[F.fmap[u].ob[C]]) {
                rep.add("cell-boundary",
                        I.one_cells[u] + " at " + Fi.objects[C],
                        "component is not leg_i(C) -> leg_j(F(u)C)");
                return rep;
            }
            if (!M.is_iso(m))
                rep.add("cell-invertible",
                        I.one_cells[u] + " at " + Fi.objects[C],
                        "component is not invertible");
        }
        // naturality in C
        for (int r = 0; r < Fi.mor_count(); ++r) {
            int lhs = M.comp[c.cell[u][Fi.tgt[r]]][c.leg[i].mor[r]];
            int rhs = M.comp[c.leg[j].mor[F.fmap[u].mor[r]]][c.cell[u][Fi.src[r]]];
            if (lhs != rhs)
                rep.add("cell-natural", I.one_cells[u] + " at " + Fi.morphisms[r],
                        "structural cell is not natural");
        }
    }
    if (!rep.ok()) return rep;

    for (int x = 0; x < I.ob_count(); ++x)
        for (int C = 0; C < F.value[x]->ob_count(); ++C)
            if (c.cell[I.id1[x]][C] != M.id_of[c.leg[x].ob[C]])
                rep.add("cell-identity", I.objects[x],
                        "identity 1-cell carries a non-identity cell");
    for (int v = 0; v < I.one_count(); ++v)
        for (int u = 0; u < I.one_count(); ++u) {
            if (!I.composable1(v, u)) continue;
            int vu = I.hcomp1[v][u];
            const FinCat& Fi = *F.value[I.src1[u]];
            for (int C = 0; C < Fi.ob_count(); ++C) {
                int want = M.comp[c.cell[v][F.fmap[u].ob[C]]][c.cell[u][C]];
                if (c.cell[vu][C] != want)
                    rep.add("cell-composition",
                            I.one_cells[v] + "∘" + I.one_cells[u] + " at " +
                                Fi.objects[C],
                            "pasting of structural cells differs");
            }
        }
    for (int a = 0; a < I.two_count(); ++a) {
        int u = I.src2[a], v = I.tgt2[a];
        int j = I.tgt1[u];
        const FinCat& Fi = *F.value[I.src1[u]];
        for (int C = 0; C < Fi.ob_count(); ++C) {
            int want = M.comp[c.leg[j].mor[F.nmap[a][C]]][c.cell[u][C]];
            if (c.cell[v][C] != want)
                rep.add("cell-2cell", I.two_cells[a] + " at " + Fi.objects[C],
                        "compatibility with the index 2-cell fails");
        }
    }
    return rep;
}

CatFunctor factor_through(const LLColimit& L, const CatCocone& c) {
    check_cat_cocone(c).expect_ok("cocone");
    const Cat2Functor& F = *L.diagram;
    const TwoCat& I = *F.dom;
    const FinCat& M = *c.vertex;
    if (c.diagram != &F) throw Error("factor_through: cocone over a different diagram");

    CatFunctor m;
    m.dom = &L.cat;
    m.cod = &M;
    m.ob.resize(L.cat.ob_count());
    for (int s = 0; s < L.cat.ob_count(); ++s) {
        auto [i, C] = L.ob_pair[s];
        m.ob[s] = c.leg[i].ob[C];
    }
    m.mor.assign(L.cat.mor_count(), -1);
    for (int cls = 0; cls < L.cat.mor_count(); ++cls) {
        for (int pi : L.members[cls]) {
            const auto& p = L.premors[pi];
            auto [i, C] = L.ob_pair[p.src_ob];
            auto [j, D] = L.ob_pair[p.tgt_ob];
            (void)i;
            (void)j;
            int k = I.tgt1[p.u];
            int inv = M.inverse(c.cell[p.v][D]);
            if (inv < 0)
                throw Error("factor_through: cocone cell has no inverse");
            int val =
                M.compose(inv, M.compose(c.leg[k].mor[p.r], c.cell[p.u][C]));
            if (m.mor[cls] < 0)
                m.mor[cls] = val;
            else if (m.mor[cls] != val)
                throw Error("factor_through: value depends on the class "
                            "representative for " + L.cat.morphisms[cls]);
        }
    }
    validate_functor(m).expect_ok("mediating functor");
    for (int i = 0; i < I.ob_count(); ++i) {
        CatFunctor lam = L.leg(i);
        CatFunctor ml = compose_functor(m, lam);
        if (ml.ob != c.leg[i].ob || ml.mor != c.leg[i].mor)
            throw Error("factor_through: mediator does not restrict to leg " +
                        I.objects[i]);
    }
    for (int u = 0; u < I.one_count(); ++u) {
        auto lam_u = L.leg_nat(u);
        for (size_t C = 0; C < lam_u.size(); ++C)
            if (m.mor[lam_u[C]] != c.cell[u][C])
                throw Error("factor_through: mediator does not carry the "
                            "structural cell of " + I.one_cells[u]);
    }
    return m;
}

int DescentCat::find_object(const std::vector<int>& comps,
                            const std::vector<int>& isos) const {
    for (size_t o = 0; o < ob_comp.size(); ++o)
        if (ob_comp[o] == comps && ob_iso[o] == isos)
            return static_cast<int>(o);
    return -1;
}

int DescentCat::find_morphism(int src, int tgt,
                              const std::vector<int>& comps) const {
    for (int m = 0; m < cat.mor_count(); ++m)
        if (cat.src[m] == src && cat.tgt[m] == tgt && mor_comp[m] == comps)
            return m;
    return -1;
}

CatFunctor DescentCat::projection(int k) const {
    CatFunctor p;
    p.dom = &cat;
    p.cod = diagram->value[k].get();
    p.ob.resize(cat.ob_count());
    p.mor.resize(cat.mor_count());
    for (int o = 0; o < cat.ob_count(); ++o) p.ob[o] = ob_comp[o][k];
    for (int m = 0; m < cat.mor_count(); ++m) p.mor[m] = mor_comp[m][k];
    return p;
}

std::vector<int> DescentCat::projection_nat(int u) const {
    std::vector<int> out(cat.ob_count());
    for (int o = 0; o < cat.ob_count(); ++o) out[o] = ob_iso[o][u];
    return out;
}

DescentCat pseudo_limit_cat(const Cat2Functor& H) {
    validate_cat2functor(H).expect_ok("limit diagram");
    const TwoCat& K = *H.dom;
    DescentCat D;
    D.diagram = &H;

    // enumerate component tuples (none exist when a value category is empty)
    std::vector<int> x(K.ob_count(), 0);
    bool ob_done = false;
    for (int k = 0; k < K.ob_count(); ++k)
        if (H.value[k]->ob_count() == 0) ob_done = true;
    while (!ob_done) {
        // candidate isos per 1-cell (identity cells are forced)
        std::vector<std::vector<int>> cand(K.one_count());
        bool feasible = true;
        for (int u = 0; u < K.one_count() && feasible; ++u) {
            int i = K.src1[u], j = K.tgt1[u];
            const FinCat& Hj = *H.value[j];
            if (u == K.id1[i]) {
                cand[u] = {Hj.id_of[x[i]]};
                continue;
            }
            for (int m : Hj.hom(H.fmap[u].ob[x[i]], x[j]))
                if (Hj.is_iso(m)) cand[u].push_back(m);
            feasible = !cand[u].empty();
        }
        if (feasible) {
            std::vector<int> pick(K.one_count(), 0);
            while (true) {
                std::vector<int> iso(K.one_count());
                for (int u = 0; u < K.one_count(); ++u) iso[u] = cand[u][pick[u]];
                // cocycle and 2-cell conditions
                bool ok = true;
                for (int v = 0; v < K.one_count() && ok; ++v)
                    for (int u = 0; u < K.one_count() && ok; ++u) {
                        if (!K.composable1(v, u)) continue;
                        const FinCat& Hk = *H.value[K.tgt1[v]];
                        ok = iso[K.hcomp1[v][u]] ==
                             Hk.comp[iso[v]][H.fmap[v].mor[iso[u]]];
                    }
                for (int a = 0; a < K.two_count() && ok; ++a) {
                    int u = K.src2[a], v = K.tgt2[a];
                    const FinCat& Hj = *H.value[K.tgt1[u]];
                    ok = iso[u] ==
                         Hj.comp[iso[v]][H.nmap[a][x[K.src1[u]]]];
                }
                if (ok) {
                    std::string name = "d" + std::to_string(D.ob_comp.size()) + "(";
                    for (int k = 0; k < K.ob_count(); ++k) {
                        if (k) name += ",";
                        name += H.value[k]->objects[x[k]];
                    }
                    name += ")";
                    D.cat.objects.push_back(name);
                    D.ob_comp.push_back(x);
                    D.ob_iso.push_back(iso);
                }
                int d = K.one_count() - 1;
                while (d >= 0 &&
                       pick[d] + 1 == static_cast<int>(cand[d].size()))
                    pick[d--] = 0;
                if (d < 0) break;
                ++pick[d];
            }
        }
        int d = K.ob_count() - 1;
        while (d >= 0 && x[d] + 1 == H.value[d]->ob_count()) x[d--] = 0;
        if (d < 0) break;
        ++x[d];
    }

    // morphisms: families g_k with y_u ∘ H(u)(g_k) = g_{k'} ∘ x_u
    int nob = static_cast<int>(D.ob_comp.size());
    for (int s = 0; s < nob; ++s)
        for (int t = 0; t < nob; ++t) {
            std::vector<std::vector<int>> cand(K.ob_count());
            bool feasible = true;
            for (int k = 0; k < K.ob_count() && feasible; ++k) {
                cand[k] = H.value[k]->hom(D.ob_comp[s][k], D.ob_comp[t][k]);
                feasible = !cand[k].empty();
            }
            if (!feasible) continue;
            std::vector<int> pick(K.ob_count(), 0);
            while (true) {
                std::vector<int> g(K.ob_count());
                for (int k = 0; k < K.ob_count(); ++k) g[k] = cand[k][pick[k]];
                bool ok = true;
                for (int u = 0; u < K.one_count() && ok; ++u) {
                    int i = K.src1[u], j = K.tgt1[u];
                    const FinCat& Hj = *H.value[j];
                    ok = Hj.comp[D.ob_iso[t][u]][H.fmap[u].mor[g[i]]] ==
                         Hj.comp[g[j]][D.ob_iso[s][u]];
                }
                if (ok) {
                    D.cat.morphisms.push_back(
                        "m" + std::to_string(D.cat.morphisms.size()));
                    D.cat.src.push_back(s);
                    D.cat.tgt.push_back(t);
                    D.mor_comp.push_back(g);
                }
                int d = K.ob_count() - 1;
                while (d >= 0 &&
                       pick[d] + 1 == static_cast<int>(cand[d].size()))
                    pick[d--] = 0;
                if (d < 0) break;
                ++pick[d];
            }
        }

    D.cat.id_of.resize(nob);
    for (int s = 0; s < nob; ++s) {
        std::vector<int> idc(K.ob_count());
        for (int k = 0; k < K.ob_count(); ++k)
            idc[k] = H.value[k]->id_of[D.ob_comp[s][k]];
        D.cat.id_of[s] = D.find_morphism(s, s, idc);
        if (D.cat.id_of[s] < 0)
            throw Error("limit: identity family rejected, conditions are "
                        "inconsistent");
    }
    int nm = D.cat.mor_count();
    D.cat.comp.assign(nm, std::vector<int>(nm, -1));
    for (int b = 0; b < nm; ++b)
        for (int a = 0; a < nm; ++a) {
            if (D.cat.tgt[a] != D.cat.src[b]) continue;
            std::vector<int> g(K.ob_count());
            for (int k = 0; k < K.ob_count(); ++k)
                g[k] = H.value[k]->comp[D.mor_comp[b][k]][D.mor_comp[a][k]];
            int r = D.find_morphism(D.cat.src[a], D.cat.tgt[b], g);
            if (r < 0)
                throw Error("limit: composite family is not a morphism");
            D.cat.comp[b][a] = r;
        }
    validate_fincat(D.cat).expect_ok("limit category");
    return D;
}

ValidationReport check_cat_cone(const CatCone& c) {
    ValidationReport rep;
    const Cat2Functor& H = *c.diagram;
    const TwoCat& K = *H.dom;
    const FinCat& Z = *c.vertex;
    if (static_cast<int>(c.leg.size()) != K.ob_count() ||
        static_cast<int>(c.cell.size()) != K.one_count()) {
        rep.add("shape", "tables", "leg/cell table sizes differ from index");
        return rep;
    }
    rep.merge(validate_fincat(Z), "vertex: ");
    if (!rep.ok()) return rep;
    for (int k = 0; k < K.ob_count(); ++k) {
        if (c.leg[k].dom != &Z || c.leg[k].cod != H.value[k].get()) {
            rep.add("leg-endpoints", K.objects[k],
                    "leg does not run from the vertex to the value category");
            return rep;
        }
        rep.merge(validate_functor(c.leg[k]), "leg " + K.objects[k] + ": ");
    }
    if (!rep.ok()) return rep;

    for (int u = 0; u < K.one_count(); ++u) {
        int i = K.src1[u], j = K.tgt1[u];
        const FinCat& Hj = *H.value[j];
        if (static_cast<int>(c.cell[u].size()) != Z.ob_count()) {
            rep.add("cell-shape", K.one_cells[u], "component count mismatch");
            return rep;
        }
        for (int z = 0; z < Z.ob_count(); ++z) {
            int m = c.cell[u][z];
            if (m < 0 || m >= Hj.mor_count() ||
                Hj.src[m] != H.fmap[u].ob[c.leg[i].ob[z]] ||
                Hj.tgt[m] != c.leg[j].ob[z]) {
                rep.add("cell-boundary", K.one_cells[u] + " at " + Z.objects[z],
                        "component is not H(u)(leg_i z) -> leg_j z");
                return rep;
            }
            if (!Hj.is_iso(m))
                rep.add("cell-invertible",
                        K.one_cells[u] + " at " + Z.objects[z],
                        "component is not invertible");
        }
        for (int h = 0; h < Z.mor_count(); ++h) {
            int lhs = Hj.comp[c.cell[u][Z.tgt[h]]]
                             [H.fmap[u].mor[c.leg[i].mor[h]]];
            int rhs = Hj.comp[c.leg[j].mor[h]][c.cell[u][Z.src[h]]];
            if (lhs != rhs)
                rep.add("cell-natural", K.one_cells[u] + " at " + Z.morphisms[h],
                        "structural cell is not natural");
        }
    }
    if (!rep.ok()) return rep;

    for (int k = 0; k < K.ob_count(); ++k)
        for (int z = 0; z < Z.ob_count(); ++z)
            if (c.cell[K.id1[k]][z] !=
                H.value[k]->id_of[c.leg[k].ob[z]])
                rep.add("cell-identity", K.objects[k],
                        "identity 1-cell carries a non-identity cell");
    for (int v = 0; v < K.one_count(); ++v)
        for (int u = 0; u < K.one_count(); ++u) {
            if (!K.composable1(v, u)) continue;
            int vu = K.hcomp1[v][u];
            const FinCat& Hk = *H.value[K.tgt1[v]];
            for (int z = 0; z < Z.ob_count(); ++z) {
                int want = Hk.comp[c.cell[v][z]][H.fmap[v].mor[c.cell[u][z]]];
                if (c.cell[vu][z] != want)
                    rep.add("cell-composition",
                            K.one_cells[v] + "∘" + K.one_cells[u] + " at " +
                                Z.objects[z],
                            "pasting of structural cells differs");
            }
        }
    for (int a = 0; a < K.two_count(); ++a) {
        int u = K.src2[a], v = K.tgt2[a];
        const FinCat& Hj = *H.value[K.tgt1[u]];
        for (int z = 0; z < Z.ob_count(); ++z) {
            int want = Hj.comp[c.cell[v][z]]
                              [H.nmap[a][c.leg[K.src1[u]].ob[z]]];
            if (c.cell[u][z] != want)
                rep.add("cell-2cell", K.two_cells[a] + " at " + Z.objects[z],
                        "compatibility with the index 2-cell fails");
        }
    }
    return rep;
}

CatFunctor factor_into(const DescentCat& D, const CatCone& c) {
    check_cat_cone(c).expect_ok("cone");
    const Cat2Functor& H = *D.diagram;
    const TwoCat& K = *H.dom;
    const FinCat& Z = *c.vertex;
    if (c.diagram != &H) throw Error("factor_into: cone over a different diagram");

    CatFunctor m;
    m.dom = &Z;
    m.cod = &D.cat;
    m.ob.resize(Z.ob_count());
    m.mor.resize(Z.mor_count());
    for (int z = 0; z < Z.ob_count(); ++z) {
        std::vector<int> comps(K.ob_count());
        for (int k = 0; k < K.ob_count(); ++k) comps[k] = c.leg[k].ob[z];
        std::vector<int> isos(K.one_count());
        for (int u = 0; u < K.one_count(); ++u) isos[u] = c.cell[u][z];
        m.ob[z] = D.find_object(comps, isos);
        if (m.ob[z] < 0)
            throw Error("factor_into: cone value at " + Z.objects[z] +
                        " is not descent data");
    }
    for (int h = 0; h < Z.mor_count(); ++h) {
        std::vector<int> comps(K.ob_count());
        for (int k = 0; k < K.ob_count(); ++k) comps[k] = c.leg[k].mor[h];
        m.mor[h] = D.find_morphism(m.ob[Z.src[h]], m.ob[Z.tgt[h]], comps);
        if (m.mor[h] < 0)
            throw Error("factor_into: cone value at " + Z.morphisms[h] +
                        " is not compatible with the descent isomorphisms");
    }
    validate_functor(m).expect_ok("mediating functor");
    for (int k = 0; k < K.ob_count(); ++k) {
        CatFunctor pk = D.projection(k);
        CatFunctor pm = compose_functor(pk, m);
        if (pm.ob != c.leg[k].ob || pm.mor != c.leg[k].mor)
            throw Error("factor_into: projection " + K.objects[k] +
                        " does not recover the leg");
    }
    for (int u = 0; u < K.one_count(); ++u) {
        auto pu = D.projection_nat(u);
        for (int z = 0; z < Z.ob_count(); ++z)
            if (pu[m.ob[z]] != c.cell[u][z])
                throw Error("factor_into: projection cell " + K.one_cells[u] +
                            " does not recover the cone cell");
    }
    return m;
}

CatFunctor comparison_functor(const LLColimit& LR, const LLColimit& LG,
                              const PseudoFunctor& R) {
    CatFunctor h;
    h.dom = &LR.cat;
    h.cod = &LG.cat;
    h.ob.resize(LR.cat.ob_count());
    for (int s = 0; s < LR.cat.ob_count(); ++s) {
        auto [j, C] = LR.ob_pair[s];
        h.ob[s] = LG.object_of(R.ob[j], C);
    }
    h.mor.assign(LR.cat.mor_count(), -1);
    for (int cls = 0; cls < LR.cat.mor_count(); ++cls) {
        for (int pi : LR.members[cls]) {
            const auto& p = LR.premors[pi];
            int img = LG.classify(h.ob[p.src_ob], h.ob[p.tgt_ob], R.one[p.u],
                                  p.r, R.one[p.v]);
            if (h.mor[cls] < 0)
                h.mor[cls] = img;
            else if (h.mor[cls] != img)
                throw Error("comparison_functor: image class depends on the "
                            "representative for " + LR.cat.morphisms[cls]);
        }
    }
    validate_functor(h).expect_ok("comparison functor");
    return h;
}

} // namespace twocat

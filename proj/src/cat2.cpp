#include "twocat/cat2.hpp"

namespace twocat {

namespace {

/// Backtracks over morphism images; object images are fixed.  Identities
/// are forced, other images range over the boundary-compatible hom set,
/// and composition is re-checked whenever a pair becomes fully assigned.
void extend_morphisms(const FinCat& A, const FinCat& B, CatFunctor& F, int m,
                      std::vector<CatFunctor>& out) {
    if (m == A.mor_count()) {
        out.push_back(F);
        return;
    }
    if (A.src[m] == A.tgt[m] && A.id_of[A.src[m]] == m) {
        F.mor[m] = B.id_of[F.ob[A.src[m]]];
        extend_morphisms(A, B, F, m + 1, out);
        F.mor[m] = -1;
        return;
    }
    for (int n : B.hom(F.ob[A.src[m]], F.ob[A.tgt[m]])) {
        F.mor[m] = n;
        bool ok = true;
        // incremental composition check against earlier assignments
        for (int g = 0; g <= m && ok; ++g) {
            if (F.mor[g] < 0) continue;
            if (A.composable(g, m)) {
                int c = A.comp[g][m];
                if (c <= m && F.mor[c] >= 0 &&
                    F.mor[c] != B.comp[F.mor[g]][F.mor[m]])
                    ok = false;
            }
            if (A.composable(m, g)) {
                int c = A.comp[m][g];
                if (c <= m && F.mor[c] >= 0 &&
                    F.mor[c] != B.comp[F.mor[m]][F.mor[g]])
                    ok = false;
            }
        }
        if (ok) extend_morphisms(A, B, F, m + 1, out);
        F.mor[m] = -1;
    }
}

} // namespace

std::vector<CatFunctor> all_functors(const FinCat& A, const FinCat& B) {
    std::vector<CatFunctor> out;
    if (B.ob_count() == 0) return out;
    CatFunctor F;
    F.dom = &A;
    F.cod = &B;
    F.ob.assign(A.ob_count(), 0);
    F.mor.assign(A.mor_count(), -1);
    // iterate object maps in base-|B| counting order
    while (true) {
        extend_morphisms(A, B, F, 0, out);
        int d = A.ob_count() - 1;
        while (d >= 0 && F.ob[d] == B.ob_count() - 1) F.ob[d--] = 0;
        if (d < 0) break;
        ++F.ob[d];
    }
    // drop any candidate that slipped past incremental pruning
    std::vector<CatFunctor> checked;
    for (auto& G : out)
        if (validate_functor(G).ok()) checked.push_back(std::move(G));
    return checked;
}

std::vector<std::vector<int>> all_nattrans(const CatFunctor& F,
                                           const CatFunctor& G) {
    const FinCat& A = *F.dom;
    const FinCat& B = *F.cod;
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> choices(A.ob_count());
    for (int x = 0; x < A.ob_count(); ++x) {
        choices[x] = B.hom(F.ob[x], G.ob[x]);
        if (choices[x].empty()) return out;
    }
    std::vector<int> pick(A.ob_count(), 0);
    while (true) {
        std::vector<int> comp(A.ob_count());
        for (int x = 0; x < A.ob_count(); ++x) comp[x] = choices[x][pick[x]];
        bool natural = true;
        for (int m = 0; m < A.mor_count() && natural; ++m)
            natural = B.comp[comp[A.tgt[m]]][F.mor[m]] ==
                      B.comp[G.mor[m]][comp[A.src[m]]];
        if (natural) out.push_back(std::move(comp));
        int d = A.ob_count() - 1;
        while (d >= 0 && pick[d] + 1 == static_cast<int>(choices[d].size()))
            pick[d--] = 0;
        if (d < 0) break;
        ++pick[d];
    }
    return out;
}

int CatTwoCat::find_one(int src_cat, int tgt_cat, const CatFunctor& F) const {
    for (int f = 0; f < two.one_count(); ++f)
        if (two.src1[f] == src_cat && two.tgt1[f] == tgt_cat &&
            fun[f].ob == F.ob && fun[f].mor == F.mor)
            return f;
    return -1;
}

int CatTwoCat::find_two(int f, int g, const std::vector<int>& components) const {
    for (int a = 0; a < two.two_count(); ++a)
        if (two.src2[a] == f && two.tgt2[a] == g && nat[a] == components)
            return a;
    return -1;
}

CatTwoCat cat_2cat(const std::vector<FinCat>& cats) {
    CatTwoCat u;
    for (const FinCat& c : cats) {
        validate_fincat(c).expect_ok("cat_2cat input");
        u.cats.push_back(std::make_unique<FinCat>(c));
    }
    int n = static_cast<int>(u.cats.size());
    TwoCat& t = u.two;
    for (int i = 0; i < n; ++i) t.objects.push_back("C" + std::to_string(i));

    // 1-cells: all functors between every ordered pair.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (CatFunctor& F : all_functors(*u.cats[i], *u.cats[j])) {
                t.one_cells.push_back("f" + std::to_string(t.one_cells.size()));
                t.src1.push_back(i);
                t.tgt1.push_back(j);
                u.fun.push_back(std::move(F));
            }
    t.id1.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        t.id1[i] = u.find_one(i, i, identity_functor(*u.cats[i]));
        if (t.id1[i] < 0) throw Error("cat_2cat: identity functor not found");
    }
    int n1 = t.one_count();
    t.hcomp1.assign(n1, std::vector<int>(n1, -1));
    for (int g = 0; g < n1; ++g)
        for (int f = 0; f < n1; ++f) {
            if (!t.composable1(g, f)) continue;
            CatFunctor gf = compose_functor(u.fun[g], u.fun[f]);
            int r = u.find_one(t.src1[f], t.tgt1[g], gf);
            if (r < 0) throw Error("cat_2cat: composite functor not found");
            t.hcomp1[g][f] = r;
        }

    // 2-cells: all natural transformations between every parallel pair.
    for (int f = 0; f < n1; ++f)
        for (int g = 0; g < n1; ++g) {
            if (t.src1[f] != t.src1[g] || t.tgt1[f] != t.tgt1[g]) continue;
            for (auto& comp : all_nattrans(u.fun[f], u.fun[g])) {
                t.two_cells.push_back("n" + std::to_string(t.two_cells.size()));
                t.src2.push_back(f);
                t.tgt2.push_back(g);
                u.nat.push_back(std::move(comp));
            }
        }
    t.id2.assign(n1, -1);
    for (int f = 0; f < n1; ++f) {
        const FinCat& cod = *u.cats[t.tgt1[f]];
        std::vector<int> comp(u.fun[f].ob.size());
        for (size_t x = 0; x < comp.size(); ++x)
            comp[x] = cod.id_of[u.fun[f].ob[x]];
        t.id2[f] = u.find_two(f, f, comp);
        if (t.id2[f] < 0) throw Error("cat_2cat: identity transformation not found");
    }
    int n2 = t.two_count();
    t.vcomp.assign(n2, std::vector<int>(n2, -1));
    t.hcomp2.assign(n2, std::vector<int>(n2, -1));
    for (int b = 0; b < n2; ++b)
        for (int a = 0; a < n2; ++a) {
            if (t.vcomposable(b, a)) {
                const FinCat& cod = *u.cats[t.tgt1[t.src2[a]]];
                std::vector<int> comp(u.nat[a].size());
                for (size_t x = 0; x < comp.size(); ++x)
                    comp[x] = cod.comp[u.nat[b][x]][u.nat[a][x]];
                int r = u.find_two(t.src2[a], t.tgt2[b], comp);
                if (r < 0) throw Error("cat_2cat: stacked transformation not found");
                t.vcomp[b][a] = r;
            }
            if (t.hcomposable(b, a)) {
                // (beta alpha)_x = G'(alpha_x) ∘ beta_{F x} for
                // alpha : F => F', beta : G => G'
                const CatFunctor& F = u.fun[t.src2[a]];
                const CatFunctor& Gp = u.fun[t.tgt2[b]];
                const FinCat& cod = *u.cats[t.tgt1[t.src2[b]]];
                std::vector<int> comp(F.ob.size());
                for (size_t x = 0; x < comp.size(); ++x)
                    comp[x] = cod.comp[Gp.mor[u.nat[a][x]]][u.nat[b][F.ob[x]]];
                int sf = t.hcomp1[t.src2[b]][t.src2[a]];
                int tf = t.hcomp1[t.tgt2[b]][t.tgt2[a]];
                int r = u.find_two(sf, tf, comp);
                if (r < 0)
                    throw Error("cat_2cat: juxtaposed transformation not found");
                t.hcomp2[b][a] = r;
            }
        }
    return u;
}

} // namespace twocat

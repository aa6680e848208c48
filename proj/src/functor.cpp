#include "twocat/functor.hpp"

#include <algorithm>
#include <set>

namespace twocat {

ValidationReport validate_functor(const CatFunctor& F) {
    ValidationReport rep;
    const FinCat& A = *F.dom;
    const FinCat& B = *F.cod;
    if (static_cast<int>(F.ob.size()) != A.ob_count() ||
        static_cast<int>(F.mor.size()) != A.mor_count()) {
        rep.add("shape", "tables", "value table sizes differ from domain");
        return rep;
    }
    bool dangling = false;
    for (int x = 0; x < A.ob_count(); ++x)
        if (F.ob[x] < 0 || F.ob[x] >= B.ob_count()) {
            rep.add("dangling-ob", A.objects[x], "object value out of range");
            dangling = true;
        }
    for (int m = 0; m < A.mor_count(); ++m)
        if (F.mor[m] < 0 || F.mor[m] >= B.mor_count()) {
            rep.add("dangling-mor", A.morphisms[m], "morphism value out of range");
            dangling = true;
        }
    if (dangling) return rep;

    for (int m = 0; m < A.mor_count(); ++m) {
        if (B.src[F.mor[m]] != F.ob[A.src[m]] ||
            B.tgt[F.mor[m]] != F.ob[A.tgt[m]])
            rep.add("boundary", A.morphisms[m],
                    "image " + B.morphisms[F.mor[m]] + " has wrong endpoints");
    }
    for (int x = 0; x < A.ob_count(); ++x)
        if (F.mor[A.id_of[x]] != B.id_of[F.ob[x]])
            rep.add("identity", A.objects[x], "identity not preserved");
    for (int g = 0; g < A.mor_count(); ++g)
        for (int f = 0; f < A.mor_count(); ++f) {
            if (!A.composable(g, f)) continue;
            if (B.src[F.mor[g]] != B.tgt[F.mor[f]]) continue; // boundary issue reported above
            if (F.mor[A.comp[g][f]] != B.comp[F.mor[g]][F.mor[f]])
                rep.add("composition", A.morphisms[g] + "∘" + A.morphisms[f],
                        "F(g∘f) != F(g)∘F(f)");
        }
    return rep;
}

CatFunctor compose_functor(const CatFunctor& g, const CatFunctor& f) {
    if (f.cod != g.dom)
        throw NotComposable("compose_functor: middle categories differ");
    CatFunctor h;
    h.dom = f.dom;
    h.cod = g.cod;
    h.ob.resize(f.ob.size());
    h.mor.resize(f.mor.size());
    for (size_t x = 0; x < f.ob.size(); ++x) h.ob[x] = g.ob[f.ob[x]];
    for (size_t m = 0; m < f.mor.size(); ++m) h.mor[m] = g.mor[f.mor[m]];
    return h;
}

CatFunctor identity_functor(const FinCat& c) {
    CatFunctor F;
    F.dom = F.cod = &c;
    F.ob.resize(c.ob_count());
    F.mor.resize(c.mor_count());
    for (int x = 0; x < c.ob_count(); ++x) F.ob[x] = x;
    for (int m = 0; m < c.mor_count(); ++m) F.mor[m] = m;
    return F;
}

bool injective_on_cells(const CatFunctor& F) {
    std::set<int> obs(F.ob.begin(), F.ob.end());
    std::set<int> mors(F.mor.begin(), F.mor.end());
    return obs.size() == F.ob.size() && mors.size() == F.mor.size();
}

ValidationReport validate_nattrans(const NatTrans& t) {
    ValidationReport rep;
    const CatFunctor& F = *t.src;
    const CatFunctor& G = *t.tgt;
    const FinCat& A = *F.dom;
    const FinCat& B = *F.cod;
    if (F.dom != G.dom || F.cod != G.cod) {
        rep.add("shape", "functors", "source and target functors not parallel");
        return rep;
    }
    if (static_cast<int>(t.component.size()) != A.ob_count()) {
        rep.add("shape", "components", "component count differs from object count");
        return rep;
    }
    bool dangling = false;
    for (int x = 0; x < A.ob_count(); ++x) {
        int c = t.component[x];
        if (c < 0 || c >= B.mor_count()) {
            rep.add("dangling-component", A.objects[x], "component out of range");
            dangling = true;
        } else if (B.src[c] != F.ob[x] || B.tgt[c] != G.ob[x]) {
            rep.add("component-boundary", A.objects[x],
                    "component " + B.morphisms[c] + " is not F(x) -> G(x)");
            dangling = true;
        }
    }
    if (dangling) return rep;

    for (int m = 0; m < A.mor_count(); ++m) {
        int x = A.src[m], y = A.tgt[m];
        int lhs = B.comp[t.component[y]][F.mor[m]]; // t_y ∘ F(m)
        int rhs = B.comp[G.mor[m]][t.component[x]]; // G(m) ∘ t_x
        if (lhs != rhs)
            rep.add("naturality", A.morphisms[m],
                    "t_tgt∘F(m) = " + B.morphisms[lhs] + " but G(m)∘t_src = " +
                        B.morphisms[rhs]);
    }
    return rep;
}

namespace {

bool fully_faithful(const CatFunctor& F, std::string* why) {
    const FinCat& A = *F.dom;
    const FinCat& B = *F.cod;
    for (int x = 0; x < A.ob_count(); ++x)
        for (int y = 0; y < A.ob_count(); ++y) {
            auto fibers = B.hom(F.ob[x], F.ob[y]);
            for (int target : fibers) {
                int hits = 0;
                for (int m : A.hom(x, y))
                    if (F.mor[m] == target) ++hits;
                if (hits != 1) {
                    if (why)
                        *why = "hom(" + A.objects[x] + "," + A.objects[y] +
                               ") -> hom(F" + A.objects[x] + ",F" +
                               A.objects[y] + ") misses or doubles " +
                               B.morphisms[target];
                    return false;
                }
            }
        }
    return true;
}

// Object of dom whose image is isomorphic to y, with a chosen iso
// F(x) -> y; -1 when none exists.
std::pair<int, int> essential_preimage(const CatFunctor& F, int y) {
    const FinCat& B = *F.cod;
    for (int x = 0; x < F.dom->ob_count(); ++x)
        for (int m : B.hom(F.ob[x], y))
            if (B.is_iso(m)) return {x, m};
    return {-1, -1};
}

} // namespace

std::optional<EquivalenceWitness> equivalence_of_categories(const CatFunctor& F) {
    std::string why;
    if (!fully_faithful(F, &why)) return std::nullopt;
    const FinCat& A = *F.dom;
    const FinCat& B = *F.cod;

    EquivalenceWitness w;
    w.inverse.dom = F.cod;
    w.inverse.cod = F.dom;
    w.inverse.ob.assign(B.ob_count(), -1);
    w.inverse.mor.assign(B.mor_count(), -1);
    w.counit.assign(B.ob_count(), -1);

    for (int y = 0; y < B.ob_count(); ++y) {
        auto [x, iso] = essential_preimage(F, y);
        if (x < 0) return std::nullopt;
        w.inverse.ob[y] = x;
        w.counit[y] = iso; // F(G(y)) -> y
    }
    // G on morphisms: n: y -> y' transports to counit_y' ⁻¹-free form
    // F(G n) = counit_{y'}⁻¹ ∘ n ∘ counit_y, lifted through full
    // faithfulness by searching the unique preimage.
    for (int n = 0; n < B.mor_count(); ++n) {
        int y = B.src[n], yp = B.tgt[n];
        int inv = B.inverse(w.counit[yp]);
        int conj = B.comp[inv][B.comp[n][w.counit[y]]];
        int found = -1;
        for (int m : A.hom(w.inverse.ob[y], w.inverse.ob[yp]))
            if (F.mor[m] == conj) { found = m; break; }
        if (found < 0) return std::nullopt;
        w.inverse.mor[n] = found;
    }

    // unit_x : x -> G(F(x)) is the unique preimage of counit_{F(x)}⁻¹.
    w.unit.assign(A.ob_count(), -1);
    for (int x = 0; x < A.ob_count(); ++x) {
        int inv = B.inverse(w.counit[F.ob[x]]);
        int found = -1;
        for (int m : A.hom(x, w.inverse.ob[F.ob[x]]))
            if (F.mor[m] == inv) { found = m; break; }
        if (found < 0 || !A.is_iso(found)) return std::nullopt;
        w.unit[x] = found;
    }

    if (!validate_functor(w.inverse).ok()) return std::nullopt;

    // Naturality of unit and counit, checked outright.
    CatFunctor GF = compose_functor(w.inverse, F);
    CatFunctor idA = identity_functor(A);
    NatTrans u{&idA, &GF, w.unit};
    if (!validate_nattrans(u).ok()) return std::nullopt;
    CatFunctor FG = compose_functor(F, w.inverse);
    CatFunctor idB = identity_functor(B);
    NatTrans c{&FG, &idB, w.counit};
    if (!validate_nattrans(c).ok()) return std::nullopt;
    return w;
}

EquivalenceVerdict explain_equivalence(const CatFunctor& F) {
    EquivalenceVerdict v;
    std::string why;
    if (!fully_faithful(F, &why)) {
        v.reason = "not fully faithful: " + why;
        return v;
    }
    for (int y = 0; y < F.cod->ob_count(); ++y)
        if (essential_preimage(F, y).first < 0) {
            v.reason = "not essentially surjective at " + F.cod->objects[y];
            return v;
        }
    if (!equivalence_of_categories(F)) {
        v.reason = "quasi-inverse construction failed";
        return v;
    }
    v.ok = true;
    return v;
}

} // namespace twocat

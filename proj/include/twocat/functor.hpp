#pragma once

#include <optional>
#include <vector>

#include "twocat/fincat.hpp"

namespace twocat {

/// A functor between finite categories, given by its value tables.
/// Domain and codomain are referenced by pointer; callers keep the
/// categories alive for the lifetime of the functor value.
struct CatFunctor {
    const FinCat* dom = nullptr;
    const FinCat* cod = nullptr;
    std::vector<int> ob;  // object -> object
    std::vector<int> mor; // morphism -> morphism

    int operator()(int m) const { return mor[m]; }
    int on_ob(int x) const { return ob[x]; }
};

/// Checks tables are total, boundaries are preserved, identities map to
/// identities and composition is preserved.
ValidationReport validate_functor(const CatFunctor& F);

/// g∘f (f applied first).  Requires f.cod == g.dom (same pointer).
CatFunctor compose_functor(const CatFunctor& g, const CatFunctor& f);

CatFunctor identity_functor(const FinCat& c);

bool injective_on_cells(const CatFunctor& F);

/// A natural transformation between parallel functors, one component per
/// domain object.
struct NatTrans {
    const CatFunctor* src = nullptr;
    const CatFunctor* tgt = nullptr;
    std::vector<int> component; // object of dom -> morphism of cod

    int at(int x) const { return component[x]; }
};

/// Component boundaries plus the naturality square for every morphism.
ValidationReport validate_nattrans(const NatTrans& t);

/// Witnesses that F is an equivalence: a quasi-inverse G together with
/// natural isomorphisms  unit: Id_dom => G∘F  and  counit: F∘G => Id_cod
/// (components recorded as morphism indices of dom resp. cod).
struct EquivalenceWitness {
    CatFunctor inverse;
    std::vector<int> unit;   // x -> iso x -> G(F(x)) in dom
    std::vector<int> counit; // y -> iso F(G(y)) -> y in cod
};

/// Decides whether F is fully faithful and essentially surjective, by
/// finite search, and if so produces a quasi-inverse with unit/counit.
std::optional<EquivalenceWitness> equivalence_of_categories(const CatFunctor& F);

/// Verdict plus the first obstruction found, for reporting.
struct EquivalenceVerdict {
    bool ok = false;
    std::string reason; // empty when ok
};

EquivalenceVerdict explain_equivalence(const CatFunctor& F);

} // namespace twocat

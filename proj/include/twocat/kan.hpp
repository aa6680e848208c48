#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "twocat/cat2.hpp"
#include "twocat/maps.hpp"

namespace twocat {

/// Raised when the homotopy relation between premorphisms is not an
/// equivalence relation, i.e. the index 2-category is not sufficiently
/// filtered for the colimit category to exist with this description.
struct HomotopyNotEquivalence : Error {
    explicit HomotopyNotEquivalence(const std::string& what) : Error(what) {}
};

/// A strict 2-functor from a finite index 2-category into categories:
/// one category per object, one functor per 1-cell, one natural
/// transformation (component table) per 2-cell.  Owns its value
/// categories, so the struct is move-only and the functor dom/cod
/// pointers stay valid.
struct Cat2Functor {
    const TwoCat* dom = nullptr;
    std::vector<std::unique_ptr<FinCat>> value;
    std::vector<CatFunctor> fmap;
    std::vector<std::vector<int>> nmap;

    Cat2Functor() = default;
    Cat2Functor(const Cat2Functor&) = delete;
    Cat2Functor& operator=(const Cat2Functor&) = delete;
    Cat2Functor(Cat2Functor&&) = default;
    Cat2Functor& operator=(Cat2Functor&&) = default;
};

/// Value categories validate; functors/transformations validate, sit on
/// the right boundaries and are strictly functorial in all three
/// dimensions (identities, 1-cell composition, vertical and horizontal
/// 2-cell composition).
ValidationReport validate_cat2functor(const Cat2Functor& F);

/// Restriction of a diagram along a strict map of index 2-categories
/// R : J -> I (value categories are copied).
Cat2Functor reindex_cat2(const Cat2Functor& G, const PseudoFunctor& R);

/// The 2-dimensional filtered colimit of a Cat-valued diagram.
///
/// Objects are pairs (C, i) with C an object of F(i).  A premorphism
/// (C,i) -> (D,j) is a triple (u : i -> k, r : F(u)(C) -> F(v)(D), v : j -> k);
/// two premorphisms are homotopic when some pair of shifts (w1, w2) and
/// invertible 2-cells alpha : w1 v1 => w2 v2, beta : w1 u1 => w2 u2
/// satisfy F(alpha)_D ∘ F(w1)(r1) = F(w2)(r2) ∘ F(beta)_C.  Morphisms are
/// homotopy classes; composition refines two representatives to a common
/// index and is verified to be independent of every choice made.
struct LLColimit {
    struct Premorphism {
        int src_ob, tgt_ob; // colimit object indices
        int u, v;           // 1-cells of the index
        int r;              // morphism of F(k), k = tgt(u) = tgt(v)
    };

    const Cat2Functor* diagram = nullptr;
    FinCat cat;
    std::vector<std::pair<int, int>> ob_pair; // colimit object -> (i, C)
    std::vector<std::vector<int>> ob_index;   // [i][C] -> colimit object
    std::vector<Premorphism> premors;
    std::vector<int> class_of;                // premorphism -> morphism of cat
    std::vector<std::vector<int>> members;    // morphism of cat -> premorphisms

    int object_of(int i, int C) const { return ob_index[i][C]; }

    /// Morphism class containing the premorphism (u, r, v) between the
    /// given colimit objects; throws UnknownCell when no such premorphism
    /// was enumerated (i.e. the data is not a premorphism at all).
    int classify(int src_ob, int tgt_ob, int u, int r, int v) const;

    /// Direct homotopy test between two enumerated premorphisms.
    bool homotopic(int p, int q) const;

    /// The colimit injection functor F(i) -> cat.
    CatFunctor leg(int i) const;

    /// Components of the structural transformation leg(i) => leg(j)∘F(u)
    /// for u : i -> j (one morphism of `cat` per object of F(i)).  Each
    /// component is invertible when the index is 2-filtered.
    std::vector<int> leg_nat(int u) const;
};

/// Builds the colimit.  Throws HomotopyNotEquivalence when the homotopy
/// relation fails to be transitive, and Error when no refinement data
/// (cospans / invertible coequalizing 2-cells) can be found inside the
/// index.  The returned category is re-validated, and composition of
/// classes is checked to be representative-independent.
LLColimit ll_colimit(const Cat2Functor& F);

/// Verifies, for every morphism class [u,r,v] : (C,i) -> (D,j), the
/// generating identity
///   [u,r,v] = (leg_nat(v)_D)^{-1} ∘ leg(k)(r) ∘ leg_nat(u)_C
/// inside the colimit.  These identities pin down any functor out of the
/// colimit by its values on the cocone, certifying mediator uniqueness.
ValidationReport check_conjugation(const LLColimit& L);

/// A cocone under a Cat-valued diagram: functor legs mu_i : F(i) -> M and
/// natural cells mu_u : mu_i => mu_j ∘ F(u) with invertible components.
struct CatCocone {
    const Cat2Functor* diagram = nullptr;
    const FinCat* vertex = nullptr;
    std::vector<CatFunctor> leg;
    std::vector<std::vector<int>> cell;
};

/// Leg/cell boundaries, invertibility, identity cells trivial, the
/// composition pasting and compatibility with index 2-cells.
ValidationReport check_cat_cocone(const CatCocone& c);

/// The mediating functor cat -> M induced by a cocone: (C,i) -> mu_i(C),
/// [u,r,v] -> (mu_v)_D^{-1} ∘ mu_k(r) ∘ (mu_u)_C.  Checks the value is
/// the same for every member of every class and that the result is a
/// functor restricting to the cocone; throws Error otherwise.
CatFunctor factor_through(const LLColimit& L, const CatCocone& c);

/// The pseudo-limit of a Cat-valued diagram, described by descent data.
///
/// Objects: families (x_k, x_u) with x_k an object of H(k) and
/// x_u : H(u)(x_k) -> x_{k'} invertible, such that x_{id} = id, the
/// cocycle x_{vu} = x_v ∘ H(v)(x_u) holds, and x_v ∘ H(mu)_{x_k} = x_u
/// for every 2-cell mu : u => v.  Morphisms: families g_k : x_k -> y_k
/// with y_u ∘ H(u)(g_k) = g_{k'} ∘ x_u, composed componentwise.
struct DescentCat {
    const Cat2Functor* diagram = nullptr;
    FinCat cat;
    std::vector<std::vector<int>> ob_comp; // object -> per-index-object part
    std::vector<std::vector<int>> ob_iso;  // object -> per-index-1-cell part
    std::vector<std::vector<int>> mor_comp;

    int find_object(const std::vector<int>& comps,
                    const std::vector<int>& isos) const;
    int find_morphism(int src, int tgt, const std::vector<int>& comps) const;

    CatFunctor projection(int k) const;
    std::vector<int> projection_nat(int u) const;
};

DescentCat pseudo_limit_cat(const Cat2Functor& H);

/// A cone over a Cat-valued diagram: legs theta_k : Z -> H(k) and natural
/// cells theta_u : H(u) ∘ theta_k => theta_{k'} with invertible components.
struct CatCone {
    const Cat2Functor* diagram = nullptr;
    const FinCat* vertex = nullptr;
    std::vector<CatFunctor> leg;
    std::vector<std::vector<int>> cell;
};

ValidationReport check_cat_cone(const CatCone& c);

/// The mediating functor Z -> cat: z -> (theta_k(z), (theta_u)_z).  The
/// components of the image are literally the cone data, which makes the
/// mediator unique among functors commuting with the projections; the
/// construction checks the image tuples exist as descent data and that
/// the projections recover the cone.
CatFunctor factor_into(const DescentCat& L, const CatCone& c);

/// The canonical functor colim(G∘R) -> colim(G) along a strict index map
/// R : J -> I:  (x, j) -> (x, R j)  and  [u, r, v] -> [R u, r, R v].
/// LR must be the colimit of reindex_cat2(G, R) and LG the colimit of G.
/// Class images are verified member-by-member.
CatFunctor comparison_functor(const LLColimit& LR, const LLColimit& LG,
                              const PseudoFunctor& R);

} // namespace twocat

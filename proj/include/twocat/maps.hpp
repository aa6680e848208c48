#pragma once

#include <optional>
#include <vector>

#include "twocat/twocat.hpp"

namespace twocat {

/// A pseudo-functor between finite strict 2-categories.  Value tables plus
/// the coherence data: `compositor[g][f] : F(g)F(f) => F(g∘f)` for every
/// composable pair (f applied first) and `unitor[C] : id_{F C} => F(id_C)`,
/// all invertible.  Strict functors carry identity coherence cells.
struct PseudoFunctor {
    const TwoCat* dom = nullptr;
    const TwoCat* cod = nullptr;
    std::vector<int> ob;
    std::vector<int> one;
    std::vector<int> two;
    std::vector<std::vector<int>> compositor; // [g][f], -1 off composables
    std::vector<int> unitor;                  // per object

    int on_ob(int x) const { return ob[x]; }
    int on_one(int f) const { return one[f]; }
    int on_two(int a) const { return two[a]; }
    bool is_strict() const;
};

/// Functor with identity coherence cells; tables must already be strictly
/// functorial (validate afterwards to be sure).
PseudoFunctor make_strict(const TwoCat& dom, const TwoCat& cod,
                          std::vector<int> ob, std::vector<int> one,
                          std::vector<int> two);

PseudoFunctor identity_pseudofunctor(const TwoCat& c);

/// The constant functor at an object: everything maps onto x and its
/// identities.
PseudoFunctor constant_pseudofunctor(const TwoCat& dom, const TwoCat& cod,
                                     int x);

/// Checks value boundaries, hom functoriality (identities and vertical
/// composites), invertibility of the coherence cells, compositor
/// naturality in both arguments, the unit laws and the associativity
/// pentagon for every composable triple.
ValidationReport validate_pseudofunctor(const PseudoFunctor& F);

/// G∘F with the pasted coherence cells.
PseudoFunctor compose_pseudofunctor(const PseudoFunctor& G,
                                    const PseudoFunctor& F);

/// A pseudo-natural transformation theta : F => G between parallel
/// pseudo-functors: 1-cell components theta_C : F C -> G C and invertible
/// structure cells theta_f : G(f) theta_C => theta_D F(f) for f : C -> D.
struct PseudoNatural {
    const PseudoFunctor* src = nullptr; // F
    const PseudoFunctor* tgt = nullptr; // G
    std::vector<int> component; // per object of dom
    std::vector<int> cell;      // per 1-cell of dom

    bool is_2natural(const TwoCat& dom) const; // every cell is an identity
};

/// Boundary checks, invertibility, unit coherence, composition coherence
/// and naturality against 2-cells.
ValidationReport validate_pseudonatural(const PseudoNatural& t);

/// Vertical composite theta' ∘ theta : F => H for theta : F => G,
/// theta' : G => H.
PseudoNatural compose_pseudonatural(const PseudoNatural& tp,
                                    const PseudoNatural& t);

PseudoNatural identity_pseudonatural(const PseudoFunctor& F);

/// A modification rho : theta => eta between parallel pseudo-naturals:
/// one 2-cell rho_C : theta_C => eta_C per object.
struct Modification {
    const PseudoNatural* src = nullptr;
    const PseudoNatural* tgt = nullptr;
    std::vector<int> component;
};

/// Boundary checks plus the exchange equation
/// (rho_D F f) ∘ theta_f = eta_f ∘ (G f rho_C).
ValidationReport validate_modification(const Modification& m);

/// Vertical composite of modifications between transformations F => G.
std::vector<int> compose_modification_vertical(const TwoCat& cod,
                                               const Modification& e,
                                               const Modification& r);

/// Component-wise juxtaposition of modifications lying over composable
/// pseudo-naturals.
std::vector<int> compose_modification_horizontal(const TwoCat& cod,
                                                 const Modification& outer,
                                                 const Modification& inner);

/// A cone over a diagram H : J -> A with a fixed vertex X: legs
/// X -> H(j) and invertible cells  H(w) leg_j => leg_i  for w : j -> i.
/// Equivalently, a pseudo-natural transformation from the constant functor
/// at X to H; the checker reuses that reading.
struct PseudoCone {
    const PseudoFunctor* diagram = nullptr;
    int vertex = -1;
    std::vector<int> leg;  // per object of dom(H)
    std::vector<int> cell; // per 1-cell of dom(H)
};

ValidationReport check_pseudo_cone(const PseudoCone& cone);

/// A cone under a diagram F : I -> A (a cocone): legs F(i) -> L and
/// invertible cells  leg_i => leg_j ∘ F(u)  for u : i -> j.
struct PseudoCocone {
    const PseudoFunctor* diagram = nullptr;
    int vertex = -1;
    std::vector<int> leg;
    std::vector<int> cell;
};

ValidationReport check_pseudo_cocone(const PseudoCocone& cone);

/// True when every structure cell is an identity.
bool is_strict_cocone(const PseudoCocone& cone);

/// A morphism of cones with the same diagram and vertex: 2-cells
/// rho_j : theta_j => eta_j with rho_i ∘ theta_w = eta_w ∘ (H w rho_j).
struct ConeMorphism {
    const PseudoCone* src = nullptr;
    const PseudoCone* tgt = nullptr;
    std::vector<int> component;
};

ValidationReport check_cone_morphism(const ConeMorphism& m);

/// Witness that a 1-cell f : X -> Y is an equivalence inside its
/// 2-category: a pseudo-inverse g with invertible  g f => id_X  and
/// f g => id_Y.
struct EquivalenceCellWitness {
    int inverse;
    int unit;   // g f => id_X
    int counit; // f g => id_Y
};

std::optional<EquivalenceCellWitness> check_equivalence_1cell(const TwoCat& c,
                                                              int f);

} // namespace twocat

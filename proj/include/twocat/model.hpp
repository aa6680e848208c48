#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twocat/twocat.hpp"

namespace twocat {

/// Raised when a construction needs a filler for its canonical square and
/// the exhaustive search finds none: the hypothesis of the construction
/// fails on the given input.
struct NoFiller : Error {
    explicit NoFiller(const std::string& what) : Error(what) {}
};

/// A square asking for a diagonal, commuting up to a chosen invertible
/// 2-cell:
///
///          a
///      A -----> Y
///    i |  gamma | p        gamma : p a => b i,  invertible
///      v        v
///      X -----> B
///          b
struct LiftingSquare {
    int i = -1;     ///< A -> X
    int p = -1;     ///< Y -> B
    int a = -1;     ///< A -> Y
    int b = -1;     ///< X -> B
    int gamma = -1; ///< invertible 2-cell  p a => b i
};

/// All five cells exist, the boundaries frame a square and gamma is an
/// invertible 2-cell  p a => b i.
ValidationReport validate_lifting_square(const TwoCat& c,
                                         const LiftingSquare& sq);

/// A diagonal for a LiftingSquare: f crosses the square and lambda, rho
/// repair the two triangles,
///
///   lambda : a => f i,   rho : p f => b,   both invertible,
///
/// subject to the pasting equation  (rho i) . (p lambda) = gamma.
struct Filler {
    int f = -1;      ///< X -> Y
    int lambda = -1; ///< invertible 2-cell  a => f i
    int rho = -1;    ///< invertible 2-cell  p f => b
};

/// Exact evaluation of the filler conditions: false when a triangle cell
/// has the wrong frame, is not invertible, or the pasting equation fails;
/// InputError when f cannot be a diagonal of the square at all.
bool check_filler(const TwoCat& c, const LiftingSquare& sq,
                  const Filler& fill);

/// Exhaustive deterministic search, lexicographic in (f, lambda, rho);
/// the first filler found is returned.  An empty result is a proof that
/// the square has no filler.  InputError when the square is malformed.
std::optional<Filler> solve_lifting(const TwoCat& c, const LiftingSquare& sq);

/// Whether every square framed by i on the left and p on the right has a
/// filler: quantified over all tops, bottoms and invertible square cells.
bool pair_has_lifting(const TwoCat& c, int i, int p);

/// A presentation of f : C -> D as a retract of g : C' -> D' inside the
/// pseudo-arrow category: squares theta : f -> g and eta : g -> f
/// commuting up to the invertible theta_m, eta_m, whose composite is
/// isomorphic to the identity on f via mu0, mu1.
struct RetractData {
    int f = -1;       ///< C -> D, the retract
    int g = -1;       ///< C' -> D'
    int theta0 = -1;  ///< C -> C'
    int theta1 = -1;  ///< D -> D'
    int theta_m = -1; ///< invertible  g theta0 => theta1 f
    int eta0 = -1;    ///< C' -> C
    int eta1 = -1;    ///< D' -> D
    int eta_m = -1;   ///< invertible  f eta0 => eta1 g
    int mu0 = -1;     ///< invertible  eta0 theta0 => id_C
    int mu1 = -1;     ///< invertible  eta1 theta1 => id_D
};

/// The identity-framed presentation of f as a retract of itself.
RetractData identity_retract(const TwoCat& c, int f);

/// Exact check of the frames, the invertibility of the four 2-cells and
/// the compatibility equation
///
///   (mu1 f) . (eta1 theta_m) . (eta_m theta0)  =  f mu0.
///
/// False for a wrong or non-invertible 2-cell; InputError when the
/// 1-cells do not compose as a retraction diagram at all.
bool check_retract(const TwoCat& c, const RetractData& d);

/// A factorization of a 1-cell up to isomorphism, i first:
/// gamma : p i => f.
struct Factorization {
    int i = -1;     ///< X -> Z, applied first
    int p = -1;     ///< Z -> Y
    int gamma = -1; ///< invertible 2-cell  p i => f
};

/// The canonical square asking f to lift against the second factor of
/// its own factorization: top i, right p, left f, bottom the identity.
/// A filler realizes f as a retract of the first factor.
LiftingSquare first_factor_square(const TwoCat& c, int f,
                                  const Factorization& fac);

/// The mirror square: top the identity, right f, left i, bottom p.  A
/// filler realizes f as a retract of the second factor.
LiftingSquare second_factor_square(const TwoCat& c, int f,
                                   const Factorization& fac);

/// f as a retract of i, assembled from a filler (g, lambda, rho) of
/// first_factor_square as the tuple
///
///   (id, g, lambda, id, p, gamma^{-1}, id, rho).
///
/// The filler is searched for when not supplied; NoFiller when the
/// canonical square admits none, InputError when a supplied filler does
/// not fill it.  The result always passes check_retract.
RetractData retract_of_first_factor(const TwoCat& c, int f,
                                    const Factorization& fac,
                                    std::optional<Filler> fill = std::nullopt);

/// f as a retract of p, assembled from a filler (g, lambda, rho) of
/// second_factor_square as the tuple
///
///   (i, id, gamma, g, id, rho, lambda^{-1}, id).
RetractData retract_of_second_factor(const TwoCat& c, int f,
                                     const Factorization& fac,
                                     std::optional<Filler> fill = std::nullopt);

/// The square induced on the ambient pair (ir.g, pr.g) by a square on
/// their retracts: top theta0 a eta'0, bottom theta1 b eta'1 and the
/// square cell pasted from theta_m, gamma and eta'_m.  `pr` must present
/// sq.p as a retract of pr.g and `ir` must present sq.i as a retract of
/// ir.g, and both presentations must pass check_retract (InputError).
LiftingSquare transfer_square(const TwoCat& c, const LiftingSquare& sq,
                              const RetractData& pr, const RetractData& ir);

/// Pushes a filler of transfer_square(c, sq, pr, ir) back to a filler of
/// sq itself: the diagonal eta0 f theta'1, with the triangle cells pasted
/// from the retraction data.  `inner` must pass check_filler on the
/// transferred square (InputError otherwise); the result passes
/// check_filler on sq.  With identity retract presentations the inner
/// filler is returned unchanged.
Filler transfer_lifting(const TwoCat& c, const LiftingSquare& sq,
                        const RetractData& pr, const RetractData& ir,
                        const Filler& inner);

/// Three declared classes of 1-cells of one 2-category.
struct ModelClasses {
    std::vector<int> fibrations;
    std::vector<int> cofibrations;
    std::vector<int> weak_equivalences;
};

/// Right lifting property of p against every declared cofibration, and
/// left lifting property of i against every declared fibration, both
/// quantified over all squares.
bool has_rlp_against_cofibrations(const TwoCat& c, const ModelClasses& cls,
                                  int p);
bool has_llp_against_fibrations(const TwoCat& c, const ModelClasses& cls,
                                int i);

/// Verdict for one axiom of a closed 2-bmodel structure.  `checked` is
/// false when the axiom is outside the reach of finite enumeration;
/// `notes` carries counterexample descriptions, or the reason the axiom
/// is not checked.
struct AxiomVerdict {
    std::string axiom;
    bool checked = false;
    bool holds = false;
    std::vector<std::string> notes;
};

struct AxiomReport {
    std::vector<AxiomVerdict> verdicts;

    /// Every checked axiom holds.
    bool ok() const;

    const AxiomVerdict* find(const std::string& axiom) const;
};

/// Exhaustive check of the closed 2-bmodel axioms for the declared
/// classes, one verdict per axiom:
///
///   2-M0, 2-M0b  existence of finite weighted pseudo-/bi-(co)limits;
///                reported as not checked (no existence search is run).
///   2-M2   every 1-cell factors up to an invertible 2-cell both as
///          (cofibration-and-weak-equivalence, fibration) and as
///          (cofibration, fibration-and-weak-equivalence).
///   2-M5   two-of-three for triangles commuting up to an invertible
///          2-cell, and every isomorphism is a weak equivalence.
///   2-M6a  fibrations are exactly the 1-cells with the right lifting
///          property against every cofibration-and-weak-equivalence.
///   2-M6b  cofibrations are exactly the 1-cells with the left lifting
///          property against every fibration-and-weak-equivalence.
///   2-M6c  weak equivalences are exactly the 1-cells factoring as u v
///          with u lifting on the right against all cofibrations and v
///          lifting on the left against all fibrations.
///
/// plus redundancy checks of the consequences of 2-M6a/b/c:
///
///   2-M1   a cofibration and a fibration lift whenever one of the two
///          is a weak equivalence.
///   2-M3b  fibrations and cofibrations are closed under composition,
///          and every isomorphism is both (the bi-(co)limit closure
///          parts are outside this check).
///   2-M4b  not checked: recognizing bi-pullback squares is outside the
///          scope of this checker.
///   2-M7   the three classes are closed under invertible 2-cells.
AxiomReport check_model_axioms(const TwoCat& c, const ModelClasses& cls);

} // namespace twocat

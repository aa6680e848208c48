#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "twocat/kan.hpp"
#include "twocat/shape.hpp"

namespace twocat {

/// Raised when the stated hypothesis of a calculus operation fails on the
/// given input: the caller asked to exploit a fact that does not hold
/// (e.g. `equalize` on 2-cells the hom colimit does not identify).
struct HypothesisFails : Error {
    explicit HypothesisFails(const std::string& what) : Error(what) {}
};

/// A finitely presented pro-object: a strict contravariant 2-functor from
/// a finite 2-filtered index 2-category I into a finite target C, stored
/// as a strict functor out of an owned copy of op(I).  `op` preserves all
/// cell indices, so values are addressed by the cells of I directly:
///
///   ob(i)   = X_i                  for an object  i        of I,
///   one(u)  = X_u : X_i' -> X_i    for a 1-cell   u : i -> i',
///   two(mu) = X_mu : X_u => X_v    for a 2-cell   mu : u => v.
///
/// Move-only: `fun.dom` points at the owned opposite, and `index` may
/// point at `owned_index` when the pro-object carries its own index.
struct ProObject {
    const TwoCat* index = nullptr;       ///< the index 2-category I
    const TwoCat* target = nullptr;      ///< the target 2-category C
    std::unique_ptr<TwoCat> owned_index; ///< engaged by constant_pro_object
    std::unique_ptr<TwoCat> iop;         ///< owned op(I)
    PseudoFunctor fun;                   ///< iop -> target

    ProObject() = default;
    ProObject(const ProObject&) = delete;
    ProObject& operator=(const ProObject&) = delete;
    ProObject(ProObject&&) = default;
    ProObject& operator=(ProObject&&) = default;

    int ob(int i) const;
    int one(int u) const;
    int two(int mu) const;
};

/// Assembles a pro-object from value tables indexed by the cells of I,
/// reversing 1-cells: one[u] must run X_{tgt u} -> X_{src u} in C.  Only
/// table sizes are checked here (InputError); the laws are the business
/// of validate_pro_object.
ProObject make_pro_object(const TwoCat& I, const TwoCat& C,
                          std::vector<int> ob, std::vector<int> one,
                          std::vector<int> two);

/// The pro-object concentrated in one target object: the index is an
/// owned terminal 2-category and every value table is (the identity of) c.
ProObject constant_pro_object(const TwoCat& C, int c);

/// A value-table copy of X.  When X owns its index the clone owns a copy
/// of it; otherwise both share the caller's index.
ProObject clone_pro_object(const ProObject& X);

/// The index is 2-filtered ("index: ..."), the value tables are a valid
/// pseudo-functor out of the opposite index ("value: ...") and the
/// functor is strict ("strict"): non-identity coherence cells are
/// reported, since every operation below computes with strict values.
ValidationReport validate_pro_object(const ProObject& X);

/// The morphisms from a pro-object X into a single target object d of C,
/// presented by the filtered colimit, over the index of X, of the hom
/// categories C(X_i, d) glued along precomposition with the X_u:
///
///   colimit object (i, r)   --  a 1-cell r : X_i -> d,  "r pi_i";
///   colimit class           --  an equalization class of 2-cells.
///
/// The class of an ambient 2-cell theta under leg(i) presents the
/// whisker "theta pi_i".  Move-only: `diagram->dom == source->index` and
/// `colim->diagram == diagram.get()`.
struct HomLevel {
    const ProObject* source = nullptr;    ///< X
    int target_ob = -1;                   ///< d
    std::vector<HomCat> dec;              ///< per index object: C(X_i, d)
    std::unique_ptr<Cat2Functor> diagram; ///< i |-> C(X_i, d)
    std::unique_ptr<LLColimit> colim;

    HomLevel() = default;
    HomLevel(const HomLevel&) = delete;
    HomLevel& operator=(const HomLevel&) = delete;
    HomLevel(HomLevel&&) = default;
    HomLevel& operator=(HomLevel&&) = default;

    /// Colimit object presenting r : X_i -> d; InputError when r is not
    /// a 1-cell X_i -> d of the target.
    int object_of(int i, int r) const;

    /// Decode of a colimit object into (index object, ambient 1-cell).
    std::pair<int, int> pair_of(int o) const;

    /// Class of an ambient 2-cell theta between 1-cells X_i -> d: the
    /// image of theta under leg(i), presenting "theta pi_i".
    int leg_class(int i, int theta) const;

    /// The invertible class "r pi_u" : (i', r X_u) -> (i, r) for a
    /// 1-cell u : i -> i' of the index: the inverse of the colimit's
    /// structural component at r.  Error when that component fails to
    /// be invertible (index not 2-filtered).
    int transition(int u, int r) const;
};

HomLevel hom_level(const ProObject& X, int d);

/// Postcomposition with an ambient 1-cell h : from.target_ob ->
/// to.target_ob between two levels of the same pro-object: objects
/// (i, t) -> (i, h t); classes member by member (all members must land
/// in a single class, which presents the whisker "h m").
int postcompose_object(const HomLevel& from, const HomLevel& to, int h, int o);
int postcompose_class(const HomLevel& from, const HomLevel& to, int h, int m);

/// The category of pro-morphisms X -> Y and pro-2-cells between them,
/// computed level by level: one hom level of X per index object j of Y
/// (inner filtered colimits), glued over the opposite of Y's index by
/// postcomposition with the Y_a (outer pseudo-limit of categories).
///
/// An object f of cat() is a pro-morphism, with decode
///   component(f, j)  --  the class "pi_j f" in level[j],
///   coherence(f, a)  --  the invertible class "pi_a f" from the
///                        Y_a-postcomposition of component(f, j') to
///                        component(f, j), for a : j -> j';
/// a morphism m : f -> g of cat() is a pro-2-cell, with per-level
/// components component_mor(m, j) : component(f, j) -> component(g, j).
struct ProHom {
    const ProObject* src = nullptr;     ///< X
    const ProObject* tgt = nullptr;     ///< Y
    std::vector<HomLevel> level;        ///< per index object j of Y
    std::unique_ptr<Cat2Functor> outer; ///< over op(index of Y)
    std::unique_ptr<DescentCat> desc;

    ProHom() = default;
    ProHom(const ProHom&) = delete;
    ProHom& operator=(const ProHom&) = delete;
    ProHom(ProHom&&) = default;
    ProHom& operator=(ProHom&&) = default;

    const FinCat& cat() const { return desc->cat; }

    int component(int f, int j) const;
    int coherence(int f, int a) const;
    int component_mor(int m, int j) const;
};

/// Both pro-objects must validate and share the target 2-category
/// (pointer equality); InputError otherwise.
ProHom pro_hom(const ProObject& X, const ProObject& Y);

/// The identity pro-morphism as an object of pro_hom(X, X): levels
/// decode to (j, id_{X_j}) with the canonical coherence classes.  The
/// two presentations must carry identical value tables (X itself or a
/// clone); InputError otherwise.
int identity_prohom(const ProHom& E);

/// Precomposition with a pro-morphism g : W -> V, an object of
/// G = pro_hom(W, V): maps a level of V at d (`from`) to the level of W
/// at the same d (`to`).  Objects (m, t) -> t g, the postcomposition of
/// the decode of "pi_m g" with t; classes member by member through the
/// coherence classes of g (presenting the whisker "x g").
int precompose_object(const HomLevel& from, const HomLevel& to,
                      const ProHom& G, int g, int o);
int precompose_class(const HomLevel& from, const HomLevel& to,
                     const ProHom& G, int g, int m);

/// Decodes the canonical projection data of X inside its own hom levels
/// (pi_i is the class (i, id_{X_i}) in the level of X at X_i; pi_u, for
/// u : i -> i', the canonical class (i', X_u) -> (i, id_{X_i})) and
/// checks the cone laws:
///   PC0  pi_{id_i} is the identity class on pi_i;
///   PC1  pi_{u'u} = pi_u ∘ (X_u-postcomposition of pi_{u'});
///   PC2  pi_u = pi_v ∘ "X_mu pi_{i'}"  for every mu : u => v.
ValidationReport check_projection_cone(const ProObject& X);

/// A presentation of a pro-morphism f : X -> Y at level j by a single
/// target 1-cell: r : X_i -> Y_j together with an invertible class
/// phi : (i, r) -> component(f, j) of level j ("phi : r pi_i => pi_j f").
struct Representative {
    int i = -1;   ///< index object of X
    int j = -1;   ///< index object of Y
    int r = -1;   ///< ambient 1-cell X_i -> Y_j
    int phi = -1; ///< invertible class of level j
};

/// Exact check of the defining square: returns false when phi fails to
/// run (i, r) -> component(f, j) or is not invertible.  InputError when
/// the cells do not exist at all (f or phi out of range, r not a 1-cell
/// X_i -> Y_j).
bool check_represents(const ProHom& E, const Representative& rep, int f);

/// The canonical representative of f at level j: the decode (i, r) of
/// component(f, j) itself, with identity phi.  Always passes
/// check_represents.
Representative find_representative(const ProHom& E, int f, int j);

/// A presentation of a pro-2-cell m : f => g at level j: representatives
/// of f and g sharing (i, j), plus an ambient theta : left.r => right.r
/// such that   right.phi ∘ "theta pi_i"  =  component_mor(m, j) ∘ left.phi.
struct TwoCellRepresentative {
    Representative left;  ///< represents the source of m
    Representative right; ///< represents the target of m (same i and j)
    int theta = -1;       ///< ambient 2-cell left.r => right.r
};

bool check_represents_2cell(const ProHom& E, const TwoCellRepresentative& w,
                            int m);

/// A representative of m at level j over a common source index: both
/// endpoint decodes are pushed along a straightening cospan, so the
/// returned phi/psi are transition classes and theta is invertible
/// whenever m is.
TwoCellRepresentative find_representative_2cell(const ProHom& E, int m, int j);

/// Straightening data for a class m : (i, r) -> (i', s) of a hom level:
/// a cospan u : i -> k, v : i' -> k and an ambient theta : r X_u => s X_v
/// with   m ∘ "r pi_u"  =  "s pi_v" ∘ "theta pi_k"   in the colimit.
struct Straightened {
    int k = -1;     ///< apex index object
    int u = -1;     ///< i  -> k
    int v = -1;     ///< i' -> k
    int theta = -1; ///< ambient 2-cell r X_u => s X_v
};

/// Extracts straightening data from the members of the class,
/// deterministically (smallest (k, u, v, theta), preferring the identity
/// cospan), restricting to u == v when i == i' and to invertible theta
/// when m is invertible.  Error when no member satisfies the applicable
/// restrictions -- the index is then not 2-filtered.
Straightened straighten(const HomLevel& L, int m);

/// A single 1-cell u : i -> i' of the index with theta X_u = theta' X_u
/// on the nose in the target, simultaneously for every given pair of
/// parallel ambient 2-cells between 1-cells X_i -> d (the target d may
/// differ between pairs).  The identity is tried first, so equal pairs
/// return id_i.  The hypothesis that each pair is identified by its hom
/// level ("theta pi_i = theta' pi_i") is verified up front;
/// HypothesisFails when it does not hold, Error when the hypothesis
/// holds but no single 1-cell works (index not 2-filtered).
int equalize(const ProObject& X, int i,
             const std::vector<std::pair<int, int>>& pairs);

/// The 2-category of representatives of one pro-morphism f : X -> Y,
/// with X over I and Y over J:
///   objects  (i, j, r, phi)          -- (r, phi) represents f;
///   1-cells  (u, a, theta) : (i,j,r,phi) -> (i',j',s,psi)  --
///            u : i -> i' of I, a : j -> j' of J and an invertible
///            theta : Y_a s => r X_u   with
///              phi ∘ "r pi_u" ∘ "theta pi_i'"
///                 = "pi_a f" ∘ (Y_a-postcomposition of psi);
///   2-cells  (mu, alpha) : (u,a,theta) => (v,b,eta)  --
///            mu : u => v, alpha : a => b with
///              eta ∘ (Y_alpha ⋆ s) = (r ⋆ X_mu) ∘ theta   in the target.
/// Composition is componentwise in both indices with pasted witnesses.
/// The whole 2-category is enumerated and every defining equation is
/// checked cell by cell, so the attached shape reports are exact.
struct MfTruncation {
    const ProHom* hom = nullptr;
    int f = -1;

    std::unique_ptr<TwoCat> cells;

    std::vector<Representative> ob_data;
    struct OneCell {
        int u, a, theta;
    };
    std::vector<OneCell> one_data;
    struct TwoCell {
        int mu, alpha;
    };
    std::vector<TwoCell> two_data;

    PseudoFunctor to_source_index; ///< cells -> I, (i,j,r,phi) |-> i
    PseudoFunctor to_target_index; ///< cells -> J, (i,j,r,phi) |-> j

    ValidationReport filtered;       ///< check_2filtered on cells
    ValidationReport source_cofinal; ///< check_2cofinal on the I projection
    ValidationReport target_cofinal; ///< check_2cofinal on the J projection

    MfTruncation() = default;
    MfTruncation(const MfTruncation&) = delete;
    MfTruncation& operator=(const MfTruncation&) = delete;
    MfTruncation(MfTruncation&&) = default;
    MfTruncation& operator=(MfTruncation&&) = default;
};

/// Enumerates the representative 2-category of f completely.  `bound`
/// caps every cell dimension of the result (BoundTooSmall past it); a
/// composite that misses the enumeration indicates a broken hom decode
/// and throws Error.
MfTruncation build_Mf(const ProHom& E, int f, int bound);

/// A strict finite diagram of pro-objects over an outer index J, the
/// input shape for build_KX: one pro-object per object of J (all into
/// one target), every hom category pro_hom(value[j'], value[j])
/// precomputed, one transition pro-morphism per 1-cell a : j -> j' of J
/// (an object of hom_of(a), running value[j'] -> value[j]) and one
/// transition pro-2-cell per 2-cell of J.
struct ProDiagram {
    const TwoCat* index = nullptr;  ///< J
    const TwoCat* target = nullptr; ///< C
    std::vector<ProObject> value;
    /// hom[j][j'] presents the pro-morphisms value[j'] -> value[j].
    std::vector<std::vector<std::unique_ptr<ProHom>>> hom;
    std::vector<int> one; ///< 1-cell a of J -> object of hom_of(a)
    std::vector<int> two; ///< non-identity 2-cell of J -> morphism there

    ProDiagram() = default;
    ProDiagram(const ProDiagram&) = delete;
    ProDiagram& operator=(const ProDiagram&) = delete;
    ProDiagram(ProDiagram&&) = default;
    ProDiagram& operator=(ProDiagram&&) = default;

    const ProHom& hom_of(int a) const;

    /// two[alpha], resolving identity 2-cells of J to the identity
    /// morphism on one[a] so callers only fill genuine entries.
    int two_of(int alpha) const;
};

/// Builds the pairwise homs of the values.  Transition tables start
/// unset (-1) except that every one[id_j] is preset to the canonical
/// identity pro-morphism; the caller fills the rest and then validates.
ProDiagram init_pro_diagram(const TwoCat& J, std::vector<ProObject> value);

/// The constant diagram at (clones of) X, with identity transitions.
ProDiagram constant_pro_diagram(const TwoCat& J, const ProObject& X);

/// Transition cells are present with the right boundaries ("pd-one",
/// "pd-two"), identities are the canonical ones ("pd-identity"),
/// vertical composition of transition 2-cells is respected
/// ("pd-two-vertical") and 1-cell composition is strict: precomposing
/// the decoded components of one[a] with one[a'] lands exactly on the
/// components of one[a' ∘ a] ("pd-compose").
ValidationReport validate_pro_diagram(const ProDiagram& D);

/// The glued index of a strict diagram of pro-objects over J, with the
/// composed pro-object over it:
///   0-cells  (i, j)                  -- j of J, i of the index of X^j;
///   1-cells  (a, r, phi) : (i,j) -> (i',j')  -- a : j -> j' of J and
///            (r, phi) representing the transition X^a at (i', i),
///            r : X^j'_i' -> X^j_i;
///   2-cells  (alpha, theta) : (a,r,phi) => (b,s,psi)  -- alpha : a => b
///            of J and theta : r => s with
///              psi ∘ "theta pi_i'"  =  "pi_i X^alpha" ∘ phi.
/// 1-cells compose as (a',r',phi')(a,r,phi) = (a'a, r r', phi'') with
/// phi'' pasted from the r-postcomposition of phi' and the
/// X^a'-precomposition of phi; `total` (values X^j_i, r, theta) is the
/// pro-object the whole diagram composes into.
struct KXTruncation {
    const ProDiagram* diagram = nullptr;

    std::unique_ptr<TwoCat> cells;

    std::vector<std::pair<int, int>> ob_data; ///< 0-cell -> (i, j)
    struct OneCell {
        int a, r, phi;
    };
    std::vector<OneCell> one_data;
    struct TwoCell {
        int alpha, theta;
    };
    std::vector<TwoCell> two_data;

    PseudoFunctor to_outer_index; ///< cells -> J
    ProObject total;              ///< over cells
    ValidationReport filtered;    ///< check_2filtered on cells

    KXTruncation() = default;
    KXTruncation(const KXTruncation&) = delete;
    KXTruncation& operator=(const KXTruncation&) = delete;
    KXTruncation(KXTruncation&&) = default;
    KXTruncation& operator=(KXTruncation&&) = default;
};

/// Enumerates the glued index completely, checking every representability
/// equation.  The diagram must validate (InputError otherwise); `bound`
/// caps every cell dimension (BoundTooSmall past it).
KXTruncation build_KX(const ProDiagram& D, int bound);

/// Evidence, one target object at a time, that restriction along F
/// preserves the hom colimits: the canonical comparison functor between
/// the colimit over the restricted index and the original one, with its
/// equivalence verdict.
struct ReindexCertificate {
    int target_ob = -1;
    HomLevel original;                       ///< level of X at target_ob
    std::unique_ptr<Cat2Functor> restricted; ///< original diagram along F
    std::unique_ptr<LLColimit> restricted_colim;
    CatFunctor comparison; ///< restricted colimit -> original colimit
    EquivalenceVerdict verdict;

    ReindexCertificate() = default;
    ReindexCertificate(const ReindexCertificate&) = delete;
    ReindexCertificate& operator=(const ReindexCertificate&) = delete;
    ReindexCertificate(ReindexCertificate&&) = default;
    ReindexCertificate& operator=(ReindexCertificate&&) = default;
};

struct ReindexResult {
    ProObject object; ///< X restricted along F, over the domain of F
    std::vector<ReindexCertificate> certificate; ///< per target object

    bool equivalent() const;
};

/// Restriction of X along a strict 2-cofinal F into X's index (pointer
/// equality on the codomain) with a 2-filtered domain; InputError when
/// any of that fails.  The certificates cover every object of the
/// target.
ReindexResult reindex_pro(const ProObject& X, const PseudoFunctor& F);

} // namespace twocat

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "twocat/maps.hpp"

namespace twocat {

/// Filteredness of a finite 2-category, reported axiom by axiom:
///  F0  every two objects admit a cospan of 1-cells;
///  F1  every two parallel 1-cells admit a 1-cell that joins them up to an
///      invertible 2-cell after composition;
///  F2  every two parallel 2-cells are equalized by whiskering with some
///      1-cell.
/// Violations are tagged "non-empty", "F0", "F1", "F2" with the offending
/// cells named.
ValidationReport check_2filtered(const TwoCat& I);

/// Cofinality of a map F : I -> J, reported axiom by axiom:
///  CF0  every object of J admits a 1-cell into some F(i);
///  CF1  every two 1-cells j -> F(i) are joined, after composing with some
///       F(u : i -> i'), by an invertible 2-cell of J;
///  CF2  every two parallel 2-cells between 1-cells j -> F(i) are equalized
///       by whiskering with some F(u).
/// Violations are tagged "CF0", "CF1", "CF2".
ValidationReport check_2cofinal(const PseudoFunctor& F);

/// A finite diagram in a 2-category J: a shape category, value tables into
/// the underlying category of J, and a chosen final object of the shape.
struct MJElement {
    FinCat shape;
    std::vector<int> ob;  // shape object   -> object of J
    std::vector<int> mor; // shape morphism -> 1-cell of J
    int star = -1;        // chosen final object of the shape
};

/// Size measure used for truncation: objects plus non-identity morphisms.
int diagram_cells(const MJElement& d);

/// The shape validates, the value tables are a functor into the underlying
/// category of J, and `star` is a final object of the shape.
ValidationReport validate_diagram(const TwoCat& J, const MJElement& d);

/// Whether `a` embeds into `b` as a subdiagram: an injective functor
/// between the shapes commuting with the values in J.  The chosen final
/// objects play no role here.
bool diagram_leq(const TwoCat& J, const MJElement& a, const MJElement& b);

/// Whether the diagrams are isomorphic over J.
bool diagram_iso(const TwoCat& J, const MJElement& a, const MJElement& b);

/// The poset of isomorphism classes of diagrams in J of at most `bound`
/// cells, ordered by the subdiagram relation, together with the projection
/// pseudo-functor onto J that sends a class to the value of its chosen
/// final object and a relation to the value of the connecting morphism.
///
/// Move-only:  `phi` points at the owned 2-categorical shell `as2`.
struct MJPoset {
    const TwoCat* J = nullptr;
    int bound = 0;
    std::vector<MJElement> elems;       // canonical class representatives
    std::vector<std::vector<char>> leq; // subdiagram order on classes
    FinCat poset;                       // thin category of the order
    std::unique_ptr<TwoCat> as2;        // the poset as a 2-category
    PseudoFunctor phi;                  // as2 -> J
    ValidationReport report;            // value well-definedness + functor laws

    MJPoset() = default;
    MJPoset(const MJPoset&) = delete;
    MJPoset& operator=(const MJPoset&) = delete;
    MJPoset(MJPoset&&) = default;
    MJPoset& operator=(MJPoset&&) = default;

    /// Class of a diagram up to isomorphism over J; -1 when the diagram is
    /// not isomorphic to any enumerated representative.
    int find_class(const MJElement& d) const;

    /// Number of subdiagram classes of element x (size of its down-set),
    /// a finiteness certificate for the truncation.
    int downset_size(int x) const;
};

/// Enumerates all diagram classes with at most `bound` cells.  The report
/// member records any failure of the projection values to be independent
/// of the chosen embeddings, and the coherence verdict for `phi`.
MJPoset build_MJ(const TwoCat& J, int bound);

/// Directedness of the truncated poset: every two classes admit an upper
/// bound, found among the enumerated classes or constructed explicitly
/// (grafting one diagram onto the other's final object, or joining both
/// under a fresh final object over a cospan in J).  Constructed witnesses
/// may use up to bound+slack cells; failures are tagged "filtered".
ValidationReport check_MJ_filtered(const MJPoset& M, int slack);

/// Cofinality of the projection onto J, with witnesses drawn from the
/// enumerated classes or constructed by extending a diagram with a fresh
/// final object (within bound+slack cells).  Failures are tagged "CF0",
/// "CF1", "CF2".
ValidationReport check_phi_cofinal(const MJPoset& M, int slack);

/// The 2-category of composable paths in a category A: objects of A,
/// tuples of composable non-identity morphisms as 1-cells (the empty
/// tuple is the identity), concatenation as composition, and exactly one
/// invertible 2-cell between parallel tuples with equal composites.
///
/// Only tuples of length at most the construction bound are materialized;
/// building throws BoundTooSmall when concatenation escapes the bound
/// (always the case when A has composable cycles).
struct HatTwoCat {
    const FinCat* base = nullptr;
    TwoCat cat;
    std::vector<int> tuple_src;               // 1-cell -> base object
    std::vector<std::vector<int>> tuple_factors; // 1-cell -> base morphisms
    std::vector<std::vector<int>> theta;      // [s][t] -> 2-cell or -1

    /// 1-cell with the given source object and factor list; -1 if absent.
    int tuple_cell(int src_ob, const std::vector<int>& factors) const;

    /// Composite of the factors in the base category.
    int composite_of(int one_cell) const;
};

HatTwoCat build_hat(const FinCat& A, int max_len);

/// The canonical embedding T : A -> hat(A) (as a map of 2-categories,
/// with A viewed discretely): identity on objects, singleton tuples on
/// non-identity morphisms, the empty tuple on identities.  `A2` must be
/// the caller-owned discrete shell of the base category.
PseudoFunctor hat_unit(const HatTwoCat& hat, const TwoCat& A2);

/// The strict evaluation induced on path tuples by a (possibly non-strict)
/// map F out of the discrete shell of the base: objects and folds of
/// 1-cell values, and on each 2-cell the canonical comparison built from
/// the coherence cells of F.
struct HatTransport {
    const HatTwoCat* hat = nullptr;
    const PseudoFunctor* source = nullptr;
    std::vector<int> apply_obj; // base object -> codomain object
    std::vector<int> apply1;    // tuple 1-cell -> codomain 1-cell
    std::vector<int> apply2;    // tuple 2-cell -> codomain 2-cell
};

HatTransport transport_along_hat(const HatTwoCat& hat, const PseudoFunctor& F);

/// The transport is strictly functorial in all dimensions (identities,
/// concatenation, vertical and horizontal pasting) and restricts along
/// the canonical embedding to exactly the original map: singleton tuples
/// carry the original 1-cell values and the comparison cells between
/// (f,g) and its composite recover the coherence cells of F.
ValidationReport check_transport(const HatTwoCat& hat, const HatTransport& t);

} // namespace twocat

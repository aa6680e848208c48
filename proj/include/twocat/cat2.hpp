#pragma once

#include <memory>
#include <vector>

#include "twocat/functor.hpp"
#include "twocat/twocat.hpp"

namespace twocat {

/// Every functor A -> B, enumerated by boundary-constrained backtracking
/// over value tables, in a deterministic (lexicographic) order.
std::vector<CatFunctor> all_functors(const FinCat& A, const FinCat& B);

/// Every natural transformation F => G as a component table, in
/// lexicographic order.  F and G must be parallel.
std::vector<std::vector<int>> all_nattrans(const CatFunctor& F,
                                           const CatFunctor& G);

/// The strict 2-category whose objects are the given categories, with all
/// functors as 1-cells and all natural transformations as 2-cells.  Owns
/// copies of the input categories so the decoded functors stay valid; the
/// struct is move-only for that reason.
struct CatTwoCat {
    std::vector<std::unique_ptr<FinCat>> cats; // per object
    TwoCat two;
    std::vector<CatFunctor> fun;        // per 1-cell of `two`
    std::vector<std::vector<int>> nat;  // per 2-cell: component table

    CatTwoCat() = default;
    CatTwoCat(const CatTwoCat&) = delete;
    CatTwoCat& operator=(const CatTwoCat&) = delete;
    CatTwoCat(CatTwoCat&&) = default;
    CatTwoCat& operator=(CatTwoCat&&) = default;

    /// Index of a functor among the 1-cells; -1 when absent (e.g. endpoint
    /// categories are not among the objects).
    int find_one(int src_cat, int tgt_cat, const CatFunctor& F) const;

    /// Index of a natural transformation f => g with these components.
    int find_two(int f, int g, const std::vector<int>& components) const;
};

CatTwoCat cat_2cat(const std::vector<FinCat>& cats);

} // namespace twocat

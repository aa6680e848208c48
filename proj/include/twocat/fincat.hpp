#pragma once

#include <string>
#include <vector>

#include "twocat/report.hpp"

namespace twocat {

/// A finite category given by explicit tables.
///
/// Objects and morphisms are referred to by dense integer indices; every
/// cell also carries a stable string id used in files, reports and error
/// messages.  `comp[g][f]` holds the composite `g ∘ f` ("g after f") and is
/// -1 when the pair is not composable.  Instances are plain data: fill the
/// fields (or use the helpers below), call `validate_fincat`, and treat the
/// value as immutable afterwards.
struct FinCat {
    std::vector<std::string> objects;
    std::vector<std::string> morphisms;
    std::vector<int> src;               // morphism -> object
    std::vector<int> tgt;               // morphism -> object
    std::vector<int> id_of;             // object -> identity morphism
    std::vector<std::vector<int>> comp; // comp[g][f] = g∘f, -1 if undefined

    int ob_count() const { return static_cast<int>(objects.size()); }
    int mor_count() const { return static_cast<int>(morphisms.size()); }

    /// Index lookup by id; returns -1 when absent.
    int object_index(const std::string& id) const;
    int morphism_index(const std::string& id) const;

    bool composable(int g, int f) const { return tgt[f] == src[g]; }

    /// Composite g∘f.  Throws UnknownCell / NotComposable on misuse.
    int compose(int g, int f) const;

    /// Fold a non-empty chain m_n ∘ ... ∘ m_1 given in application order
    /// (m_1 first).
    int compose_chain(const std::vector<int>& application_order) const;

    /// All morphisms x -> y.
    std::vector<int> hom(int x, int y) const;

    /// True if m has a two-sided inverse.
    bool is_iso(int m) const;

    /// Two-sided inverse of m, or -1.
    int inverse(int m) const;

    /// Objects t such that every object has exactly one morphism into t.
    std::vector<int> final_objects() const;

    // -- construction helpers ------------------------------------------------

    /// Adds an object together with its identity morphism "id_<name>".
    int add_object(const std::string& name);

    /// Adds a non-identity morphism; composition entries start undefined.
    int add_morphism(const std::string& name, int src_ob, int tgt_ob);

    /// Defines g∘f = gf (indices).  Overwrites any previous entry.
    void set_comp(int g, int f, int gf);

    /// Fills every composite involving an identity with the evident value,
    /// leaving already-defined entries untouched.
    void fill_identity_composites();
};

/// Validates all category laws and id-table consistency.  The report lists
/// one entry per violated law instance, in deterministic order.  Structural
/// problems (out-of-range indices) are reported as "dangling" entries and
/// make the deeper law checks for the offending cell moot.
ValidationReport validate_fincat(const FinCat& c);

/// The terminal category (one object "*").
FinCat terminal_cat();

/// Free category on the graph 0 -> 1 (a single arrow "a01").
FinCat arrow_cat();

/// 0 -> 2 <- 1 with no other non-identity morphisms.
FinCat cospan_cat();

/// Two objects 0, 1 with an isomorphism pair a: 0->1, b: 1->0.
FinCat isopair_cat();

/// Chain 0 -> 1 -> 2 as a poset (composites collapse).
FinCat chain3_cat();

/// Two parallel arrows a, b : 0 -> 1.
FinCat parallel_pair_cat();

/// Prints a short human-readable summary (sizes plus cell ids).
std::string describe(const FinCat& c);

} // namespace twocat

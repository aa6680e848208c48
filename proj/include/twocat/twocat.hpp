#pragma once

#include <string>
#include <vector>

#include "twocat/fincat.hpp"

namespace twocat {

/// A finite strict 2-category, flattened into global tables.
///
/// 1-cells and 2-cells live in single global lists; each 2-cell records the
/// parallel 1-cells it runs between.  The three composition tables are
///   hcomp1[g][f]      = g∘f            (1-cells, f applied first)
///   vcomp[b][a]       = b∘a            (2-cells in one hom, a first)
///   hcomp2[beta][alpha] = beta alpha   (juxtaposition; alpha is the
///                                       inner/right factor, beta the outer)
/// all -1 when undefined.  As with FinCat, values are plain data, validated
/// by `validate_twocat` and treated as immutable afterwards.
struct TwoCat {
    std::vector<std::string> objects;

    std::vector<std::string> one_cells;
    std::vector<int> src1, tgt1; // 1-cell -> object
    std::vector<int> id1;        // object -> identity 1-cell

    std::vector<std::string> two_cells;
    std::vector<int> src2, tgt2; // 2-cell -> 1-cell
    std::vector<int> id2;        // 1-cell -> identity 2-cell

    std::vector<std::vector<int>> hcomp1;
    std::vector<std::vector<int>> vcomp;
    std::vector<std::vector<int>> hcomp2;

    int ob_count() const { return static_cast<int>(objects.size()); }
    int one_count() const { return static_cast<int>(one_cells.size()); }
    int two_count() const { return static_cast<int>(two_cells.size()); }

    int object_index(const std::string& id) const;
    int one_index(const std::string& id) const;
    int two_index(const std::string& id) const;

    bool composable1(int g, int f) const { return tgt1[f] == src1[g]; }
    bool vcomposable(int b, int a) const { return tgt2[a] == src2[b]; }
    bool hcomposable(int beta, int alpha) const {
        return composable1(src2[beta], src2[alpha]);
    }

    /// Composite tables with boundary and definedness checks; throw
    /// UnknownCell / NotComposable / Error on misuse.
    int hcompose1(int g, int f) const;
    int vcompose(int b, int a) const;   // b after a
    int hcompose2(int beta, int alpha) const;

    /// Whiskers: whisker_left(h, a) = "h a" (h applied after a's boundary),
    /// whisker_right(a, h) = "a h" (h applied first).
    int whisker_left(int h, int a) const;  // id2[h] juxtaposed outer
    int whisker_right(int a, int h) const; // id2[h] juxtaposed inner

    bool is_invertible2(int a) const { return inverse2(a) >= 0; }
    int inverse2(int a) const; // vertical inverse, -1 when none

    std::vector<int> one_hom(int x, int y) const;          // 1-cells x -> y
    std::vector<int> two_hom(int f, int g) const;          // 2-cells f => g

    // -- construction helpers ------------------------------------------------

    int add_object(const std::string& name);
    int add_one_cell(const std::string& name, int src_ob, int tgt_ob);
    int add_two_cell(const std::string& name, int src_one, int tgt_one);
    void set_hcomp1(int g, int f, int gf);
    void set_vcomp(int b, int a, int ba);
    void set_hcomp2(int beta, int alpha, int r);

    /// Fills identity entries in all three tables: g∘id, id∘f at level 1,
    /// vertical composites with identity 2-cells, and juxtapositions where
    /// one factor is the identity 2-cell of an identity 1-cell.
    void fill_identity_composites();

    /// Derives every undefined hcomp2 entry as (beta tgt-whisker)∘(src-whisker
    /// alpha), i.e. beta alpha := (beta f')∘(g alpha) where alpha: f=>f' and
    /// beta: g=>g'; requires the needed whisker entries and vertical
    /// composites to be present already.
    void fill_hcomp2_from_whiskers();
};

/// Exhaustive law check: globular boundaries, the underlying 1-category,
/// every hom category, juxtaposition functoriality (units, associativity,
/// unit 1-cells) and the interchange law on all 2x2 grids.
ValidationReport validate_twocat(const TwoCat& c);

/// The underlying category of objects and 1-cells.
FinCat underlying_onecat(const TwoCat& c);

/// A hom category hom(x, y) extracted from a 2-category, with index maps
/// back into the ambient structure.
struct HomCat {
    FinCat cat;
    std::vector<int> one_of_ob; // object of cat -> ambient 1-cell
    std::vector<int> two_of_mor; // morphism of cat -> ambient 2-cell
    std::vector<int> ob_of_one;  // ambient 1-cell -> object of cat, -1 outside
    std::vector<int> mor_of_two; // ambient 2-cell -> morphism of cat, -1 outside
};

HomCat hom_category(const TwoCat& c, int x, int y);

/// Reverses 1-cells only (2-cells keep their direction); horizontal
/// composition swaps arguments.
TwoCat op(const TwoCat& c);

/// The 2-category with the same objects and morphisms as `c` and only
/// identity 2-cells.
TwoCat discrete2(const FinCat& c);

/// The one-object, one-1-cell 2-category.
TwoCat terminal_twocat();

std::string describe(const TwoCat& c);

} // namespace twocat

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "twocat/fincat.hpp"
#include "twocat/functor.hpp"
#include "twocat/kan.hpp"
#include "twocat/maps.hpp"
#include "twocat/model.hpp"
#include "twocat/pro.hpp"
#include "twocat/twocat.hpp"

namespace twocat {

/// A structure file that does not match its schema: missing or mistyped
/// fields, unsupported `format_version`, duplicate cell names, ...
struct SchemaError : InputError {
    SchemaError(const std::string& where, const std::string& what)
        : InputError(where + ": " + what) {}
};

/// A name in a structure file that does not resolve to a cell.
struct UnknownName : InputError {
    UnknownName(const std::string& where, const std::string& what)
        : InputError(where + ": " + what) {}
};

/// Owns every structure deserialized from files so that pointer-linked
/// aggregates (functors, squares, pro-objects) stay valid for the whole
/// batch run.  Categories loaded from a file are shared by canonical
/// path: two files referring to the same `.2cat` see one instance, which
/// is what the pointer-identity checks of the library expect.
struct Workspace {
    std::vector<std::unique_ptr<FinCat>> cats;
    std::vector<std::unique_ptr<TwoCat>> twocats;
    std::vector<std::unique_ptr<CatFunctor>> functors;
    std::vector<std::unique_ptr<PseudoFunctor>> pseudofunctors;
    std::map<std::string, const FinCat*> cat_by_path;
    std::map<std::string, const TwoCat*> twocat_by_path;

    const FinCat& own(FinCat c);
    const TwoCat& own(TwoCat c);
};

/// The `kind` field of a structure file ("category", "twocat", "functor",
/// "diagram", "pseudofunctor", "nattrans", "proobject", "classes",
/// "square", "retract", "factorization").
std::string peek_kind(const std::string& path);

// -- loaders ------------------------------------------------------------
//
// Loaders check the schema (SchemaError), resolve all names
// (UnknownName) and rebuild the forced cells and table entries
// (identities, unit composites); they do not check category laws, so a
// structurally well-formed file of an invalid structure loads fine and
// is rejected by the validator of its type.  Everywhere a structure is
// expected, the field may instead hold a string: a path relative to the
// referring file.

const FinCat& load_fincat(Workspace& ws, const std::string& path);
const TwoCat& load_twocat(Workspace& ws, const std::string& path);
const CatFunctor& load_functor(Workspace& ws, const std::string& path);
Cat2Functor load_diagram(Workspace& ws, const std::string& path);
const PseudoFunctor& load_pseudofunctor(Workspace& ws,
                                        const std::string& path);
NatTrans load_nattrans(Workspace& ws, const std::string& path);
ProObject load_pro_object(Workspace& ws, const std::string& path);

struct LoadedClasses {
    const TwoCat* twocat = nullptr;
    ModelClasses classes;
};
LoadedClasses load_classes(Workspace& ws, const std::string& path);

/// One of the three square-like kinds, discriminated by `kind`:
/// "square" fills `square`, "retract" fills `retract`, "factorization"
/// fills `cell` (the 1-cell being factored) and `factorization`.
struct LoadedSquare {
    const TwoCat* twocat = nullptr;
    std::string kind;
    LiftingSquare square;
    RetractData retract;
    int cell = -1;
    Factorization factorization;
};
LoadedSquare load_square(Workspace& ws, const std::string& path);

// -- writers ------------------------------------------------------------
//
// Writers produce the canonical text of a structure: sorted keys,
// two-space indentation, cells by name in index order, forced entries
// omitted.  Loading a canonical file and writing it again is
// byte-identical.

std::string write_fincat(const FinCat& c);
std::string write_twocat(const TwoCat& c);
std::string write_functor(const CatFunctor& F);
std::string write_diagram(const Cat2Functor& F);
std::string write_pseudofunctor(const PseudoFunctor& F);
std::string write_nattrans(const NatTrans& t);
std::string write_pro_object(const ProObject& X);
std::string write_classes(const TwoCat& c, const ModelClasses& cls);
std::string write_square(const TwoCat& c, const LiftingSquare& sq);
std::string write_retract(const TwoCat& c, const RetractData& d);
std::string write_factorization(const TwoCat& c, int f,
                                const Factorization& fac);

// -- graph export ---------------------------------------------------------

/// DOT digraph of the objects and non-identity morphisms.
std::string export_dot(const FinCat& c);

/// DOT digraph of the 1-skeleton; each non-identity 2-cell appears as a
/// dashed parallel edge labeled "name : src => tgt".
std::string export_dot(const TwoCat& c);

} // namespace twocat

#pragma once

#include <array>
#include <memory>
#include <string>

#include "twocat/twocat.hpp"

namespace twocat {

/// Errors raised while parsing or evaluating elevator expressions.
struct SyntaxError : InputError {
    size_t position;
    SyntaxError(const std::string& what, size_t pos)
        : InputError(what + " (at offset " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct UnknownAtom : InputError {
    std::string atom;
    explicit UnknownAtom(const std::string& name)
        : InputError("unknown cell '" + name + "'"), atom(name) {}
};

struct BoundaryMismatch : Error {
    std::string subtree;
    explicit BoundaryMismatch(const std::string& text)
        : Error("boundary mismatch in '" + text + "'"), subtree(text) {}
};

/// Parsed elevator expression.  Grammar (left associative, "." binds
/// tighter than "v"):
///
///   expr   := term | expr "v" term
///   term   := factor | term "." factor
///   factor := IDENT | "id" "(" IDENT ")" | "(" expr ")"
///
/// IDENT is [A-Za-z_][A-Za-z0-9_']* naming a 2-cell (or a 1-cell inside
/// id(...)); "v" and "id" are reserved and cannot name cells in
/// expressions.  "a v b" stacks a on top of b (a applied first); "b . a"
/// juxtaposes with a as the inner (first applied) factor, so expressions
/// read top-to-bottom and right-to-left like the diagrams they describe.
struct ElevatorExpr {
    enum class Kind { Atom, Identity, Vertical, Horizontal };
    Kind kind;
    std::string name; // Atom / Identity
    std::unique_ptr<ElevatorExpr> first, second; // Vertical: top, bottom;
                                                 // Horizontal: outer, inner
    size_t begin = 0, end = 0; // span in the source string
};

/// Parses without evaluating; throws SyntaxError.
std::unique_ptr<ElevatorExpr> parse_elevator(const std::string& source);

/// Evaluates an expression to a 2-cell of `c`.  Throws SyntaxError,
/// UnknownAtom, or BoundaryMismatch (quoting the offending subtree).
int eval_elevator(const TwoCat& c, const std::string& source);

/// Both sides evaluate to the same 2-cell.
bool elevator_equal(const TwoCat& c, const std::string& lhs,
                    const std::string& rhs);

/// The three readings of a 2x2 grid with inner cell alpha: f => f' and
/// outer cell beta: g => g' (g after f): the direct juxtaposition
/// "beta . alpha", the top-first sweep "(id(g) . alpha) v (beta . id(f'))",
/// and the bottom-first sweep "(beta . id(f)) v (id(g') . alpha)".
/// Built as expression strings from the cell names and evaluated, so the
/// names involved must be well-formed identifiers.
std::array<int, 3> grid_readings(const TwoCat& c, int alpha, int beta);

} // namespace twocat

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace twocat {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A cell id or index that does not exist in the structure at hand.
struct UnknownCell : Error {
    explicit UnknownCell(const std::string& what) : Error(what) {}
};

/// Composition requested for cells whose boundaries do not match.
struct NotComposable : Error {
    explicit NotComposable(const std::string& what) : Error(what) {}
};

/// Input data is malformed beyond recovery (parsing, file IO, ...).
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

/// A bounded search ran out of room before reaching a verdict.
struct BoundTooSmall : Error {
    explicit BoundTooSmall(const std::string& what) : Error(what) {}
};

/// One violated law instance.  `law` is a short stable tag (e.g.
/// "assoc", "unit-left", "dangling-src"), `where` names the offending
/// cells, and `detail` spells out the failed equation with both sides.
struct Violation {
    std::string law;
    std::string where;
    std::string detail;
};

/// Outcome of a validation pass: `ok()` is true when nothing was violated.
/// Violations are accumulated in a deterministic order (laws in the order
/// the validator defines them, instances lexicographically by index), so
/// reports are reproducible and diffable.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void add(const std::string& law, const std::string& where,
             const std::string& detail) {
        violations.push_back({law, where, detail});
    }

    void merge(const ValidationReport& other, const std::string& prefix);

    /// One line per violation; empty string when ok.
    std::string to_string() const;

    /// Throws Error with the report text unless ok().
    void expect_ok(const std::string& context) const;
};

} // namespace twocat

#include "twocat/report.hpp"

namespace twocat {

void ValidationReport::merge(const ValidationReport& other,
                             const std::string& prefix) {
    for (const auto& v : other.violations)
        violations.push_back({v.law, prefix + v.where, v.detail});
}

std::string ValidationReport::to_string() const {
    std::string out;
    for (const auto& v : violations) {
        out += v.law;
        out += " at ";
        out += v.where;
        out += ": ";
        out += v.detail;
        out += '\n';
    }
    return out;
}

void ValidationReport::expect_ok(const std::string& context) const {
    if (!ok())
        throw Error(context + " failed validation:\n" + to_string());
}

} // namespace twocat

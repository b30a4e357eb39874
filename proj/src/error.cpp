#include "bcrep/error.hpp"

#include <sstream>

namespace bcrep {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::shape: return "shape";
        case ErrorKind::composition: return "composition";
        case ErrorKind::invariant: return "invariant";
        case ErrorKind::not_cocycle: return "not a cocycle";
        case ErrorKind::not_equivalence: return "not an equivalence";
        case ErrorKind::nonzero_beta: return "nonzero beta";
        case ErrorKind::strictify_first: return "strictify first";
        case ErrorKind::not_reduced: return "not reduced form";
        case ErrorKind::parse: return "parse";
    }
    return "unknown";
}

AlgebraError::AlgebraError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail), kind_(kind) {}

std::string Violation::to_string() const {
    if (where.empty()) return axiom;
    return axiom + " at " + where;
}

std::string tuple_label(std::string_view names, const std::vector<std::size_t>& values) {
    std::ostringstream out;
    out << '(' << names << ")=(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ',';
        out << values[i];
    }
    out << ')';
    return out.str();
}

}  // namespace bcrep

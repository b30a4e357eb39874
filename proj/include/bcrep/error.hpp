#ifndef BCREP_ERROR_HPP
#define BCREP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bcrep {

enum class ErrorKind {
    shape,
    composition,
    invariant,
    not_cocycle,
    not_equivalence,
    nonzero_beta,
    strictify_first,
    not_reduced,
    parse,
};

std::string_view error_kind_name(ErrorKind kind);

/// Raised when an operation's precondition or a constructed value's invariant fails.
class AlgebraError : public std::runtime_error {
public:
    AlgebraError(ErrorKind kind, const std::string& detail);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// A failed axiom instance, e.g. {"AO4", "(a,b,c)=(1,1,1)"}.
struct Violation {
    std::string axiom;
    std::string where;

    std::string to_string() const;
    bool operator==(const Violation&) const = default;
};

using Violations = std::vector<Violation>;

/// Formats "(a,b)=(1,2)" from names and values.
std::string tuple_label(std::string_view names, const std::vector<std::size_t>& values);

}  // namespace bcrep

#endif

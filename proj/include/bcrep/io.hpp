#ifndef BCREP_IO_HPP
#define BCREP_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bcrep/ch2cat.hpp"
#include "bcrep/cohom.hpp"
#include "bcrep/grp.hpp"
#include "bcrep/rep2cat.hpp"

namespace bcrep {

using Json = nlohmann::ordered_json;

/// Malformed input. position is "line L, column C" for syntax errors and a
/// JSON pointer such as "/rho1/2/0/1" for structural ones.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string position, const std::string& message);
    const std::string& position() const noexcept { return position_; }

private:
    std::string position_;
};

/// A parsed document together with the directory used to resolve references in it.
struct Document {
    Json json;
    std::filesystem::path base;
    std::string kind;
};

Document read_document(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& j);

Json rat_to_json(const Rat& r);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& at);

/// The raw pi0 multiplication table of a twogroup document, unvalidated.
Table pi0_table_from_json(const Json& j, const std::string& at);
// 2-groups are parsed without validation so that validate can list violations.
TwoGroupData two_group_from_json(const Json& j, const std::string& at);
Json two_group_to_json(const TwoGroupData& g);
/// A path (relative to base) to a twogroup file or an inline object; validated.
TwoGroupPtr group_reference(const Json& j, const std::filesystem::path& base, const std::string& at);

TwoVect complex_from_json(const Json& j, const std::string& at);
Json complex_to_json(const TwoVect& v);
/// Endpoints, components; constructing the cell runs its validator.
OneCell onecell_from_json(const Json& j, const std::string& at);
Json onecell_to_json(const OneCell& f);
TwoCell twocell_from_json(const Json& j, const std::string& at);
Json twocell_to_json(const TwoCell& s);

RepReduced rep_from_json(const Json& j, const std::filesystem::path& base, const std::string& at);
/// Path to a representation file or an inline representation object.
RepReduced rep_reference(const Json& j, const std::filesystem::path& base, const std::string& at);
Json rep_to_json(const RepReduced& r);

RepFull rep_full_from_json(const Json& j, const std::filesystem::path& base, const std::string& at);

Inter1 inter1_from_json(const Json& j, const std::filesystem::path& base, const std::string& at);
Json inter1_to_json(const Inter1& t);
Inter2 inter2_from_json(const Json& j, const std::filesystem::path& base, const std::string& at);

/// Cochain over a bimodule; "left"/"right" default to trivial actions.
Cochain cochain_from_json(const Json& j, const std::filesystem::path& base, const std::string& at);
Json cochain_to_json(const Cochain& c);

}  // namespace bcrep

#endif

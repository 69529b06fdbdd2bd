#pragma once
#include <stdexcept>
#include <string>

namespace cobord {

// Every contract violation surfaces as an Error with a machine-readable kind;
// the CLI maps kinds to structured exit diagnostics.
enum class ErrorKind {
    resource_limit,
    mismatched_table,
    insufficient_table,
    truncation_mismatch,
    shape_mismatch,
    nonzero_constant_term,
    degree_mismatch,
    not_symmetric,
    non_unit_linear_part,
    relation_not_killed,
    flag_validation,
    cache_corruption,
    internal,
};

inline const char* error_kind_name(ErrorKind k)
{
    switch (k) {
        case ErrorKind::resource_limit: return "resource-limit";
        case ErrorKind::mismatched_table: return "mismatched-table";
        case ErrorKind::insufficient_table: return "insufficient-table";
        case ErrorKind::truncation_mismatch: return "truncation-mismatch";
        case ErrorKind::shape_mismatch: return "shape-mismatch";
        case ErrorKind::nonzero_constant_term: return "nonzero-constant-term";
        case ErrorKind::degree_mismatch: return "degree-mismatch";
        case ErrorKind::not_symmetric: return "not-symmetric";
        case ErrorKind::non_unit_linear_part: return "non-unit-linear-part";
        case ErrorKind::relation_not_killed: return "relation-not-killed";
        case ErrorKind::flag_validation: return "flag-validation";
        case ErrorKind::cache_corruption: return "cache-corruption";
        case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
    {
    }
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace cobord

// Error codes shared by the whole library. Every precondition violation that
// callers can reasonably hit maps to one code; the CLI translates codes to
// exit statuses.
#pragma once

#include <stdexcept>
#include <string>

namespace mf {

enum class errc {
    non_invertible,
    not_motion_polynomial,
    non_monic_divisor,
    degenerate_primal,
    not_a_divisor,
    not_generic,
    unsupported_degree,
    not_adjacent,
    forbidden_permutation,
    incompatible_pairs,
    zero_direction,
    coincident_axes,
    residual_check_failed,
    format_error,
    evaluation_domain,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_invertible: return "non_invertible";
        case errc::not_motion_polynomial: return "not_motion_polynomial";
        case errc::non_monic_divisor: return "non_monic_divisor";
        case errc::degenerate_primal: return "degenerate_primal";
        case errc::not_a_divisor: return "not_a_divisor";
        case errc::not_generic: return "not_generic";
        case errc::unsupported_degree: return "unsupported_degree";
        case errc::not_adjacent: return "not_adjacent";
        case errc::forbidden_permutation: return "forbidden_permutation";
        case errc::incompatible_pairs: return "incompatible_pairs";
        case errc::zero_direction: return "zero_direction";
        case errc::coincident_axes: return "coincident_axes";
        case errc::residual_check_failed: return "residual_check_failed";
        case errc::format_error: return "format_error";
        case errc::evaluation_domain: return "evaluation_domain";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace mf

#pragma once

#include <stdexcept>
#include <string>

namespace eulerchi {

// Error categories surfaced by the library. Callers that need to
// distinguish failure modes switch on kind(); the message carries the
// offending values.
enum class errc {
    zero_denominator,
    not_invertible,
    domain_error,
    odd_dimension,
    even_dimension,
    curvature_zero,
    dimension_too_large,
    unsupported_variant,
    unsupported_g,
    non_integer_result,
    mesh_too_coarse,
    coincident_curvatures,
    extension_residue,
    zero_density,
    excluded_parameter,
    degenerate_band,
    sign_error,
    irrational_volume,
    parse_error,
};

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

inline const char* errc_name(errc k)
{
    switch (k) {
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::not_invertible: return "NotInvertible";
    case errc::domain_error: return "DomainError";
    case errc::odd_dimension: return "OddDimension";
    case errc::even_dimension: return "EvenDimension";
    case errc::curvature_zero: return "CurvatureZero";
    case errc::dimension_too_large: return "DimensionTooLarge";
    case errc::unsupported_variant: return "UnsupportedVariant";
    case errc::unsupported_g: return "UnsupportedG";
    case errc::non_integer_result: return "NonIntegerResult";
    case errc::mesh_too_coarse: return "MeshTooCoarse";
    case errc::coincident_curvatures: return "CoincidentCurvatures";
    case errc::extension_residue: return "ExtensionResidue";
    case errc::zero_density: return "ZeroDensity";
    case errc::excluded_parameter: return "ExcludedParameter";
    case errc::degenerate_band: return "DegenerateBand";
    case errc::sign_error: return "SignError";
    case errc::irrational_volume: return "IrrationalVolume";
    case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

} // namespace eulerchi

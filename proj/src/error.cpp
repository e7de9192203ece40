#include "srr/error.hpp"

#include <cmath>
#include <cstdlib>

namespace srr {

const char* to_string(ErrorKind kind)
{
    switch (kind)
    {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::MissingModulus: return "MissingModulus";
        case ErrorKind::NotPrimitive: return "NotPrimitive";
        case ErrorKind::FieldTooSmall: return "FieldTooSmall";
        case ErrorKind::NotARecoverySet: return "NotARecoverySet";
        case ErrorKind::NotSystematic: return "NotSystematic";
        case ErrorKind::NegativeObjective: return "NegativeObjective";
        case ErrorKind::DemandTooLarge: return "DemandTooLarge";
        case ErrorKind::RegimeViolation: return "RegimeViolation";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::EmptyPolytope: return "EmptyPolytope";
        case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::TooManyBases: return "TooManyBases";
        case ErrorKind::Explosion: return "Explosion";
    }
    return "Unknown";
}

bool is_guard(ErrorKind kind)
{
    return kind == ErrorKind::TooLarge || kind == ErrorKind::TooManyBases
        || kind == ErrorKind::Explosion;
}

Error::Error(ErrorKind kind, std::string module, const std::string& message)
    : std::runtime_error(module + ": " + to_string(kind) + ": " + message),
      kind_(kind), module_(std::move(module))
{
}

double guard_scale()
{
    static const double scale = [] {
        const char* env = std::getenv("SRR_GUARD_SCALE");
        if (env == nullptr || *env == '\0')
            return 1.0;
        char* end = nullptr;
        double value = std::strtod(env, &end);
        if (end == env || !(value > 0) || !std::isfinite(value))
            return 1.0;
        return value;
    }();
    return scale;
}

std::uint64_t scaled_guard(std::uint64_t base)
{
    long double v = static_cast<long double>(base) * guard_scale();
    if (v >= 18446744073709551615.0L)
        return UINT64_MAX;
    return static_cast<std::uint64_t>(v);
}

}   // namespace srr

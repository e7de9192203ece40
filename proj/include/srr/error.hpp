#ifndef SRR_ERROR_HPP
#define SRR_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace srr {

enum class ErrorKind {
    // Input and contract violations.
    ParseError,
    ValidationError,
    DimensionMismatch,
    IndexOutOfRange,
    LengthMismatch,
    NotPrime,
    ReducibleModulus,
    MissingModulus,
    NotPrimitive,
    FieldTooSmall,
    NotARecoverySet,
    NotSystematic,
    NegativeObjective,
    DemandTooLarge,
    RegimeViolation,
    DivisionByZero,
    EmptyPolytope,
    UnsupportedDimension,
    // Enumeration guards.
    TooLarge,
    TooManyBases,
    Explosion,
};

const char* to_string(ErrorKind kind);

/// True for the guard family (enumeration limits and constraint blowup).
bool is_guard(ErrorKind kind);

/**
 * The single exception type thrown by the library.  Every error carries the
 * module that raised it so front ends can report which guard fired.
 */
class Error : public std::runtime_error
{
    public:
        Error(ErrorKind kind, std::string module, const std::string& message);

        ErrorKind kind() const noexcept { return kind_; }
        const std::string& module() const noexcept { return module_; }

    private:
        ErrorKind kind_;
        std::string module_;
};

/// Multiplier applied to every enumeration guard; read once from
/// SRR_GUARD_SCALE (default 1, must be a positive number).
double guard_scale();

/// base * guard_scale(), saturating at UINT64_MAX.
std::uint64_t scaled_guard(std::uint64_t base);

}   // namespace srr

#endif

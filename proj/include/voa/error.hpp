#pragma once

#include <stdexcept>
#include <string>

namespace voa {

enum class Errc {
    DimensionMismatch,
    MixedCharge,
    ZeroVector,
    NonnegativeMode,
    CocycleUndefined,
    NonintegralShift,
    BadCharge,
    TagMismatch,
    OutOfBaseRing,
    MissingBasePairing,
    Inconsistent,
    InvalidIsometry,
    Undecided,
    ParseError,
    UnknownName,
    ConfigError,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DimensionMismatch: return "DIMENSION_MISMATCH";
        case Errc::MixedCharge: return "MIXED_CHARGE";
        case Errc::ZeroVector: return "ZERO_VECTOR";
        case Errc::NonnegativeMode: return "NONNEGATIVE_MODE";
        case Errc::CocycleUndefined: return "COCYCLE_UNDEFINED";
        case Errc::NonintegralShift: return "NONINTEGRAL_SHIFT";
        case Errc::BadCharge: return "BAD_CHARGE";
        case Errc::TagMismatch: return "TAG_MISMATCH";
        case Errc::OutOfBaseRing: return "OUT_OF_BASE_RING";
        case Errc::MissingBasePairing: return "MISSING_BASE_PAIRING";
        case Errc::Inconsistent: return "INCONSISTENT";
        case Errc::InvalidIsometry: return "INVALID_ISOMETRY";
        case Errc::Undecided: return "UNDECIDED";
        case Errc::ParseError: return "PARSE_ERROR";
        case Errc::UnknownName: return "UNKNOWN_NAME";
        case Errc::ConfigError: return "CONFIG_ERROR";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what, long position = -1)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          code_(code),
          position_(position) {}

    Errc code() const { return code_; }
    long position() const { return position_; }

  private:
    Errc code_;
    long position_;
};

// Three-valued answer for bounded searches. UNDECIDED is a real outcome,
// distinct from false.
enum class Ternary { False, True, Undecided };

inline Ternary ternary(bool b) { return b ? Ternary::True : Ternary::False; }

}  // namespace voa

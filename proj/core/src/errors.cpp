#include "gnch/errors.hpp"

namespace gnch {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NU_NONPOSITIVE: return "NU_NONPOSITIVE";
        case ErrorCode::NUT_NONPOSITIVE: return "NUT_NONPOSITIVE";
        case ErrorCode::H1_VIOLATED: return "H1_VIOLATED";
        case ErrorCode::H2_VIOLATED: return "H2_VIOLATED";
        case ErrorCode::NO_CONVERGENCE: return "NO_CONVERGENCE";
        case ErrorCode::SINGULAR_SYMBOL: return "SINGULAR_SYMBOL";
        case ErrorCode::CONDITION_LOST: return "CONDITION_LOST";
        case ErrorCode::BLOWUP: return "BLOWUP";
        case ErrorCode::ZERO_STATE: return "ZERO_STATE";
        case ErrorCode::DEGENERATE: return "DEGENERATE";
        case ErrorCode::MISMATCH: return "MISMATCH";
        case ErrorCode::CONFIG_INVALID: return "CONFIG_INVALID";
        case ErrorCode::REGIME_VIOLATION: return "REGIME_VIOLATION";
    }
    return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace gnch

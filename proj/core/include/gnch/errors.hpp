#ifndef GNCH_ERRORS_HPP
#define GNCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gnch {

// Typed failure conditions. Solvers and the harness throw Error; the CLI
// maps any of these to exit code 2 (or a failed verdict where appropriate).
enum class ErrorCode {
    NU_NONPOSITIVE,    // elliptic coefficient nu <= 0; model constants undefined
    NUT_NONPOSITIVE,   // BBM coefficient nu_t <= 0; scalar evolution ill-posed
    H1_VIOLATED,       // a layer depth reached zero
    H2_VIOLATED,       // an ellipticity coefficient reached zero
    NO_CONVERGENCE,    // iterative solve exceeded its iteration budget
    SINGULAR_SYMBOL,   // Helmholtz symbol 1+c k^2 vanishes on a resolved mode
    CONDITION_LOST,    // (H1)/(H2) failed during time integration
    BLOWUP,            // solution norm exceeded the abort ceiling
    ZERO_STATE,        // ratio undefined on the zero state
    DEGENERATE,        // not enough data (or nonpositive data) for a fit
    MISMATCH,          // trajectories with incompatible grids or sample times
    CONFIG_INVALID,    // malformed or out-of-range configuration
    REGIME_VIOLATION,  // parameters outside the admissible regime
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& detail);
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace gnch

#endif

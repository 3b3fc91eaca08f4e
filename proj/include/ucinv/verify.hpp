#ifndef UCINV_VERIFY_HPP
#define UCINV_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ucinv {

struct VerifyCheck {
    std::string label;
    int trials = 0;
    double worst = 0.0;      // measured deviation (or measured value for lower-bound checks)
    double tolerance = 0.0;  // bound the measurement is compared against
    bool passed = true;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    int trials = 0;
    bool passed = true;
    std::vector<VerifyCheck> checks;
};

constexpr std::uint64_t kDefaultVerifySeed = 20240817;
constexpr int kDefaultVerifyTrials = 200;

/// Suite names accepted by run_verify (excluding "all").
const std::vector<std::string>& verify_suite_names();

/// Runs one named suite or, for "all", every suite. Throws
/// std::invalid_argument for unknown names.
std::vector<VerifyReport> run_verify(const std::string& suite, std::uint64_t seed, int trials);

}  // namespace ucinv

#endif

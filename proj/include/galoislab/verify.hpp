#ifndef GALOISLAB_VERIFY_HPP
#define GALOISLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace galoislab {
namespace verify {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail; // exact discrepancy when failed, empty otherwise
};

struct VerifyReport {
    std::string suite;
    std::vector<Check> checks;

    bool all_passed() const;
    std::string to_json() const;
    std::string to_text() const;
};

// Zero fields fall back to the per-suite defaults.
struct VerifyOptions {
    std::uint32_t N_max = 0;
    std::uint32_t r_max = 0;
    std::uint32_t q = 0;
    std::uint32_t j_max = 0;
    std::uint32_t order = 0;
    std::uint32_t n_max = 0;
};

// Suites: identity, oracle, moments, cumulants, stanley, demazure, codes.
// Throws invalid_input for an unknown suite name.
VerifyReport run_suite(const std::string& suite, const VerifyOptions& options);

std::vector<std::string> suite_names();

} // namespace verify
} // namespace galoislab

#endif

#ifndef DRZ_SUITES_HPP
#define DRZ_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace drz {

struct ClaimResult {
    std::string name;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::vector<std::string> notes;  // logged observations, not failures
};

struct SuiteResult {
    std::string suite;
    std::vector<ClaimResult> claims;
    bool ok() const {
        for (const auto& c : claims)
            if (c.fail > 0) return false;
        return true;
    }
};

/// Registered suite names, in a fixed order.
std::vector<std::string> suite_names();

bool is_suite(const std::string& name);

/// Runs one named property suite with `cases` generated instances; output is
/// deterministic in (name, cases, seed). Throws std::invalid_argument for an
/// unknown name.
SuiteResult run_suite(const std::string& name, std::size_t cases, std::uint64_t seed);

}  // namespace drz

#endif

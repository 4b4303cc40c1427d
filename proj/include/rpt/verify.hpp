#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rpt::verify {

struct SuiteOptions {
    std::optional<unsigned> max_n;  // per-suite default when empty
    unsigned max_cells = 12;        // largest n*k shape the matrix scan visits
    unsigned workers = 1;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t checks = 0;
    std::optional<std::string> counterexample;  // first mismatch, if any

    bool passed() const noexcept { return !counterexample; }
};

/// stirling, bell, fubini, riordan, lonesum, polybernoulli.
const std::vector<std::string>& suite_names();

/// Runs one formula-versus-oracle suite over the standard restriction
/// family and stops at the first mismatch. Throws std::invalid_argument for
/// an unknown suite and GuardrailError when an oracle limit is exceeded.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& options);

}  // namespace rpt::verify

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bsk {

struct VerifyConfig {
    std::string suite = "all";
    int n = 2;
    int m_max = 2;
    int box_radius = 2;
    std::uint64_t prime = 2147483647ULL;
    int modular_trials = 3;
    std::uint64_t seed = 1;
    std::string format = "json";
    bool timings = false;

    void validate() const;  // throws std::invalid_argument
};

bool is_prime_u64(std::uint64_t v);

enum class CheckVerdict { pass_exact, pass_on_box, fail };

/// One verification record. `statement` spells out the identity being
/// checked, so a failure is traceable to the claim under test.
struct CheckRecord {
    std::string id;
    std::string statement;
    std::string params;
    CheckVerdict verdict = CheckVerdict::fail;
    std::string witness;     // populated on failure
    std::int64_t wall_ms = -1;  // emitted only when timings are enabled

    bool passed() const { return verdict != CheckVerdict::fail; }
};

struct Report {
    VerifyConfig config;
    std::string convention;  // selected representation convention
    std::vector<CheckRecord> checks;

    int total() const { return static_cast<int>(checks.size()); }
    int failed() const;
    bool all_passed() const { return failed() == 0; }

    /// Records sorted by id; deterministic for a fixed config.
    std::string to_json() const;
    std::string to_text() const;
    std::string render() const { return config.format == "text" ? to_text() : to_json(); }
};

}  // namespace bsk

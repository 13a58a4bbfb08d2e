#include "bsk/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bsk {

bool is_prime_u64(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (v == p) return true;
        if (v % p == 0) return false;
    }
    // Deterministic Miller-Rabin for 64-bit with the standard base set.
    std::uint64_t d = v - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    auto mulmod = [&](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % v);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t x = 1;
        a %= v;
        while (e) {
            if (e & 1) x = mulmod(x, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return x;
    };
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == v - 1) continue;
        bool composite = true;
        for (int k = 1; k < r; ++k) {
            x = mulmod(x, x);
            if (x == v - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void VerifyConfig::validate() const {
    if (n < 2) throw std::invalid_argument("config: n must be >= 2");
    if (box_radius < 1) throw std::invalid_argument("config: box radius must be >= 1");
    if (m_max < 1) throw std::invalid_argument("config: m-max must be >= 1");
    if (modular_trials < 0) throw std::invalid_argument("config: trials must be >= 0");
    if (prime <= (1ULL << 20) || !is_prime_u64(prime))
        throw std::invalid_argument("config: prime must be a prime > 2^20");
    if (format != "json" && format != "text")
        throw std::invalid_argument("config: format must be json or text");
}

int Report::failed() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.passed(); }));
}

namespace {

const char* verdict_name(CheckVerdict v) {
    switch (v) {
        case CheckVerdict::pass_exact: return "pass_exact";
        case CheckVerdict::pass_on_box: return "pass_on_box";
        case CheckVerdict::fail: return "fail";
    }
    return "?";
}

std::vector<CheckRecord> sorted_checks(const std::vector<CheckRecord>& checks) {
    std::vector<CheckRecord> v = checks;
    std::stable_sort(v.begin(), v.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
    return v;
}

}  // namespace

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["config"] = {{"suite", config.suite},     {"n", config.n},
                   {"m_max", config.m_max},     {"box_radius", config.box_radius},
                   {"prime", config.prime},     {"modular_trials", config.modular_trials},
                   {"seed", config.seed}};
    j["convention"] = convention;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : sorted_checks(checks)) {
        nlohmann::ordered_json rec;
        rec["id"] = c.id;
        rec["statement"] = c.statement;
        if (!c.params.empty()) rec["params"] = c.params;
        rec["verdict"] = verdict_name(c.verdict);
        if (!c.witness.empty()) rec["witness"] = c.witness;
        if (config.timings && c.wall_ms >= 0) rec["wall_ms"] = c.wall_ms;
        arr.push_back(std::move(rec));
    }
    j["checks"] = std::move(arr);
    j["summary"] = {{"total", total()}, {"passed", total() - failed()}, {"failed", failed()}};
    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "suite " << config.suite << "  n=" << config.n << " m_max=" << config.m_max
       << " box=" << config.box_radius << " seed=" << config.seed << "\n";
    os << "convention: " << convention << "\n";
    for (const auto& c : sorted_checks(checks)) {
        os << (c.passed() ? "PASS" : "FAIL") << " [" << verdict_name(c.verdict) << "] " << c.id
           << " : " << c.statement;
        if (!c.params.empty()) os << " (" << c.params << ")";
        if (!c.witness.empty()) os << " witness: " << c.witness;
        if (config.timings && c.wall_ms >= 0) os << " [" << c.wall_ms << " ms]";
        os << "\n";
    }
    os << "summary: " << (total() - failed()) << "/" << total() << " passed\n";
    return os.str();
}

}  // namespace bsk

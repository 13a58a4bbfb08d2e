// Acceptance suite: runs the per-criterion verification batteries and prints
// one PASS/FAIL line per criterion. Exit code 0 iff every requested criterion
// passed. Criterion 9 needs --cli <path> to the command-line binary.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bsk/ehall.hpp"
#include "bsk/oracle.hpp"
#include "bsk/suites.hpp"

using namespace bsk;

namespace {

struct CriterionResult {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

VerifyConfig base_config(int n) {
    VerifyConfig cfg;
    cfg.n = n;
    cfg.box_radius = 2;
    cfg.m_max = 2;
    cfg.modular_trials = 3;
    cfg.seed = 1;
    return cfg;
}

// Collect failures of all records whose id starts with one of the prefixes
// (empty prefix list = all records).
CriterionResult from_report(const Report& rep, const std::vector<std::string>& prefixes = {}) {
    CriterionResult res;
    int counted = 0;
    for (const auto& c : rep.checks) {
        bool match = prefixes.empty();
        for (const auto& p : prefixes)
            if (c.id.rfind(p, 0) == 0) match = true;
        if (!match) continue;
        ++counted;
        if (!c.passed()) {
            res.pass = false;
            res.detail += " [" + c.id + ": " + c.witness + "]";
        }
    }
    if (counted == 0) {
        res.pass = false;
        res.detail = " no records matched";
    } else {
        res.detail = std::to_string(counted) + " checks" + res.detail;
    }
    return res;
}

CriterionResult criterion_1() {
    // Representation gate: unique convention at n=2; all nine relations hold
    // exactly on the radius-2 box at n=2 and n=3.
    CriterionResult res;
    auto t0 = std::chrono::steady_clock::now();
    auto search = search_conventions();
    for (int n : {2, 3}) {
        auto rep = exact_rep(n, search.selected);
        auto failure = check_relations(rep, 2);
        double elapsed = seconds_since(t0);
        if (failure) {
            res.pass = false;
            res.detail += " relation " + failure->relation + " fails at n=" + std::to_string(n);
        }
        double budget = (n == 2) ? 60.0 : 600.0;
        if (elapsed > budget) {
            res.pass = false;
            res.detail += " n=" + std::to_string(n) + " exceeded " + std::to_string(budget) + "s";
        }
        t0 = std::chrono::steady_clock::now();
    }
    if (res.pass)
        res.detail = "unique convention [" + search.selected.to_string() +
                     "], nine relations exact on box R=2 for n=2,3";
    return res;
}

CriterionResult criterion_2() {
    CriterionResult res;
    for (int n : {2, 3}) {
        Report rep;
        VerifyConfig cfg = base_config(n);
        cfg.suite = "presentation-iso";
        run_suite(cfg, rep);
        auto sub = from_report(rep);
        if (!sub.pass) {
            res.pass = false;
            res.detail += " n=" + std::to_string(n) + ":" + sub.detail;
        }
    }
    if (res.pass) res.detail = "presentation relations + P = c^2 map to zero, n=2,3";
    return res;
}

CriterionResult criterion_3() {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    VerifyConfig cfg = base_config(2);
    cfg.suite = "hecke";
    run_suite(cfg, rep);
    CriterionResult res = from_report(rep);
    double elapsed = seconds_since(t0);
    if (elapsed > 30.0) {
        res.pass = false;
        res.detail += " exceeded 30s budget (" + std::to_string(elapsed) + "s)";
    }
    if (res.pass)
        res.detail = "symmetrizer identities exact for n<=4, centrality on box (" + res.detail + ")";
    return res;
}

CriterionResult criterion_4() {
    CriterionResult res;
    for (int n : {2, 3}) {
        Report rep;
        VerifyConfig cfg = base_config(n);
        cfg.suite = "theta4";
        run_suite(cfg, rep);
        auto sub = from_report(rep);
        if (!sub.pass) {
            res.pass = false;
            res.detail += " n=" + std::to_string(n) + ":" + sub.detail;
        }
    }
    if (res.pass) res.detail = "theta^4 conjugation + proof intermediates, n=2,3";
    return res;
}

CriterionResult criterion_5() {
    CriterionResult res;
    for (int n : {2, 3}) {
        Report rep;
        VerifyConfig cfg = base_config(n);
        cfg.suite = "power-sum-central";
        run_suite(cfg, rep);
        auto sub = from_report(rep);
        if (!sub.pass) {
            res.pass = false;
            res.detail += " n=" + std::to_string(n) + ":" + sub.detail;
        }
    }
    if (res.pass) res.detail = "power sums central for m=1..3 and Qtilde well-defined, n=2,3";
    return res;
}

CriterionResult criterion_6() {
    CriterionResult res;
    for (int n : {2, 3}) {
        Report rep;
        VerifyConfig cfg = base_config(n);
        cfg.suite = "pw-comparison";
        run_suite(cfg, rep);
        auto sub = from_report(rep);
        if (!sub.pass) {
            res.pass = false;
            res.detail += " n=" + std::to_string(n) + ":" + sub.detail;
        }
    }
    if (res.pass) res.detail = "spherical and unsymmetrized comparisons exact, m=1,2, n=2,3";
    return res;
}

CriterionResult criterion_7() {
    CriterionResult res;
    for (int n : {2, 3}) {
        auto t0 = std::chrono::steady_clock::now();
        Report rep;
        VerifyConfig cfg = base_config(n);
        cfg.suite = "hall-transport";
        run_suite(cfg, rep);
        auto sub = from_report(rep, {"hall."});
        if (!sub.pass) {
            res.pass = false;
            res.detail += " n=" + std::to_string(n) + ":" + sub.detail;
        }
        double elapsed = seconds_since(t0);
        if (n == 3 && elapsed > 1800.0) {
            res.pass = false;
            res.detail += " n=3 exceeded 30 min budget";
        }
    }
    if (res.pass) res.detail = "collinear, triangle, and W-bracket transports vanish, n=2,3";
    return res;
}

CriterionResult criterion_8() {
    CriterionResult res;
    Vec2 x0{1, 0};
    auto a = theta_series(x0, 4);
    auto b = theta_series_recursive(x0, 4);
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) {
            res.pass = false;
            res.detail += " route mismatch at order " + std::to_string(i);
        }
    UPoly u1 = UPoly::gen(1, 4), u2 = UPoly::gen(2, 4);
    if (!(a[1] == u1.scaled(eha_alpha(1)))) {
        res.pass = false;
        res.detail += " theta_1 != alpha_1 u_1";
    }
    UPoly want2 = u2.scaled(eha_alpha(2));
    want2 += (u1 * u1).scaled(eha_alpha(1) * eha_alpha(1) / RatFunc(2));
    if (!(a[2] == want2)) {
        res.pass = false;
        res.detail += " theta_2 mismatch";
    }
    if (res.pass) res.detail = "theta_1, theta_2 closed forms and both routes agree to order 4";
    return res;
}

CriterionResult criterion_9(const std::string& cli_path) {
    CriterionResult res;
    if (cli_path.empty()) {
        res.pass = false;
        res.detail = "needs --cli <path>";
        return res;
    }
    const std::string out1 = "acceptance_run1.json";
    const std::string out2 = "acceptance_run2.json";
    const std::string cmd_base = cli_path +
                                 " verify --suite all --n 2 --m-max 2 --box 2 --trials 3 --seed 1 "
                                 "--format json > ";
    int rc1 = std::system((cmd_base + out1).c_str());
    int rc2 = std::system((cmd_base + out2).c_str());
    if (rc1 != 0 || rc2 != 0) {
        res.pass = false;
        res.detail = "verify all exited nonzero";
        return res;
    }
    std::ifstream f1(out1), f2(out2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    if (s1.str().empty() || s1.str() != s2.str()) {
        res.pass = false;
        res.detail = "reports differ between identical runs";
        return res;
    }
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    res.detail = "verify all twice: byte-identical reports (" +
                 std::to_string(s1.str().size()) + " bytes)";
    return res;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    std::string cli_path;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
        else if (arg == "--cli" && i + 1 < argc) cli_path = argv[++i];
    }

    struct Entry {
        int id;
        const char* title;
        CriterionResult (*run)();
    };

    bool all_pass = true;
    auto emit = [&](int id, const char* title, const CriterionResult& r) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion-" << id << ": " << title;
        if (!r.detail.empty()) std::cout << " -- " << r.detail;
        std::cout << std::endl;
        if (!r.pass) all_pass = false;
    };

    auto want = [&](int id) { return only == 0 || only == id; };

    if (want(1)) emit(1, "representation gate (nine relations, unique convention)", criterion_1());
    if (want(2)) emit(2, "presentation isomorphism", criterion_2());
    if (want(3)) emit(3, "finite Hecke symmetrizer suite", criterion_3());
    if (want(4)) emit(4, "theta^4 conjugation", criterion_4());
    if (want(5)) emit(5, "power-sum centrality and well-definedness", criterion_5());
    if (want(6)) emit(6, "spherical / unsymmetrized comparisons", criterion_6());
    if (want(7)) emit(7, "Hall-algebra transport", criterion_7());
    if (want(8)) emit(8, "theta series dual expansion", criterion_8());
    if (want(9)) emit(9, "report determinism", criterion_9(cli_path));

    return all_pass ? 0 : 1;
}

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bsk/ehall.hpp"
#include "bsk/oracle.hpp"
#include "bsk/suites.hpp"

namespace {

bsk::Vec2 parse_vec(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (ch != '(' && ch != ')' && ch != ' ') t.push_back(ch);
    auto comma = t.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("vector must look like (a,b)");
    return bsk::Vec2{std::stol(t.substr(0, comma)), std::stol(t.substr(comma + 1))};
}

int run_verify(const bsk::VerifyConfig& cfg) {
    try {
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    bsk::Report report;
    if (!bsk::run_suite(cfg, report)) {
        std::cerr << "error: unknown suite '" << cfg.suite << "'\n";
        std::cerr << "known suites: all";
        for (const auto& s : bsk::suite_names()) std::cerr << " " << s;
        std::cerr << "\n";
        return 2;
    }
    std::cout << report.render();
    return report.all_passed() ? 0 : 1;
}

int run_element(const std::string& kind, const std::string& vec_text, int n, int order,
                const std::string& mode, const std::string& apply_to) {
    using namespace bsk;
    Vec2 x = parse_vec(vec_text);
    if (kind == "theta") {
        if (!is_primitive(x)) {
            std::cerr << "error: theta direction must be primitive\n";
            return 2;
        }
        auto th = theta_series(x, order);
        for (int i = 0; i <= order; ++i)
            std::cout << "theta_" << i << " = " << th[i].to_eha(x).to_string() << "\n";
        return 0;
    }
    if (x.is_zero()) {
        std::cerr << "error: vector must be nonzero\n";
        return 2;
    }
    if (n < 2) {
        std::cerr << "error: rank must be at least 2\n";
        return 2;
    }
    Element e(n);
    if (kind == "qtilde") {
        e = q_elements(x, n).qtilde;
    } else if (kind == "q") {
        e = q_elements(x, n).q;
    } else if (kind == "w") {
        WMode wm;
        if (mode == "axis") wm = WMode::axis;
        else if (mode == "general") wm = WMode::general;
        else wm = (x.a == 0 || x.b == 0) ? WMode::axis : WMode::general;
        e = w_element(x, n, wm);
    } else {
        std::cerr << "error: unknown element kind '" << kind << "'\n";
        return 2;
    }
    std::cout << e.to_string() << "\n";
    if (!apply_to.empty()) {
        auto rep = exact_rep(n, selected_convention());
        // Parse a monomial like "1", "X1", "X1^2 X2^-1".
        ExpVec ev(n, 0);
        std::istringstream is(apply_to);
        std::string tok;
        while (is >> tok) {
            if (tok == "1") continue;
            if (tok[0] != 'X') {
                std::cerr << "error: apply-to expects a monomial in X1..Xn\n";
                return 2;
            }
            auto caret = tok.find('^');
            int idx = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
            int pw = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
            if (idx < 1 || idx > n) {
                std::cerr << "error: variable index out of range\n";
                return 2;
            }
            ev[idx - 1] = static_cast<std::int16_t>(ev[idx - 1] + pw);
        }
        auto img = rep.apply_element(e, rep.monomial(ev));
        std::cout << "image: " << laurent_to_string(img) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification kernel for the braid-skein / Hecke-operator identities"};
    app.require_subcommand(1);

    bsk::VerifyConfig cfg;
    auto* verify = app.add_subcommand("verify", "run a verification suite and print a report");
    verify->add_option("--suite", cfg.suite, "suite name or 'all'")->envname("BSK_SUITE");
    verify->add_option("--n", cfg.n, "strand count / rank")->envname("BSK_N");
    verify->add_option("--m-max", cfg.m_max, "largest power-sum exponent")->envname("BSK_M_MAX");
    verify->add_option("--box", cfg.box_radius, "monomial box radius")->envname("BSK_BOX");
    verify->add_option("--prime", cfg.prime, "modulus for the modular pre-check")->envname("BSK_PRIME");
    verify->add_option("--trials", cfg.modular_trials, "modular trials per oracle call")
        ->envname("BSK_TRIALS");
    verify->add_option("--seed", cfg.seed, "seed for modular point sampling")->envname("BSK_SEED");
    verify->add_option("--format", cfg.format, "json or text")->envname("BSK_FORMAT");
    verify->add_flag("--timings", cfg.timings, "include wall times in the report");

    std::string kind, vec_text = "(0,1)", mode = "auto", apply_to;
    int el_n = 2, order = 2;
    auto* element = app.add_subcommand("element", "print a named element");
    element->add_option("kind", kind, "qtilde | q | w | theta")->required();
    element->add_option("x", vec_text, "lattice vector, e.g. (0,2)")->required();
    element->add_option("--n", el_n, "strand count / rank")->envname("BSK_N");
    element->add_option("--order", order, "truncation order for theta");
    element->add_option("--mode", mode, "w mode: axis | general | auto");
    element->add_option("--apply-to", apply_to, "monomial to apply the operator image to");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(cfg);
        return run_element(kind, vec_text, el_n, order, mode, apply_to);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

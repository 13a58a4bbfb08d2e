#include "bsk/suites.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "bsk/ehall.hpp"
#include "bsk/oracle.hpp"

namespace bsk {

namespace {

struct Outcome {
    CheckVerdict verdict;
    std::string witness;
};

Outcome ok_exact() { return {CheckVerdict::pass_exact, ""}; }
Outcome ok_box() { return {CheckVerdict::pass_on_box, ""}; }
Outcome bad(std::string witness) { return {CheckVerdict::fail, std::move(witness)}; }

Outcome from_verdict(const OracleVerdict& v) {
    if (v.equal) return ok_box();
    return bad(v.to_string());
}

void add_check(Report& report, const std::string& id, const std::string& statement,
               const std::string& params, const std::function<Outcome()>& body) {
    CheckRecord rec;
    rec.id = id;
    rec.statement = statement;
    rec.params = params;
    auto start = std::chrono::steady_clock::now();
    try {
        Outcome o = body();
        rec.verdict = o.verdict;
        rec.witness = o.witness;
    } catch (const std::exception& e) {
        rec.verdict = CheckVerdict::fail;
        rec.witness = std::string("exception: ") + e.what();
    }
    rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    report.checks.push_back(std::move(rec));
}

OracleOptions oracle_opts(const VerifyConfig& cfg) {
    OracleOptions o;
    o.box_radius = cfg.box_radius;
    o.modular_trials = cfg.modular_trials;
    o.prime = cfg.prime;
    o.seed = cfg.seed;
    return o;
}

Element sigma_elem(int i, int n) { return Element(Word(n, {sigma_letter(i)})); }
Element word_elem(int n, std::vector<Letter> ls) { return Element(Word(n, std::move(ls))); }

RatFunc c_pow(int e) { return RatFunc::monomial(1, 0, e); }
RatFunc s_pow(int e) { return RatFunc::monomial(1, e, 0); }

std::string n_tag(int n) { return "n=" + std::to_string(n); }

}  // namespace

void suite_daha_relations(const VerifyConfig& cfg, Report& report) {
    add_check(report, "daha.convention.unique",
              "exactly one of the 16 operator-convention variants satisfies all defining "
              "relations on the box (n=2, radius 2)",
              "", [&] {
                  auto search = search_conventions();
                  report.convention = search.selected.to_string();
                  return ok_box();
              });
    const RepConvention conv = selected_convention();
    auto rep = exact_rep(cfg.n, conv);
    const auto& fams = relation_families();
    for (size_t fam = 0; fam < fams.size(); ++fam) {
        add_check(report, "daha.rel." + fams[fam].id, fams[fam].statement,
                  n_tag(cfg.n) + " box=" + std::to_string(cfg.box_radius), [&, fam] {
                      auto failure = check_relation_family(rep, static_cast<int>(fam), cfg.box_radius);
                      if (!failure) return ok_box();
                      std::ostringstream os;
                      os << "monomial (";
                      for (size_t k = 0; k < failure->monomial.size(); ++k) {
                          if (k) os << ",";
                          os << failure->monomial[k];
                      }
                      os << ") " << failure->detail;
                      return bad(os.str());
                  });
    }
}

void suite_presentation_iso(const VerifyConfig& cfg, Report& report) {
    const int n = cfg.n;
    const auto opts = oracle_opts(cfg);
    const RepConvention conv = selected_convention();
    const RatFunc s = RatFunc::gen_s();
    const RatFunc sinv = s_pow(-1);
    const RatFunc c2 = c_pow(2);
    auto oracle0 = [&](const Element& e) { return from_verdict(oracle_is_zero(e, conv, opts)); };

    // sigma_i sigma_j = sigma_j sigma_i, |i-j| > 1
    add_check(report, "presentation.braid_far", "s_i s_j = s_j s_i for |i-j| > 1", n_tag(n), [&] {
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i + 2; j <= n - 1; ++j) {
                auto v = oracle_is_zero(sigma_elem(i, n) * sigma_elem(j, n) -
                                            sigma_elem(j, n) * sigma_elem(i, n),
                                        conv, opts);
                if (!v.equal) return bad("i=" + std::to_string(i) + " j=" + std::to_string(j) + " " + v.to_string());
            }
        return ok_box();
    });
    add_check(report, "presentation.braid_adjacent", "s_i s_(i+1) s_i = s_(i+1) s_i s_(i+1)", n_tag(n), [&] {
        for (int i = 1; i <= n - 2; ++i) {
            auto lhs = sigma_elem(i, n) * sigma_elem(i + 1, n) * sigma_elem(i, n);
            auto rhs = sigma_elem(i + 1, n) * sigma_elem(i, n) * sigma_elem(i + 1, n);
            auto v = oracle_is_zero(lhs - rhs, conv, opts);
            if (!v.equal) return bad("i=" + std::to_string(i) + " " + v.to_string());
        }
        return ok_box();
    });
    add_check(report, "presentation.sigma_x1", "s_i x1 = x1 s_i for i > 1", n_tag(n), [&] {
        for (int i = 2; i <= n - 1; ++i) {
            auto v = oracle_is_zero(sigma_elem(i, n) * word_elem(n, {kX1}) -
                                        word_elem(n, {kX1}) * sigma_elem(i, n),
                                    conv, opts);
            if (!v.equal) return bad("i=" + std::to_string(i) + " " + v.to_string());
        }
        return ok_box();
    });
    add_check(report, "presentation.sigma_y1", "s_i y1 = y1 s_i for i > 1", n_tag(n), [&] {
        for (int i = 2; i <= n - 1; ++i) {
            auto v = oracle_is_zero(sigma_elem(i, n) * word_elem(n, {kY1}) -
                                        word_elem(n, {kY1}) * sigma_elem(i, n),
                                    conv, opts);
            if (!v.equal) return bad("i=" + std::to_string(i) + " " + v.to_string());
        }
        return ok_box();
    });
    add_check(report, "presentation.x_braid", "x1 s1^(-1) x1 s1^(-1) = s1^(-1) x1 s1^(-1) x1",
              n_tag(n), [&] {
                  Letter s1i = static_cast<Letter>(-sigma_letter(1));
                  auto lhs = word_elem(n, {kX1, s1i, kX1, s1i});
                  auto rhs = word_elem(n, {s1i, kX1, s1i, kX1});
                  return oracle0(lhs - rhs);
              });
    add_check(report, "presentation.y_braid", "y1 s1 y1 s1 = s1 y1 s1 y1", n_tag(n), [&] {
        Letter s1 = sigma_letter(1);
        auto lhs = word_elem(n, {kY1, s1, kY1, s1});
        auto rhs = word_elem(n, {s1, kY1, s1, kY1});
        return oracle0(lhs - rhs);
    });
    add_check(report, "presentation.mixed", "x1^(-1) s1 y1 s1^(-1) = s1 y1 s1 x1^(-1)", n_tag(n), [&] {
        Letter s1 = sigma_letter(1);
        Letter s1i = static_cast<Letter>(-s1);
        Letter x1i = static_cast<Letter>(-kX1);
        auto lhs = word_elem(n, {x1i, s1, kY1, s1i});
        auto rhs = word_elem(n, {s1, kY1, s1, x1i});
        return oracle0(lhs - rhs);
    });
    add_check(report, "presentation.quadratic", "(s1 - s)(s1 + s^(-1)) = 0", n_tag(n), [&] {
        Letter s1 = sigma_letter(1);
        auto e = word_elem(n, {s1, s1}) - sigma_elem(1, n).scaled(s - sinv) - Element::unit(n);
        return oracle0(e);
    });
    add_check(report, "presentation.commutator",
              "x1 y1 x1^(-1) y1^(-1) = c^2 s1..s_(n-1) s_(n-1)..s1", n_tag(n), [&] {
                  auto lhs = Element(named_word(NamedWord::commutator_x1y1, n));
                  auto rhs = Element(named_word(NamedWord::beta_n, n)).scaled(c2);
                  return oracle0(lhs - rhs);
              });
    add_check(report, "presentation.base_circle", "P = c^2", n_tag(n), [&] {
        auto lhs = Element(named_word(NamedWord::P, n));
        return oracle0(lhs - Element::unit(n, c2));
    });
    add_check(report, "presentation.commutator_via_P",
              "x1 y1 x1^(-1) y1^(-1) = s1..s_(n-1) P s_(n-1)..s1", n_tag(n), [&] {
                  Word conj(n);
                  for (int k = 1; k <= n - 1; ++k) conj = conj * Word(n, {sigma_letter(k)});
                  Word conj_rev(n);
                  for (int k = n - 1; k >= 1; --k) conj_rev = conj_rev * Word(n, {sigma_letter(k)});
                  auto rhs = Element(conj * named_word(NamedWord::P, n) * conj_rev);
                  auto lhs = Element(named_word(NamedWord::commutator_x1y1, n));
                  return oracle0(lhs - rhs);
              });
    add_check(report, "presentation.q_xy",
              "q X1 Y1 X1^(-1) = (X2..Xn)^(-1) Y1 X2..Xn as operators", n_tag(n), [&] {
                  auto rep = exact_rep(n, conv);
                  const auto q = rep.q_true();
                  for (const auto& ev : box_monomials(n, cfg.box_radius)) {
                      auto f = rep.monomial(ev);
                      auto lhs =
                          rep.apply_X(1, 1, rep.apply_Y1(false, rep.apply_X(1, -1, f))).scaled(q);
                      auto g = f;
                      for (int j = 2; j <= n; ++j) g = rep.apply_X(j, 1, g);
                      g = rep.apply_Y1(false, g);
                      for (int j = 2; j <= n; ++j) g = rep.apply_X(j, -1, g);
                      if (!(lhs == g)) return bad("monomial mismatch");
                  }
                  return ok_box();
              });
}

void suite_hecke(const VerifyConfig& cfg, Report& report) {
    const RatFunc s = RatFunc::gen_s();
    const int n_top = 4;
    for (int n = 2; n <= n_top; ++n) {
        const auto& sym = symmetrizer(n);
        const std::string nn = std::to_string(n);
        add_check(report, "hecke.quasi_idempotent.n" + nn, "a_n a_n = alpha_n a_n", n_tag(n), [&] {
            if (hecke_mul(sym.a_n, sym.a_n) == sym.a_n.scaled(sym.alpha_n)) return ok_exact();
            return bad("a_n^2 differs");
        });
        add_check(report, "hecke.idempotent.n" + nn, "e_n e_n = e_n", n_tag(n), [&] {
            if (hecke_mul(sym.e_n, sym.e_n) == sym.e_n) return ok_exact();
            return bad("e_n^2 differs");
        });
        add_check(report, "hecke.eigenvalue.n" + nn, "sigma_i e_n = e_n sigma_i = s e_n", n_tag(n), [&] {
            for (int i = 1; i <= n - 1; ++i) {
                HeckeElement si(Perm::transposition(n, i));
                auto want = sym.e_n.scaled(s);
                if (!(hecke_mul(si, sym.e_n) == want)) return bad("left i=" + std::to_string(i));
                if (!(hecke_mul(sym.e_n, si) == want)) return bad("right i=" + std::to_string(i));
            }
            return ok_exact();
        });
        add_check(report, "hecke.absorption.n" + nn,
                  "w_pi a_n = a_n w_pi = s^l(pi) a_n for every permutation", n_tag(n), [&] {
                      for (const Perm& p : all_perms(n)) {
                          HeckeElement wp(p);
                          auto want = sym.a_n.scaled(s.pow(p.length()));
                          if (!(hecke_mul(wp, sym.a_n) == want)) return bad("left pi=" + p.to_string());
                          if (!(hecke_mul(sym.a_n, wp) == want)) return bad("right pi=" + p.to_string());
                      }
                      return ok_exact();
                  });
        add_check(report, "hecke.straighten_agree.n" + nn,
                  "left-factor and right-factor straightening coincide on all basis pairs", n_tag(n),
                  [&] {
                      for (const Perm& p : all_perms(n))
                          for (const Perm& q : all_perms(n)) {
                              HeckeElement a(p), b(q);
                              if (!(hecke_mul(a, b) == hecke_mul_right(a, b)))
                                  return bad(p.to_string() + " * " + q.to_string());
                          }
                      return ok_exact();
                  });
    }
    // Full twist centrality through the operator oracle.
    const RepConvention conv = selected_convention();
    for (int n = 2; n <= 3; ++n) {
        add_check(report, "hecke.full_twist_central.n" + std::to_string(n),
                  "Delta^2 commutes with every sigma_i", n_tag(n), [&] {
                      Element d2(full_twist(n));
                      for (int i = 1; i <= n - 1; ++i) {
                          auto v = oracle_is_zero(d2 * sigma_elem(i, n) - sigma_elem(i, n) * d2,
                                                  conv, oracle_opts(cfg));
                          if (!v.equal) return bad("i=" + std::to_string(i) + " " + v.to_string());
                      }
                      return ok_box();
                  });
    }
}

void suite_theta4(const VerifyConfig& cfg, Report& report) {
    const int n = cfg.n;
    const auto opts = oracle_opts(cfg);
    const RepConvention conv = selected_convention();
    auto theta = [&](const Element& e) {
        return tau_apply(TauGen::tau1, tau_apply(TauGen::tau2_inv, tau_apply(TauGen::tau1, e)));
    };
    auto theta4 = [&](const Element& e) { return theta(theta(theta(theta(e)))); };

    add_check(report, "theta4.theta_x1", "theta(x1) = y1^(-1) with theta = t1 t2^(-1) t1", n_tag(n), [&] {
        auto lhs = theta(word_elem(n, {kX1}));
        auto rhs = word_elem(n, {static_cast<Letter>(-kY1)});
        return from_verdict(oracle_equal(lhs, rhs, conv, opts));
    });
    add_check(report, "theta4.conjugation_form",
              "theta^4(x1) = [x1,y1]^(-1) x1 [x1,y1]", n_tag(n), [&] {
                  auto lhs = theta4(word_elem(n, {kX1}));
                  Word comm = named_word(NamedWord::commutator_x1y1, n);
                  auto rhs = Element(comm.inverse() * Word(n, {kX1}) * comm);
                  return from_verdict(oracle_equal(lhs, rhs, conv, opts));
              });
    Word d2 = full_twist(n);
    auto conj_d2 = [&](const Element& e) {
        return Element(d2.inverse()) * e * Element(d2);
    };
    auto gens = std::vector<std::pair<std::string, Element>>{};
    gens.emplace_back("x1", word_elem(n, {kX1}));
    gens.emplace_back("y1", word_elem(n, {kY1}));
    for (int i = 1; i <= n - 1; ++i) gens.emplace_back("s" + std::to_string(i), sigma_elem(i, n));
    for (const auto& [name, z] : gens) {
        add_check(report, "theta4.full_twist." + name,
                  "theta^4(Z) = Delta^(-2) Z Delta^2 for Z = " + name, n_tag(n), [&] {
                      return from_verdict(oracle_equal(theta4(z), conj_d2(z), conv, opts));
                  });
    }
}

void suite_power_sum_central(const VerifyConfig& cfg, Report& report) {
    const int n = cfg.n;
    const auto opts = oracle_opts(cfg);
    const RepConvention conv = selected_convention();
    for (int m = 1; m <= 3; ++m) {
        add_check(report, "psum.central.m" + std::to_string(m),
                  "sum_i y_i^m commutes with every sigma_i", n_tag(n) + " m=" + std::to_string(m), [&] {
                      Element ps = power_sum_y(m, n);
                      for (int i = 1; i <= n - 1; ++i) {
                          auto v = oracle_is_zero(ps * sigma_elem(i, n) - sigma_elem(i, n) * ps,
                                                  conv, opts);
                          if (!v.equal) return bad("i=" + std::to_string(i) + " " + v.to_string());
                      }
                      return ok_box();
                  });
    }
    add_check(report, "psum.qtilde_well_defined",
              "two distinct SL2(Z) words for x=(1,1) give the same transported power sum", n_tag(n),
              [&] {
                  Vec2 x{1, 1};
                  auto p1 = sl2_path(x);
                  auto p2 = sl2_path_alternative(x);
                  if (p1 == p2) return bad("paths coincide");
                  auto a = qtilde_via_path(x, n, p1);
                  auto b = qtilde_via_path(x, n, p2);
                  return from_verdict(oracle_equal(a, b, conv, opts));
              });
}

void suite_pw_comparison(const VerifyConfig& cfg, Report& report) {
    const int n = cfg.n;
    const auto opts = oracle_opts(cfg);
    const RepConvention conv = selected_convention();
    Element en = to_element(symmetrizer(n).e_n);
    for (int m = 1; m <= cfg.m_max; ++m) {
        const RatFunc qm1 = q_pow_minus_one(m);
        const RatFunc br = s_power_bracket(m);
        const std::vector<Vec2> axis = {{m, 0}, {-m, 0}, {0, m}, {0, -m}};
        for (const Vec2& x : axis) {
            const std::string tag = x.to_string() + " m=" + std::to_string(m);
            add_check(report, "pw.spherical." + std::to_string(m) + "." + x.to_string(),
                      "(q^m - 1) e_n W_x e_n = (s^m - s^(-m)) Q_x", n_tag(n) + " x=" + tag, [&] {
                          Element w = w_element(x, n, WMode::axis);
                          Element lhs = (en * w * en).scaled(qm1);
                          Element rhs = q_elements(x, n).q.scaled(br);
                          return from_verdict(oracle_equal(lhs, rhs, conv, opts));
                      });
            add_check(report, "pw.unsymmetrized." + std::to_string(m) + "." + x.to_string(),
                      "(q^m - 1) W_x = (s^m - s^(-m)) Qtilde_x", n_tag(n) + " x=" + tag, [&] {
                          Element lhs = w_element(x, n, WMode::axis).scaled(qm1);
                          Element rhs = q_elements(x, n).qtilde.scaled(br);
                          return from_verdict(oracle_equal(lhs, rhs, conv, opts));
                      });
        }
        add_check(report, "pw.axis_vs_general.m" + std::to_string(m),
                  "axis and general W agree at x = (0, m)", n_tag(n), [&] {
                      Vec2 x{0, m};
                      auto a = w_element(x, n, WMode::axis);
                      auto b = w_element(x, n, WMode::general);
                      return from_verdict(oracle_equal(a, b, conv, opts));
                  });
    }
    add_check(report, "pw.unsymmetrized.diag",
              "(q - 1) W_x = (s - s^(-1)) Qtilde_x at x = (1,1) via the general mode", n_tag(n), [&] {
                  Vec2 x{1, 1};
                  Element lhs = w_element(x, n, WMode::general).scaled(q_pow_minus_one(1));
                  Element rhs = q_elements(x, n).qtilde.scaled(s_power_bracket(1));
                  return from_verdict(oracle_equal(lhs, rhs, conv, opts));
              });
    add_check(report, "pw.spherical.diag",
              "(q - 1) e_n W_x e_n = (s - s^(-1)) Q_x at x = (1,1)", n_tag(n), [&] {
                  Vec2 x{1, 1};
                  Element w = w_element(x, n, WMode::general);
                  Element lhs = (en * w * en).scaled(q_pow_minus_one(1));
                  Element rhs = q_elements(x, n).q.scaled(s_power_bracket(1));
                  return from_verdict(oracle_equal(lhs, rhs, conv, opts));
              });
}

void suite_hall_transport(const VerifyConfig& cfg, Report& report) {
    const int n = cfg.n;
    const auto opts = oracle_opts(cfg);
    const RepConvention conv = selected_convention();

    // Theta-series internal consistency: two independent expansion routes.
    add_check(report, "eha.theta.dual_route",
              "exp-series and derivative-recursion theta coefficients agree to order 4", "", [&] {
                  Vec2 x0{1, 0};
                  auto a = theta_series(x0, 4);
                  auto b = theta_series_recursive(x0, 4);
                  for (size_t i = 0; i < a.size(); ++i)
                      if (!(a[i] == b[i])) return bad("order " + std::to_string(i));
                  return ok_exact();
              });
    add_check(report, "eha.theta.order1", "theta_1 = alpha_1 u_1", "", [&] {
        auto th = theta_series(Vec2{1, 0}, 2);
        UPoly want = UPoly::gen(1, 2).scaled(eha_alpha(1));
        if (th[1] == want) return ok_exact();
        return bad("theta_1 mismatch");
    });
    add_check(report, "eha.theta.order2", "theta_2 = alpha_2 u_2 + (alpha_1^2 / 2) u_1^2", "", [&] {
        auto th = theta_series(Vec2{1, 0}, 2);
        UPoly u1 = UPoly::gen(1, 2), u2 = UPoly::gen(2, 2);
        UPoly want = u2.scaled(eha_alpha(2));
        want += (u1 * u1).scaled(eha_alpha(1) * eha_alpha(1) / RatFunc(2));
        if (th[2] == want) return ok_exact();
        return bad("theta_2 mismatch");
    });

    add_check(report, "hall.collinear_transport",
              "phi_n[u_(1,0), u_(2,0)] = 0 in the operator image", n_tag(n), [&] {
                  EhaElement a = EhaElement::gen(Vec2{1, 0});
                  EhaElement b = EhaElement::gen(Vec2{2, 0});
                  Element img = phi_n(a * b - b * a, n);
                  return from_verdict(oracle_is_zero(img, conv, opts));
              });
    add_check(report, "hall.triangle_transport",
              "phi_n([u_(0,1), u_(1,0)] - eps theta_(1,1)/alpha_1) = 0", n_tag(n), [&] {
                  Vec2 y{0, 1}, x{1, 0};
                  EhaElement uy = EhaElement::gen(y), ux = EhaElement::gen(x);
                  EhaElement lhs = uy * ux - ux * uy;
                  EhaElement rhs = hall_bracket(y, x);
                  Element img = phi_n(lhs - rhs, n);
                  return from_verdict(oracle_is_zero(img, conv, opts));
              });
    for (int m = 1; m <= cfg.m_max; ++m) {
        add_check(report, "hall.w_bracket.m" + std::to_string(m),
                  "[W_(m,0), W_(0,1)] = -(s^m - s^(-m)) W_(m,1)", n_tag(n) + " m=" + std::to_string(m),
                  [&] {
                      Element wm0 = w_element(Vec2{m, 0}, n, WMode::axis);
                      Element w01 = w_element(Vec2{0, 1}, n, WMode::axis);
                      Element wm1 = w_element(Vec2{m, 1}, n, WMode::general);
                      Element e = commutator(wm0, w01) + wm1.scaled(s_power_bracket(m));
                      return from_verdict(oracle_is_zero(e, conv, opts));
                  });
    }
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "daha-relations", "presentation-iso", "hecke",          "theta4",
        "power-sum-central", "pw-comparison",  "hall-transport",
    };
    return names;
}

bool run_suite(const VerifyConfig& cfg, Report& out) {
    out.config = cfg;
    const auto dispatch = [&](const std::string& name) {
        if (name == "daha-relations") suite_daha_relations(cfg, out);
        else if (name == "presentation-iso") suite_presentation_iso(cfg, out);
        else if (name == "hecke") suite_hecke(cfg, out);
        else if (name == "theta4") suite_theta4(cfg, out);
        else if (name == "power-sum-central") suite_power_sum_central(cfg, out);
        else if (name == "pw-comparison") suite_pw_comparison(cfg, out);
        else if (name == "hall-transport") suite_hall_transport(cfg, out);
        else return false;
        return true;
    };
    if (cfg.suite == "all") {
        for (const auto& name : suite_names()) dispatch(name);
    } else if (!dispatch(cfg.suite)) {
        return false;
    }
    if (out.convention.empty()) out.convention = selected_convention().to_string();
    return true;
}

}  // namespace bsk

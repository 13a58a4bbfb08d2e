#include "bsk/rep.hpp"

#include <mutex>
#include <sstream>

namespace bsk {

std::string RepConvention::to_string() const {
    std::ostringstream os;
    os << "t:" << (t_flip ? "inv" : "std") << " T:" << (T_inverted ? "inv" : "std")
       << " q:" << (q_flip ? "inv" : "std") << " shift:" << (shift_left ? "left" : "right");
    return os.str();
}

Rep<RatFunc> exact_rep(int n, const RepConvention& conv) {
    return Rep<RatFunc>(n, conv, RatFunc::gen_s(), RatFunc::gen_c(), RatFunc(1),
                        [](const RatFunc& r) { return r; });
}

Rep<Fp> modular_rep(int n, const RepConvention& conv, std::uint64_t s0, std::uint64_t c0,
                    std::uint64_t p) {
    return Rep<Fp>(n, conv, Fp(s0, p), Fp(c0, p), Fp(1, p),
                   [s0, c0, p](const RatFunc& r) { return Fp(r.eval_mod(s0, c0, p), p); });
}

std::vector<ExpVec> box_monomials(int n, int box_radius) {
    std::vector<ExpVec> out;
    ExpVec e(n, static_cast<std::int16_t>(-box_radius));
    for (;;) {
        out.push_back(e);
        int k = n - 1;
        while (k >= 0) {
            if (e[k] < box_radius) {
                ++e[k];
                for (int j = k + 1; j < n; ++j) e[j] = static_cast<std::int16_t>(-box_radius);
                break;
            }
            --k;
        }
        if (k < 0) break;
    }
    return out;
}

namespace {

std::string exp_to_string(const ExpVec& e) {
    std::ostringstream os;
    os << "X^(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) os << ",";
        os << e[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

const std::vector<RelationFamily>& relation_families() {
    static const std::vector<RelationFamily> families = {
        {"quadratic", "(T_i + t^(1/2))(T_i - t^(-1/2)) = 0"},
        {"braid", "T_i T_(i+1) T_i = T_(i+1) T_i T_(i+1)"},
        {"tt_commute", "[T_i, T_j] = 0 for |i-j| > 1"},
        {"tx_commute", "[T_i, X_j] = 0 for j != i, i+1"},
        {"ty_commute", "[T_i, Y_j] = 0 for j != i, i+1"},
        {"xx_commute", "[X_i, X_j] = 0"},
        {"yy_commute", "[Y_i, Y_j] = 0"},
        {"x_recursion", "X_(i+1) = T_i X_i T_i"},
        {"y_recursion", "Y_(i+1) = T_i^(-1) Y_i T_i^(-1)"},
        {"cross", "X_1^(-1) Y_2 = Y_2 X_1^(-1) T_1^(-2)"},
        {"q_twist", "Y_1 X_1..X_n = q X_1..X_n Y_1"},
    };
    return families;
}

template <class K>
std::optional<RelFailure> check_relation_family(const Rep<K>& rep, int family, int box_radius) {
    const int n = rep.rank();
    const K u = rep.u_true();
    const K q = rep.q_true();
    const auto& fam = relation_families().at(family);
    auto monos = box_monomials(n, box_radius);

    for (const auto& ev : monos) {
        auto f = rep.monomial(ev);
        auto fail = [&](const std::string& detail) {
            return RelFailure{fam.id, ev, detail};
        };
        switch (family) {
            case 0:  // quadratic
                for (int i = 1; i <= n - 1; ++i) {
                    auto tf = rep.apply_T(i, false, f);
                    if (!(rep.apply_T(i, false, tf) == tf.scaled(u) + f))
                        return fail("i=" + std::to_string(i));
                }
                break;
            case 1:  // braid
                for (int i = 1; i <= n - 2; ++i) {
                    auto lhs = rep.apply_T(i, false, rep.apply_T(i + 1, false, rep.apply_T(i, false, f)));
                    auto rhs = rep.apply_T(i + 1, false, rep.apply_T(i, false, rep.apply_T(i + 1, false, f)));
                    if (!(lhs == rhs)) return fail("i=" + std::to_string(i));
                }
                break;
            case 2:  // distant T's commute
                for (int i = 1; i <= n - 1; ++i)
                    for (int j = i + 2; j <= n - 1; ++j) {
                        auto lhs = rep.apply_T(i, false, rep.apply_T(j, false, f));
                        auto rhs = rep.apply_T(j, false, rep.apply_T(i, false, f));
                        if (!(lhs == rhs)) return fail("i=" + std::to_string(i) + " j=" + std::to_string(j));
                    }
                break;
            case 3:  // [T_i, X_j] = 0, j != i, i+1
                for (int i = 1; i <= n - 1; ++i)
                    for (int j = 1; j <= n; ++j) {
                        if (j == i || j == i + 1) continue;
                        auto lhs = rep.apply_T(i, false, rep.apply_X(j, 1, f));
                        auto rhs = rep.apply_X(j, 1, rep.apply_T(i, false, f));
                        if (!(lhs == rhs)) return fail("i=" + std::to_string(i) + " j=" + std::to_string(j));
                    }
                break;
            case 4:  // [T_i, Y_j] = 0, j != i, i+1
                for (int i = 1; i <= n - 1; ++i)
                    for (int j = 1; j <= n; ++j) {
                        if (j == i || j == i + 1) continue;
                        auto lhs = rep.apply_T(i, false, rep.apply_Y(j, false, f));
                        auto rhs = rep.apply_Y(j, false, rep.apply_T(i, false, f));
                        if (!(lhs == rhs)) return fail("i=" + std::to_string(i) + " j=" + std::to_string(j));
                    }
                break;
            case 5:  // X's commute
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j) {
                        auto lhs = rep.apply_X(i, 1, rep.apply_X(j, 1, f));
                        auto rhs = rep.apply_X(j, 1, rep.apply_X(i, 1, f));
                        if (!(lhs == rhs)) return fail("i=" + std::to_string(i) + " j=" + std::to_string(j));
                    }
                break;
            case 6:  // Y's commute
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j) {
                        auto lhs = rep.apply_Y(i, false, rep.apply_Y(j, false, f));
                        auto rhs = rep.apply_Y(j, false, rep.apply_Y(i, false, f));
                        if (!(lhs == rhs)) return fail("i=" + std::to_string(i) + " j=" + std::to_string(j));
                    }
                break;
            case 7:  // X recursion
                for (int i = 1; i <= n - 1; ++i) {
                    auto lhs = rep.apply_T(i, false, rep.apply_X(i, 1, rep.apply_T(i, false, f)));
                    if (!(lhs == rep.apply_X(i + 1, 1, f))) return fail("i=" + std::to_string(i));
                }
                break;
            case 8:  // Y recursion
                for (int i = 1; i <= n - 1; ++i) {
                    auto lhs = rep.apply_T(i, true, rep.apply_Y(i, false, rep.apply_T(i, true, f)));
                    if (!(lhs == rep.apply_Y(i + 1, false, f))) return fail("i=" + std::to_string(i));
                }
                break;
            case 9: {  // cross relation
                auto lhs = rep.apply_X(1, -1, rep.apply_Y(2, false, f));
                auto rhs = rep.apply_Y(
                    2, false, rep.apply_X(1, -1, rep.apply_T(1, true, rep.apply_T(1, true, f))));
                if (!(lhs == rhs)) return fail("");
                break;
            }
            case 10: {  // q twist
                auto g = f;
                for (int j = 1; j <= n; ++j) g = rep.apply_X(j, 1, g);
                auto lhs = rep.apply_Y(1, false, g);
                auto h = rep.apply_Y(1, false, f);
                for (int j = 1; j <= n; ++j) h = rep.apply_X(j, 1, h);
                if (!(lhs == h.scaled(q))) return fail("");
                break;
            }
            default:
                throw std::out_of_range("unknown relation family");
        }
    }
    return std::nullopt;
}

template <class K>
std::optional<RelFailure> check_relations(const Rep<K>& rep, int box_radius) {
    for (int fam = 0; fam < static_cast<int>(relation_families().size()); ++fam) {
        auto failure = check_relation_family(rep, fam, box_radius);
        if (failure) return failure;
    }
    return std::nullopt;
}

ConventionSearch search_conventions() {
    ConventionSearch result;
    int passes = 0;
    std::ostringstream diag;
    for (int idx = 0; idx < RepConvention::kCount; ++idx) {
        RepConvention conv = RepConvention::from_index(idx);
        auto rep = exact_rep(2, conv);
        auto failure = check_relations(rep, 2);
        if (!failure) {
            ++passes;
            result.selected = conv;
        } else {
            result.rejected.emplace_back(conv,
                                         failure->relation + " at " + exp_to_string(failure->monomial));
            diag << "  [" << conv.to_string() << "] fails " << failure->relation << "\n";
        }
    }
    if (passes != 1) {
        std::ostringstream os;
        os << "convention search: expected exactly one passing variant, got " << passes << "\n"
           << diag.str();
        throw std::runtime_error(os.str());
    }
    return result;
}

const RepConvention& selected_convention() {
    static std::once_flag flag;
    static RepConvention conv;
    std::call_once(flag, [] { conv = search_conventions().selected; });
    return conv;
}

template class Rep<RatFunc>;
template class Rep<Fp>;
template std::optional<RelFailure> check_relations<RatFunc>(const Rep<RatFunc>&, int);
template std::optional<RelFailure> check_relations<Fp>(const Rep<Fp>&, int);
template std::optional<RelFailure> check_relation_family<RatFunc>(const Rep<RatFunc>&, int, int);
template std::optional<RelFailure> check_relation_family<Fp>(const Rep<Fp>&, int, int);

}  // namespace bsk

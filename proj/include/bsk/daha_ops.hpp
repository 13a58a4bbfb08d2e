#pragma once

#include "bsk/element.hpp"
#include "bsk/hecke.hpp"
#include "bsk/sl2.hpp"

namespace bsk {

/// Substitution images of the Dehn-twist automorphisms on the generating set:
/// both fix every sigma_i; tau1 fixes x1 and sends y1 -> y1 x1; tau2 fixes y1
/// and sends x1 -> x1 y1; inverses accordingly.
SubstImages tau_images(TauGen g, int n);

Element tau_apply(TauGen g, const Element& e);

/// Apply a path word, rightmost letter first (matrix-product order).
Element tau_apply_path(const std::vector<TauGen>& path, const Element& e);

/// Power sum sum_i y_i^m (m may be negative), expanded to generator words.
Element power_sum_y(int m, int n);
Element power_sum_x(int m, int n);

struct QPair {
    Element qtilde;  // path image of sum_i y_i^m, m = d(x)
    Element q;       // e_n * qtilde * e_n
};

/// The unsymmetrized and spherical elements attached to x via the SL_2(Z)
/// transport of the y-power sums.
QPair q_elements(const Vec2& x, int n);

/// Same with an explicitly supplied path (for well-definedness checks).
Element qtilde_via_path(const Vec2& x, int n, const std::vector<TauGen>& path);

enum class WMode { axis, general };

/// Solved braid form of the power-sum-decorated curve of homology class x:
///   axis    W_(m,0)  = (s^m - s^-m)/(1 - c^{2m})   * sum x_i^m
///           W_(-m,0) = (s^m - s^-m)/(c^{-2m} - 1)  * sum x_i^-m
///           W_(0,m)  = (s^m - s^-m)/(c^{-2m} - 1)  * sum y_i^m
///           W_(0,-m) = (s^m - s^-m)/(1 - c^{2m})   * sum y_i^-m
///   general W_x      = (s^m - s^-m)/(q^m - 1)      * Qtilde_x
Element w_element(const Vec2& x, int n, WMode mode);

/// (s^m - s^-m) as a Q(s,c) scalar.
RatFunc s_power_bracket(int m);

}  // namespace bsk

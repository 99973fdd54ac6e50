#pragma once

#include "stsp/esd.hpp"
#include "stsp/form_ideal.hpp"
#include "stsp/relative.hpp"
#include "stsp/steinberg.hpp"

namespace stsp {

// Word builders for the ESD generator calculus. Every builder checks the
// hypotheses of its construction and throws PreconditionError naming the one
// that fails. Wherever a pivot must be chosen, the smallest admissible index
// in the order -l < ... < -1 < 1 < ... < l is used.

/// Y(e_i, v, a) = Y_{i,-i}(a + 2v_i - <v_-,v_+>) Y_{-l,-i}(v_{-l} eps(i)) ... Y_{l,-i}(v_l eps(i)).
/// Requires v in I^{2l}, v_{-i} = 0, a - <v_-,v_+> in Gamma. Zero short factors are omitted.
RelWord y_word(int i, const HVector& v, const Scalar& a, const FormIdeal& form);

/// Y_{(i)}(u, v, a) = [[X(e_i, u, 0), Y(e_{-i}, v eps(i), a)] Y(e_{-i}, u a eps(-i), 0).
/// Requires <u,v> = 0, u_{+-i} = v_{+-i} = 0, v in I^{2l}, a - <v_-,v_+> in Gamma.
RelWord y_commutator_word(int i, const HVector& u, const HVector& v, const Scalar& a, const FormIdeal& form);

/// Extended Y_{(i)}(u, v, a) for arbitrary v_{+-i}:
/// Y_{(i)}(u, v - e_i v_i - e_{-i} v_{-i}, a - v_i v_{-i} eps(i)) Y(e_i, u v_i, 0) Y(e_{-i}, u v_{-i}, 0).
/// Equal to y_commutator_word when v_i = v_{-i} = 0.
RelWord y_extended_word(int i, const HVector& u, const HVector& v, const Scalar& a, const FormIdeal& form);

/// Smallest index p with u_p = u_{-p} = 0 and p not in `excluded`; 0 if none.
int smallest_pivot(const HVector& u, const std::vector<int>& excluded = {});

/// Y(u, v, a): the extended Y_{(p)} at the smallest pivot of u.
RelWord y_any_word(const HVector& u, const HVector& v, const Scalar& a, const FormIdeal& form);

/// Z_{(i)}(u, w, a) = Y_{(i)}(u~, w, a) Y(p, w, a) Y(p, u~ a, 0) with p = e_i u_i + e_{-i} u_{-i},
/// u~ = u - p. Requires <u,w> = 0, w in I^{2l}, w_{+-i} = 0, a in <w_-,w_+> + Gamma.
RelWord z_pivot_word(int i, const HVector& u, const HVector& w, const Scalar& a, const FormIdeal& form);

/// T(u~, w, a) T(p, w, a) T(p, u~ a, 0), the image of z_pivot_word. It equals T(u, w, a).
SpMatrix z_pivot_image(int i, const HVector& u, const HVector& w, const Scalar& a);

/// Z(u, 0, a), Gamma = I.
RelWord z_long_word(const HVector& u, const Scalar& a, const FormIdeal& form);
/// Z(u, v, a, 0) = Z(u, 0, -a) Z(v, 0, -a) Z(u + v, 0, a); image T(u, v a, 0). Gamma = I.
RelWord z_short_word(const HVector& u, const HVector& v, const Scalar& a, const FormIdeal& form);
/// Z(u, v, a, b) = Z(u, v, a, 0) Z(u, 0, b); image T(u, v a, b). Gamma = I.
RelWord z_full_word(const HVector& u, const HVector& v, const Scalar& a, const Scalar& b, const FormIdeal& form);

/// Y_jk(a) through Z-elements, j not in {+-k}:
/// Z_{(i)}(-e_j eps(k), 0, -a) Z_{(i)}(e_{-k}, 0, -a) Z_{(i)}(e_{-k} - e_j eps(k), 0, a), i not in {+-j, +-k}.
RelWord rel_gen_from_z(int rank, int j, int k, const Scalar& a, const FormIdeal& form);

/// X(u, v, a) for an elementary column u = phi(W) e_i: W X(e_i, phi(W)^{-1} v, a) W^{-1}.
AbsWord abs_x_word(const ElemColumn& u, const HVector& v, const Scalar& a);
/// X(u, v, a) for u with a zero pair: the extended construction over (R, R).
AbsWord abs_x_word(const HVector& u, const HVector& v, const Scalar& a);

}  // namespace stsp

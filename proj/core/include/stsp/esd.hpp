#pragma once

#include <utility>

#include "stsp/form_ideal.hpp"
#include "stsp/hvector.hpp"
#include "stsp/matrix.hpp"

namespace stsp {

/// Parameters (u, v, a) of an ESD transformation T(u, v, a). Construction
/// checks <u, v> = 0 and throws PreconditionError otherwise.
class EsdParams {
 public:
  EsdParams(HVector u, HVector v, Scalar a);

  const HVector& u() const noexcept { return u_; }
  const HVector& v() const noexcept { return v_; }
  const Scalar& a() const noexcept { return a_; }

  /// (u, -v, -a).
  EsdParams inverse() const { return EsdParams(u_, -v_, -a_); }

 private:
  HVector u_;
  HVector v_;
  Scalar a_;
};

/// w + u(<v,w> + a<u,w>) + v<u,w>.
HVector apply_esd(const EsdParams& p, const HVector& w);

SpMatrix esd_matrix(const EsdParams& p);
inline SpMatrix esd_matrix(const HVector& u, const HVector& v, const Scalar& a) {
  return esd_matrix(EsdParams(u, v, a));
}

/// M := M * T(u, v, a) in O(l^2) without forming T.
void mul_esd_right(SpMatrix& m, const EsdParams& p);

/// T_ij(a) = T(e_i, e_{-j} a eps(-j), 0) for j != -i, T_{i,-i}(a) = T(e_i, 0, a).
SpMatrix elementary_transvection(const Ring& ring, int rank, int i, int j, const Scalar& a);

/// The ESD parameters behind T_ij(a).
EsdParams elementary_params(const Ring& ring, int rank, int i, int j, const Scalar& a);

/// Defect <(Mv)_-, (Mv)_+> - <v_-, v_+> and whether it lies in Gamma.
/// Requires M symplectic and v in I^{2l}.
std::pair<Scalar, bool> gamma_defect(const SpMatrix& m, const HVector& v, const FormIdeal& form_ideal);

}  // namespace stsp

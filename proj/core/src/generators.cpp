#include "stsp/generators.hpp"

#include <algorithm>

#include "stsp/error.hpp"

namespace stsp {

namespace {

void require(bool ok, const char* construction, const char* hypothesis) {
  if (!ok) throw PreconditionError(construction, hypothesis);
}

void require_index(int i, int rank, const char* construction) {
  require(valid_index(i, rank), construction, "pivot index in +-1..+-l");
}

void require_maximal(const FormIdeal& fi, const char* construction) {
  require(fi.gamma_is_maximal(), construction, "Gamma = I");
}

}  // namespace

RelWord y_word(int i, const HVector& v, const Scalar& a, const FormIdeal& fi) {
  require_same_ring(v.ring(), fi.ring());
  require_same_ring(v.ring(), a.ring());
  require_index(i, v.rank(), "Y(e_i,v,a)");
  require(v.raw(-i) == 0, "Y(e_i,v,a)", "v_{-i} = 0");
  require(in_ideal(v, fi), "Y(e_i,v,a)", "v in I^{2l}");
  const Scalar q = split_form(v);
  require(fi.gamma_member(a - q), "Y(e_i,v,a)", "a - <v_-,v_+> in Gamma");
  RelWord w(v.ring(), v.rank());
  w.push(i, -i, a + v[i] * 2 - q);
  for (int j : indices(v.rank())) {
    if (j == i || j == -i || v.raw(j) == 0) continue;
    w.push(j, -i, v[j] * eps(i));
  }
  return w;
}

RelWord y_commutator_word(int i, const HVector& u, const HVector& v, const Scalar& a, const FormIdeal& fi) {
  require_same_ring(u.ring(), fi.ring());
  require_index(i, u.rank(), "Y_(i)(u,v,a)");
  require(u.raw(i) == 0 && u.raw(-i) == 0, "Y_(i)(u,v,a)", "u_i = u_{-i} = 0");
  require(v.raw(i) == 0 && v.raw(-i) == 0, "Y_(i)(u,v,a)", "v_i = v_{-i} = 0");
  require(form(u, v).is_zero(), "Y_(i)(u,v,a)", "<u,v> = 0");
  require(in_ideal(v, fi), "Y_(i)(u,v,a)", "v in I^{2l}");
  require(fi.gamma_member(a - split_form(v)), "Y_(i)(u,v,a)", "a - <v_-,v_+> in Gamma");
  const Ring& ring = u.ring();
  AbsWord x = abs_esd_word(i, u, ring.zero());
  RelWord h = y_word(-i, v * ring(eps(i)), a, fi);
  RelWord tail = y_word(-i, u * (a * eps(-i)), ring.zero(), fi);
  return mul(lbox(x, h), tail);
}

RelWord y_extended_word(int i, const HVector& u, const HVector& v, const Scalar& a, const FormIdeal& fi) {
  require_same_ring(u.ring(), fi.ring());
  require_index(i, u.rank(), "Y_(i)(u,v,a)");
  require(u.raw(i) == 0 && u.raw(-i) == 0, "Y_(i)(u,v,a)", "u_i = u_{-i} = 0");
  require(form(u, v).is_zero(), "Y_(i)(u,v,a)", "<u,v> = 0");
  require(in_ideal(v, fi), "Y_(i)(u,v,a)", "v in I^{2l}");
  require(fi.gamma_member(a - split_form(v)), "Y_(i)(u,v,a)", "a - <v_-,v_+> in Gamma");
  if (v.raw(i) == 0 && v.raw(-i) == 0) return y_commutator_word(i, u, v, a, fi);
  const Scalar vi = v[i], vmi = v[-i];
  RelWord w = y_commutator_word(i, u, v.without_pair(i), a - vi * vmi * eps(i), fi);
  w.append(y_word(i, u * vi, u.ring().zero(), fi));
  w.append(y_word(-i, u * vmi, u.ring().zero(), fi));
  return w;
}

int smallest_pivot(const HVector& u, const std::vector<int>& excluded) {
  for (int p : indices(u.rank())) {
    if (u.raw(p) != 0 || u.raw(-p) != 0) continue;
    if (std::find(excluded.begin(), excluded.end(), p) != excluded.end()) continue;
    return p;
  }
  return 0;
}

RelWord y_any_word(const HVector& u, const HVector& v, const Scalar& a, const FormIdeal& fi) {
  const int p = smallest_pivot(u);
  require(p != 0, "Y(u,v,a)", "u has a pair of zero coordinates u_p = u_{-p} = 0");
  return y_extended_word(p, u, v, a, fi);
}

RelWord z_pivot_word(int i, const HVector& u, const HVector& w, const Scalar& a, const FormIdeal& fi) {
  require_same_ring(u.ring(), fi.ring());
  require_index(i, u.rank(), "Z_(i)(u,w,a)");
  require(w.raw(i) == 0 && w.raw(-i) == 0, "Z_(i)(u,w,a)", "w_i = w_{-i} = 0");
  require(form(u, w).is_zero(), "Z_(i)(u,w,a)", "<u,w> = 0");
  require(in_ideal(w, fi), "Z_(i)(u,w,a)", "w in I^{2l}");
  require(fi.gamma_member(a - split_form(w)), "Z_(i)(u,w,a)", "a in <w_-,w_+> + Gamma");
  const HVector p = u.pair_part(i);
  const HVector ut = u.without_pair(i);
  RelWord z = y_commutator_word(i, ut, w, a, fi);
  z.append(y_any_word(p, w, a, fi));
  z.append(y_any_word(p, ut * a, u.ring().zero(), fi));
  return z;
}

SpMatrix z_pivot_image(int i, const HVector& u, const HVector& w, const Scalar& a) {
  const HVector p = u.pair_part(i);
  const HVector ut = u.without_pair(i);
  SpMatrix m = esd_matrix(ut, w, a);
  mul_esd_right(m, EsdParams(p, w, a));
  mul_esd_right(m, EsdParams(p, ut * a, u.ring().zero()));
  return m;
}

RelWord z_long_word(const HVector& u, const Scalar& a, const FormIdeal& fi) {
  require_maximal(fi, "Z(u,0,a)");
  require(fi.ideal_member(a), "Z(u,0,a)", "a in I");
  return z_pivot_word(-u.rank(), u, HVector(u.ring(), u.rank()), a, fi);
}

RelWord z_short_word(const HVector& u, const HVector& v, const Scalar& a, const FormIdeal& fi) {
  require_maximal(fi, "Z(u,v,a,0)");
  require(form(u, v).is_zero(), "Z(u,v,a,0)", "<u,v> = 0");
  require(fi.ideal_member(a), "Z(u,v,a,0)", "a in I");
  RelWord z = z_long_word(u, -a, fi);
  z.append(z_long_word(v, -a, fi));
  z.append(z_long_word(u + v, a, fi));
  return z;
}

RelWord z_full_word(const HVector& u, const HVector& v, const Scalar& a, const Scalar& b, const FormIdeal& fi) {
  require(fi.ideal_member(b), "Z(u,v,a,b)", "b in I");
  RelWord z = z_short_word(u, v, a, fi);
  z.append(z_long_word(u, b, fi));
  return z;
}

RelWord rel_gen_from_z(int rank, int j, int k, const Scalar& a, const FormIdeal& fi) {
  const Ring& ring = fi.ring();
  require(valid_index(j, rank) && valid_index(k, rank), "Y_jk(a) from Z", "indices in +-1..+-l");
  require(j != k && j != -k, "Y_jk(a) from Z", "j not in {+-k}");
  require_maximal(fi, "Y_jk(a) from Z");
  require(fi.ideal_member(a), "Y_jk(a) from Z", "a in I");
  int i = 0;
  for (int p : indices(rank))
    if (p != j && p != -j && p != k && p != -k) {
      i = p;
      break;
    }
  const HVector zero(ring, rank);
  const HVector x = HVector::basis(ring, rank, j) * ring(-eps(k));
  const HVector y = HVector::basis(ring, rank, -k);
  RelWord z = z_pivot_word(i, x, zero, -a, fi);
  z.append(z_pivot_word(i, y, zero, -a, fi));
  z.append(z_pivot_word(i, y + x, zero, a, fi));
  return z;
}

AbsWord abs_x_word(const ElemColumn& u, const HVector& v, const Scalar& a) {
  require(form(u.vector(), v).is_zero(), "X(u,v,a)", "<u,v> = 0");
  HVector x = apply_word_inverse(u.word(), v);
  AbsWord w = u.word();
  w.append(abs_esd_word(u.base_index(), x, a));
  w.append(inv(u.word()));
  return w;
}

AbsWord abs_x_word(const HVector& u, const HVector& v, const Scalar& a) {
  return to_abs(y_any_word(u, v, a, FormIdeal::whole(u.ring())));
}

}  // namespace stsp

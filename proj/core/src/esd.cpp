#include "stsp/esd.hpp"

#include "stsp/error.hpp"

namespace stsp {

EsdParams::EsdParams(HVector u, HVector v, Scalar a) : u_(std::move(u)), v_(std::move(v)), a_(std::move(a)) {
  require_same_ring(u_.ring(), a_.ring());
  if (!form(u_, v_).is_zero()) throw PreconditionError("T(u,v,a)", "<u,v> = 0");
}

HVector apply_esd(const EsdParams& p, const HVector& w) {
  Scalar uw = form(p.u(), w);
  Scalar coeff = form(p.v(), w) + p.a() * uw;
  return w + p.u() * coeff + p.v() * uw;
}

namespace {

// <x, e_q> = -eps(q) x_{-q}, as a dense row in storage order.
std::vector<mpz_class> functional(const HVector& x) {
  std::vector<mpz_class> f(x.dim());
  for (std::size_t s = 0; s < x.dim(); ++s) {
    const int q = index_of_slot(s, x.rank());
    f[s] = q > 0 ? mpz_class(-x.raw(-q)) : mpz_class(x.raw(-q));
  }
  return f;
}

// m += x * f^T, with x a column given by storage-order coefficients.
void add_outer(SpMatrix& m, const std::vector<mpz_class>& x, const std::vector<mpz_class>& f) {
  const std::size_t n = m.dim();
  for (std::size_t r = 0; r < n; ++r) {
    if (sgn(x[r]) == 0) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (sgn(f[c]) == 0) continue;
      m.set_raw_slot(r, c, m.raw_slot(r, c) + x[r] * f[c]);
    }
  }
}

std::vector<mpz_class> coords(const HVector& v) {
  std::vector<mpz_class> out(v.dim());
  for (std::size_t s = 0; s < v.dim(); ++s) out[s] = v.raw_slot(s);
  return out;
}

}  // namespace

void mul_esd_right(SpMatrix& m, const EsdParams& p) {
  require_same_ring(m.ring(), p.u().ring());
  // M T = M + (Mu)(f_v + a f_u) + (Mv) f_u
  const auto fu = functional(p.u());
  auto fva = functional(p.v());
  for (std::size_t s = 0; s < fva.size(); ++s) fva[s] += p.a().value() * fu[s];
  const auto mu = coords(m * p.u());
  const auto mv = coords(m * p.v());
  add_outer(m, mu, fva);
  add_outer(m, mv, fu);
}

SpMatrix esd_matrix(const EsdParams& p) {
  SpMatrix m = SpMatrix::identity(p.u().ring(), p.u().rank());
  mul_esd_right(m, p);
  if (!gram_check(m)) throw std::logic_error("esd_matrix: result is not symplectic");
  return m;
}

EsdParams elementary_params(const Ring& ring, int rank, int i, int j, const Scalar& a) {
  if (i == j) throw PreconditionError("T_ij", "i != j");
  if (!valid_index(i, rank) || !valid_index(j, rank)) throw PreconditionError("T_ij", "indices in +-1..+-l");
  HVector ei = HVector::basis(ring, rank, i);
  if (j == -i) return EsdParams(ei, HVector(ring, rank), a);
  return EsdParams(ei, HVector::basis(ring, rank, -j) * (a * eps(-j)), ring.zero());
}

SpMatrix elementary_transvection(const Ring& ring, int rank, int i, int j, const Scalar& a) {
  if (i == j) throw PreconditionError("T_ij", "i != j");
  if (!valid_index(i, rank) || !valid_index(j, rank)) throw PreconditionError("T_ij", "indices in +-1..+-l");
  require_same_ring(ring, a.ring());
  SpMatrix m = SpMatrix::identity(ring, rank);
  m.mul_elementary_right(i, j, a.value());
  return m;
}

std::pair<Scalar, bool> gamma_defect(const SpMatrix& m, const HVector& v, const FormIdeal& form_ideal) {
  if (!in_ideal(v, form_ideal)) throw PreconditionError("gamma_defect", "v in I^{2l}");
  if (!gram_check(m)) throw PreconditionError("gamma_defect", "M symplectic");
  Scalar d = split_form(m * v) - split_form(v);
  return {d, form_ideal.gamma_member(d)};
}

}  // namespace stsp

#pragma once

// Naive reference implementations used as test oracles. Nothing here calls
// into the library's arithmetic: vectors and matrices are plain mpz arrays,
// the form comes from the Gram matrix, and transvections are written out as
// sums of matrix units.

#include <gmpxx.h>

#include <cstdlib>
#include <string>
#include <vector>

#include "stsp/hvector.hpp"
#include "stsp/matrix.hpp"

namespace oracle {

// Basis order e_{-l}, ..., e_{-1}, e_1, ..., e_l.
inline std::vector<int> basis(int l) {
  std::vector<int> b;
  for (int k = l; k >= 1; --k) b.push_back(-k);
  for (int k = 1; k <= l; ++k) b.push_back(k);
  return b;
}

inline int pos(int i, int l) {
  const auto b = basis(l);
  for (std::size_t k = 0; k < b.size(); ++k)
    if (b[k] == i) return static_cast<int>(k);
  std::abort();
}

inline int sgn(int i) { return i > 0 ? 1 : -1; }

// modulus 0 means the integers.
inline mpz_class canon(mpz_class x, long modulus) {
  if (modulus == 0) return x;
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(modulus));
  return r;
}

struct Vec {
  int l;
  long m;
  std::vector<mpz_class> c;

  Vec(int l_, long m_) : l(l_), m(m_), c(2 * l_) {}
  mpz_class& at(int i) { return c[pos(i, l)]; }
  const mpz_class& at(int i) const { return c[pos(i, l)]; }
  void reduce() {
    for (auto& x : c) x = canon(x, m);
  }
  bool operator==(const Vec& o) const {
    for (std::size_t k = 0; k < c.size(); ++k)
      if (canon(c[k], m) != canon(o.c[k], m)) return false;
    return true;
  }
};

inline Vec unit(int l, long m, int i) {
  Vec v(l, m);
  v.at(i) = 1;
  return v;
}

struct Mat {
  int l;
  long m;
  std::vector<mpz_class> e;  // row-major, 2l x 2l

  Mat(int l_, long m_) : l(l_), m(m_), e(4 * l_ * l_) {}
  int n() const { return 2 * l; }
  mpz_class& at(int p, int q) { return e[pos(p, l) * n() + pos(q, l)]; }
  const mpz_class& at(int p, int q) const { return e[pos(p, l) * n() + pos(q, l)]; }
  bool operator==(const Mat& o) const {
    for (std::size_t k = 0; k < e.size(); ++k)
      if (canon(e[k], m) != canon(o.e[k], m)) return false;
    return true;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }
};

inline Mat identity(int l, long m) {
  Mat a(l, m);
  for (int i : basis(l)) a.at(i, i) = 1;
  return a;
}

inline Mat operator*(const Mat& a, const Mat& b) {
  Mat c(a.l, a.m);
  const int n = a.n();
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      if (a.e[r * n + k] == 0) continue;
      for (int q = 0; q < n; ++q) c.e[r * n + q] += a.e[r * n + k] * b.e[k * n + q];
    }
  for (auto& x : c.e) x = canon(x, a.m);
  return c;
}

inline Vec operator*(const Mat& a, const Vec& v) {
  Vec w(v.l, v.m);
  const int n = a.n();
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) w.c[r] += a.e[r * n + k] * v.c[k];
  w.reduce();
  return w;
}

// Gram matrix of <e_p, e_q> = sgn(p) [p = -q].
inline Mat gram(int l, long m) {
  Mat j(l, m);
  for (int p : basis(l)) j.at(p, -p) = sgn(p);
  return j;
}

inline mpz_class form(const Vec& u, const Vec& v) {
  mpz_class s = 0;
  for (int p : basis(u.l)) s += u.at(p) * sgn(p) * v.at(-p);
  return canon(s, u.m);
}

inline Mat transpose(const Mat& a) {
  Mat t(a.l, a.m);
  for (int p : basis(a.l))
    for (int q : basis(a.l)) t.at(p, q) = a.at(q, p);
  return t;
}

inline bool symplectic(const Mat& a) { return transpose(a) * gram(a.l, a.m) * a == gram(a.l, a.m); }

// T(u, v, a): w -> w + u(<v,w> + a<u,w>) + v<u,w>, column by column.
inline Mat esd(const Vec& u, const Vec& v, const mpz_class& a) {
  Mat t(u.l, u.m);
  for (int q : basis(u.l)) {
    Vec w = unit(u.l, u.m, q);
    const mpz_class uw = form(u, w), vw = form(v, w);
    for (int p : basis(u.l)) t.at(p, q) = canon(w.at(p) + u.at(p) * (vw + a * uw) + v.at(p) * uw, u.m);
  }
  return t;
}

// T_ij(a) = 1 + a E_ij - a eps_i eps_j E_{-j,-i} for j != -i; T_{i,-i}(a) = 1 + a eps_i E_{i,-i}.
inline Mat elementary(int l, long m, int i, int j, const mpz_class& a) {
  Mat t = identity(l, m);
  if (j == -i) {
    t.at(i, -i) += a * sgn(i);
  } else {
    t.at(i, j) += a;
    t.at(-j, -i) -= a * sgn(i) * sgn(j);
  }
  for (auto& x : t.e) x = canon(x, m);
  return t;
}

inline long modulus_of(const stsp::Ring& r) { return r.is_finite() ? static_cast<long>(r.modulus()) : 0; }

inline Vec from(const stsp::HVector& v) {
  Vec o(v.rank(), modulus_of(v.ring()));
  for (int i : basis(v.rank())) o.at(i) = v.raw(i);
  return o;
}

inline Mat from(const stsp::SpMatrix& a) {
  Mat o(a.rank(), modulus_of(a.ring()));
  for (int p : basis(a.rank()))
    for (int q : basis(a.rank())) o.at(p, q) = a.raw(p, q);
  return o;
}

inline mpz_class from(const stsp::Scalar& s) { return s.value(); }

// M lies in the image of U_i iff M - 1 is supported on row i and column -i.
inline bool unipotent_shape(const Mat& a, int i) {
  const Mat one = identity(a.l, a.m);
  for (int p : basis(a.l))
    for (int q : basis(a.l))
      if (p != i && q != -i && canon(a.at(p, q) - one.at(p, q), a.m) != 0) return false;
  return true;
}

}  // namespace oracle

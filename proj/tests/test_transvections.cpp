#include <doctest.h>

#include "stsp/error.hpp"
#include "stsp/esd.hpp"
#include "stsp/sampling.hpp"
#include "stsp/words.hpp"
#include "support.hpp"

using namespace stsp;

namespace {

HVector e(const Ring& r, int l, int i) { return HVector::basis(r, l, i); }

}  // namespace

TEST_SUITE("transvections") {

TEST_CASE("ESD formula on basis vectors") {
  Ring z = Ring::integers();
  HVector zero(z, 3);
  Rng rng(3);
  HVector u = testing::random_vector(z, 3, rng), w = testing::random_vector(z, 3, rng);
  CHECK(apply_esd(EsdParams(u, zero, z(0)), w) == w);
  CHECK(apply_esd(EsdParams(e(z, 3, 1), zero, z(7)), e(z, 3, -1)) == e(z, 3, -1) + e(z, 3, 1) * z(7));
  CHECK(apply_esd(EsdParams(e(z, 3, 1), e(z, 3, 2), z(0)), e(z, 3, -2)) == e(z, 3, -2) + e(z, 3, 1));
  CHECK_THROWS_AS(EsdParams(e(z, 3, 1), e(z, 3, -1), z(0)), PreconditionError);
}

TEST_CASE("ESD matrices match the oracle and are symplectic") {
  for (Ring r : {Ring::integers(), Ring::modulo(4), Ring::modulo(12)}) {
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
      const int l = 3 + t % 2;
      HVector u = testing::random_vector(r, l, rng);
      HVector v = testing::orthogonal_to(u, rng);
      Scalar a = testing::draw(r, rng);
      SpMatrix m = esd_matrix(u, v, a);
      CHECK(oracle::from(m) == oracle::esd(oracle::from(u), oracle::from(v), a.value()));
      CHECK(gram_check(m));
      CHECK(oracle::symplectic(oracle::from(m)));
      CHECK((esd_matrix(u, -v, -a) * m).is_identity());
      CHECK(esd_matrix(u, HVector(r, l), r.zero()).is_identity());
    }
  }
}

TEST_CASE("elementary transvections match matrix units") {
  for (Ring r : {Ring::integers(), Ring::modulo(6)}) {
    for (int i : oracle::basis(3))
      for (int j : oracle::basis(3)) {
        if (i == j) continue;
        for (long a : {-3L, 1L, 5L}) {
          CAPTURE(i);
          CAPTURE(j);
          CHECK(oracle::from(elementary_transvection(r, 3, i, j, r(a))) == oracle::elementary(3, oracle::modulus_of(r), i, j, a));
        }
      }
    CHECK_THROWS_AS(elementary_transvection(r, 3, 2, 2, r(1)), PreconditionError);
  }
  Ring z = Ring::integers();
  CHECK(elementary_transvection(z, 3, 1, 2, z(5)).column(2) == e(z, 3, 2) + e(z, 3, 1) * z(5));
  CHECK(elementary_transvection(z, 3, 1, -1, z(5)).column(-1) == e(z, 3, -1) + e(z, 3, 1) * z(5));
  CHECK(elementary_transvection(z, 3, 1, 2, z(0)).is_identity());
}

TEST_CASE("gram check") {
  Ring z = Ring::integers();
  CHECK(gram_check(SpMatrix::identity(z, 3)));
  for (int i : oracle::basis(3))
    for (int j : oracle::basis(3))
      if (i != j) CHECK(gram_check(elementary_transvection(z, 3, i, j, z(3))));
  // Swapping e_1 and e_2 alone sends the pair (e_1, e_{-1}) to (e_2, e_{-1}).
  SpMatrix swap = SpMatrix::identity(z, 3);
  swap.set(1, 1, z(0));
  swap.set(2, 2, z(0));
  swap.set(2, 1, z(1));
  swap.set(1, 2, z(1));
  CHECK_FALSE(oracle::symplectic(oracle::from(swap)));
  CHECK_FALSE(gram_check(swap));
}

TEST_CASE("ESD laws on random draws") {
  for (Ring r : {Ring::integers(), Ring::modulo(4), Ring::modulo(12)}) {
    FormIdeal whole = FormIdeal::whole(r);
    for (int l : {3, 4}) {
      for (std::uint64_t t = 0; t < 60; ++t) {
        Draw d(whole, l, Rng::stream(9, "esd-laws", t), 8);
        HVector u = d.vec();
        HVector v = d.vec(), w = d.vec();
        d.orthogonalize(v, {u}, {}, false);
        d.orthogonalize(w, {u}, {}, false);
        Scalar a = d.r(), b = d.r();
        const SpMatrix tv = esd_matrix(u, v, a);
        // composition
        CHECK(tv * esd_matrix(u, w, b) == esd_matrix(u, v + w, a + b + form(v, w)));
        // symmetry
        CHECK(esd_matrix(u, v * a, r.zero()) == esd_matrix(v, u * a, r.zero()));
        // conjugation
        AbsWord g = d.abs_word(d.rng().below(6));
        SpMatrix pg = eval_abs_word(g);
        CHECK(pg * tv * pg.symplectic_inverse() == esd_matrix(pg * u, pg * v, a));
        // fixed points
        HVector x = d.vec();
        d.orthogonalize(x, {u, v}, {}, false);
        if (form(u, x).is_zero() && form(v, x).is_zero()) CHECK(apply_esd(EsdParams(u, v, a), x) == x);
      }
    }
  }
}

TEST_CASE("commutator of ESD transformations at a pivot") {
  for (Ring r : {Ring::integers(), Ring::modulo(12)}) {
    FormIdeal whole = FormIdeal::whole(r);
    for (std::uint64_t t = 0; t < 60; ++t) {
      const int l = 3 + static_cast<int>(t % 2);
      Draw d(whole, l, Rng::stream(4, "esd-commutator", t), 8);
      int i = d.index();
      HVector u = d.vec({i, -i}), v = d.vec({i, -i});
      d.orthogonalize(v, {u}, {i, -i}, false);
      Scalar a = d.r();
      SpMatrix x = esd_matrix(e(r, l, i), u, r.zero());
      SpMatrix y = esd_matrix(e(r, l, -i), v, a);
      SpMatrix lhs = x * y * x.symplectic_inverse() * y.symplectic_inverse();
      SpMatrix rhs = esd_matrix(u, v * r(eps(i)), a) * esd_matrix(e(r, l, -i), -u * (a * eps(-i)), r.zero());
      CHECK(lhs == rhs);
    }
  }
}

}

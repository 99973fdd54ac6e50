#include <doctest.h>

#include "stsp/error.hpp"
#include "stsp/generators.hpp"
#include "stsp/sampling.hpp"
#include "support.hpp"

using namespace stsp;

namespace {

oracle::Mat T(const HVector& u, const HVector& v, const Scalar& a) {
  return oracle::esd(oracle::from(u), oracle::from(v), a.value());
}

HVector e(const Ring& r, int l, int i) { return HVector::basis(r, l, i); }

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("Y(e_i, v, a) at the corollary bindings") {
  Ring r = Ring::modulo(12);
  FormIdeal f = FormIdeal::maximal(r, {r(2)});
  HVector zero(r, 3);
  for (int i : oracle::basis(3)) {
    CHECK(y_word(i, zero, r(4), f) == RelWord::gen(r, 3, i, -i, r(4)));
    for (int j : oracle::basis(3)) {
      if (j == i || j == -i) continue;
      RelWord y = y_word(-j, e(r, 3, i) * (r(-6) * eps(j)), r.zero(), f);
      CHECK(eval_rel_word(y) == elementary_transvection(r, 3, i, j, r(6)));
    }
  }
}

TEST_CASE("Y words have the ESD image and add up") {
  for (const FormIdeal& f : {FormIdeal::maximal(Ring::integers(), {Ring::integers()(2)}),
                             FormIdeal::minimal(Ring::modulo(12), {Ring::modulo(12)(2)})}) {
    const Ring& r = f.ring();
    for (std::uint64_t t = 0; t < 60; ++t) {
      Draw d(f, 3, Rng::stream(2, "y-word", t), 8);
      int i = d.index();
      HVector v = d.ideal_vec({-i}), w = d.ideal_vec({-i});
      Scalar a = split_form(v) + d.gamma();
      Scalar b = split_form(w) + d.gamma();
      RelWord yv = y_word(i, v, a, f);
      CHECK(parameters_admissible(yv, f));
      CHECK(oracle::from(eval_rel_word(yv)) == T(e(r, 3, i), v, a));
      CHECK(eval_rel_word(mul(yv, y_word(i, w, b, f))) == eval_rel_word(y_word(i, v + w, a + b + form(v, w), f)));
    }
  }
}

TEST_CASE("pivot constructions follow the ESD law") {
  for (const FormIdeal& f : {FormIdeal::maximal(Ring::integers(), {Ring::integers()(2)}),
                             FormIdeal::minimal(Ring::integers(), {Ring::integers()(2)}),
                             FormIdeal::maximal(Ring::modulo(9), {Ring::modulo(9)(3)})}) {
    const Ring& r = f.ring();
    for (std::uint64_t t = 0; t < 60; ++t) {
      const int l = 3 + static_cast<int>(t % 2);
      Draw d(f, l, Rng::stream(4, "pivot", t), 8);
      int i = d.index();
      HVector u = d.vec({i, -i});
      HVector v = d.ideal_vec({i, -i});
      d.orthogonalize(v, {u}, {i, -i}, true);
      Scalar a = split_form(v) + d.gamma();
      CHECK(oracle::from(eval_rel_word(y_commutator_word(i, u, v, a, f))) == T(u, v, a));

      HVector vx = d.ideal_vec();
      d.orthogonalize(vx, {u}, {}, true);
      Scalar ax = split_form(vx) + d.gamma();
      RelWord ext = y_extended_word(i, u, vx, ax, f);
      CHECK(oracle::from(eval_rel_word(ext)) == T(u, vx, ax));
      CHECK(parameters_admissible(ext, f));
      CHECK(y_extended_word(i, u, v, a, f) == y_commutator_word(i, u, v, a, f));

      HVector uz = d.vec();
      HVector w = d.ideal_vec({i, -i});
      d.orthogonalize(w, {uz}, {i, -i}, true);
      Scalar az = split_form(w) + d.gamma();
      CHECK(oracle::from(eval_rel_word(z_pivot_word(i, uz, w, az, f))) == T(uz, w, az));
      CHECK(oracle::from(z_pivot_image(i, uz, w, az)) == T(uz, w, az));
    }
  }
}

TEST_CASE("Y_(i) on a basis vector equals Y") {
  Ring z = Ring::integers();
  FormIdeal f = FormIdeal::maximal(z, {z(2)});
  Draw d(f, 3, Rng(7), 8);
  for (int t = 0; t < 30; ++t) {
    int i = d.index();
    int j = d.index_not_in({i, -i});
    HVector v = d.ideal_vec({-j, i, -i});
    Scalar a = split_form(v) + d.gamma();
    CHECK(eval_rel_word(y_commutator_word(i, e(z, 3, j), v, a, f)) == eval_rel_word(y_word(j, v, a, f)));
  }
}

TEST_CASE("hypotheses are enforced") {
  Ring z = Ring::integers();
  FormIdeal f = FormIdeal::minimal(z, {z(2)});
  HVector zero(z, 3);
  CHECK_THROWS_AS(y_word(1, e(z, 3, -1) * z(2), z(0), f), PreconditionError);
  CHECK_THROWS_AS(y_word(1, e(z, 3, 2), z(0), f), PreconditionError);
  CHECK_THROWS_AS(y_word(1, zero, z(2), f), PreconditionError);
  CHECK_THROWS_AS(y_commutator_word(1, e(z, 3, 1), zero, z(0), f), PreconditionError);
  CHECK_THROWS_AS(z_long_word(e(z, 3, 1), z(2), f), PreconditionError);
  try {
    y_commutator_word(1, e(z, 3, 2), e(z, 3, -2) * z(2), z(0), f);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& err) {
    CHECK(err.hypothesis() == "<u,v> = 0");
  }
}

TEST_CASE("Z words over a maximal parameter") {
  for (const FormIdeal& f : {FormIdeal::maximal(Ring::integers(), {Ring::integers()(3)}),
                             FormIdeal::maximal(Ring::modulo(12), {Ring::modulo(12)(2)})}) {
    const Ring& r = f.ring();
    HVector zero(r, 3);
    for (std::uint64_t t = 0; t < 40; ++t) {
      Draw d(f, 3, Rng::stream(5, "z-words", t), 8);
      HVector u = d.vec(), v = d.vec();
      d.orthogonalize(v, {u}, {}, false);
      Scalar a = d.ideal(), b = d.ideal(), c = d.r();
      CHECK(oracle::from(eval_rel_word(z_long_word(u, a, f))) == T(u, zero, a));
      CHECK(oracle::from(eval_rel_word(z_short_word(u, v, a, f))) == T(u, v * a, r.zero()));
      CHECK(oracle::from(eval_rel_word(z_full_word(u, v, a, b, f))) == T(u, v * a, b));
      CHECK(eval_rel_word(z_long_word(u * c, a, f)) == eval_rel_word(z_long_word(u, a * c * c, f)));
      CHECK(eval_rel_word(z_short_word(u, u * c, a, f)) == eval_rel_word(z_long_word(u, a * c * 2, f)));
      AbsWord g = d.abs_word(3);
      CHECK(eval_rel_word(act(g, z_long_word(u, a, f))) == eval_rel_word(z_long_word(apply_word(g, u), a, f)));
    }
    for (int i : oracle::basis(3)) CHECK(eval_rel_word(z_long_word(e(r, 3, i), r(6), f)) == elementary_transvection(r, 3, i, -i, r(6)));
  }
}

TEST_CASE("relative generators from Z") {
  Ring r = Ring::modulo(12);
  FormIdeal f = FormIdeal::maximal(r, {r(3)});
  for (int j : oracle::basis(3))
    for (int k : oracle::basis(3)) {
      if (j == k || j == -k) continue;
      CHECK(eval_rel_word(rel_gen_from_z(3, j, k, r.zero(), f)).is_identity());
      CHECK(oracle::from(eval_rel_word(rel_gen_from_z(3, j, k, r(9), f))) == oracle::elementary(3, 12, j, k, 9));
    }
  CHECK_THROWS_AS(rel_gen_from_z(3, 1, -1, r(3), f), PreconditionError);
  CHECK_THROWS_AS(rel_gen_from_z(3, 1, 2, r(3), FormIdeal::minimal(r, {r(2)})), PreconditionError);
}

}

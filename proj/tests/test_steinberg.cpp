#include <doctest.h>

#include "stsp/error.hpp"
#include "stsp/generators.hpp"
#include "stsp/sampling.hpp"
#include "stsp/steinberg.hpp"
#include "stsp/words.hpp"
#include "support.hpp"

using namespace stsp;

namespace {

AbsWord X(const Ring& r, int i, int j, long a, int sign = 1) { return AbsWord::letter(r, 3, i, j, r(a), sign); }

oracle::Mat oracle_word(const AbsWord& w) {
  const long m = oracle::modulus_of(w.ring());
  oracle::Mat acc = oracle::identity(w.rank(), m);
  for (const auto& x : w.letters()) {
    mpz_class a = x.gen.r.value() * x.sign;
    acc = acc * oracle::elementary(w.rank(), m, x.gen.i, x.gen.j, a);
  }
  return acc;
}

}  // namespace

TEST_SUITE("steinberg") {

TEST_CASE("evaluation of short words") {
  Ring z = Ring::integers();
  CHECK(eval_abs_word(AbsWord(z, 3)).is_identity());
  CHECK(eval_abs_word(mul(X(z, 1, 2, 1), X(z, 1, 2, 1, -1))).is_identity());
  for (long r : {2L, -3L})
    for (long s : {1L, 5L}) {
      AbsWord c = comm(X(z, 1, 2, r), X(z, 2, -1, s));
      CHECK(eval_abs_word(c) == elementary_transvection(z, 3, 1, -1, z(2 * r * s)));
    }
}

TEST_CASE("evaluation agrees with the oracle product") {
  for (Ring r : {Ring::integers(), Ring::modulo(4), Ring::modulo(12)}) {
    Draw d(FormIdeal::whole(r), 4, Rng(2), 6);
    for (int t = 0; t < 50; ++t) {
      AbsWord w = d.abs_word(d.rng().below(8));
      CHECK(oracle::from(eval_abs_word(w)) == oracle_word(w));
      HVector v = d.vec();
      CHECK(apply_word(w, v) == eval_abs_word(w) * v);
      CHECK(apply_word_inverse(w, apply_word(w, v)) == v);
    }
  }
}

TEST_CASE("word utilities") {
  Ring z = Ring::integers();
  Draw d(FormIdeal::whole(z), 3, Rng(8), 6);
  for (int t = 0; t < 30; ++t) {
    AbsWord x = d.abs_word(4), y = d.abs_word(3);
    CHECK(free_reduce(inv(inv(x))) == free_reduce(x));
    CHECK(free_reduce(comm(x, x)).empty());
    SpMatrix px = eval_abs_word(x), py = eval_abs_word(y);
    CHECK(eval_abs_word(comm(x, y)) == px * py * px.symplectic_inverse() * py.symplectic_inverse());
    CHECK(eval_abs_word(conj(x, y)) == px * py * px.symplectic_inverse());
  }
  // same-(i,j) letters are not merged
  CHECK(free_reduce(mul(X(z, 1, 2, 1), X(z, 1, 2, 2))).size() == 2);
}

TEST_CASE("word syntax") {
  Ring z = Ring::integers();
  AbsWord w = parse_abs_word(z, 3, "X(1,2;3) X(2,-2;1)^-1");
  REQUIRE(w.size() == 2);
  CHECK(w.letters()[1].sign == -1);
  CHECK(parse_abs_word(z, 3, w.to_string()) == w);
  CHECK(parse_abs_word(z, 3, "").empty());
  CHECK(parse_abs_word(z, 3, "1").empty());
  CHECK_THROWS_AS(parse_abs_word(z, 3, "X(1,1;3)"), ParseError);
  CHECK_THROWS_AS(parse_abs_word(z, 3, "X(1,4;3)"), ParseError);
  try {
    parse_abs_word(z, 3, "X(1,2;3) X(2,;1)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 13);
  }
}

TEST_CASE("ESD words at a pivot") {
  for (Ring r : {Ring::integers(), Ring::modulo(12)}) {
    Draw d(FormIdeal::whole(r), 3, Rng(21), 8);
    for (int t = 0; t < 60; ++t) {
      int i = d.index();
      HVector v = d.vec({-i});
      Scalar a = d.r();
      CHECK(oracle::from(eval_abs_word(abs_esd_word(i, v, a))) ==
            oracle::esd(oracle::from(HVector::basis(r, 3, i)), oracle::from(v), a.value()));
    }
    CHECK(eval_abs_word(abs_esd_word(2, HVector(r, 3), r.zero())).is_identity());
    for (int i : oracle::basis(3))
      for (int j : oracle::basis(3)) {
        if (j == i || j == -i) continue;
        HVector v = HVector::basis(r, 3, -j) * r(-5 * eps(j));
        CHECK(eval_abs_word(abs_esd_word(i, v, r.zero())) == elementary_transvection(r, 3, i, j, r(5)));
      }
    CHECK_THROWS_AS(abs_esd_word(1, HVector::basis(r, 3, -1), r.zero()), PreconditionError);
  }
}

TEST_CASE("X(u, v, a) for elementary columns") {
  Ring r = Ring::modulo(12);
  Draw d(FormIdeal::whole(r), 3, Rng(6), 8);
  for (int i : oracle::basis(3))
    CHECK(eval_abs_word(abs_x_word(ElemColumn::basis(r, 3, i), HVector(r, 3), r(5))) ==
          elementary_transvection(r, 3, i, -i, r(5)));
  for (int t = 0; t < 40; ++t) {
    ElemColumn u = d.elem_column(5);
    HVector v = d.vec();
    d.orthogonalize(v, {u.vector()}, {}, false);
    Scalar a = d.r();
    CHECK(eval_abs_word(abs_x_word(u, v, a)) == esd_matrix(u.vector(), v, a));
  }
}

TEST_CASE("elementary columns") {
  Ring z = Ring::integers();
  ElemColumn c0 = random_elementary_column(z, 3, 0, 4);
  CHECK(c0.vector() == HVector::basis(z, 3, c0.base_index()));
  ElemColumn c1(X(z, 1, 2, 7), 2);
  CHECK(c1.vector() == HVector::basis(z, 3, 2) + HVector::basis(z, 3, 1) * z(7));
  for (std::uint64_t s = 0; s < 20; ++s) {
    ElemColumn c = random_elementary_column(Ring::modulo(9), 4, 6, s);
    CHECK(c.check());
    CHECK(gram_check(eval_abs_word(c.word())));
  }
  CHECK(random_elementary_column(z, 3, 5, 77).word() == random_elementary_column(z, 3, 5, 77).word());
}

TEST_CASE("relation suites") {
  SuiteOptions o{40, 3, 8};
  for (Ring r : {Ring::integers(), Ring::modulo(2), Ring::modulo(12)}) {
    Report rep = verify_steinberg_relations(r, 3, o);
    CHECK(rep.passed());
    for (const char* fam : {"S0", "S1", "S2", "S3", "S4", "S5", "P1", "P2", "P3"}) CHECK(rep.passes_for(fam) == 40);
  }
  Report ex = verify_steinberg_exhaustive(Ring::modulo(2), 3);
  CHECK(ex.passed());
  CHECK(ex.passes() == 24);
}

}

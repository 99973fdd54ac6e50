#include <doctest.h>

#include <cstdlib>

#include "stsp/error.hpp"
#include "stsp/esd.hpp"
#include "stsp/relative.hpp"
#include "stsp/sampling.hpp"
#include "stsp/unipotent.hpp"
#include "support.hpp"

using namespace stsp;

namespace {

SpMatrix T(const Ring& r, int l, int i, int j, const Scalar& a) { return elementary_transvection(r, l, i, j, a); }

}  // namespace

TEST_SUITE("relative") {

TEST_CASE("evaluation of relative words") {
  Ring r = Ring::modulo(12);
  CHECK(eval_rel_word(RelWord(r, 3)).is_identity());
  CHECK(eval_rel_word(RelWord::gen(r, 3, 1, 2, r(4))) == T(r, 3, 1, 2, r(4)));
  Draw d(FormIdeal::maximal(r, {r(4)}), 3, Rng(1), 8);
  for (int t = 0; t < 30; ++t) {
    AbsWord g = d.abs_word(4);
    RelWord x(r, 3);
    x.push(g, 2, -3, d.ideal());
    CHECK(eval_rel_word(mul(x, inv(x))).is_identity());
    CHECK(free_reduce(mul(x, inv(x))).empty());
  }
}

TEST_CASE("the absolute group acts by prefixing") {
  Ring z = Ring::integers();
  Draw d(FormIdeal::maximal(z, {z(3)}), 3, Rng(2), 8);
  for (int t = 0; t < 30; ++t) {
    RelWord w = RelWord::gen(z, 3, 1, -2, d.ideal());
    w.push(d.abs_word(2), -3, 3, d.ideal(), -1);
    AbsWord f = d.abs_word(3);
    CHECK(act(AbsWord(z, 3), w) == w);
    RelWord back = act(f, act(inv(f), w));
    for (std::size_t k = 0; k < w.size(); ++k) CHECK(free_reduce(back.atoms()[k].g) == free_reduce(w.atoms()[k].g));
    SpMatrix pf = eval_abs_word(f);
    CHECK(eval_rel_word(act(f, w)) == pf * eval_rel_word(w) * pf.symplectic_inverse());
    CHECK(to_abs(w).size() > 0);
    CHECK(eval_abs_word(to_abs(w)) == eval_rel_word(w));
  }
}

TEST_CASE("boxed commutators") {
  Ring z = Ring::integers();
  Draw d(FormIdeal::maximal(z, {z(2)}), 3, Rng(3), 6);
  for (int t = 0; t < 30; ++t) {
    int i = d.index();
    int j = d.index_not_in({i, -i});
    Scalar alpha = d.gamma(), r = d.r(), a = d.ideal();
    AbsWord x = AbsWord::letter(z, 3, -i, j, r);
    RelWord kl5 = rbox(RelWord::gen(z, 3, i, -i, alpha), x);
    CHECK(eval_rel_word(kl5) == T(z, 3, i, j, alpha * r * eps(i)) * T(z, 3, -j, j, -alpha * r * r));
    RelWord kl6 = lbox(AbsWord::letter(z, 3, i, j, r), RelWord::gen(z, 3, j, -i, a));
    CHECK(eval_rel_word(kl6) == T(z, 3, i, -i, r * a * 2 * eps(i)));
  }
}

TEST_CASE("relative word syntax") {
  Ring z = Ring::integers();
  RelWord w = parse_rel_word(z, 3, "Y(1,2;3) [X(1,3;1)] |> Y(2,-2;4)^-1");
  REQUIRE(w.size() == 2);
  CHECK(w.atoms()[1].g.size() == 1);
  CHECK(w.atoms()[1].sign == -1);
  CHECK(parse_rel_word(z, 3, w.to_string()) == w);
  CHECK(parse_rel_word(z, 3, "X(1,3;1) X(2,1;1) |> Y(1,2;3)").atoms()[0].g.size() == 2);
  CHECK(parse_rel_word(z, 3, "1").empty());
  CHECK_THROWS_AS(parse_rel_word(z, 3, "Y(1,1;3)"), ParseError);
  try {
    parse_rel_word(z, 3, "Y(1,2;3) [X(1,;1)] |> Y(2,3;1)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 14);
  }
}

TEST_CASE("parameter admissibility") {
  Ring z = Ring::integers();
  FormIdeal f = FormIdeal::minimal(z, {z(2)});
  CHECK(parameters_admissible(RelWord::gen(z, 3, 1, 2, z(2)), f));
  CHECK_FALSE(parameters_admissible(RelWord::gen(z, 3, 1, 2, z(3)), f));
  CHECK(parameters_admissible(RelWord::gen(z, 3, 1, -1, z(4)), f));
  CHECK_FALSE(parameters_admissible(RelWord::gen(z, 3, 1, -1, z(2)), f));
}

TEST_CASE("KL suite") {
  Ring z12 = Ring::modulo(12);
  SuiteOptions o{30, 5, 8};
  for (const FormIdeal& f : {FormIdeal::maximal(z12, {z12(4)}), FormIdeal::minimal(z12, {z12(4)}),
                             FormIdeal::minimal(Ring::integers(), {Ring::integers()(2)})}) {
    Report rep = verify_kl_relations(f, 3, o);
    CHECK(rep.passed());
    for (const char* fam : {"KL0", "KL1", "KL2", "KL3", "KL4", "KL5", "KL6", "KL7"}) CHECK(rep.passes_for(fam) == 30);
  }
}

TEST_CASE("unipotent normal form") {
  Ring z = Ring::integers();
  FormIdeal f = FormIdeal::maximal(z, {z(1)});
  UnipotentNormalForm nf0 = unipotent_normal_form(2, RelWord(z, 3), f);
  CHECK(nf0.alpha.is_zero());
  for (const auto& [j, a] : nf0.coeffs) CHECK(a.is_zero());

  UnipotentNormalForm nf1 = unipotent_normal_form(2, RelWord::gen(z, 3, 2, -2, z(7)), f);
  CHECK(nf1.alpha == z(7));
  for (const auto& [j, a] : nf1.coeffs) CHECK(a.is_zero());

  RelWord two = RelWord::gen(z, 3, 2, 3, z(4));
  two.push(2, 3, z(5));
  UnipotentNormalForm nf2 = unipotent_normal_form(2, two, f);
  CHECK(eval_rel_word(nf2.rebuild(3)) == eval_rel_word(two));

  // T(e_i, v, <v_-,v_+> + alpha) with v_{-i} = 0
  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    int i = static_cast<int>(rng.uniform(1, 3)) * (rng.coin() ? 1 : -1);
    HVector v = testing::random_vector(z, 3, rng);
    v.set(-i, z(0));
    Scalar alpha = testing::draw(z, rng);
    SpMatrix m = esd_matrix(HVector::basis(z, 3, i), v, split_form(v) + alpha);
    UnipotentNormalForm nf = recognize_unipotent_matrix(i, m, f);
    // T_{-j,-i}(v_{-j} eps(i)) = T_{ij}(-v_{-j} eps(j))
    for (const auto& [j, a] : nf.coeffs) CHECK(a == -v[-j] * eps(j));
    CHECK(eval_rel_word(nf.rebuild(3)) == m);
  }
}

TEST_CASE("recognition failures") {
  Ring z = Ring::integers();
  FormIdeal f = FormIdeal::maximal(z, {z(2)});
  try {
    recognize_unipotent_matrix(1, T(z, 3, -1, 1, z(1)), f);
    FAIL("expected a recognition error");
  } catch (const RecognitionError& e) {
    CHECK(e.reason() == RecognitionError::Reason::not_unipotent);
  }
  try {
    recognize_unipotent_matrix(1, T(z, 3, 1, 2, z(1)), f);
    FAIL("expected a recognition error");
  } catch (const RecognitionError& e) {
    CHECK(e.reason() == RecognitionError::Reason::membership);
  }
}

TEST_CASE("parabolic and Levi membership") {
  Ring z = Ring::integers();
  Draw d(FormIdeal::whole(z), 4, Rng(14), 6);
  for (int i : oracle::basis(4)) {
    CHECK(parabolic_member(i, AbsWord(z, 4)));
    CHECK(levi_member(i, AbsWord(z, 4)));
    for (int t = 0; t < 10; ++t) {
      AbsWord p = d.parabolic_word(i, 4);
      CHECK(parabolic_member(i, p));
      AbsWord g = d.levi_word(i, 4);
      CHECK(levi_member(i, g));
      SpMatrix m = eval_abs_word(g);
      CHECK(m.column(i) == HVector::basis(z, 4, i));
      CHECK(m.column(-i) == HVector::basis(z, 4, -i));
    }
    CHECK_FALSE(parabolic_member(i, AbsWord::letter(z, 4, -i, std::abs(i) == 1 ? 2 : 1, z(1))));
  }
}

}

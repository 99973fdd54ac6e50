#include <doctest.h>

#include <set>

#include "stsp/error.hpp"
#include "stsp/form_ideal.hpp"
#include "stsp/ring.hpp"

using namespace stsp;

namespace {

// Closure of {2a : a in I} u {r a^2 : r in R, a in I} under addition, by brute force.
std::set<long> gamma_min_closure(long m, long level) {
  std::set<long> ideal, out{0};
  for (long x = 0; x < m; x += level) ideal.insert(x);
  std::set<long> gens;
  for (long a : ideal) {
    gens.insert((2 * a) % m);
    for (long r = 0; r < m; ++r) gens.insert((r * a % m) * a % m);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (long x : std::set<long>(out))
      for (long g : gens)
        if (out.insert((x + g) % m).second) grew = true;
  }
  return out;
}

}  // namespace

TEST_SUITE("ring") {

TEST_CASE("integers mod m are reduced to canonical representatives") {
  Ring r = Ring::modulo(7);
  CHECK(r(-1).to_string() == "6");
  CHECK(r(10).to_string() == "3");
  CHECK((r(3) + r(5)).to_string() == "1");
  CHECK((r(3) - r(5)).to_string() == "5");
  CHECK((r(3) * r(5)).to_string() == "1");
  CHECK(r(3).inverse() == r(5));
  CHECK_FALSE(Ring::modulo(12)(4).is_unit());
  CHECK_THROWS_AS(Ring::modulo(12)(4).inverse(), std::domain_error);
}

TEST_CASE("ring syntax") {
  CHECK(Ring::parse("z") == Ring::integers());
  CHECK(Ring::parse("zmod:12") == Ring::modulo(12));
  CHECK(Ring::modulo(12).to_string() == "zmod:12");
  CHECK_THROWS_AS(Ring::parse("zmod:1"), ParseError);
  CHECK_THROWS_AS(Ring::parse("q"), ParseError);
}

TEST_CASE("scalars from different rings never mix") {
  CHECK_THROWS_AS(Ring::modulo(4)(1) + Ring::modulo(6)(1), RingMismatch);
  CHECK_THROWS_AS(Ring::integers()(1) * Ring::modulo(6)(1), RingMismatch);
}

TEST_CASE("ideal membership") {
  Ring z = Ring::integers();
  Ring z12 = Ring::modulo(12);
  CHECK(FormIdeal::maximal(z, {z(4), z(6)}).ideal_member(z(0)));
  CHECK(FormIdeal::maximal(z, {z(4), z(6)}).ideal_member(z(2)));
  CHECK_FALSE(FormIdeal::maximal(z, {z(4), z(6)}).ideal_member(z(3)));
  // (8) in Z/12 is {0, 4, 8}
  FormIdeal f = FormIdeal::maximal(z12, {z12(8)});
  CHECK_FALSE(f.ideal_member(z12(3)));
  std::set<long> seen;
  for (const auto& x : f.ideal_elements()) seen.insert(x.value().get_si());
  CHECK(seen == std::set<long>{0, 4, 8});
}

TEST_CASE("gamma membership") {
  Ring z = Ring::integers();
  CHECK(FormIdeal::maximal(z, {z(3)}).gamma_member(z(9)));
  CHECK(FormIdeal::minimal(z, {z(3)}).gamma_member(z(6)));
  CHECK_FALSE(FormIdeal::minimal(z, {z(2)}).gamma_member(z(2)));
  CHECK(FormIdeal::minimal(z, {z(2)}).gamma_member(z(4)));
}

TEST_CASE("minimal gamma agrees with brute-force saturation") {
  for (long m = 2; m <= 24; ++m) {
    Ring r = Ring::modulo(static_cast<std::uint64_t>(m));
    for (long d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      FormIdeal f = FormIdeal::minimal(r, {r(d)});
      std::set<long> got;
      for (const auto& x : f.gamma_elements()) got.insert(x.value().get_si());
      CAPTURE(m);
      CAPTURE(d);
      CHECK(got == gamma_min_closure(m, d));
    }
  }
  // Z/8, I = (2): {0, 4}
  Ring z8 = Ring::modulo(8);
  FormIdeal f = FormIdeal::minimal(z8, {z8(2)});
  CHECK_FALSE(f.gamma_member(z8(2)));
  CHECK(f.gamma_member(z8(4)));
}

TEST_CASE("form ideal validation") {
  Ring z12 = Ring::modulo(12);
  CHECK(validate_form_ideal(FormIdeal::maximal(z12, {z12(2)}), 10, 1).valid());
  CHECK(validate_form_ideal(FormIdeal::minimal(z12, {z12(2)}), 10, 1).valid());
  CHECK(validate_form_ideal(FormIdeal::maximal(Ring::integers(), {Ring::integers()(5)}), 50, 1).valid());

  // Gamma = (4) with I = (2) satisfies all three axioms; it is the minimal parameter.
  FormIdeal four(z12, {z12(2)}, GammaMode::explicit_generators, {z12(4)});
  CHECK(validate_form_ideal(four, 10, 1).valid());
  CHECK(four.gamma_level() == FormIdeal::minimal(z12, {z12(2)}).gamma_level());

  // Gamma = (6) = {0, 6} misses 2 * 2.
  FormIdeal six(z12, {z12(2)}, GammaMode::explicit_generators, {z12(6)});
  auto rep = validate_form_ideal(six, 10, 1);
  CHECK(rep.exhaustive);
  CHECK_FALSE(rep.valid());
  bool saw_a = false;
  for (const auto& v : rep.violations) saw_a = saw_a || (v.axiom == "a" && v.witness == "a=2 2a=4");
  CHECK(saw_a);

  // 2 is a unit mod 5: every proper Gamma fails.
  Ring z5 = Ring::modulo(5);
  FormIdeal zero_gamma(z5, {z5(1)}, GammaMode::explicit_generators, {z5(0)});
  CHECK_FALSE(validate_form_ideal(zero_gamma, 10, 1).valid());
}

TEST_CASE("form ideal syntax") {
  Ring z12 = Ring::modulo(12);
  FormIdeal f = parse_form_ideal(z12, "4", "min");
  CHECK(f.to_string() == "zmod:12 I=(4) Gamma=min");
  CHECK(parse_form_ideal(z12, "2,6", "max").ideal_member(z12(2)));
  CHECK(parse_form_ideal(z12, "2", "4,8").gamma_member(z12(8)));
  CHECK_THROWS(parse_form_ideal(z12, "2", "mid"));
}

}

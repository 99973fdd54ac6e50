#include <doctest.h>

#include <set>

#include "stsp/catalog.hpp"
#include "stsp/error.hpp"
#include "stsp/esd.hpp"
#include "stsp/generators.hpp"
#include "support.hpp"

using namespace stsp;

TEST_SUITE("catalog") {

TEST_CASE("entry ids are unique and non-empty") {
  std::set<std::string> ids;
  for (const auto& e : identity_catalog()) {
    CHECK_FALSE(e.id.empty());
    CHECK_FALSE(e.statement.empty());
    CHECK(ids.insert(e.id).second);
  }
  CHECK(ids.count("ppc") == 1);
  CHECK(ids.count("z-additivity") == 1);
  CHECK(ids.count("p-relations(f)") == 1);
}

TEST_CASE("filters") {
  Ring z = Ring::integers();
  FormIdeal f = FormIdeal::maximal(z, {z(2)});
  SuiteOptions o{5, 1, 8};
  CHECK_THROWS_AS(verify_identity_catalog(f, 3, o, {"no-such-entry"}), ConfigError);
  Report rep = verify_identity_catalog(f, 3, o, {"switch", "long-add"});
  CHECK(rep.records().size() == 10);
  CHECK(rep.passed());
}

TEST_CASE("entries needing Gamma = I are skipped for smaller Gamma") {
  Ring z = Ring::integers();
  FormIdeal f = FormIdeal::minimal(z, {z(2)});
  Report rep = verify_identity_catalog(f, 3, SuiteOptions{3, 1, 8});
  CHECK(rep.passed());
  for (const auto& info : identity_catalog()) {
    std::size_t rows = 0, skips = 0;
    for (const auto& r : rep.records())
      if (r.entry == info.id) {
        ++rows;
        if (r.result == Outcome::skip) ++skips;
      }
    if (info.maximal_only) {
      CHECK(rows == 1);
      CHECK(skips == 1);
    } else {
      CHECK(rows == 3);
    }
  }
}

TEST_CASE("sign rows name the resolved variant") {
  Ring z = Ring::integers();
  FormIdeal f = FormIdeal::maximal(z, {z(2)});
  Report rep = verify_identity_catalog(f, 3, SuiteOptions{30, 1, 8}, {"ppc", "z-additivity"});
  CHECK(rep.passed());
  int sign_rows = 0;
  for (const auto& r : rep.records()) {
    if (r.entry.size() < 5 || r.entry.substr(r.entry.size() - 5) != "/sign") continue;
    ++sign_rows;
    CHECK(r.result == Outcome::pass);
    CHECK(r.note.find("holds on 30/30") != std::string::npos);
    CHECK(r.note.find("indistinguishable") == std::string::npos);
  }
  CHECK(sign_rows == 2);
}

TEST_CASE("ppc over Z/5") {
  Ring r = Ring::modulo(5);
  Report rep = verify_identity_catalog(FormIdeal::maximal(r, {r(1)}), 3, SuiteOptions{20, 3, 8}, {"ppc"});
  CHECK(rep.passed());
  CHECK(rep.passes_for("ppc") == 20);
}

TEST_CASE("Z(u,u,a,0) = Z(u,0,0,2a) on images") {
  Ring z = Ring::integers();
  FormIdeal f = FormIdeal::maximal(z, {z(1)});
  Rng rng(31);
  HVector zero(z, 3);
  for (int t = 0; t < 30; ++t) {
    HVector u = testing::random_vector(z, 3, rng);
    Scalar a = testing::draw(z, rng);
    SpMatrix lhs = eval_rel_word(z_full_word(u, u, a, z(0), f));
    CHECK(lhs == eval_rel_word(z_full_word(u, zero, z(0), a * 2, f)));
    CHECK(oracle::from(lhs) == oracle::esd(oracle::from(u), oracle::from(zero), (a * 2).value()));
  }
}

TEST_CASE("every entry holds at small trial counts with exact rows") {
  Ring z4 = Ring::modulo(4);
  Report rep = verify_identity_catalog(FormIdeal::maximal(z4, {z4(2)}), 3, SuiteOptions{8, 2, 8});
  CHECK(rep.passed());
  std::size_t exact = 0;
  for (const auto& r : rep.records())
    if (r.exactness == Exactness::exact) ++exact;
  CHECK(exact > 0);
  for (const auto& info : identity_catalog()) CHECK(rep.passes_for(info.id) == 8);
}

}

#include "stsp/form_ideal.hpp"

#include <sstream>
#include <stdexcept>

#include "stsp/error.hpp"

namespace stsp {
namespace {

// Canonical level of the additive subgroup generated by `gens` (closed under
// ring multiplication): gcd of the generators, and of m for Z/m.
mpz_class level_of(const Ring& ring, const std::vector<Scalar>& gens) {
  mpz_class g = ring.is_finite() ? mpz_class(static_cast<unsigned long>(ring.modulus())) : mpz_class(0);
  for (const auto& x : gens) {
    require_same_ring(ring, x.ring());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.value().get_mpz_t());
  }
  return g;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::string list_text(const std::vector<Scalar>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ',';
    s += xs[k].to_string();
  }
  return s;
}

}  // namespace

FormIdeal::FormIdeal(Ring ring, std::vector<Scalar> ideal_generators, GammaMode mode,
                     std::vector<Scalar> gamma_generators)
    : ring_(ring), ideal_gens_(std::move(ideal_generators)), mode_(mode), gamma_gens_(std::move(gamma_generators)) {
  ideal_level_ = level_of(ring_, ideal_gens_);
  switch (mode_) {
    case GammaMode::maximal:
      gamma_level_ = ideal_level_;
      break;
    case GammaMode::minimal: {
      // 2I + I^2: with I = gR this is gcd(2g, g^2) R (and m for Z/m).
      const mpz_class& g = ideal_level_;
      mpz_class d = gcd(2 * g, g * g);
      if (ring_.is_finite()) d = gcd(d, mpz_class(static_cast<unsigned long>(ring_.modulus())));
      gamma_level_ = d;
      break;
    }
    case GammaMode::explicit_generators:
      // The additive group generated by the squares contains 1, so closing x
      // under addition and r^2-multiples gives xZ = xR.
      gamma_level_ = level_of(ring_, gamma_gens_);
      break;
  }
}

FormIdeal FormIdeal::maximal(Ring ring, std::vector<Scalar> ideal_generators) {
  return FormIdeal(ring, std::move(ideal_generators), GammaMode::maximal);
}

FormIdeal FormIdeal::minimal(Ring ring, std::vector<Scalar> ideal_generators) {
  return FormIdeal(ring, std::move(ideal_generators), GammaMode::minimal);
}

FormIdeal FormIdeal::whole(Ring ring) { return maximal(ring, {ring.one()}); }

bool FormIdeal::level_member(const mpz_class& level, const Scalar& x) const {
  require_same_ring(ring_, x.ring());
  if (sgn(level) == 0) return x.is_zero();
  return mpz_divisible_p(x.value().get_mpz_t(), level.get_mpz_t()) != 0;
}

bool FormIdeal::ideal_member(const Scalar& x) const { return level_member(ideal_level_, x); }
bool FormIdeal::gamma_member(const Scalar& x) const { return level_member(gamma_level_, x); }

Scalar FormIdeal::random_multiple(const mpz_class& level, Rng& rng, long bound) const {
  if (ring_.is_finite()) {
    mpz_class m(static_cast<unsigned long>(ring_.modulus()));
    mpz_class count = m / level;  // level divides m
    mpz_class k(static_cast<unsigned long>(rng.below(count.get_ui())));
    return ring_.from(level * k);
  }
  return ring_.from(level * rng.uniform(-bound, bound));
}

Scalar FormIdeal::random_ideal_element(Rng& rng, long bound) const { return random_multiple(ideal_level_, rng, bound); }
Scalar FormIdeal::random_gamma_element(Rng& rng, long bound) const { return random_multiple(gamma_level_, rng, bound); }

std::vector<Scalar> FormIdeal::multiples(const mpz_class& level) const {
  if (!ring_.is_finite()) throw std::logic_error("element enumeration needs a finite ring");
  std::vector<Scalar> out;
  const unsigned long m = ring_.modulus();
  const unsigned long step = level.get_ui();
  for (unsigned long x = 0; x < m; x += step) out.push_back(ring_.from(mpz_class(x)));
  return out;
}

std::vector<Scalar> FormIdeal::ideal_elements() const { return multiples(ideal_level_); }
std::vector<Scalar> FormIdeal::gamma_elements() const { return multiples(gamma_level_); }

std::string FormIdeal::to_string() const {
  std::string s = ring_.to_string() + " I=(" + list_text(ideal_gens_) + ") Gamma=";
  switch (mode_) {
    case GammaMode::maximal:
      return s + "max";
    case GammaMode::minimal:
      return s + "min";
    case GammaMode::explicit_generators:
      return s + "(" + list_text(gamma_gens_) + ")";
  }
  return s;
}

Scalar random_scalar(const Ring& ring, Rng& rng, long bound) {
  if (ring.is_finite()) return ring.from(mpz_class(static_cast<unsigned long>(rng.below(ring.modulus()))));
  return ring(rng.uniform(-bound, bound));
}

namespace {

std::vector<Scalar> parse_scalar_list(const Ring& ring, std::string_view text, std::string_view what) {
  std::vector<Scalar> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view piece = text.substr(start, comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    try {
      out.push_back(ring.parse_scalar(piece));
    } catch (const ParseError&) {
      throw ParseError("bad " + std::string(what) + " generator '" + std::string(piece) + "'", start);
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace

FormIdeal parse_form_ideal(const Ring& ring, std::string_view ideal_text, std::string_view gamma_text) {
  auto ideal = parse_scalar_list(ring, ideal_text.empty() ? std::string_view("1") : ideal_text, "ideal");
  if (gamma_text.empty() || gamma_text == "max") return FormIdeal(ring, std::move(ideal), GammaMode::maximal);
  if (gamma_text == "min") return FormIdeal(ring, std::move(ideal), GammaMode::minimal);
  auto gamma = parse_scalar_list(ring, gamma_text, "gamma");
  return FormIdeal(ring, std::move(ideal), GammaMode::explicit_generators, std::move(gamma));
}

namespace {

constexpr std::size_t kWitnessCap = 32;

struct Recorder {
  FormIdealReport& report;
  std::size_t per_axiom[4] = {0, 0, 0, 0};

  void check(int axiom, bool ok, const std::string& witness) {
    static const char* names[] = {"containment", "a", "b", "c"};
    ++report.checked;
    if (ok) return;
    ++report.total_violations;
    if (per_axiom[axiom]++ < kWitnessCap) report.violations.push_back({names[axiom], witness});
  }
};

}  // namespace

FormIdealReport validate_form_ideal(const FormIdeal& form, std::uint64_t samples, std::uint64_t seed, long bound) {
  FormIdealReport report;
  Recorder rec{report};
  const Ring& ring = form.ring();

  for (const auto& g : form.gamma_generators())
    rec.check(0, form.ideal_member(g), "gamma generator " + g.to_string() + " not in I");
  {
    // The level generator itself; covers min/max modes and the closure.
    Scalar d = ring.from(form.gamma_level());
    rec.check(0, form.ideal_member(d), "gamma element " + d.to_string() + " not in I");
  }

  auto check_a = [&](const Scalar& a) {
    Scalar twice = a * 2;
    rec.check(1, form.gamma_member(twice), "a=" + a.to_string() + " 2a=" + twice.to_string());
  };
  auto check_b = [&](const Scalar& r, const Scalar& a) {
    Scalar x = r * a * a;
    rec.check(2, form.gamma_member(x), "r=" + r.to_string() + " a=" + a.to_string() + " ra^2=" + x.to_string());
  };
  auto check_c = [&](const Scalar& alpha, const Scalar& r) {
    Scalar x = alpha * r * r;
    rec.check(3, form.gamma_member(x),
              "alpha=" + alpha.to_string() + " r=" + r.to_string() + " alpha*r^2=" + x.to_string());
  };

  if (ring.is_finite()) {
    report.exhaustive = true;
    const auto ideal = form.ideal_elements();
    const auto gamma = form.gamma_elements();
    const auto all = ring.elements();
    for (const auto& a : ideal) check_a(a);
    for (const auto& r : all)
      for (const auto& a : ideal) check_b(r, a);
    for (const auto& alpha : gamma)
      for (const auto& r : all) check_c(alpha, r);
    return report;
  }

  Rng rng = Rng::stream(seed, "form-ideal", 0);
  for (std::uint64_t k = 0; k < samples; ++k) check_a(form.random_ideal_element(rng, bound));
  for (std::uint64_t k = 0; k < samples; ++k) {
    Scalar r = random_scalar(ring, rng, bound);
    check_b(r, form.random_ideal_element(rng, bound));
  }
  for (std::uint64_t k = 0; k < samples; ++k) {
    Scalar alpha = form.random_gamma_element(rng, bound);
    check_c(alpha, random_scalar(ring, rng, bound));
  }
  return report;
}

}  // namespace stsp

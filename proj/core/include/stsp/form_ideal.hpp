#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stsp/ring.hpp"
#include "stsp/rng.hpp"

namespace stsp {

enum class GammaMode { maximal, minimal, explicit_generators };

/// A form ideal (I, Gamma): an ideal I of the ring and a relative form
/// parameter Gamma of level I.
///
/// Over Z and Z/m every additive subgroup is cyclic, so both I and Gamma are
/// stored as a canonical level d with the set equal to dR. Levels are
/// non-negative; over Z/m they divide m (d = m encodes the zero ideal), over Z
/// d = 0 encodes the zero ideal.
///
/// Construction never rejects a parameter that violates the axioms; use
/// validate_form_ideal() to find out.
class FormIdeal {
 public:
  FormIdeal(Ring ring, std::vector<Scalar> ideal_generators, GammaMode mode,
            std::vector<Scalar> gamma_generators = {});

  /// (I, I).
  static FormIdeal maximal(Ring ring, std::vector<Scalar> ideal_generators);
  /// (I, smallest form parameter of level I) = (I, 2I + <a^2 : a in I>).
  static FormIdeal minimal(Ring ring, std::vector<Scalar> ideal_generators);
  /// (R, R), the absolute situation.
  static FormIdeal whole(Ring ring);

  const Ring& ring() const noexcept { return ring_; }
  GammaMode gamma_mode() const noexcept { return mode_; }
  const std::vector<Scalar>& ideal_generators() const noexcept { return ideal_gens_; }
  const std::vector<Scalar>& gamma_generators() const noexcept { return gamma_gens_; }

  const mpz_class& ideal_level() const noexcept { return ideal_level_; }
  const mpz_class& gamma_level() const noexcept { return gamma_level_; }

  bool ideal_member(const Scalar& x) const;
  bool gamma_member(const Scalar& x) const;
  /// Gamma = I as sets.
  bool gamma_is_maximal() const noexcept { return ideal_level_ == gamma_level_; }

  /// Uniform element of I. Over Z: level * k with k in [-bound, bound].
  Scalar random_ideal_element(Rng& rng, long bound) const;
  Scalar random_gamma_element(Rng& rng, long bound) const;

  /// Every element of I / Gamma in canonical order; finite rings only.
  std::vector<Scalar> ideal_elements() const;
  std::vector<Scalar> gamma_elements() const;

  /// e.g. `zmod:12 I=(4) Gamma=min`.
  std::string to_string() const;

 private:
  bool level_member(const mpz_class& level, const Scalar& x) const;
  Scalar random_multiple(const mpz_class& level, Rng& rng, long bound) const;
  std::vector<Scalar> multiples(const mpz_class& level) const;

  Ring ring_;
  std::vector<Scalar> ideal_gens_;
  GammaMode mode_;
  std::vector<Scalar> gamma_gens_;
  mpz_class ideal_level_;
  mpz_class gamma_level_;
};

/// Uniform ring element; over Z uniform in [-bound, bound].
Scalar random_scalar(const Ring& ring, Rng& rng, long bound);

/// Parses `--ideal` (comma-separated generators, default "1") and `--gamma`
/// (`max`, `min`, or comma-separated generators).
FormIdeal parse_form_ideal(const Ring& ring, std::string_view ideal_text, std::string_view gamma_text);

struct FormIdealViolation {
  /// "containment", "a", "b" or "c".
  std::string axiom;
  std::string witness;
};

struct FormIdealReport {
  std::vector<FormIdealViolation> violations;  // capped per axiom, see total_violations
  std::uint64_t total_violations = 0;
  std::uint64_t checked = 0;
  bool exhaustive = false;

  bool valid() const noexcept { return total_violations == 0; }
};

/// Checks Gamma within I and the three form-parameter axioms. Exhaustive over
/// finite rings regardless of `samples`; `samples` random draws per axiom over Z.
FormIdealReport validate_form_ideal(const FormIdeal& form, std::uint64_t samples, std::uint64_t seed,
                                    long bound = 8);

}  // namespace stsp

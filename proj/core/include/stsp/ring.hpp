#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stsp {

class Scalar;

/// The coefficient ring: the integers or Z/mZ. Two rings are the same ring iff
/// they compare equal.
class Ring {
 public:
  enum class Kind { integers, integers_mod };

  static Ring integers() noexcept { return Ring(Kind::integers, 0); }
  static Ring modulo(std::uint64_t m);
  /// `z` or `zmod:<m>`.
  static Ring parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_finite() const noexcept { return kind_ == Kind::integers_mod; }
  std::string to_string() const;

  /// Brings a raw integer to its canonical representative.
  void reduce(mpz_class& x) const {
    if (kind_ == Kind::integers_mod) mpz_fdiv_r_ui(x.get_mpz_t(), x.get_mpz_t(), modulus_);
  }

  Scalar zero() const;
  Scalar one() const;
  Scalar operator()(long value) const;
  Scalar from(const mpz_class& value) const;
  Scalar parse_scalar(std::string_view text) const;

  /// Every element in canonical order; finite rings only.
  std::vector<Scalar> elements() const;

  bool operator==(const Ring&) const = default;

 private:
  Ring(Kind kind, std::uint64_t modulus) noexcept : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t modulus_;
};

/// An exact ring element carrying its ring. Arithmetic between different
/// rings throws RingMismatch.
class Scalar {
 public:
  Scalar(Ring ring, mpz_class value) : ring_(ring), value_(std::move(value)) {
    ring_.reduce(value_);
  }

  const Ring& ring() const noexcept { return ring_; }
  const mpz_class& value() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  /// Units of Z are +-1; units of Z/m are residues coprime to m.
  bool is_unit() const;
  /// Inverse of a unit; throws std::domain_error otherwise.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(long k);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator*(Scalar a, long k) { return a *= k; }
  friend Scalar operator*(long k, Scalar a) { return a *= k; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical decimal text; mod-m values are in [0, m).
  std::string to_string() const { return value_.get_str(); }

 private:
  void check_same_ring(const Scalar& o) const;

  Ring ring_;
  mpz_class value_;
};

void require_same_ring(const Ring& a, const Ring& b);

}  // namespace stsp

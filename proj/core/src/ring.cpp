#include "stsp/ring.hpp"

#include <charconv>
#include <stdexcept>

#include "stsp/error.hpp"

namespace stsp {

Ring Ring::modulo(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("integers-mod-m needs m >= 2, got " + std::to_string(m));
  return Ring(Kind::integers_mod, m);
}

Ring Ring::parse(std::string_view text) {
  if (text == "z" || text == "Z") return integers();
  constexpr std::string_view prefix = "zmod:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::uint64_t m = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw ParseError("bad modulus in ring '" + std::string(text) + "'", prefix.size());
    if (m < 2) throw ParseError("ring modulus must be >= 2", prefix.size());
    return modulo(m);
  }
  throw ParseError("unknown ring '" + std::string(text) + "' (expected z or zmod:<m>)", 0);
}

std::string Ring::to_string() const {
  return kind_ == Kind::integers ? std::string("z") : "zmod:" + std::to_string(modulus_);
}

Scalar Ring::zero() const { return Scalar(*this, mpz_class(0)); }
Scalar Ring::one() const { return Scalar(*this, mpz_class(1)); }
Scalar Ring::operator()(long value) const { return Scalar(*this, mpz_class(value)); }
Scalar Ring::from(const mpz_class& value) const { return Scalar(*this, value); }

Scalar Ring::parse_scalar(std::string_view text) const {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  mpz_class v;
  if (s.empty() || v.set_str(s, 10) != 0) throw ParseError("bad scalar '" + std::string(text) + "'", 0);
  return Scalar(*this, v);
}

std::vector<Scalar> Ring::elements() const {
  if (!is_finite()) throw std::logic_error("elements(): the integers are infinite");
  std::vector<Scalar> out;
  out.reserve(modulus_);
  for (std::uint64_t k = 0; k < modulus_; ++k) out.emplace_back(*this, mpz_class(static_cast<unsigned long>(k)));
  return out;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw RingMismatch("ring mismatch: " + a.to_string() + " vs " + b.to_string());
}

void Scalar::check_same_ring(const Scalar& o) const { require_same_ring(ring_, o.ring_); }

bool Scalar::is_unit() const {
  if (ring_.kind() == Ring::Kind::integers) return value_ == 1 || value_ == -1;
  mpz_class g;
  mpz_gcd_ui(g.get_mpz_t(), value_.get_mpz_t(), ring_.modulus());
  return g == 1;
}

Scalar Scalar::inverse() const {
  if (!is_unit()) throw std::domain_error(to_string() + " is not a unit in " + ring_.to_string());
  if (ring_.kind() == Ring::Kind::integers) return *this;
  mpz_class inv;
  mpz_class m(static_cast<unsigned long>(ring_.modulus()));
  mpz_invert(inv.get_mpz_t(), value_.get_mpz_t(), m.get_mpz_t());
  return Scalar(ring_, inv);
}

Scalar Scalar::operator-() const { return Scalar(ring_, -value_); }

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_ring(o);
  value_ += o.value_;
  ring_.reduce(value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_ring(o);
  value_ -= o.value_;
  ring_.reduce(value_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_ring(o);
  value_ *= o.value_;
  ring_.reduce(value_);
  return *this;
}

Scalar& Scalar::operator*=(long k) {
  value_ *= k;
  ring_.reduce(value_);
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_ring(o);
  return value_ == o.value_;
}

}  // namespace stsp

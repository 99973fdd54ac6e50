#include "stsp/hvector.hpp"

#include "stsp/error.hpp"
#include "stsp/form_ideal.hpp"
#include "stsp/syntax.hpp"

namespace stsp {

HVector::HVector(Ring ring, int rank) : ring_(ring), rank_(rank) {
  if (rank < kMinRank) throw PreconditionError("HVector", "l >= 3 (got l = " + std::to_string(rank) + ")");
  coords_.resize(static_cast<std::size_t>(2 * rank));
}

HVector HVector::basis(Ring ring, int rank, int i) {
  HVector v(ring, rank);
  if (!valid_index(i, rank)) throw PreconditionError("e_i", "index " + std::to_string(i) + " in +-1..+-l");
  v.set_raw(i, 1);
  return v;
}

HVector HVector::from_slots(Ring ring, int rank, const std::vector<Scalar>& coords) {
  HVector v(ring, rank);
  if (coords.size() != v.dim())
    throw std::invalid_argument("expected " + std::to_string(v.dim()) + " coordinates, got " +
                                std::to_string(coords.size()));
  for (std::size_t s = 0; s < coords.size(); ++s) {
    require_same_ring(ring, coords[s].ring());
    v.coords_[s] = coords[s].value();
  }
  return v;
}

Scalar HVector::operator[](int i) const { return ring_.from(raw(i)); }

void HVector::set(int i, const Scalar& x) {
  require_same_ring(ring_, x.ring());
  coords_[slot(i, rank_)] = x.value();
}

void HVector::set_raw(int i, mpz_class x) { set_raw_slot(slot(i, rank_), std::move(x)); }

void HVector::set_raw_slot(std::size_t s, mpz_class x) {
  ring_.reduce(x);
  coords_[s] = std::move(x);
}

bool HVector::is_zero() const noexcept {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

std::vector<int> HVector::support() const {
  std::vector<int> out;
  for (std::size_t s = 0; s < coords_.size(); ++s)
    if (sgn(coords_[s]) != 0) out.push_back(index_of_slot(s, rank_));
  return out;
}

void HVector::check_compatible(const HVector& o) const {
  require_same_ring(ring_, o.ring_);
  if (rank_ != o.rank_)
    throw std::invalid_argument("rank mismatch: " + std::to_string(rank_) + " vs " + std::to_string(o.rank_));
}

HVector& HVector::operator+=(const HVector& o) {
  check_compatible(o);
  for (std::size_t s = 0; s < coords_.size(); ++s) {
    coords_[s] += o.coords_[s];
    ring_.reduce(coords_[s]);
  }
  return *this;
}

HVector& HVector::operator-=(const HVector& o) {
  check_compatible(o);
  for (std::size_t s = 0; s < coords_.size(); ++s) {
    coords_[s] -= o.coords_[s];
    ring_.reduce(coords_[s]);
  }
  return *this;
}

HVector& HVector::operator*=(const Scalar& a) {
  require_same_ring(ring_, a.ring());
  for (auto& c : coords_) {
    c *= a.value();
    ring_.reduce(c);
  }
  return *this;
}

HVector HVector::operator-() const {
  HVector v(*this);
  for (auto& c : v.coords_) {
    c = -c;
    ring_.reduce(c);
  }
  return v;
}

bool HVector::operator==(const HVector& o) const {
  check_compatible(o);
  return coords_ == o.coords_;
}

HVector HVector::without_pair(int i) const {
  HVector v(*this);
  v.coords_[slot(i, rank_)] = 0;
  v.coords_[slot(-i, rank_)] = 0;
  return v;
}

HVector HVector::pair_part(int i) const {
  HVector v(ring_, rank_);
  v.coords_[slot(i, rank_)] = coords_[slot(i, rank_)];
  v.coords_[slot(-i, rank_)] = coords_[slot(-i, rank_)];
  return v;
}

std::string HVector::to_string() const {
  std::string out;
  for (std::size_t s = 0; s < coords_.size(); ++s) {
    if (sgn(coords_[s]) == 0) continue;
    mpz_class c = coords_[s];
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += "e(" + std::to_string(index_of_slot(s, rank_)) + ")";
    if (c != 1) out += "*" + c.get_str();
  }
  return out.empty() ? "0" : out;
}

std::string HVector::to_dense_string() const {
  std::string out = "[";
  for (std::size_t s = 0; s < coords_.size(); ++s) {
    if (s) out += ',';
    out += coords_[s].get_str();
  }
  return out + "]";
}

Scalar form(const HVector& u, const HVector& v) {
  require_same_ring(u.ring(), v.ring());
  if (u.rank() != v.rank()) throw std::invalid_argument("rank mismatch in form");
  mpz_class acc = 0;
  for (int i = 1; i <= u.rank(); ++i) {
    acc += u.raw(i) * v.raw(-i);
    acc -= u.raw(-i) * v.raw(i);
  }
  return u.ring().from(acc);
}

std::pair<HVector, HVector> split_pm(const HVector& v) {
  HVector minus(v.ring(), v.rank());
  HVector plus(v.ring(), v.rank());
  for (int i = 1; i <= v.rank(); ++i) {
    minus.set_raw(-i, v.raw(-i));
    plus.set_raw(i, v.raw(i));
  }
  return {minus, plus};
}

Scalar split_form(const HVector& v) {
  // <v_-, v_+> = -sum_{i>0} v_i v_{-i}
  mpz_class acc = 0;
  for (int i = 1; i <= v.rank(); ++i) acc -= v.raw(i) * v.raw(-i);
  return v.ring().from(acc);
}

bool in_ideal(const HVector& v, const FormIdeal& form_ideal) {
  for (std::size_t s = 0; s < v.dim(); ++s)
    if (!form_ideal.ideal_member(v.ring().from(v.raw_slot(s)))) return false;
  return true;
}

HVector parse_vector(const Ring& ring, int rank, std::string_view text) {
  Cursor cur(text);
  HVector v(ring, rank);
  if (cur.eat('[')) {
    std::vector<Scalar> coords;
    if (!cur.eat(']')) {
      do {
        coords.push_back(cur.scalar(ring));
      } while (cur.eat(','));
      cur.expect(']');
    }
    if (coords.size() != v.dim())
      cur.fail("dense vector needs " + std::to_string(v.dim()) + " coordinates, got " + std::to_string(coords.size()));
    v = HVector::from_slots(ring, rank, coords);
  } else if (cur.peek() == '0') {
    cur.expect('0');
  } else {
    bool first = true;
    while (!cur.at_end()) {
      bool negative = false;
      if (cur.eat('-'))
        negative = true;
      else if (!cur.eat('+') && !first)
        cur.fail("expected '+' or '-'");
      first = false;
      cur.expect("e(");
      std::size_t at = cur.position();
      int i = cur.index();
      if (!valid_index(i, rank)) throw ParseError("index " + std::to_string(i) + " out of range", at);
      cur.expect(')');
      Scalar c = ring.one();
      if (cur.eat('*')) c = cur.scalar(ring);
      if (negative) c = -c;
      v.set(i, v[i] + c);
    }
  }
  if (!cur.at_end()) cur.fail("trailing characters in vector");
  return v;
}

}  // namespace stsp

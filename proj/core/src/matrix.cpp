#include "stsp/matrix.hpp"

#include <stdexcept>

#include "stsp/error.hpp"

namespace stsp {

SpMatrix::SpMatrix(Ring ring, int rank) : ring_(ring), rank_(rank), n_(static_cast<std::size_t>(2 * rank)) {
  if (rank < kMinRank) throw PreconditionError("SpMatrix", "l >= 3 (got l = " + std::to_string(rank) + ")");
  e_.resize(n_ * n_);
}

SpMatrix SpMatrix::zero(Ring ring, int rank) { return SpMatrix(ring, rank); }

SpMatrix SpMatrix::identity(Ring ring, int rank) {
  SpMatrix m(ring, rank);
  for (std::size_t s = 0; s < m.n_; ++s) m.e_[s * m.n_ + s] = 1;
  return m;
}

SpMatrix SpMatrix::from_entries(Ring ring, int rank, const std::vector<Scalar>& entries) {
  SpMatrix m(ring, rank);
  if (entries.size() != m.e_.size())
    throw std::invalid_argument("expected " + std::to_string(m.e_.size()) + " matrix entries, got " +
                                std::to_string(entries.size()));
  for (std::size_t k = 0; k < entries.size(); ++k) {
    require_same_ring(ring, entries[k].ring());
    m.e_[k] = entries[k].value();
  }
  return m;
}

void SpMatrix::set(int p, int q, const Scalar& x) {
  require_same_ring(ring_, x.ring());
  e_[slot(p, rank_) * n_ + slot(q, rank_)] = x.value();
}

void SpMatrix::set_raw_slot(std::size_t r, std::size_t c, mpz_class x) {
  ring_.reduce(x);
  e_[r * n_ + c] = std::move(x);
}

HVector SpMatrix::column(int q) const {
  HVector v(ring_, rank_);
  const std::size_t c = slot(q, rank_);
  for (std::size_t r = 0; r < n_; ++r) v.set_raw_slot(r, e_[r * n_ + c]);
  return v;
}

void SpMatrix::check_compatible(const SpMatrix& o) const {
  require_same_ring(ring_, o.ring_);
  if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch in matrix operation");
}

HVector SpMatrix::operator*(const HVector& v) const {
  require_same_ring(ring_, v.ring());
  if (rank_ != v.rank()) throw std::invalid_argument("rank mismatch in matrix-vector product");
  HVector out(ring_, rank_);
  mpz_class acc;
  for (std::size_t r = 0; r < n_; ++r) {
    acc = 0;
    for (std::size_t c = 0; c < n_; ++c) acc += e_[r * n_ + c] * v.raw_slot(c);
    out.set_raw_slot(r, acc);
  }
  return out;
}

SpMatrix SpMatrix::operator*(const SpMatrix& o) const {
  check_compatible(o);
  SpMatrix out(ring_, rank_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t k = 0; k < n_; ++k) {
      const mpz_class& x = e_[r * n_ + k];
      if (sgn(x) == 0) continue;
      for (std::size_t c = 0; c < n_; ++c) out.e_[r * n_ + c] += x * o.e_[k * n_ + c];
    }
  }
  for (auto& x : out.e_) ring_.reduce(x);
  return out;
}

bool SpMatrix::operator==(const SpMatrix& o) const {
  check_compatible(o);
  return e_ == o.e_;
}

bool SpMatrix::is_identity() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      if (e_[r * n_ + c] != (r == c ? 1 : 0)) return false;
  return true;
}

void SpMatrix::add_column(int p, int q, const mpz_class& c) {
  if (sgn(c) == 0) return;
  const std::size_t sp = slot(p, rank_), sq = slot(q, rank_);
  for (std::size_t r = 0; r < n_; ++r) {
    mpz_class& x = e_[r * n_ + sq];
    const mpz_class& y = e_[r * n_ + sp];
    if (sgn(y) == 0) continue;
    x += c * y;
    ring_.reduce(x);
  }
}

void SpMatrix::add_row(int p, int q, const mpz_class& c) {
  if (sgn(c) == 0) return;
  const std::size_t sp = slot(p, rank_), sq = slot(q, rank_);
  for (std::size_t k = 0; k < n_; ++k) {
    mpz_class& x = e_[sp * n_ + k];
    const mpz_class& y = e_[sq * n_ + k];
    if (sgn(y) == 0) continue;
    x += c * y;
    ring_.reduce(x);
  }
}

// T_ij(a) = I + a E_{ij} + a eps(-j) eps(i) E_{-j,-i} for j != -i,
// T_{i,-i}(a) = I + a eps(i) E_{i,-i}. E_{ij} E_{-j,-i} = 0, so the two
// column (row) operations can be applied one after the other.
void SpMatrix::mul_elementary_right(int i, int j, const mpz_class& a) {
  if (j == -i) {
    add_column(i, -i, eps(i) * a);
    return;
  }
  add_column(i, j, a);
  add_column(-j, -i, eps(-j) * eps(i) * a);
}

void SpMatrix::mul_elementary_left(int i, int j, const mpz_class& a) {
  if (j == -i) {
    add_row(i, -i, eps(i) * a);
    return;
  }
  add_row(i, j, a);
  add_row(-j, -i, eps(-j) * eps(i) * a);
}

SpMatrix SpMatrix::symplectic_inverse() const {
  SpMatrix out(ring_, rank_);
  for (std::size_t r = 0; r < n_; ++r) {
    const int p = index_of_slot(r, rank_);
    for (std::size_t c = 0; c < n_; ++c) {
      const int q = index_of_slot(c, rank_);
      mpz_class x = raw(-q, -p);
      if (eps(p) * eps(q) < 0) x = -x;
      ring_.reduce(x);
      out.e_[r * n_ + c] = std::move(x);
    }
  }
  return out;
}

std::vector<std::string> SpMatrix::entry_strings() const {
  std::vector<std::string> out;
  out.reserve(e_.size());
  for (const auto& x : e_) out.push_back(x.get_str());
  return out;
}

std::string SpMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (c) out += ' ';
      out += e_[r * n_ + c].get_str();
    }
    out += '\n';
  }
  return out;
}

bool gram_check(const SpMatrix& m) {
  // (M^T J M)_{pq} = sum_{r} sgn(r) M_{r,p} M_{-r,q}
  const int l = m.rank();
  const auto idx = indices(l);
  const Ring& ring = m.ring();
  mpz_class acc;
  for (int p : idx) {
    for (int q : idx) {
      acc = 0;
      for (int r = 1; r <= l; ++r) {
        acc += m.raw(r, p) * m.raw(-r, q);
        acc -= m.raw(-r, p) * m.raw(r, q);
      }
      ring.reduce(acc);
      mpz_class expected = (p == -q) ? mpz_class(eps(p)) : mpz_class(0);
      ring.reduce(expected);
      if (acc != expected) return false;
    }
  }
  return true;
}

}  // namespace stsp

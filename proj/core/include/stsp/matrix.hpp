#pragma once

#include <string>
#include <vector>

#include "stsp/hvector.hpp"

namespace stsp {

/// Dense 2l x 2l matrix over the ring, rows and columns in storage order.
/// Column j is the image of the basis vector in slot j.
class SpMatrix {
 public:
  static SpMatrix identity(Ring ring, int rank);
  static SpMatrix zero(Ring ring, int rank);
  /// Row-major canonical scalars.
  static SpMatrix from_entries(Ring ring, int rank, const std::vector<Scalar>& entries);

  const Ring& ring() const noexcept { return ring_; }
  int rank() const noexcept { return rank_; }
  std::size_t dim() const noexcept { return n_; }

  /// Entry in row p, column q (hyperbolic indices).
  Scalar at(int p, int q) const { return ring_.from(raw(p, q)); }
  const mpz_class& raw(int p, int q) const { return e_[slot(p, rank_) * n_ + slot(q, rank_)]; }
  const mpz_class& raw_slot(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }
  void set(int p, int q, const Scalar& x);
  void set_raw_slot(std::size_t r, std::size_t c, mpz_class x);

  HVector column(int q) const;
  HVector operator*(const HVector& v) const;
  SpMatrix operator*(const SpMatrix& o) const;
  bool operator==(const SpMatrix& o) const;
  bool operator!=(const SpMatrix& o) const { return !(*this == o); }
  bool is_identity() const;

  /// column q += c * column p (right multiplication by I + c E_{pq}).
  void add_column(int p, int q, const mpz_class& c);
  /// row p += c * row q (left multiplication by I + c E_{pq}).
  void add_row(int p, int q, const mpz_class& c);

  /// In-place M := M * T_ij(a), resp. M := T_ij(a) * M; j = -i gives the long root.
  void mul_elementary_right(int i, int j, const mpz_class& a);
  void mul_elementary_left(int i, int j, const mpz_class& a);

  /// Inverse of a symplectic matrix: (M^{-1})_{pq} = eps(p) eps(q) M_{-q,-p}.
  SpMatrix symplectic_inverse() const;

  /// Row-major canonical scalar strings.
  std::vector<std::string> entry_strings() const;
  /// Multi-line text, one row per line.
  std::string to_string() const;

 private:
  SpMatrix(Ring ring, int rank);
  void check_compatible(const SpMatrix& o) const;

  Ring ring_;
  int rank_;
  std::size_t n_;
  std::vector<mpz_class> e_;
};

/// M^T J M = J, J the Gram matrix of the standard form.
bool gram_check(const SpMatrix& m);

}  // namespace stsp

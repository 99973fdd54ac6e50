#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stsp/index.hpp"
#include "stsp/ring.hpp"

namespace stsp {

class FormIdeal;

/// Element of V = R^{2l} in the hyperbolic basis e_{-l}, ..., e_{-1}, e_1, ..., e_l.
/// Coordinates are kept as canonical representatives in storage order.
class HVector {
 public:
  /// Zero vector. Throws PreconditionError if rank < 3.
  HVector(Ring ring, int rank);

  static HVector basis(Ring ring, int rank, int i);
  /// Coordinates given in storage order.
  static HVector from_slots(Ring ring, int rank, const std::vector<Scalar>& coords);

  const Ring& ring() const noexcept { return ring_; }
  int rank() const noexcept { return rank_; }
  std::size_t dim() const noexcept { return coords_.size(); }

  Scalar operator[](int i) const;
  const mpz_class& raw(int i) const { return coords_[slot(i, rank_)]; }
  const mpz_class& raw_slot(std::size_t s) const { return coords_[s]; }
  void set(int i, const Scalar& x);
  /// Sets coordinate i to the canonical form of `x`.
  void set_raw(int i, mpz_class x);
  void set_raw_slot(std::size_t s, mpz_class x);

  bool is_zero() const noexcept;
  /// Indices with nonzero coordinates, storage order.
  std::vector<int> support() const;

  HVector& operator+=(const HVector& o);
  HVector& operator-=(const HVector& o);
  HVector& operator*=(const Scalar& a);
  HVector operator-() const;
  friend HVector operator+(HVector a, const HVector& b) { return a += b; }
  friend HVector operator-(HVector a, const HVector& b) { return a -= b; }
  /// Scalars act on the right: v*a.
  friend HVector operator*(HVector v, const Scalar& a) { return v *= a; }

  bool operator==(const HVector& o) const;
  bool operator!=(const HVector& o) const { return !(*this == o); }

  /// v with coordinates +-i cleared: v - e_i v_i - e_{-i} v_{-i}.
  HVector without_pair(int i) const;
  /// e_i v_i + e_{-i} v_{-i}.
  HVector pair_part(int i) const;

  /// `e(-2)*3 + e(1)`; the zero vector prints as `0`.
  std::string to_string() const;
  /// `[c_{-l},...,c_{-1},c_1,...,c_l]`.
  std::string to_dense_string() const;

 private:
  void check_compatible(const HVector& o) const;

  Ring ring_;
  int rank_;
  std::vector<mpz_class> coords_;
};

/// <u, v> = sum_{i>0} (u_i v_{-i} - u_{-i} v_i).
Scalar form(const HVector& u, const HVector& v);

/// (v_-, v_+): supports on negative and positive indices.
std::pair<HVector, HVector> split_pm(const HVector& v);

/// <v_-, v_+>.
Scalar split_form(const HVector& v);

/// Every coordinate of v lies in I.
bool in_ideal(const HVector& v, const FormIdeal& form_ideal);

/// Accepts both `e(-2)*3 + e(1) - e(3)*2` and `[c,...]`; `0` is the zero vector.
HVector parse_vector(const Ring& ring, int rank, std::string_view text);

}  // namespace stsp

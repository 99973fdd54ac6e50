#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stsp/hvector.hpp"
#include "stsp/matrix.hpp"

namespace stsp {

/// Absolute generator X_ij(r); j = -i is the long root X_{i,-i}(r).
struct AbsGen {
  int i;
  int j;
  Scalar r;

  bool operator==(const AbsGen& o) const { return i == o.i && j == o.j && r == o.r; }
};

struct AbsLetter {
  AbsGen gen;
  int sign;  // +1 or -1

  bool operator==(const AbsLetter& o) const { return sign == o.sign && gen == o.gen; }
};

/// Formal word in the absolute Steinberg group. Words are never rewritten by
/// Steinberg relations; only free reduction is available.
class AbsWord {
 public:
  AbsWord(Ring ring, int rank);

  static AbsWord letter(Ring ring, int rank, int i, int j, const Scalar& r, int sign = 1);

  const Ring& ring() const noexcept { return ring_; }
  int rank() const noexcept { return rank_; }
  const std::vector<AbsLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Appends X_ij(r)^sign. Throws PreconditionError if i = j or an index is out of range.
  AbsWord& push(int i, int j, const Scalar& r, int sign = 1);
  AbsWord& push(const AbsLetter& letter) { return push(letter.gen.i, letter.gen.j, letter.gen.r, letter.sign); }
  AbsWord& append(const AbsWord& w);

  bool operator==(const AbsWord& o) const { return ring_ == o.ring_ && rank_ == o.rank_ && letters_ == o.letters_; }
  bool operator!=(const AbsWord& o) const { return !(*this == o); }

  /// `X(1,2;3) X(2,-2;1)^-1`; the empty word prints as `1`.
  std::string to_string() const;

 private:
  Ring ring_;
  int rank_;
  std::vector<AbsLetter> letters_;
};

AbsWord mul(const AbsWord& a, const AbsWord& b);
AbsWord inv(const AbsWord& w);
/// g h g^{-1}
AbsWord conj(const AbsWord& g, const AbsWord& h);
/// Left-normed x y x^{-1} y^{-1}.
AbsWord comm(const AbsWord& x, const AbsWord& y);
/// Cancels adjacent x x^{-1}; same-(i,j) letters are not merged.
AbsWord free_reduce(const AbsWord& w);

/// phi: product of elementary transvections in letter order.
SpMatrix eval_abs_word(const AbsWord& w);
/// m := m * phi(w)
void mul_word_right(SpMatrix& m, const AbsWord& w);
/// m := m * phi(w)^{-1}
void mul_word_inverse_right(SpMatrix& m, const AbsWord& w);
/// phi(w) v without forming the matrix.
HVector apply_word(const AbsWord& w, const HVector& v);
/// phi(w)^{-1} v.
HVector apply_word_inverse(const AbsWord& w, const HVector& v);

/// T_ij(a) v in place.
void apply_elementary(HVector& v, int i, int j, const mpz_class& a);

/// Parses the absolute word syntax; empty text or `1` is the empty word.
AbsWord parse_abs_word(const Ring& ring, int rank, std::string_view text);

}  // namespace stsp

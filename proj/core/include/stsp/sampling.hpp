#pragma once

#include <functional>
#include <initializer_list>
#include <vector>

#include "stsp/form_ideal.hpp"
#include "stsp/rng.hpp"
#include "stsp/steinberg.hpp"

namespace stsp {

/// All index tuples of the given arity over {+-1..+-l} accepted by `ok`,
/// in lexicographic storage order.
std::vector<std::vector<int>> enumerate_tuples(int rank, int arity,
                                               const std::function<bool(const std::vector<int>&)>& ok);

/// Cycles through a seeded shuffle of a tuple list, so every sign pattern
/// is hit before any repeats.
class TupleCycler {
 public:
  TupleCycler(std::vector<std::vector<int>> tuples, Rng& rng);
  const std::vector<int>& next();
  std::size_t size() const noexcept { return tuples_.size(); }

 private:
  std::vector<std::vector<int>> tuples_;
  std::size_t pos_ = 0;
};

/// Random source for one binding: scalars in R, I or Gamma, vectors with
/// forced zero coordinates, words, and elementary columns.
class Draw {
 public:
  Draw(const FormIdeal& form, int rank, Rng rng, long bound);

  const FormIdeal& form() const noexcept { return form_; }
  const Ring& ring() const noexcept { return form_.ring(); }
  int rank() const noexcept { return rank_; }
  long bound() const noexcept { return bound_; }
  Rng& rng() noexcept { return rng_; }

  Scalar r();
  Scalar nonzero_r();
  Scalar ideal();
  Scalar gamma();

  /// Vector with coordinates in R (resp. I), zero at every listed index.
  HVector vec(const std::vector<int>& zeros = {});
  HVector ideal_vec(const std::vector<int>& zeros = {});

  int index();
  /// Uniform index outside `excluded`.
  int index_not_in(const std::vector<int>& excluded);

  /// Random letters X_ij(r), any i != j.
  AbsWord abs_word(std::size_t length);
  /// Letters X_kh(r) with i not in {h, -k} (parabolic P_i); levi: for i and -i.
  AbsWord parabolic_word(int i, std::size_t length);
  AbsWord levi_word(int i, std::size_t length);
  /// Witness of length in [0, max_length].
  ElemColumn elem_column(std::size_t max_length);

  /// Makes x orthogonal to every constraint vector, in order, keeping the
  /// coordinates at `zeros` zero and, if `ideal`, all coordinates in I.
  /// A coordinate whose coefficient is a unit is solved for when possible;
  /// otherwise x is replaced by x<c,z> - z<c,x> for a fresh z.
  void orthogonalize(HVector& x, const std::vector<HVector>& constraints, const std::vector<int>& zeros, bool ideal);

 private:
  FormIdeal form_;
  int rank_;
  Rng rng_;
  long bound_;
};

/// {i, -i, j, -j, ...} for the given indices.
std::vector<int> pairs_of(std::initializer_list<int> idx);

}  // namespace stsp

#pragma once

#include <cstdint>

#include "stsp/report.hpp"
#include "stsp/words.hpp"

namespace stsp {

/// A vector u = phi(word) e_base, carried with its witness word.
class ElemColumn {
 public:
  ElemColumn(AbsWord word, int base_index);
  /// The basis column e_i with the empty witness.
  static ElemColumn basis(const Ring& ring, int rank, int i);

  const AbsWord& word() const noexcept { return word_; }
  int base_index() const noexcept { return base_; }
  const HVector& vector() const noexcept { return vector_; }
  const Ring& ring() const noexcept { return word_.ring(); }
  int rank() const noexcept { return word_.rank(); }

  /// Recomputes phi(word) e_base and compares with the cached vector.
  bool check() const;

  /// Column with witness g * word (its vector is phi(g) u).
  ElemColumn acted(const AbsWord& g) const;

 private:
  AbsWord word_;
  int base_;
  HVector vector_;
};

/// Word with image T(e_i, v, a): X_{i,-i}(a + 2v_i - <v_-,v_+>) followed by
/// X_{j,-i}(v_j eps(i)) for j != +-i in basis order. Requires v_{-i} = 0.
AbsWord abs_esd_word(int i, const HVector& v, const Scalar& a);

/// Random word of `length` letters and a random base index, seeded.
ElemColumn random_elementary_column(const Ring& ring, int rank, std::size_t length, std::uint64_t seed,
                                    long bound = 8);

/// S0-S5 on images with stratified index tuples, plus the P1-P3 relations of
/// the X(u, v, a) presentation. `trials` draws per family.
Report verify_steinberg_relations(const Ring& ring, int rank, const SuiteOptions& options);

/// Every (r, s) in R x R for one fixed index tuple per family S0-S5; finite rings only.
Report verify_steinberg_exhaustive(const Ring& ring, int rank);

}  // namespace stsp

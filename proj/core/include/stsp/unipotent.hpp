#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stsp/form_ideal.hpp"
#include "stsp/relative.hpp"

namespace stsp {

/// Coefficients of Y_{i,-i}(alpha) Y_{i,-l}(a_{-l}) ... Y_{i,l}(a_l), the
/// product running over j != +-i in basis order.
struct UnipotentNormalForm {
  int pivot;
  Scalar alpha;
  std::vector<std::pair<int, Scalar>> coeffs;

  /// The displayed product as a word in U_i.
  RelWord rebuild(int rank) const;
  bool operator==(const UnipotentNormalForm& o) const {
    return pivot == o.pivot && alpha == o.alpha && coeffs == o.coeffs;
  }
  std::string to_string() const;
};

/// Reads the normal form off the matrix. The short coefficients sit in
/// column -i: a_j = eps(i) eps(-j) M_{-j,-i}; alpha is what remains in
/// M_{i,-i} once the short part is rebuilt. Throws RecognitionError with
/// reason not_unipotent if the rebuild differs from M, with reason
/// membership if a_j is outside I or alpha outside Gamma.
UnipotentNormalForm recognize_unipotent_matrix(int i, const SpMatrix& m, const FormIdeal& form);

/// recognize_unipotent_matrix applied to the image of w.
UnipotentNormalForm unipotent_normal_form(int i, const RelWord& w, const FormIdeal& form);

/// Every atom has trivial g and first index i (or, via KL0, second index -i).
bool in_unipotent_radical(int i, const RelWord& w);

/// Letter-wise sufficient conditions: X_kh(a) with i not in {h, -k}; Levi
/// additionally for -i.
bool parabolic_member(int i, const AbsWord& w);
bool levi_member(int i, const AbsWord& w);

}  // namespace stsp

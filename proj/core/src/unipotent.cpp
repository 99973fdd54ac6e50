#include "stsp/unipotent.hpp"

#include "stsp/error.hpp"

namespace stsp {

RelWord UnipotentNormalForm::rebuild(int rank) const {
  RelWord w(alpha.ring(), rank);
  w.push(pivot, -pivot, alpha);
  for (const auto& [j, a] : coeffs) w.push(pivot, j, a);
  return w;
}

std::string UnipotentNormalForm::to_string() const {
  std::string out = "i=" + std::to_string(pivot) + " alpha=" + alpha.to_string();
  for (const auto& [j, a] : coeffs) out += " a(" + std::to_string(j) + ")=" + a.to_string();
  return out;
}

UnipotentNormalForm recognize_unipotent_matrix(int i, const SpMatrix& m, const FormIdeal& form) {
  const int l = m.rank();
  const Ring& ring = m.ring();
  require_same_ring(ring, form.ring());
  if (!valid_index(i, l)) throw PreconditionError("recognize_unipotent_matrix", "i in +-1..+-l");

  UnipotentNormalForm nf{i, ring.zero(), {}};
  SpMatrix short_part = SpMatrix::identity(ring, l);
  for (int j : indices(l)) {
    if (j == i || j == -i) continue;
    Scalar a = m.at(-j, -i) * (eps(i) * eps(-j));
    short_part.mul_elementary_right(i, j, a.value());
    nf.coeffs.emplace_back(j, a);
  }
  nf.alpha = (m.at(i, -i) - short_part.at(i, -i)) * eps(i);
  // T_{i,-i}(alpha) only adds alpha eps(i) times row -i to row i, and row -i
  // of the short part is e_{-i}.
  short_part.mul_elementary_left(i, -i, nf.alpha.value());
  if (short_part != m)
    throw RecognitionError(RecognitionError::Reason::not_unipotent,
                           "matrix is not in the image of U_" + std::to_string(i));
  for (const auto& [j, a] : nf.coeffs)
    if (!form.ideal_member(a))
      throw RecognitionError(RecognitionError::Reason::membership,
                             "coefficient a_" + std::to_string(j) + " = " + a.to_string() + " is not in I");
  if (!form.gamma_member(nf.alpha))
    throw RecognitionError(RecognitionError::Reason::membership,
                           "long coefficient " + nf.alpha.to_string() + " is not in Gamma");
  return nf;
}

UnipotentNormalForm unipotent_normal_form(int i, const RelWord& w, const FormIdeal& form) {
  return recognize_unipotent_matrix(i, eval_rel_word(w), form);
}

bool in_unipotent_radical(int i, const RelWord& w) {
  for (const auto& at : w.atoms()) {
    if (!at.g.empty()) return false;
    if (at.x.i != i && at.x.j != -i) return false;
  }
  return true;
}

bool parabolic_member(int i, const AbsWord& w) {
  for (const auto& x : w.letters())
    if (x.gen.j == i || x.gen.i == -i) return false;
  return true;
}

bool levi_member(int i, const AbsWord& w) { return parabolic_member(i, w) && parabolic_member(-i, w); }

}  // namespace stsp

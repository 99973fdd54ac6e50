#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stsp/form_ideal.hpp"
#include "stsp/report.hpp"
#include "stsp/words.hpp"

namespace stsp {

/// Relative generator Y_ij(a); j = -i is the long root Y_{i,-i}(alpha).
struct RelGen {
  int i;
  int j;
  Scalar a;

  bool long_root() const noexcept { return j == -i; }
  bool operator==(const RelGen& o) const { return i == o.i && j == o.j && a == o.a; }
};

/// The formal conjugate (g, x)^sign = (^g x)^sign.
struct RelAtom {
  AbsWord g;
  RelGen x;
  int sign;

  bool operator==(const RelAtom& o) const { return sign == o.sign && x == o.x && g == o.g; }
};

/// Word in the free group on the symbols (g, x). The absolute Steinberg group
/// acts by prefixing g; nothing is ever pushed inward by KL relations.
class RelWord {
 public:
  RelWord(Ring ring, int rank);

  /// The single atom Y_ij(a) with trivial g.
  static RelWord gen(Ring ring, int rank, int i, int j, const Scalar& a, int sign = 1);

  const Ring& ring() const noexcept { return ring_; }
  int rank() const noexcept { return rank_; }
  const std::vector<RelAtom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }

  RelWord& push(const AbsWord& g, int i, int j, const Scalar& a, int sign = 1);
  RelWord& push(int i, int j, const Scalar& a, int sign = 1) { return push(AbsWord(ring_, rank_), i, j, a, sign); }
  RelWord& push(const RelAtom& atom) { return push(atom.g, atom.x.i, atom.x.j, atom.x.a, atom.sign); }
  RelWord& append(const RelWord& w);

  bool operator==(const RelWord& o) const { return ring_ == o.ring_ && rank_ == o.rank_ && atoms_ == o.atoms_; }

  /// `Y(1,2;3) [X(1,3;1)] |> Y(2,-2;4)^-1`; the empty word prints as `1`.
  std::string to_string() const;

 private:
  Ring ring_;
  int rank_;
  std::vector<RelAtom> atoms_;
};

RelWord mul(const RelWord& a, const RelWord& b);
RelWord inv(const RelWord& w);
/// ^f w: prefixes f to every atom.
RelWord act(const AbsWord& f, const RelWord& w);
/// [[g, h] = ^g h * h^{-1}
RelWord lbox(const AbsWord& g, const RelWord& h);
/// [h, g]] = h * ^g h^{-1}
RelWord rbox(const RelWord& h, const AbsWord& g);
/// Cancels adjacent (g, x)(g, x)^{-1}.
RelWord free_reduce(const RelWord& w);

/// Every parameter in I, long-root parameters in Gamma.
bool parameters_admissible(const RelWord& w, const FormIdeal& form);

/// phi: product of phi(g) T_x^sign phi(g)^{-1}.
SpMatrix eval_rel_word(const RelWord& w);
/// m := m * phi(w)
void mul_rel_word_right(SpMatrix& m, const RelWord& w);

/// The absolute word g X_ij(a)^sign g^{-1} per atom. Used when (I, Gamma) = (R, R).
AbsWord to_abs(const RelWord& w);

/// Parses the relative syntax. An atom is `Y(i,j;a)` or `Y(i,j;a)^-1`,
/// optionally prefixed by an absolute word and `|>`; the prefix may be
/// wrapped in square brackets.
RelWord parse_rel_word(const Ring& ring, int rank, std::string_view text);

/// KL0-KL7 on images with stratified index tuples.
Report verify_kl_relations(const FormIdeal& form, int rank, const SuiteOptions& options);

}  // namespace stsp

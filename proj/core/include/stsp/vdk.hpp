#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stsp/esd.hpp"
#include "stsp/form_ideal.hpp"
#include "stsp/relative.hpp"
#include "stsp/report.hpp"
#include "stsp/steinberg.hpp"

namespace stsp {

/// Generator (u, v, a, b)^sign of the van der Kallen group, u an elementary
/// column with its witness. Construction checks <u, v> = 0; a, b in I is
/// checked against a form ideal by vdk_parameters_admissible.
class VdKGen {
 public:
  VdKGen(ElemColumn u, HVector v, Scalar a, Scalar b, int sign = 1);

  const ElemColumn& u() const noexcept { return u_; }
  const HVector& v() const noexcept { return v_; }
  const Scalar& a() const noexcept { return a_; }
  const Scalar& b() const noexcept { return b_; }
  int sign() const noexcept { return sign_; }
  VdKGen inverse() const { return VdKGen(u_, v_, a_, b_, -sign_); }

  bool operator==(const VdKGen& o) const {
    return sign_ == o.sign_ && u_.base_index() == o.u_.base_index() && u_.word() == o.u_.word() && v_ == o.v_ &&
           a_ == o.a_ && b_ == o.b_;
  }
  /// `(word=X(1,2;3), i=-1, v=e(2)*3, a=2, b=0)`, followed by `^-1` for inverses.
  std::string to_string() const;

 private:
  ElemColumn u_;
  HVector v_;
  Scalar a_;
  Scalar b_;
  int sign_;
};

class VdKWord {
 public:
  VdKWord(Ring ring, int rank);
  static VdKWord single(VdKGen g);

  const Ring& ring() const noexcept { return ring_; }
  int rank() const noexcept { return rank_; }
  const std::vector<VdKGen>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }

  VdKWord& push(VdKGen g);
  VdKWord& append(const VdKWord& w);
  bool operator==(const VdKWord& o) const { return ring_ == o.ring_ && rank_ == o.rank_ && gens_ == o.gens_; }
  /// Generators separated by spaces; the empty word prints as `1`.
  std::string to_string() const;

 private:
  Ring ring_;
  int rank_;
  std::vector<VdKGen> gens_;
};

VdKWord mul(const VdKWord& a, const VdKWord& b);
VdKWord inv(const VdKWord& w);
/// Cancels adjacent g g^-1.
VdKWord free_reduce(const VdKWord& w);

/// _ij(a) = (e_{-j}, e_i, a eps(-j), 0) for j != +-i, _{i,-i}(a) = (e_i, 0, 0, a).
VdKWord vdk_elementary(const Ring& ring, int rank, int i, int j, const Scalar& a);

/// a, b in I for every generator.
bool vdk_parameters_admissible(const VdKWord& w, const FormIdeal& form);

/// Product of T(u, v a, b)^sign; agrees with eval_rel_word(pi_map(w)).
SpMatrix vdk_eval(const VdKWord& w);

/// The action of g: (u, v, a, b) -> (phi(g)u, phi(g)v, a, b), with witness g * word.
VdKWord vdk_act(const AbsWord& g, const VdKWord& w);
/// alpha_{u,v,a}, acting through X(u, v, a) built on the witness of u.
VdKWord vdk_act(const ElemColumn& u, const HVector& v, const Scalar& a, const VdKWord& w);
/// alpha_{u,v,a} for u with a zero pair u_p = u_{-p} = 0.
VdKWord vdk_act(const EsdParams& p, const VdKWord& w);

/// Generator-wise Z(u, v, a, b). Requires Gamma = I.
RelWord pi_map(const VdKWord& w, const FormIdeal& form);
/// Atom-wise ^g Y_ij(a) -> ^g _ij(a).
VdKWord rho_map(const RelWord& w);

/// (e_i, v, a, b) = _{i,-i}(b + 2 a v_i - a^2 <v~_-, v~_+>) prod_{j != +-i} _{j,-i}(a v_j eps(i)),
/// the product in basis order and v~ the part of v off +-i. Zero short factors
/// are omitted. Requires u = e_i and v_{-i} = 0.
VdKWord vdk_unipotent_decompose(const VdKGen& g);

/// Parses generators in the to_string syntax; `1` is the empty word.
VdKWord parse_vdk_word(const Ring& ring, int rank, std::string_view text);

/// T1-T7 on images with elementary-column witnesses of length at most 6.
Report verify_t_relations(const FormIdeal& form, int rank, const SuiteOptions& options);
/// KL0-KL7 with the relative generators replaced by the _ij elements.
Report verify_kl_for_vdk(const FormIdeal& form, int rank, const SuiteOptions& options);
/// pi rho and rho pi on random relative atoms and random generators, plus the
/// unipotent decomposition of (e_i, v, a, b).
Report verify_vdk_round_trips(const FormIdeal& form, int rank, const SuiteOptions& options);

}  // namespace stsp

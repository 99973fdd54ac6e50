#include "stsp/relative.hpp"

#include <functional>

#include "stsp/error.hpp"
#include "stsp/sampling.hpp"
#include "stsp/syntax.hpp"
#include "kl_families.hpp"

namespace stsp {

RelWord::RelWord(Ring ring, int rank) : ring_(ring), rank_(rank) {
  if (rank < kMinRank) throw PreconditionError("RelWord", "l >= 3 (got l = " + std::to_string(rank) + ")");
}

RelWord RelWord::gen(Ring ring, int rank, int i, int j, const Scalar& a, int sign) {
  RelWord w(ring, rank);
  w.push(i, j, a, sign);
  return w;
}

RelWord& RelWord::push(const AbsWord& g, int i, int j, const Scalar& a, int sign) {
  if (!valid_index(i, rank_) || !valid_index(j, rank_)) throw PreconditionError("Y_ij", "indices in +-1..+-l");
  if (i == j) throw PreconditionError("Y_ij", "i != j");
  if (sign != 1 && sign != -1) throw std::invalid_argument("atom sign must be +1 or -1");
  require_same_ring(ring_, a.ring());
  require_same_ring(ring_, g.ring());
  if (g.rank() != rank_) throw std::invalid_argument("rank mismatch in relative atom");
  atoms_.push_back({g, {i, j, a}, sign});
  return *this;
}

RelWord& RelWord::append(const RelWord& w) {
  require_same_ring(ring_, w.ring_);
  if (rank_ != w.rank_) throw std::invalid_argument("rank mismatch in word product");
  atoms_.insert(atoms_.end(), w.atoms_.begin(), w.atoms_.end());
  return *this;
}

std::string RelWord::to_string() const {
  if (atoms_.empty()) return "1";
  std::string out;
  for (const auto& at : atoms_) {
    if (!out.empty()) out += ' ';
    if (!at.g.empty()) out += "[" + at.g.to_string() + "] |> ";
    out += "Y(" + std::to_string(at.x.i) + "," + std::to_string(at.x.j) + ";" + at.x.a.to_string() + ")";
    if (at.sign < 0) out += "^-1";
  }
  return out;
}

RelWord mul(const RelWord& a, const RelWord& b) {
  RelWord w(a);
  w.append(b);
  return w;
}

RelWord inv(const RelWord& w) {
  RelWord out(w.ring(), w.rank());
  const auto& xs = w.atoms();
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) out.push(it->g, it->x.i, it->x.j, it->x.a, -it->sign);
  return out;
}

RelWord act(const AbsWord& f, const RelWord& w) {
  RelWord out(w.ring(), w.rank());
  for (const auto& at : w.atoms()) out.push(mul(f, at.g), at.x.i, at.x.j, at.x.a, at.sign);
  return out;
}

RelWord lbox(const AbsWord& g, const RelWord& h) { return mul(act(g, h), inv(h)); }

RelWord rbox(const RelWord& h, const AbsWord& g) { return mul(h, act(g, inv(h))); }

RelWord free_reduce(const RelWord& w) {
  std::vector<RelAtom> stack;
  for (const auto& at : w.atoms()) {
    if (!stack.empty() && stack.back().sign == -at.sign && stack.back().x == at.x && stack.back().g == at.g)
      stack.pop_back();
    else
      stack.push_back(at);
  }
  RelWord out(w.ring(), w.rank());
  for (const auto& at : stack) out.push(at);
  return out;
}

bool parameters_admissible(const RelWord& w, const FormIdeal& form) {
  for (const auto& at : w.atoms()) {
    const bool ok = at.x.long_root() ? form.gamma_member(at.x.a) : form.ideal_member(at.x.a);
    if (!ok) return false;
  }
  return true;
}

void mul_rel_word_right(SpMatrix& m, const RelWord& w) {
  const auto& xs = w.atoms();
  std::size_t k = 0;
  while (k < xs.size()) {
    // Atoms sharing one prefix g need a single conjugation.
    std::size_t end = k + 1;
    while (end < xs.size() && xs[end].g == xs[k].g) ++end;
    bool trivial = true;
    for (std::size_t t = k; t < end && trivial; ++t) trivial = xs[t].x.a.is_zero();
    if (!trivial) {
      mul_word_right(m, xs[k].g);
      for (std::size_t t = k; t < end; ++t) {
        const auto& at = xs[t];
        m.mul_elementary_right(at.x.i, at.x.j, at.sign > 0 ? at.x.a.value() : mpz_class(-at.x.a.value()));
      }
      mul_word_inverse_right(m, xs[k].g);
    }
    k = end;
  }
}

SpMatrix eval_rel_word(const RelWord& w) {
  SpMatrix m = SpMatrix::identity(w.ring(), w.rank());
  mul_rel_word_right(m, w);
  return m;
}

AbsWord to_abs(const RelWord& w) {
  AbsWord out(w.ring(), w.rank());
  for (const auto& at : w.atoms()) {
    out.append(at.g);
    out.push(at.x.i, at.x.j, at.x.a, at.sign);
    out.append(inv(at.g));
  }
  return out;
}

RelWord parse_rel_word(const Ring& ring, int rank, std::string_view text) {
  Cursor cur(text);
  RelWord w(ring, rank);
  if (cur.at_end()) return w;
  if (cur.peek() == '1') {
    cur.expect('1');
    if (!cur.at_end()) cur.fail("trailing characters after empty word '1'");
    return w;
  }
  auto prefix = [&](std::string_view stops) {
    const std::size_t at = cur.position();
    std::string_view body = cur.until_top_level(stops);
    try {
      return parse_abs_word(ring, rank, body);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), at + e.position());
    }
  };
  while (!cur.at_end()) {
    AbsWord g(ring, rank);
    if (cur.eat('[')) {
      g = prefix("]");
      cur.expect(']');
      cur.expect("|>");
    } else if (cur.peek() == 'X') {
      g = prefix("|");
      cur.expect("|>");
    }
    const std::size_t at = cur.position();
    cur.expect("Y(");
    int i = cur.index();
    cur.expect(',');
    int j = cur.index();
    cur.expect(';');
    Scalar a = cur.scalar(ring);
    cur.expect(')');
    int sign = cur.eat("^-1") ? -1 : 1;
    try {
      w.push(g, i, j, a, sign);
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), at);
    }
  }
  return w;
}

namespace {

struct RelOps {
  Ring ring;
  int rank;
  RelWord gen(int i, int j, const Scalar& a) const { return RelWord::gen(ring, rank, i, j, a); }
  RelWord one() const { return RelWord(ring, rank); }
  RelWord mul(const RelWord& a, const RelWord& b) const { return stsp::mul(a, b); }
  RelWord inv(const RelWord& w) const { return stsp::inv(w); }
  RelWord act(const AbsWord& g, const RelWord& w) const { return stsp::act(g, w); }
};

}  // namespace

Report verify_kl_relations(const FormIdeal& form, int rank, const SuiteOptions& options) {
  return detail::run_kl_families(RelOps{form.ring(), rank}, form, rank, options, "kl",
                                 [&form](const RelWord& lhs, const RelWord& rhs, Record& rec) {
                                   if (!parameters_admissible(lhs, form) || !parameters_admissible(rhs, form)) {
                                     rec.result = Outcome::fail;
                                     rec.note = "parameter outside (I, Gamma)";
                                   } else if (eval_rel_word(lhs) != eval_rel_word(rhs)) {
                                     rec.result = Outcome::fail;
                                     rec.note = "images differ";
                                   }
                                 });
}

}  // namespace stsp

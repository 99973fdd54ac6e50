#include "stsp/words.hpp"

#include "stsp/error.hpp"
#include "stsp/syntax.hpp"

namespace stsp {

AbsWord::AbsWord(Ring ring, int rank) : ring_(ring), rank_(rank) {
  if (rank < kMinRank) throw PreconditionError("AbsWord", "l >= 3 (got l = " + std::to_string(rank) + ")");
}

AbsWord AbsWord::letter(Ring ring, int rank, int i, int j, const Scalar& r, int sign) {
  AbsWord w(ring, rank);
  w.push(i, j, r, sign);
  return w;
}

AbsWord& AbsWord::push(int i, int j, const Scalar& r, int sign) {
  if (!valid_index(i, rank_) || !valid_index(j, rank_)) throw PreconditionError("X_ij", "indices in +-1..+-l");
  if (i == j) throw PreconditionError("X_ij", "i != j");
  if (sign != 1 && sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  require_same_ring(ring_, r.ring());
  letters_.push_back({{i, j, r}, sign});
  return *this;
}

AbsWord& AbsWord::append(const AbsWord& w) {
  require_same_ring(ring_, w.ring_);
  if (rank_ != w.rank_) throw std::invalid_argument("rank mismatch in word product");
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  return *this;
}

std::string AbsWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& x : letters_) {
    if (!out.empty()) out += ' ';
    out += "X(" + std::to_string(x.gen.i) + "," + std::to_string(x.gen.j) + ";" + x.gen.r.to_string() + ")";
    if (x.sign < 0) out += "^-1";
  }
  return out;
}

AbsWord mul(const AbsWord& a, const AbsWord& b) {
  AbsWord w(a);
  w.append(b);
  return w;
}

AbsWord inv(const AbsWord& w) {
  AbsWord out(w.ring(), w.rank());
  const auto& xs = w.letters();
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) out.push(it->gen.i, it->gen.j, it->gen.r, -it->sign);
  return out;
}

AbsWord conj(const AbsWord& g, const AbsWord& h) { return mul(mul(g, h), inv(g)); }

AbsWord comm(const AbsWord& x, const AbsWord& y) { return mul(mul(x, y), mul(inv(x), inv(y))); }

AbsWord free_reduce(const AbsWord& w) {
  std::vector<AbsLetter> stack;
  for (const auto& x : w.letters()) {
    if (!stack.empty() && stack.back().gen == x.gen && stack.back().sign == -x.sign)
      stack.pop_back();
    else
      stack.push_back(x);
  }
  AbsWord out(w.ring(), w.rank());
  for (const auto& x : stack) out.push(x);
  return out;
}

void mul_word_right(SpMatrix& m, const AbsWord& w) {
  for (const auto& x : w.letters()) {
    if (x.gen.r.is_zero()) continue;
    m.mul_elementary_right(x.gen.i, x.gen.j, x.sign > 0 ? x.gen.r.value() : mpz_class(-x.gen.r.value()));
  }
}

void mul_word_inverse_right(SpMatrix& m, const AbsWord& w) {
  const auto& xs = w.letters();
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    if (it->gen.r.is_zero()) continue;
    m.mul_elementary_right(it->gen.i, it->gen.j, it->sign > 0 ? mpz_class(-it->gen.r.value()) : it->gen.r.value());
  }
}

SpMatrix eval_abs_word(const AbsWord& w) {
  SpMatrix m = SpMatrix::identity(w.ring(), w.rank());
  mul_word_right(m, w);
  return m;
}

void apply_elementary(HVector& v, int i, int j, const mpz_class& a) {
  if (sgn(a) == 0) return;
  if (j == -i) {
    v.set_raw(i, v.raw(i) + eps(i) * a * v.raw(-i));
    return;
  }
  // I + a E_ij + a eps(-j) eps(i) E_{-j,-i}; the two updates read disjoint coordinates.
  mpz_class vj = v.raw(j);
  mpz_class vmi = v.raw(-i);
  v.set_raw(i, v.raw(i) + a * vj);
  v.set_raw(-j, v.raw(-j) + eps(-j) * eps(i) * a * vmi);
}

HVector apply_word(const AbsWord& w, const HVector& v) {
  HVector out(v);
  const auto& xs = w.letters();
  for (auto it = xs.rbegin(); it != xs.rend(); ++it)
    apply_elementary(out, it->gen.i, it->gen.j, it->sign > 0 ? it->gen.r.value() : mpz_class(-it->gen.r.value()));
  return out;
}

HVector apply_word_inverse(const AbsWord& w, const HVector& v) {
  HVector out(v);
  for (const auto& x : w.letters())
    apply_elementary(out, x.gen.i, x.gen.j, x.sign > 0 ? mpz_class(-x.gen.r.value()) : x.gen.r.value());
  return out;
}

AbsWord parse_abs_word(const Ring& ring, int rank, std::string_view text) {
  Cursor cur(text);
  AbsWord w(ring, rank);
  if (cur.at_end()) return w;
  if (cur.peek() == '1') {
    cur.expect('1');
    if (!cur.at_end()) cur.fail("trailing characters after empty word '1'");
    return w;
  }
  while (!cur.at_end()) {
    const std::size_t at = cur.position();
    cur.expect("X(");
    int i = cur.index();
    cur.expect(',');
    int j = cur.index();
    cur.expect(';');
    Scalar r = cur.scalar(ring);
    cur.expect(')');
    int sign = 1;
    if (cur.eat("^-1")) sign = -1;
    try {
      w.push(i, j, r, sign);
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), at);
    }
  }
  return w;
}

}  // namespace stsp

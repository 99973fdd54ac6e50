#include "stsp/vdk.hpp"

#include <functional>

#include "stsp/error.hpp"
#include "stsp/generators.hpp"
#include "stsp/sampling.hpp"
#include "stsp/syntax.hpp"
#include "kl_families.hpp"

namespace stsp {

VdKGen::VdKGen(ElemColumn u, HVector v, Scalar a, Scalar b, int sign)
    : u_(std::move(u)), v_(std::move(v)), a_(std::move(a)), b_(std::move(b)), sign_(sign) {
  require_same_ring(u_.ring(), v_.ring());
  require_same_ring(u_.ring(), a_.ring());
  require_same_ring(u_.ring(), b_.ring());
  if (u_.rank() != v_.rank()) throw std::invalid_argument("rank mismatch in vdK generator");
  if (sign != 1 && sign != -1) throw std::invalid_argument("generator sign must be +1 or -1");
  if (!form(u_.vector(), v_).is_zero()) throw PreconditionError("(u,v,a,b)", "<u,v> = 0");
}

std::string VdKGen::to_string() const {
  std::string out = "(word=" + u_.word().to_string() + ", i=" + std::to_string(u_.base_index()) +
                    ", v=" + v_.to_string() + ", a=" + a_.to_string() + ", b=" + b_.to_string() + ")";
  if (sign_ < 0) out += "^-1";
  return out;
}

VdKWord::VdKWord(Ring ring, int rank) : ring_(ring), rank_(rank) {
  if (rank < kMinRank) throw PreconditionError("VdKWord", "l >= 3 (got l = " + std::to_string(rank) + ")");
}

VdKWord VdKWord::single(VdKGen g) {
  VdKWord w(g.u().ring(), g.u().rank());
  w.push(std::move(g));
  return w;
}

VdKWord& VdKWord::push(VdKGen g) {
  require_same_ring(ring_, g.u().ring());
  if (g.u().rank() != rank_) throw std::invalid_argument("rank mismatch in vdK word");
  gens_.push_back(std::move(g));
  return *this;
}

VdKWord& VdKWord::append(const VdKWord& w) {
  require_same_ring(ring_, w.ring_);
  if (rank_ != w.rank_) throw std::invalid_argument("rank mismatch in word product");
  gens_.insert(gens_.end(), w.gens_.begin(), w.gens_.end());
  return *this;
}

std::string VdKWord::to_string() const {
  if (gens_.empty()) return "1";
  std::string out;
  for (const auto& g : gens_) {
    if (!out.empty()) out += ' ';
    out += g.to_string();
  }
  return out;
}

VdKWord mul(const VdKWord& a, const VdKWord& b) {
  VdKWord w(a);
  w.append(b);
  return w;
}

VdKWord inv(const VdKWord& w) {
  VdKWord out(w.ring(), w.rank());
  const auto& gs = w.gens();
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) out.push(it->inverse());
  return out;
}

VdKWord free_reduce(const VdKWord& w) {
  std::vector<VdKGen> stack;
  for (const auto& g : w.gens()) {
    if (!stack.empty() && stack.back() == g.inverse())
      stack.pop_back();
    else
      stack.push_back(g);
  }
  VdKWord out(w.ring(), w.rank());
  for (auto& g : stack) out.push(std::move(g));
  return out;
}

VdKWord vdk_elementary(const Ring& ring, int rank, int i, int j, const Scalar& a) {
  if (!valid_index(i, rank) || !valid_index(j, rank)) throw PreconditionError("_ij", "indices in +-1..+-l");
  if (i == j) throw PreconditionError("_ij", "i != j");
  const HVector zero(ring, rank);
  if (j == -i) return VdKWord::single(VdKGen(ElemColumn::basis(ring, rank, i), zero, ring.zero(), a));
  return VdKWord::single(
      VdKGen(ElemColumn::basis(ring, rank, -j), HVector::basis(ring, rank, i), a * eps(-j), ring.zero()));
}

bool vdk_parameters_admissible(const VdKWord& w, const FormIdeal& form) {
  for (const auto& g : w.gens())
    if (!form.ideal_member(g.a()) || !form.ideal_member(g.b())) return false;
  return true;
}

SpMatrix vdk_eval(const VdKWord& w) {
  SpMatrix m = SpMatrix::identity(w.ring(), w.rank());
  for (const auto& g : w.gens()) {
    EsdParams p(g.u().vector(), g.v() * g.a(), g.b());
    mul_esd_right(m, g.sign() > 0 ? p : p.inverse());
  }
  return m;
}

VdKWord vdk_act(const AbsWord& g, const VdKWord& w) {
  VdKWord out(w.ring(), w.rank());
  for (const auto& x : w.gens()) out.push(VdKGen(x.u().acted(g), apply_word(g, x.v()), x.a(), x.b(), x.sign()));
  return out;
}

VdKWord vdk_act(const ElemColumn& u, const HVector& v, const Scalar& a, const VdKWord& w) {
  return vdk_act(abs_x_word(u, v, a), w);
}

VdKWord vdk_act(const EsdParams& p, const VdKWord& w) { return vdk_act(abs_x_word(p.u(), p.v(), p.a()), w); }

RelWord pi_map(const VdKWord& w, const FormIdeal& form) {
  RelWord out(w.ring(), w.rank());
  for (const auto& g : w.gens()) {
    RelWord z = z_full_word(g.u().vector(), g.v(), g.a(), g.b(), form);
    out.append(g.sign() > 0 ? z : inv(z));
  }
  return out;
}

VdKWord rho_map(const RelWord& w) {
  VdKWord out(w.ring(), w.rank());
  for (const auto& at : w.atoms()) {
    VdKWord x = vdk_act(at.g, vdk_elementary(w.ring(), w.rank(), at.x.i, at.x.j, at.x.a));
    out.append(at.sign > 0 ? x : inv(x));
  }
  return out;
}

VdKWord vdk_unipotent_decompose(const VdKGen& g) {
  const int i = g.u().base_index();
  const Ring& ring = g.u().ring();
  const int rank = g.u().rank();
  if (g.u().vector() != HVector::basis(ring, rank, i)) throw PreconditionError("(e_i,v,a,b)", "u = e_i");
  if (g.v().raw(-i) != 0) throw PreconditionError("(e_i,v,a,b)", "v_{-i} = 0");
  const Scalar& a = g.a();
  const HVector& v = g.v();
  VdKWord w(ring, rank);
  w.append(vdk_elementary(ring, rank, i, -i, g.b() + a * v[i] * 2 - a * a * split_form(v.without_pair(i))));
  for (int j : indices(rank)) {
    if (j == i || j == -i) continue;
    const Scalar c = a * v[j] * eps(i);
    if (c == ring.zero()) continue;
    w.append(vdk_elementary(ring, rank, j, -i, c));
  }
  return g.sign() > 0 ? w : inv(w);
}

VdKWord parse_vdk_word(const Ring& ring, int rank, std::string_view text) {
  Cursor cur(text);
  VdKWord w(ring, rank);
  if (cur.at_end()) return w;
  if (cur.peek() == '1') {
    cur.expect('1');
    if (!cur.at_end()) cur.fail("trailing characters after empty word '1'");
    return w;
  }
  auto field = [&](auto parse) {
    const std::size_t at = cur.position();
    std::string_view body = cur.until_top_level(",)");
    try {
      return parse(body);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), at + e.position());
    }
  };
  while (!cur.at_end()) {
    const std::size_t at = cur.position();
    cur.expect('(');
    cur.expect("word=");
    AbsWord g = field([&](std::string_view s) { return parse_abs_word(ring, rank, s); });
    cur.expect(',');
    cur.expect("i=");
    int i = cur.index();
    cur.expect(',');
    cur.expect("v=");
    HVector v = field([&](std::string_view s) { return parse_vector(ring, rank, s); });
    cur.expect(',');
    cur.expect("a=");
    Scalar a = cur.scalar(ring);
    cur.expect(',');
    cur.expect("b=");
    Scalar b = cur.scalar(ring);
    cur.expect(')');
    int sign = cur.eat("^-1") ? -1 : 1;
    try {
      w.push(VdKGen(ElemColumn(std::move(g), i), std::move(v), a, b, sign));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), at);
    }
  }
  return w;
}

namespace {

void require_maximal(const FormIdeal& form, const char* suite) {
  if (!form.gamma_is_maximal())
    throw ConfigError(std::string(suite) + " needs Gamma = I (got " + form.to_string() + ")");
}

constexpr std::size_t kWitnessLength = 6;

void put(Binding& b, const char* key, const std::string& value) { b.emplace_back(key, value); }

// Image comparison, admissibility, and the image of pi(lhs) against the closed form.
void check_sides(const VdKWord& lhs, const VdKWord& rhs, const FormIdeal& form, bool z_route, Record& rec) {
  if (!vdk_parameters_admissible(lhs, form) || !vdk_parameters_admissible(rhs, form)) {
    rec.result = Outcome::fail;
    rec.note = "parameter outside I";
    return;
  }
  const SpMatrix l = vdk_eval(lhs);
  if (l != vdk_eval(rhs)) {
    rec.result = Outcome::fail;
    rec.note = "images differ";
  } else if (z_route && eval_rel_word(pi_map(lhs, form)) != l) {
    rec.result = Outcome::fail;
    rec.note = "Z-route image differs";
  }
}

struct TFamily {
  const char* name;
  std::function<std::pair<VdKWord, VdKWord>(Draw&, Binding&)> sides;
};

std::vector<TFamily> t_families(const Ring& ring, int rank) {
  auto gen = [](const ElemColumn& u, const HVector& v, const Scalar& a, const Scalar& b) {
    return VdKWord::single(VdKGen(u, v, a, b));
  };
  auto ortho = [](Draw& d, const HVector& u) {
    HVector v = d.vec();
    d.orthogonalize(v, {u}, {}, false);
    return v;
  };
  auto column = [](Draw& d, Binding& b, const char* key) {
    ElemColumn u = d.elem_column(kWitnessLength);
    put(b, key, u.word().to_string() + " e(" + std::to_string(u.base_index()) + ")");
    return u;
  };
  const HVector zero(ring, rank);
  const Scalar z = ring.zero();
  std::vector<TFamily> out;
  out.push_back({"T1", [=](Draw& d, Binding& b) {
                   ElemColumn u = column(d, b, "u");
                   HVector v = ortho(d, u.vector());
                   Scalar r = d.r(), a = d.ideal(), c = d.ideal();
                   put(b, "v", v.to_string());
                   put(b, "r", r.to_string());
                   put(b, "a", a.to_string());
                   put(b, "b", c.to_string());
                   return std::pair{gen(u, v * r, a, c), gen(u, v, a * r, c)};
                 }});
  out.push_back({"T2", [=](Draw& d, Binding& b) {
                   ElemColumn u = column(d, b, "u");
                   HVector v = ortho(d, u.vector()), w = ortho(d, u.vector());
                   Scalar a = d.ideal(), c1 = d.ideal(), c2 = d.ideal();
                   put(b, "v", v.to_string());
                   put(b, "w", w.to_string());
                   put(b, "a", a.to_string());
                   put(b, "b", c1.to_string());
                   put(b, "c", c2.to_string());
                   return std::pair{mul(gen(u, v, a, c1), gen(u, w, a, c2)),
                                    gen(u, v + w, a, c1 + c2 + a * a * form(v, w))};
                 }});
  out.push_back({"T3", [=](Draw& d, Binding& b) {
                   ElemColumn u = column(d, b, "u");
                   HVector v = ortho(d, u.vector());
                   Scalar a = d.ideal(), c = d.ideal();
                   put(b, "v", v.to_string());
                   put(b, "a", a.to_string());
                   put(b, "b", c.to_string());
                   return std::pair{mul(gen(u, v, a, z), gen(u, v, c, z)), gen(u, v, a + c, z)};
                 }});
  // v = phi(g p) e_j with p in P_i and j != -i keeps v_{-i} = 0 after phi(g)^{-1}, so <u, v> = 0.
  out.push_back({"T4", [=](Draw& d, Binding& b) {
                   int i = d.index();
                   int j = d.index_not_in({-i});
                   AbsWord g = d.abs_word(d.rng().below(kWitnessLength + 1));
                   AbsWord p = d.parabolic_word(i, d.rng().below(3));
                   ElemColumn u(g, i), v(mul(g, p), j);
                   Scalar a = d.ideal();
                   put(b, "u", g.to_string() + " e(" + std::to_string(i) + ")");
                   put(b, "v", mul(g, p).to_string() + " e(" + std::to_string(j) + ")");
                   put(b, "a", a.to_string());
                   return std::pair{gen(u, v.vector(), a, z), gen(v, u.vector(), a, z)};
                 }});
  out.push_back({"T5", [=](Draw& d, Binding& b) {
                   ElemColumn u1 = column(d, b, "u'");
                   HVector v1 = ortho(d, u1.vector());
                   Scalar a1 = d.ideal(), b1 = d.ideal();
                   ElemColumn u = column(d, b, "u");
                   HVector v = ortho(d, u.vector());
                   Scalar a = d.ideal(), c = d.ideal();
                   put(b, "v'", v1.to_string());
                   put(b, "a'", a1.to_string());
                   put(b, "b'", b1.to_string());
                   put(b, "v", v.to_string());
                   put(b, "a", a.to_string());
                   put(b, "b", c.to_string());
                   VdKWord h = gen(u1, v1, a1, b1);
                   VdKWord x = gen(u, v, a, c);
                   return std::pair{mul(mul(h, x), inv(h)), vdk_act(u1, v1 * a1, b1, x)};
                 }});
  out.push_back({"T6", [=](Draw& d, Binding& b) {
                   ElemColumn u = column(d, b, "u");
                   Scalar a = d.ideal();
                   put(b, "a", a.to_string());
                   return std::pair{gen(u, u.vector(), a, z), gen(u, zero, z, a * 2)};
                 }});
  // u = phi(g) e_i, v = phi(g) e_j and u + v r = phi(g X_ji(r)) e_i.
  out.push_back({"T7", [=](Draw& d, Binding& b) {
                   int i = d.index();
                   int j = d.index_not_in({i, -i});
                   AbsWord g = d.abs_word(d.rng().below(kWitnessLength));
                   Scalar r = d.r(), a = d.ideal();
                   put(b, "g", g.to_string());
                   put(b, "i", std::to_string(i));
                   put(b, "j", std::to_string(j));
                   put(b, "r", r.to_string());
                   put(b, "a", a.to_string());
                   ElemColumn u(g, i), v(g, j);
                   ElemColumn uv(mul(g, AbsWord::letter(ring, rank, j, i, r)), i);
                   VdKWord rhs = gen(u, zero, z, a);
                   rhs.append(gen(v, zero, z, a * r * r));
                   rhs.append(gen(v, u.vector(), a * r, z));
                   return std::pair{gen(uv, zero, z, a), rhs};
                 }});
  return out;
}

struct VdkOps {
  Ring ring;
  int rank;
  VdKWord gen(int i, int j, const Scalar& a) const { return vdk_elementary(ring, rank, i, j, a); }
  VdKWord one() const { return VdKWord(ring, rank); }
  VdKWord mul(const VdKWord& a, const VdKWord& b) const { return stsp::mul(a, b); }
  VdKWord inv(const VdKWord& w) const { return stsp::inv(w); }
  VdKWord act(const AbsWord& g, const VdKWord& w) const { return vdk_act(g, w); }
};

}  // namespace

Report verify_t_relations(const FormIdeal& form, int rank, const SuiteOptions& options) {
  require_maximal(form, "T1-T7");
  Report rep;
  for (const auto& fam : t_families(form.ring(), rank)) {
    for (std::uint64_t t = 0; t < options.trials; ++t) {
      Draw d(form, rank, Rng::stream(options.seed, std::string("t/") + fam.name, t), options.bound);
      Binding b;
      auto [lhs, rhs] = fam.sides(d, b);
      Record rec{"t", fam.name, std::move(b), Outcome::pass, Exactness::image_level, ""};
      check_sides(lhs, rhs, form, true, rec);
      rep.add(std::move(rec));
    }
  }
  return rep;
}

Report verify_kl_for_vdk(const FormIdeal& form, int rank, const SuiteOptions& options) {
  require_maximal(form, "KL for the vdK group");
  return detail::run_kl_families(VdkOps{form.ring(), rank}, form, rank, options, "kl-vdk",
                                 [&form](const VdKWord& lhs, const VdKWord& rhs, Record& rec) {
                                   check_sides(lhs, rhs, form, false, rec);
                                 });
}

Report verify_vdk_round_trips(const FormIdeal& form, int rank, const SuiteOptions& options) {
  require_maximal(form, "round trips");
  const Ring& ring = form.ring();
  Report rep;
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    Draw d(form, rank, Rng::stream(options.seed, "roundtrip/pi-rho", t), options.bound);
    int i = d.index();
    int j = d.index_not_in({i});
    AbsWord g = d.abs_word(d.rng().below(kWitnessLength + 1));
    Scalar a = d.ideal();
    int sign = d.rng().coin() ? 1 : -1;
    RelWord x(ring, rank);
    x.push(g, i, j, a, sign);
    Binding b{{"atom", x.to_string()}};
    Record rec{"roundtrip", "pi-rho", std::move(b), Outcome::pass, Exactness::image_level, ""};
    if (eval_rel_word(pi_map(rho_map(x), form)) != eval_rel_word(x)) {
      rec.result = Outcome::fail;
      rec.note = "images differ";
    }
    rep.add(std::move(rec));
  }
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    Draw d(form, rank, Rng::stream(options.seed, "roundtrip/rho-pi", t), options.bound);
    ElemColumn u = d.elem_column(kWitnessLength);
    HVector v = d.vec();
    d.orthogonalize(v, {u.vector()}, {}, false);
    VdKWord x = VdKWord::single(VdKGen(u, v, d.ideal(), d.ideal(), d.rng().coin() ? 1 : -1));
    Binding b{{"gen", x.to_string()}};
    Record rec{"roundtrip", "rho-pi", std::move(b), Outcome::pass, Exactness::image_level, ""};
    if (vdk_eval(rho_map(pi_map(x, form))) != vdk_eval(x)) {
      rec.result = Outcome::fail;
      rec.note = "images differ";
    }
    rep.add(std::move(rec));
  }
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    Draw d(form, rank, Rng::stream(options.seed, "roundtrip/decompose", t), options.bound);
    int i = d.index();
    VdKGen x(ElemColumn::basis(ring, rank, i), d.vec({-i}), d.ideal(), d.ideal());
    VdKWord w = vdk_unipotent_decompose(x);
    Binding b{{"gen", x.to_string()}, {"factors", w.to_string()}};
    Record rec{"roundtrip", "decompose", std::move(b), Outcome::pass, Exactness::image_level, ""};
    check_sides(VdKWord::single(x), w, form, false, rec);
    rep.add(std::move(rec));
  }
  return rep;
}

}  // namespace stsp

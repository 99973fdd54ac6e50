#include "stsp/steinberg.hpp"

#include <functional>

#include "stsp/error.hpp"
#include "stsp/esd.hpp"
#include "stsp/generators.hpp"
#include "stsp/sampling.hpp"

namespace stsp {

ElemColumn::ElemColumn(AbsWord word, int base_index)
    : word_(std::move(word)), base_(base_index), vector_(word_.ring(), word_.rank()) {
  if (!valid_index(base_, word_.rank())) throw PreconditionError("ElemColumn", "base index in +-1..+-l");
  vector_ = apply_word(word_, HVector::basis(word_.ring(), word_.rank(), base_));
}

ElemColumn ElemColumn::basis(const Ring& ring, int rank, int i) { return ElemColumn(AbsWord(ring, rank), i); }

bool ElemColumn::check() const {
  return eval_abs_word(word_).column(base_) == vector_;
}

ElemColumn ElemColumn::acted(const AbsWord& g) const { return ElemColumn(mul(g, word_), base_); }

AbsWord abs_esd_word(int i, const HVector& v, const Scalar& a) {
  require_same_ring(v.ring(), a.ring());
  if (!valid_index(i, v.rank())) throw PreconditionError("X(e_i,v,a)", "i in +-1..+-l");
  if (v.raw(-i) != 0) throw PreconditionError("X(e_i,v,a)", "v_{-i} = 0");
  AbsWord w(v.ring(), v.rank());
  w.push(i, -i, a + v[i] * 2 - split_form(v));
  for (int j : indices(v.rank())) {
    if (j == i || j == -i || v.raw(j) == 0) continue;
    w.push(j, -i, v[j] * eps(i));
  }
  return w;
}

ElemColumn random_elementary_column(const Ring& ring, int rank, std::size_t length, std::uint64_t seed,
                                    long bound) {
  FormIdeal whole = FormIdeal::whole(ring);
  Draw d(whole, rank, Rng::stream(seed, "elementary-column", length), bound);
  AbsWord w = d.abs_word(length);
  return ElemColumn(std::move(w), d.index());
}

namespace {

AbsWord x(const Ring& ring, int rank, int i, int j, const Scalar& r) { return AbsWord::letter(ring, rank, i, j, r); }

Binding idx_binding(const std::vector<std::string>& names, const std::vector<int>& t) {
  Binding b;
  for (std::size_t k = 0; k < names.size(); ++k) b.emplace_back(names[k], std::to_string(t[k]));
  return b;
}

struct Family {
  const char* name;
  std::vector<std::string> index_names;
  std::function<bool(const std::vector<int>&)> admissible;
  // (lhs, rhs) at the tuple and scalars r, s.
  std::function<std::pair<AbsWord, AbsWord>(const std::vector<int>&, const Scalar&, const Scalar&)> sides;
};

std::vector<Family> steinberg_families(const Ring& ring, int rank) {
  auto X = [ring, rank](int i, int j, const Scalar& r) { return x(ring, rank, i, j, r); };
  auto one = [ring, rank] { return AbsWord(ring, rank); };
  std::vector<Family> out;
  out.push_back({"S0",
                 {"i", "j"},
                 [](const std::vector<int>& t) { return t[0] != t[1]; },
                 [=](const std::vector<int>& t, const Scalar& r, const Scalar&) {
                   int i = t[0], j = t[1];
                   return std::pair{X(i, j, r), X(-j, -i, -r * (eps(i) * eps(j)))};
                 }});
  out.push_back({"S1",
                 {"i", "j"},
                 [](const std::vector<int>& t) { return t[0] != t[1]; },
                 [=](const std::vector<int>& t, const Scalar& r, const Scalar& s) {
                   int i = t[0], j = t[1];
                   return std::pair{mul(X(i, j, r), X(i, j, s)), X(i, j, r + s)};
                 }});
  out.push_back({"S2",
                 {"i", "j", "h", "k"},
                 [](const std::vector<int>& t) {
                   int i = t[0], j = t[1], h = t[2], k = t[3];
                   return i != j && h != k && h != j && h != -i && k != i && k != -j;
                 },
                 [=](const std::vector<int>& t, const Scalar& r, const Scalar& s) {
                   return std::pair{comm(X(t[0], t[1], r), X(t[2], t[3], s)), one()};
                 }});
  out.push_back({"S3",
                 {"i", "j", "k"},
                 [](const std::vector<int>& t) {
                   int i = t[0], j = t[1], k = t[2];
                   return i != j && j != k && i != k && i != -j && i != -k && j != -k;
                 },
                 [=](const std::vector<int>& t, const Scalar& r, const Scalar& s) {
                   int i = t[0], j = t[1], k = t[2];
                   return std::pair{comm(X(i, j, r), X(j, k, s)), X(i, k, r * s)};
                 }});
  out.push_back({"S4",
                 {"i", "j"},
                 [](const std::vector<int>& t) { return t[1] != t[0] && t[1] != -t[0]; },
                 [=](const std::vector<int>& t, const Scalar& r, const Scalar& s) {
                   int i = t[0], j = t[1];
                   return std::pair{comm(X(i, -i, r), X(-i, j, s)),
                                    mul(X(i, j, r * s * eps(i)), X(-j, j, -r * s * s))};
                 }});
  out.push_back({"S5",
                 {"i", "j"},
                 [](const std::vector<int>& t) { return t[1] != t[0] && t[1] != -t[0]; },
                 [=](const std::vector<int>& t, const Scalar& r, const Scalar& s) {
                   int i = t[0], j = t[1];
                   return std::pair{comm(X(i, j, r), X(j, -i, s)), X(i, -i, r * s * 2 * eps(i))};
                 }});
  return out;
}

Record compare(const char* family, Binding b, const AbsWord& lhs, const AbsWord& rhs) {
  Record rec{"steinberg", family, std::move(b), Outcome::pass, Exactness::image_level, ""};
  if (eval_abs_word(lhs) != eval_abs_word(rhs)) {
    rec.result = Outcome::fail;
    rec.note = "images differ";
  }
  return rec;
}

// v orthogonal to u = phi(W) e_i: v = phi(W) x with x_{-i} = 0.
HVector orthogonal_to(Draw& d, const ElemColumn& u) {
  return apply_word(u.word(), d.vec({-u.base_index()}));
}

void p_families(const Ring& ring, int rank, const SuiteOptions& opt, Report& rep) {
  FormIdeal whole = FormIdeal::whole(ring);
  const std::size_t max_len = 4;
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    Draw d(whole, rank, Rng::stream(opt.seed, "steinberg/P1", t), opt.bound);
    ElemColumn u = d.elem_column(max_len);
    HVector v = orthogonal_to(d, u), w = orthogonal_to(d, u);
    Scalar a = d.r(), b = d.r();
    AbsWord lhs = mul(abs_x_word(u, v, a), abs_x_word(u, w, b));
    AbsWord rhs = abs_x_word(u, v + w, a + b + form(v, w));
    rep.add(compare("P1", {{"u", u.vector().to_string()}, {"v", v.to_string()}, {"w", w.to_string()},
                           {"a", a.to_string()}, {"b", b.to_string()}},
                    lhs, rhs));
  }
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    Draw d(whole, rank, Rng::stream(opt.seed, "steinberg/P2", t), opt.bound);
    AbsWord g = d.abs_word(d.rng().below(max_len + 1));
    int i = d.index();
    int j = d.index_not_in({-i});
    ElemColumn u(g, i), v(g, j);
    Scalar a = d.r();
    AbsWord lhs = abs_x_word(u, v.vector() * a, ring.zero());
    AbsWord rhs = abs_x_word(v, u.vector() * a, ring.zero());
    rep.add(compare("P2", {{"u", u.vector().to_string()}, {"v", v.vector().to_string()}, {"a", a.to_string()}},
                    lhs, rhs));
  }
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    Draw d(whole, rank, Rng::stream(opt.seed, "steinberg/P3", t), opt.bound);
    ElemColumn u1 = d.elem_column(max_len);
    HVector v1 = orthogonal_to(d, u1);
    Scalar b = d.r();
    ElemColumn u = d.elem_column(max_len);
    HVector v = orthogonal_to(d, u);
    Scalar a = d.r();
    AbsWord h = abs_x_word(u1, v1, b);
    EsdParams p(u1.vector(), v1, b);
    AbsWord lhs = conj(h, abs_x_word(u, v, a));
    AbsWord rhs = abs_x_word(u.acted(h), apply_esd(p, v), a);
    rep.add(compare("P3", {{"u'", u1.vector().to_string()}, {"v'", v1.to_string()}, {"b", b.to_string()},
                           {"u", u.vector().to_string()}, {"v", v.to_string()}, {"a", a.to_string()}},
                    lhs, rhs));
  }
}

}  // namespace

Report verify_steinberg_relations(const Ring& ring, int rank, const SuiteOptions& options) {
  Report rep;
  FormIdeal whole = FormIdeal::whole(ring);
  for (const auto& fam : steinberg_families(ring, rank)) {
    const int arity = static_cast<int>(fam.index_names.size());
    Rng shuffle = Rng::stream(options.seed, std::string("steinberg/tuples/") + fam.name, 0);
    TupleCycler cycler(enumerate_tuples(rank, arity, fam.admissible), shuffle);
    for (std::uint64_t t = 0; t < options.trials; ++t) {
      Draw d(whole, rank, Rng::stream(options.seed, std::string("steinberg/") + fam.name, t), options.bound);
      const auto& tuple = cycler.next();
      Scalar r = d.r(), s = d.r();
      auto [lhs, rhs] = fam.sides(tuple, r, s);
      Binding b = idx_binding(fam.index_names, tuple);
      b.emplace_back("r", r.to_string());
      b.emplace_back("s", s.to_string());
      rep.add(compare(fam.name, std::move(b), lhs, rhs));
    }
  }
  p_families(ring, rank, options, rep);
  return rep;
}

Report verify_steinberg_exhaustive(const Ring& ring, int rank) {
  if (!ring.is_finite()) throw ConfigError("exhaustive Steinberg sweep needs a finite ring");
  // One fixed tuple per family, mixing signs.
  const std::vector<std::vector<int>> fixed = {{1, -2}, {-1, 2}, {1, 2, 3, -1}, {1, -2, 3}, {-1, 2}, {2, -1}};
  Report rep;
  const auto fams = steinberg_families(ring, rank);
  const auto elems = ring.elements();
  for (std::size_t f = 0; f < fams.size(); ++f) {
    const auto& fam = fams[f];
    if (!fam.admissible(fixed[f])) throw std::logic_error("fixed tuple violates the relation's side conditions");
    for (const auto& r : elems) {
      for (const auto& s : elems) {
        auto [lhs, rhs] = fam.sides(fixed[f], r, s);
        Binding b = idx_binding(fam.index_names, fixed[f]);
        b.emplace_back("r", r.to_string());
        b.emplace_back("s", s.to_string());
        rep.add(compare(fam.name, std::move(b), lhs, rhs));
      }
    }
  }
  return rep;
}

}  // namespace stsp

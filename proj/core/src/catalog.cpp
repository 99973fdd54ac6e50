#include "stsp/catalog.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "stsp/error.hpp"
#include "stsp/generators.hpp"
#include "stsp/sampling.hpp"
#include "stsp/unipotent.hpp"

namespace stsp {

namespace {

struct Sides {
  RelWord lhs;
  RelWord rhs;
  std::optional<SpMatrix> rhs_image;  // set when the right side is a matrix
};

// Draw helpers that log every drawn value into the binding.
class Ctx {
 public:
  Ctx(const FormIdeal& f, int rank, Draw& d, Binding& b, int variant)
      : form(f), l(rank), draw(d), binding(b), variant(variant) {}

  const FormIdeal& form;
  int l;
  Draw& draw;
  Binding& binding;
  int variant;

  const Ring& ring() const { return form.ring(); }
  Scalar zero() const { return ring().zero(); }
  HVector e(int i) const { return HVector::basis(ring(), l, i); }
  HVector null() const { return HVector(ring(), l); }

  int idx(const char* name, const std::vector<int>& excluded = {}) {
    int i = excluded.empty() ? draw.index() : draw.index_not_in(excluded);
    binding.emplace_back(name, std::to_string(i));
    return i;
  }
  Scalar r(const char* name) { return log(name, draw.r()); }
  Scalar ideal(const char* name) { return log(name, draw.ideal()); }
  Scalar gamma(const char* name) { return log(name, draw.gamma()); }
  /// a with a - <v_-,v_+> in Gamma.
  Scalar shifted(const char* name, const HVector& v) { return log(name, draw.gamma() + split_form(v)); }
  HVector vec(const std::vector<int>& zeros = {}) { return draw.vec(zeros); }
  HVector ivec(const std::vector<int>& zeros = {}) { return draw.ideal_vec(zeros); }
  HVector ortho(HVector x, const std::vector<HVector>& cs, const std::vector<int>& zeros, bool in_ideal) {
    draw.orthogonalize(x, cs, zeros, in_ideal);
    return x;
  }
  AbsWord word(const char* name, AbsWord w) {
    binding.emplace_back(name, w.to_string());
    return w;
  }
  std::size_t length() { return 1 + draw.rng().below(4); }
  ElemColumn column(const char* name) {
    ElemColumn c = draw.elem_column(4);
    binding.emplace_back(std::string(name) + ".word", c.word().to_string());
    binding.emplace_back(std::string(name) + ".i", std::to_string(c.base_index()));
    return c;
  }
  Scalar log(const char* name, Scalar s) {
    binding.emplace_back(name, s.to_string());
    return s;
  }
  HVector log(const char* name, HVector v) {
    binding.emplace_back(name, v.to_string());
    return v;
  }

  // Constructions.
  RelWord Ye(int i, const HVector& v, const Scalar& a) const { return y_word(i, v, a, form); }
  RelWord Yc(int i, const HVector& u, const HVector& v, const Scalar& a) const {
    return y_commutator_word(i, u, v, a, form);
  }
  RelWord Yx(int i, const HVector& u, const HVector& v, const Scalar& a) const {
    return y_extended_word(i, u, v, a, form);
  }
  RelWord Y(const HVector& u, const HVector& v, const Scalar& a) const { return y_any_word(u, v, a, form); }
  RelWord Z(const HVector& u, const Scalar& a) const { return z_long_word(u, a, form); }
  RelWord Zi(int i, const HVector& u, const Scalar& a) const { return z_pivot_word(i, u, null(), a, form); }
  RelWord Zs(const HVector& u, const HVector& v, const Scalar& a) const { return z_short_word(u, v, a, form); }
  RelWord Zf(const HVector& u, const HVector& v, const Scalar& a, const Scalar& b) const {
    return z_full_word(u, v, a, b, form);
  }
  AbsWord X(int i, int j, const Scalar& r) const { return AbsWord::letter(ring(), l, i, j, r); }
};

RelWord operator*(const RelWord& a, const RelWord& b) { return mul(a, b); }

std::vector<int> pm(std::initializer_list<int> idx) { return pairs_of(idx); }

struct Entry {
  CatalogEntryInfo info;
  std::function<Sides(Ctx&)> build;
  // Candidate signs for the ambiguous entries; empty otherwise.
  std::vector<std::string> variants;
};

std::vector<Entry> make_entries() {
  std::vector<Entry> out;
  auto add = [&out](const char* id, bool maximal_only, const char* statement, std::function<Sides(Ctx&)> f,
                    std::vector<std::string> variants = {}) {
    out.push_back({{id, maximal_only, statement}, std::move(f), std::move(variants)});
  };

  add("switch", false, "Y(e_i, e_j a, 0) = Y(e_j, e_i a, 0), j != -i", [](Ctx& c) {
    int i = c.idx("i"), j = c.idx("j", {-i});
    Scalar a = c.ideal("a");
    return Sides{c.Ye(i, c.e(j) * a, c.zero()), c.Ye(j, c.e(i) * a, c.zero()), {}};
  });

  add("y-add", false, "Y(e_i,v,a) Y(e_i,w,b) = Y(e_i, v+w, a+b+<v,w>)", [](Ctx& c) {
    int i = c.idx("i");
    HVector v = c.log("v", c.ivec({-i})), w = c.log("w", c.ivec({-i}));
    Scalar a = c.shifted("a", v), b = c.shifted("b", w);
    return Sides{c.Ye(i, v, a) * c.Ye(i, w, b), c.Ye(i, v + w, a + b + form(v, w)), {}};
  });

  add("y-conj-parabolic", false, "^g Y(e_i,v,a) = Y(e_i, phi(g)v, a), g in P_i", [](Ctx& c) {
    int i = c.idx("i");
    AbsWord g = c.word("g", c.draw.parabolic_word(i, c.length()));
    HVector v = c.log("v", c.ivec({-i}));
    Scalar a = c.shifted("a", v);
    return Sides{act(g, c.Ye(i, v, a)), c.Ye(i, apply_word(g, v), a), {}};
  });

  add("z-decomp-for-y", false,
      "[Y(e_k, e_j b, 0), X(e_{-k}, v, a)>> = Y(e_j, v b eps(k), a b^2) Y(e_{-k}, -e_j a b eps(-k), 0)",
      [](Ctx& c) {
        int j = c.idx("j"), k = c.idx("k", {j, -j});
        HVector v = c.log("v", c.vec({-j, k, -k}));
        Scalar a = c.r("a"), b = c.ideal("b");
        RelWord lhs = rbox(c.Ye(k, c.e(j) * b, c.zero()), abs_esd_word(-k, v, a));
        RelWord rhs = c.Ye(j, v * (b * eps(k)), a * b * b) * c.Ye(-k, c.e(j) * (-a * b * eps(-k)), c.zero());
        return Sides{lhs, rhs, {}};
      });

  add("ppc", false,
      "[[X(e_k, e_j r, 0), Y(e_{-k}, v, a)] = Y(e_j, v r eps(k), a r^2) Y(e_{-k}, e_j a r eps(k), 0)",
      [](Ctx& c) {
        int j = c.idx("j"), k = c.idx("k", {j, -j});
        HVector v = c.log("v", c.ivec({-j, k, -k}));
        Scalar r = c.r("r"), a = c.shifted("a", v);
        const int sigma = c.variant == 0 ? eps(k) : eps(-k);
        RelWord lhs = lbox(abs_esd_word(k, c.e(j) * r, c.zero()), c.Ye(-k, v, a));
        RelWord rhs = c.Ye(j, v * (r * eps(k)), a * r * r) * c.Ye(-k, c.e(j) * (a * r * sigma), c.zero());
        return Sides{lhs, rhs, {}};
      },
      {"eps(k)", "eps(-k)"});

  add("ppc-corollary", false,
      "Y(e_j, v r, a r^2) = [[X(e_k, e_j r, 0), Y(e_{-k}, v eps(k), a)] Y(e_{-k}, e_j a r eps(-k), 0)",
      [](Ctx& c) {
        int j = c.idx("j"), k = c.idx("k", {j, -j});
        HVector v = c.log("v", c.ivec({-j, k, -k}));
        Scalar r = c.r("r"), a = c.shifted("a", v);
        RelWord rhs = lbox(abs_esd_word(k, c.e(j) * r, c.zero()), c.Ye(-k, v * c.ring()(eps(k)), a)) *
                      c.Ye(-k, c.e(j) * (a * r * eps(-k)), c.zero());
        return Sides{c.Ye(j, v * r, a * r * r), rhs, {}};
      });

  add("remark-y-basis", false, "Y_(i)(e_j, v, a) = Y(e_j, v, a), v_{-j} = v_{+-i} = 0", [](Ctx& c) {
    int i = c.idx("i"), j = c.idx("j", {i, -i});
    HVector v = c.log("v", c.ivec({-j, i, -i}));
    Scalar a = c.shifted("a", v);
    return Sides{c.Yc(i, c.e(j), v, a), c.Ye(j, v, a), {}};
  });

  add("y-short-basis", false, "Y_(i)(v, e_j b, 0) = Y(e_j, v b, 0), v_{-j} = v_{+-i} = 0", [](Ctx& c) {
    int i = c.idx("i"), j = c.idx("j", {i, -i});
    HVector v = c.log("v", c.vec({-j, i, -i}));
    Scalar b = c.ideal("b");
    return Sides{c.Yc(i, v, c.e(j) * b, c.zero()), c.Ye(j, v * b, c.zero()), {}};
  });

  add("z-correctness", false, "Y_(i)(u, v r, a r^2) = Y_(j)(u r, v, a)", [](Ctx& c) {
    int i = c.idx("i"), j = c.idx("j", {i, -i});
    const auto zs = pm({i, j});
    HVector u = c.log("u", c.vec(zs));
    HVector v = c.log("v", c.ortho(c.ivec(zs), {u}, zs, true));
    Scalar r = c.r("r"), a = c.shifted("a", v);
    return Sides{c.Yc(i, u, v * r, a * r * r), c.Yc(j, u * r, v, a), {}};
  });

  add("levi-conj", false, "g Y_(i)(u,v,a) g^-1 = Y_(i)(phi(g)u, phi(g)v, a), g in L_i", [](Ctx& c) {
    int i = c.idx("i");
    AbsWord g = c.word("g", c.draw.levi_word(i, c.length()));
    HVector u = c.log("u", c.vec(pm({i})));
    HVector v = c.log("v", c.ortho(c.ivec(pm({i})), {u}, pm({i}), true));
    Scalar a = c.shifted("a", v);
    return Sides{act(g, c.Yc(i, u, v, a)), c.Yc(i, apply_word(g, u), apply_word(g, v), a), {}};
  });

  add("z-additivity", false,
      "Y_(i)(u,v,a) Y_(i)(u, e_j b, 0) = Y_(i)(u, v + e_j b, a + v_{-j} b eps(-j))",
      [](Ctx& c) {
        int i = c.idx("i"), j = c.idx("j", {i, -i});
        HVector u = c.log("u", c.vec(pm({i, j})));
        HVector v = c.log("v", c.ortho(c.ivec(pm({i})), {u}, pm({i}), true));
        Scalar b = c.ideal("b"), a = c.shifted("a", v);
        const int sigma = c.variant == 0 ? eps(-j) : eps(j);
        return Sides{c.Yc(i, u, v, a) * c.Yc(i, u, c.e(j) * b, c.zero()),
                     c.Yc(i, u, v + c.e(j) * b, a + v[-j] * b * sigma), {}};
      },
      {"eps(-j)", "eps(j)"});

  add("w-conjugation", false, "g Y_(i)(u,v,a) g^-1 = Y_(i)(phi(g)u, phi(g)v, a), extended, g in L_i", [](Ctx& c) {
    int i = c.idx("i");
    AbsWord g = c.word("g", c.draw.levi_word(i, c.length()));
    HVector u = c.log("u", c.vec(pm({i})));
    HVector v = c.log("v", c.ortho(c.ivec(), {u}, {}, true));
    Scalar a = c.shifted("a", v);
    return Sides{act(g, c.Yx(i, u, v, a)), c.Yx(i, apply_word(g, u), apply_word(g, v), a), {}};
  });

  add("w-correctness", false, "Y_(i)(u,v,a) = Y_(j)(u,v,a), extended", [](Ctx& c) {
    int i = c.idx("i"), j = c.idx("j", {i, -i});
    HVector u = c.log("u", c.vec(pm({i, j})));
    HVector v = c.log("v", c.ortho(c.ivec(), {u}, {}, true));
    Scalar a = c.shifted("a", v);
    return Sides{c.Yx(i, u, v, a), c.Yx(j, u, v, a), {}};
  });

  add("long-add", false, "Y(u, v, a+b) = Y(u, v, a) Y(u, 0, b), b in Gamma", [](Ctx& c) {
    int i = c.idx("i"), j = c.idx("j", {i, -i});
    HVector u = c.log("u", c.vec(pm({i, j})));
    HVector v = c.log("v", c.ortho(c.ivec(pm({i})), {u}, pm({i}), true));
    Scalar a = c.shifted("a", v), b = c.gamma("b");
    return Sides{c.Y(u, v, a + b), c.Y(u, v, a) * c.Y(u, c.null(), b), {}};
  });

  add("w=zz", false, "Y(u,v,a) = Y(u, v - e_i v_i - e_{-i} v_{-i}, a) Y(u, e_i v_i + e_{-i} v_{-i}, 0)",
      [](Ctx& c) {
        int i = c.idx("i"), j = c.idx("j", {i, -i});
        HVector u = c.log("u", c.vec(pm({i, j})));
        HVector v0 = c.ivec();
        v0.set(-i, c.draw.gamma());  // v_i v_{-i} in Gamma
        HVector v = c.log("v", c.ortho(v0, {u}, pm({i}), true));
        Scalar a = c.shifted("a", v);
        const HVector p = v.pair_part(i);
        return Sides{c.Y(u, v, a), c.Y(u, v - p, a) * c.Y(u, p, c.zero()), {}};
      });

  add("short-is-three-long", false, "Y_(i)(u+v, w, a) = Y(u,w,a) Y(v,w,a) Y(v, u a, 0)", [](Ctx& c) {
    int i = c.idx("i"), j = c.idx("j", {i, -i}), k = c.idx("k", {i, -i});
    HVector u = c.log("u", c.vec(pm({i, j})));
    HVector v = c.log("v", c.ortho(c.vec(pm({i, k})), {u}, pm({i, k}), false));
    HVector w = c.log("w", c.ortho(c.ivec(pm({i})), {u, v}, pm({i}), true));
    Scalar a = c.shifted("a", w);
    return Sides{c.Yc(i, u + v, w, a), c.Y(u, w, a) * c.Y(v, w, a) * c.Y(v, u * a, c.zero()), {}};
  });

  add("z-pivot-law", false, "phi(Z_(i)(u, w, a)) = T(u, w, a)", [](Ctx& c) {
    int i = c.idx("i");
    HVector u = c.log("u", c.vec());
    HVector w = c.log("w", c.ortho(c.ivec(pm({i})), {u}, pm({i}), true));
    Scalar a = c.shifted("a", w);
    return Sides{z_pivot_word(i, u, w, a, c.form), RelWord(c.ring(), c.l), esd_matrix(u, w, a)};
  });

  // Gamma = I from here on.

  add("short-symmetry", true, "Y(u, v a, 0) = Y(v, u a, 0)", [](Ctx& c) {
    int i = c.idx("i"), j = c.idx("j", {i, -i}), k = c.idx("k", {i, -i});
    HVector u = c.log("u", c.vec(pm({i, j})));
    HVector v = c.log("v", c.ortho(c.vec(pm({i, k})), {u}, pm({i, k}), false));
    Scalar a = c.ideal("a");
    return Sides{c.Y(u, v * a, c.zero()), c.Y(v, u * a, c.zero()), {}};
  });

  add("correctness", true, "Z_(i)(u,0,a) = Z_(j)(u,0,a)", [](Ctx& c) {
    int i = c.idx("i"), j = c.idx("j", {i, -i});
    HVector u = c.log("u", c.vec());
    Scalar a = c.ideal("a");
    return Sides{c.Zi(i, u, a), c.Zi(j, u, a), {}};
  });

  add("conj-by-long", true, "^{X_{i,-i}(b)} Z(u,0,a) = Z(T_{i,-i}(b)u, 0, a)", [](Ctx& c) {
    int i = c.idx("i");
    HVector u = c.log("u", c.vec());
    Scalar a = c.ideal("a"), b = c.r("b");
    AbsWord g = c.X(i, -i, b);
    return Sides{act(g, c.Z(u, a)), c.Z(apply_word(g, u), a), {}};
  });

  add("lm0", true, "Y(u,v,0) Y(u,w,0) = Y(u, v+w, 0)", [](Ctx& c) {
    int i = c.idx("i"), j = c.idx("j", {i, -i});
    HVector u = c.log("u", c.vec(pm({i, j})));
    HVector v = c.log("v", c.ortho(c.ivec(pm({j})), {u}, pm({j}), true));
    HVector w = c.log("w", c.ortho(c.ivec(pm({j})), {u, v}, pm({j}), true));
    return Sides{c.Y(u, v, c.zero()) * c.Y(u, w, c.zero()), c.Y(u, v + w, c.zero()), {}};
  });

  add("w-symmetry", true, "Y(v'', v, 0) Y(v', v, 0) = Y_(i)(w, v, 0), w = v' + v''", [](Ctx& c) {
    int i = c.idx("i"), j = c.idx("j", {i, -i});
    c.idx("k", pm({i, j}));
    HVector v = c.null(), v1 = c.null();
    v.set(i, c.draw.ideal());
    v.set(-i, c.draw.ideal());
    v1.set(j, c.draw.r());
    v1.set(-j, c.draw.r());
    c.log("v", v);
    c.log("v'", v1);
    HVector v2 = c.log("v''", c.vec(pm({i, j})));
    return Sides{c.Y(v2, v, c.zero()) * c.Y(v1, v, c.zero()), c.Yx(i, v1 + v2, v, c.zero()), {}};
  });

  add("conj-by-short", true, "^{X_jk(b)} Z(u,0,a) = Z(T_jk(b)u, 0, a)", [](Ctx& c) {
    int j = c.idx("j"), k = c.idx("k", {j, -j});
    HVector u = c.log("u", c.vec());
    Scalar a = c.ideal("a"), b = c.r("b");
    AbsWord g = c.X(j, k, b);
    return Sides{act(g, c.Z(u, a)), c.Z(apply_word(g, u), a), {}};
  });

  add("long-additivity", true, "Z(u,0,a) Z(u,0,b) = Z(u,0,a+b)", [](Ctx& c) {
    HVector u = c.log("u", c.vec());
    Scalar a = c.ideal("a"), b = c.ideal("b");
    return Sides{c.Z(u, a) * c.Z(u, b), c.Z(u, a + b), {}};
  });

  add("long-scalar", true, "Y(u b, 0, a) = Y(u, 0, a b^2)", [](Ctx& c) {
    int i = c.idx("i"), j = c.idx("j", {i, -i});
    HVector u = c.log("u", c.vec(pm({i, j})));
    Scalar a = c.ideal("a"), b = c.r("b");
    return Sides{c.Y(u * b, c.null(), a), c.Y(u, c.null(), a * b * b), {}};
  });

  add("x-long-scalar", true, "Z(u b, 0, a) = Z(u, 0, a b^2)", [](Ctx& c) {
    HVector u = c.log("u", c.vec());
    Scalar a = c.ideal("a"), b = c.r("b");
    return Sides{c.Z(u * b, a), c.Z(u, a * b * b), {}};
  });

  add("short-obvious(a)", true, "Z(v,u,a,0) = Z(u,v,a,0)", [](Ctx& c) {
    HVector u = c.log("u", c.vec());
    HVector v = c.log("v", c.ortho(c.vec(), {u}, {}, false));
    Scalar a = c.ideal("a");
    return Sides{c.Zs(v, u, a), c.Zs(u, v, a), {}};
  });

  add("short-obvious(b)", true, "^g Z(u,v,a,0) = Z(phi(g)u, phi(g)v, a, 0)", [](Ctx& c) {
    AbsWord g = c.word("g", c.draw.abs_word(c.length()));
    HVector u = c.log("u", c.vec());
    HVector v = c.log("v", c.ortho(c.vec(), {u}, {}, false));
    Scalar a = c.ideal("a");
    return Sides{act(g, c.Zs(u, v, a)), c.Zs(apply_word(g, u), apply_word(g, v), a), {}};
  });

  add("short-obvious(c)", true, "Z(u, u b, a, 0) = Z(u, 0, 2ab)", [](Ctx& c) {
    HVector u = c.log("u", c.vec());
    Scalar a = c.ideal("a"), b = c.r("b");
    return Sides{c.Zs(u, u * b, a), c.Z(u, a * b * 2), {}};
  });

  add("new", true, "Z(u+w, 0, a) = Z(u,0,a) Z(w,0,a) Y(w, u a, 0)", [](Ctx& c) {
    int i = c.idx("i"), j = c.idx("j", {i, -i});
    HVector w = c.log("w", c.vec(pm({i, j})));
    HVector u = c.log("u", c.ortho(c.vec(), {w}, {}, false));
    Scalar a = c.ideal("a");
    return Sides{c.Z(u + w, a), c.Z(u, a) * c.Z(w, a) * c.Y(w, u * a, c.zero()), {}};
  });

  add("x=y", true, "Z(e_i, v, a, 0) = Y(e_i, v a, 0)", [](Ctx& c) {
    int i = c.idx("i");
    HVector v = c.log("v", c.vec({-i}));
    Scalar a = c.ideal("a");
    return Sides{c.Zs(c.e(i), v, a), c.Ye(i, v * a, c.zero()), {}};
  });

  add("x=y-corollary", true, "Z(u,v,a,0) = Z(u,w,b,0) when v a = w b", [](Ctx& c) {
    ElemColumn u = c.column("u");
    HVector x = c.log("x", c.ortho(c.vec(), {u.vector()}, {}, false));
    Scalar s = c.ideal("c"), r1 = c.r("r1"), r2 = c.r("r2");
    return Sides{c.Zs(u.vector(), x * r1, s * r2), c.Zs(u.vector(), x * r2, s * r1), {}};
  });

  add("x-long-is-three-short", true, "Z(u + v r, 0, a) = Z(u,0,a) Z(v,0,a r^2) Z(v,u,a r,0)", [](Ctx& c) {
    ElemColumn v = c.column("v");
    HVector u = c.log("u", c.ortho(c.vec(), {v.vector()}, {}, false));
    Scalar a = c.ideal("a"), r = c.r("r");
    const HVector& vv = v.vector();
    return Sides{c.Z(u + vv * r, a), c.Z(u, a) * c.Z(vv, a * r * r) * c.Zs(vv, u, a * r), {}};
  });

  add("short-additivity(a)", true, "Z(u,v,a,0) Z(u,w,a,0) = Z(u, v+w, a, 0) Z(u, 0, a^2 <v,w>)", [](Ctx& c) {
    ElemColumn col = c.column("u");
    const HVector& u = col.vector();
    HVector v = c.log("v", c.ortho(c.vec(), {u}, {}, false));
    HVector w = c.log("w", c.ortho(c.vec(), {u}, {}, false));
    Scalar a = c.ideal("a");
    return Sides{c.Zs(u, v, a) * c.Zs(u, w, a), c.Zs(u, v + w, a) * c.Z(u, a * a * form(v, w)), {}};
  });

  add("short-additivity(b)", true, "Z(u,v,a,0) Z(u,v,b,0) = Z(u, v, a+b, 0)", [](Ctx& c) {
    ElemColumn col = c.column("u");
    const HVector& u = col.vector();
    HVector v = c.log("v", c.ortho(c.vec(), {u}, {}, false));
    Scalar a = c.ideal("a"), b = c.ideal("b");
    return Sides{c.Zs(u, v, a) * c.Zs(u, v, b), c.Zs(u, v, a + b), {}};
  });

  add("p-relations(a)", true, "Z(u, v r, a, b) = Z(u, v, a r, b)", [](Ctx& c) {
    ElemColumn col = c.column("u");
    const HVector& u = col.vector();
    HVector v = c.log("v", c.ortho(c.vec(), {u}, {}, false));
    Scalar r = c.r("r"), a = c.ideal("a"), b = c.ideal("b");
    return Sides{c.Zf(u, v * r, a, b), c.Zf(u, v, a * r, b), {}};
  });

  add("p-relations(b)", true, "Z(u,v,a,b) Z(u,w,a,c) = Z(u, v+w, a, b+c+a^2<v,w>)", [](Ctx& c) {
    ElemColumn col = c.column("u");
    const HVector& u = col.vector();
    HVector v = c.log("v", c.ortho(c.vec(), {u}, {}, false));
    HVector w = c.log("w", c.ortho(c.vec(), {u}, {}, false));
    Scalar a = c.ideal("a"), b = c.ideal("b"), s = c.ideal("c");
    return Sides{c.Zf(u, v, a, b) * c.Zf(u, w, a, s), c.Zf(u, v + w, a, b + s + a * a * form(v, w)), {}};
  });

  add("p-relations(c)", true, "Z(u,v,a,0) Z(u,v,b,0) = Z(u,v,a+b,0)", [](Ctx& c) {
    ElemColumn col = c.column("u");
    const HVector& u = col.vector();
    HVector v = c.log("v", c.ortho(c.vec(), {u}, {}, false));
    Scalar a = c.ideal("a"), b = c.ideal("b");
    return Sides{c.Zf(u, v, a, c.zero()) * c.Zf(u, v, b, c.zero()), c.Zf(u, v, a + b, c.zero()), {}};
  });

  add("p-relations(d)", true, "Z(u,v,a,0) = Z(v,u,a,0)", [](Ctx& c) {
    ElemColumn col = c.column("u");
    const HVector& u = col.vector();
    HVector v = c.log("v", c.ortho(c.vec(), {u}, {}, false));
    Scalar a = c.ideal("a");
    return Sides{c.Zf(u, v, a, c.zero()), c.Zf(v, u, a, c.zero()), {}};
  });

  add("p-relations(e)", true, "Z(u',v',a',b') Z(u,v,a,b) Z(u',v',a',b')^-1 = Z(Tu, Tv, a, b), T = T(u', v'a', b')",
      [](Ctx& c) {
        ElemColumn col1 = c.column("u'");
        const HVector& u1 = col1.vector();
        HVector v1 = c.log("v'", c.ortho(c.vec(), {u1}, {}, false));
        Scalar a1 = c.ideal("a'"), b1 = c.ideal("b'");
        ElemColumn col = c.column("u");
        const HVector& u = col.vector();
        HVector v = c.log("v", c.ortho(c.vec(), {u}, {}, false));
        Scalar a = c.ideal("a"), b = c.ideal("b");
        const EsdParams t(u1, v1 * a1, b1);
        RelWord z1 = c.Zf(u1, v1, a1, b1);
        return Sides{z1 * c.Zf(u, v, a, b) * inv(z1), c.Zf(apply_esd(t, u), apply_esd(t, v), a, b), {}};
      });

  add("p-relations(f)", true, "Z(u,u,a,0) = Z(u,0,0,2a)", [](Ctx& c) {
    ElemColumn col = c.column("u");
    const HVector& u = col.vector();
    Scalar a = c.ideal("a");
    return Sides{c.Zf(u, u, a, c.zero()), c.Zf(u, c.null(), c.zero(), a * 2), {}};
  });

  add("p-relations(g)", true, "Z(v + u r, 0, 0, a) = Z(v,0,0,a) Z(u,0,0,a r^2) Z(u,v,a r,0)", [](Ctx& c) {
    ElemColumn col = c.column("u");
    const HVector& u = col.vector();
    HVector v = c.log("v", c.ortho(c.vec(), {u}, {}, false));
    Scalar a = c.ideal("a"), r = c.r("r");
    const HVector o = c.null();
    const Scalar z = c.zero();
    return Sides{c.Zf(v + u * r, o, z, a),
                 c.Zf(v, o, z, a) * c.Zf(u, o, z, a * r * r) * c.Zf(u, v, a * r, z), {}};
  });

  return out;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = make_entries();
  return all;
}

// The index p such that both sides are words in U_p with trivial prefixes,
// ignoring atoms with zero parameter; 0 if there is none.
int single_radical(const RelWord& lhs, const RelWord& rhs) {
  std::vector<const RelAtom*> atoms;
  for (const RelWord* w : {&lhs, &rhs})
    for (const auto& at : w->atoms()) {
      if (at.x.a.is_zero()) continue;
      if (!at.g.empty()) return 0;
      atoms.push_back(&at);
    }
  for (int p : indices(lhs.rank())) {
    bool all = std::all_of(atoms.begin(), atoms.end(), [p](const RelAtom* at) { return at->x.i == p || at->x.j == -p; });
    if (all) return p;
  }
  return 0;
}

// Drops zero-parameter atoms, which are trivial by KL1.
RelWord nontrivial_atoms(const RelWord& w) {
  RelWord out(w.ring(), w.rank());
  for (const auto& at : w.atoms())
    if (!at.x.a.is_zero()) out.push(at);
  return out;
}

bool sides_agree(const Sides& s) {
  const SpMatrix l = eval_rel_word(s.lhs);
  return s.rhs_image ? l == *s.rhs_image : l == eval_rel_word(s.rhs);
}

}  // namespace

const std::vector<CatalogEntryInfo>& identity_catalog() {
  static const std::vector<CatalogEntryInfo> infos = [] {
    std::vector<CatalogEntryInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

Report verify_identity_catalog(const FormIdeal& form, int rank, const SuiteOptions& options,
                               const std::vector<std::string>& filter) {
  for (const auto& id : filter) {
    bool known = std::any_of(entries().begin(), entries().end(), [&](const Entry& e) { return e.info.id == id; });
    if (!known) throw ConfigError("unknown catalog entry '" + id + "'");
  }
  Report rep;
  for (const auto& entry : entries()) {
    const std::string& id = entry.info.id;
    if (!filter.empty() && std::find(filter.begin(), filter.end(), id) == filter.end()) continue;
    if (entry.info.maximal_only && !form.gamma_is_maximal()) {
      rep.add({"catalog", id, {}, Outcome::skip, Exactness::image_level, "requires Gamma = I"});
      continue;
    }
    std::uint64_t holds[2] = {0, 0};
    for (std::uint64_t t = 0; t < options.trials; ++t) {
      auto build = [&](int variant, Binding& b) {
        Draw d(form, rank, Rng::stream(options.seed, "catalog/" + id, t), options.bound);
        Ctx ctx(form, rank, d, b, variant);
        return entry.build(ctx);
      };
      Binding binding;
      Record rec{"catalog", id, {}, Outcome::pass, Exactness::image_level, ""};
      try {
        Sides s = build(0, binding);
        if (!parameters_admissible(s.lhs, form) || !parameters_admissible(s.rhs, form)) {
          rec.result = Outcome::fail;
          rec.note = "parameter outside (I, Gamma)";
        } else if (!sides_agree(s)) {
          rec.result = Outcome::fail;
          rec.note = "images differ";
        } else {
          ++holds[0];
          const int p = s.rhs_image ? 0 : single_radical(s.lhs, s.rhs);
          if (p != 0) {
            if (unipotent_normal_form(p, nontrivial_atoms(s.lhs), form) ==
                unipotent_normal_form(p, nontrivial_atoms(s.rhs), form)) {
              rec.exactness = Exactness::exact;
            } else {
              rec.result = Outcome::fail;
              rec.note = "normal forms in U_" + std::to_string(p) + " differ";
            }
          }
        }
        if (!entry.variants.empty()) {
          Binding scratch;
          if (sides_agree(build(1, scratch))) ++holds[1];
        }
      } catch (const PreconditionError& e) {
        rec.result = Outcome::fail;
        rec.note = std::string("binding rejected: ") + e.what();
      }
      rec.binding = std::move(binding);
      rep.add(std::move(rec));
    }
    if (!entry.variants.empty()) {
      const std::string n = std::to_string(options.trials);
      Record rec{"catalog", id + "/sign", {{"stated", entry.variants[0]}, {"alternative", entry.variants[1]}},
                 Outcome::pass, Exactness::image_level, ""};
      rec.note = "sign-resolution: " + entry.variants[0] + " holds on " + std::to_string(holds[0]) + "/" + n +
                 ", " + entry.variants[1] + " holds on " + std::to_string(holds[1]) + "/" + n;
      if (holds[0] != options.trials) rec.result = Outcome::fail;
      if (holds[1] == options.trials) rec.note += " (indistinguishable over this ring)";
      rep.add(std::move(rec));
    }
  }
  return rep;
}

}  // namespace stsp

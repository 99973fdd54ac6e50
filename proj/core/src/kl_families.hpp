#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "stsp/index.hpp"
#include "stsp/report.hpp"
#include "stsp/sampling.hpp"

namespace stsp::detail {

// KL0-KL7 written once against an abstract relative group. `Ops` supplies
//   Word gen(i, j, a), Word one(), Word mul(Word, Word), Word inv(Word),
//   Word act(AbsWord, Word)
// and the absolute letters come from AbsWord::letter.
template <class Word>
struct KlFamily {
  const char* name;
  std::vector<std::string> index_names;
  std::function<bool(const std::vector<int>&)> admissible;
  // Draws the parameters, records them in the binding, returns both sides.
  std::function<std::pair<Word, Word>(const std::vector<int>&, Draw&, Binding&)> sides;
};

inline bool distinct_pair(const std::vector<int>& t) { return t[0] != t[1]; }
inline bool short_pair(const std::vector<int>& t) { return t[1] != t[0] && t[1] != -t[0]; }

template <class Ops>
auto kl_families(const Ops& ops, const Ring& ring, int rank) {
  using Word = decltype(ops.one());
  auto Y = [ops](int i, int j, const Scalar& a) { return ops.gen(i, j, a); };
  auto X = [ring, rank](int i, int j, const Scalar& r) { return AbsWord::letter(ring, rank, i, j, r); };
  auto lbox = [ops](const AbsWord& g, const Word& h) { return ops.mul(ops.act(g, h), ops.inv(h)); };
  auto rbox = [ops](const Word& h, const AbsWord& g) { return ops.mul(h, ops.act(g, ops.inv(h))); };
  auto mul = [ops](const Word& a, const Word& b) { return ops.mul(a, b); };
  auto param = [](Draw& d, int i, int j) { return j == -i ? d.gamma() : d.ideal(); };
  auto put = [](Binding& b, const char* k, const Scalar& s) { b.emplace_back(k, s.to_string()); };
  const Word one = ops.one();
  std::vector<KlFamily<Word>> out;
  out.push_back({"KL0", {"i", "j"}, distinct_pair, [=](const std::vector<int>& t, Draw& d, Binding& b) {
                   int i = t[0], j = t[1];
                   Scalar a = param(d, i, j);
                   put(b, "a", a);
                   return std::pair{Y(i, j, a), Y(-j, -i, -a * (eps(i) * eps(j)))};
                 }});
  out.push_back({"KL1", {"i", "j"}, distinct_pair, [=](const std::vector<int>& t, Draw& d, Binding& b) {
                   int i = t[0], j = t[1];
                   Scalar a = param(d, i, j), c = param(d, i, j);
                   put(b, "a", a);
                   put(b, "b", c);
                   return std::pair{mul(Y(i, j, a), Y(i, j, c)), Y(i, j, a + c)};
                 }});
  out.push_back({"KL2",
                 {"i", "j", "h", "k"},
                 [](const std::vector<int>& t) {
                   int i = t[0], j = t[1], h = t[2], k = t[3];
                   return i != j && h != k && h != j && h != -i && k != i && k != -j;
                 },
                 [=](const std::vector<int>& t, Draw& d, Binding& b) {
                   Scalar r = d.r(), a = param(d, t[2], t[3]);
                   put(b, "r", r);
                   put(b, "a", a);
                   return std::pair{lbox(X(t[0], t[1], r), Y(t[2], t[3], a)), one};
                 }});
  out.push_back({"KL3",
                 {"i", "j", "k"},
                 [](const std::vector<int>& t) {
                   int i = t[0], j = t[1], k = t[2];
                   return i != j && j != k && i != k && i != -j && i != -k && j != -k;
                 },
                 [=](const std::vector<int>& t, Draw& d, Binding& b) {
                   int i = t[0], j = t[1], k = t[2];
                   Scalar r = d.r(), a = d.ideal();
                   put(b, "r", r);
                   put(b, "a", a);
                   return std::pair{lbox(X(i, j, r), Y(j, k, a)), Y(i, k, r * a)};
                 }});
  out.push_back({"KL4", {"i", "j"}, short_pair, [=](const std::vector<int>& t, Draw& d, Binding& b) {
                   int i = t[0], j = t[1];
                   Scalar r = d.r(), a = d.ideal();
                   put(b, "r", r);
                   put(b, "a", a);
                   return std::pair{lbox(X(i, -i, r), Y(-i, j, a)),
                                    mul(Y(i, j, r * a * eps(i)), Y(-j, j, -r * a * a))};
                 }});
  out.push_back({"KL5", {"i", "j"}, short_pair, [=](const std::vector<int>& t, Draw& d, Binding& b) {
                   int i = t[0], j = t[1];
                   Scalar alpha = d.gamma(), r = d.r();
                   put(b, "alpha", alpha);
                   put(b, "r", r);
                   return std::pair{rbox(Y(i, -i, alpha), X(-i, j, r)),
                                    mul(Y(i, j, alpha * r * eps(i)), Y(-j, j, -alpha * r * r))};
                 }});
  // Right-hand side is the relative long generator Y_{i,-i}.
  out.push_back({"KL6", {"i", "j"}, short_pair, [=](const std::vector<int>& t, Draw& d, Binding& b) {
                   int i = t[0], j = t[1];
                   Scalar r = d.r(), a = d.ideal();
                   put(b, "r", r);
                   put(b, "a", a);
                   return std::pair{lbox(X(i, j, r), Y(j, -i, a)), Y(i, -i, r * a * 2 * eps(i))};
                 }});
  out.push_back({"KL7",
                 {"i", "j", "h", "k"},
                 [](const std::vector<int>& t) { return t[0] != t[1] && t[2] != t[3]; },
                 [=](const std::vector<int>& t, Draw& d, Binding& b) {
                   int i = t[0], j = t[1], h = t[2], k = t[3];
                   Scalar a = param(d, i, j), c = param(d, h, k);
                   put(b, "a", a);
                   put(b, "b", c);
                   Word y = Y(i, j, a);
                   return std::pair{ops.act(X(i, j, a), Y(h, k, c)), mul(mul(y, Y(h, k, c)), ops.inv(y))};
                 }});
  return out;
}

// Runs every family for `trials` draws with stratified index tuples.
// `check(lhs, rhs, record)` fills in the outcome.
template <class Ops, class Check>
Report run_kl_families(const Ops& ops, const FormIdeal& form, int rank, const SuiteOptions& options,
                       const std::string& suite, const Check& check) {
  Report rep;
  for (const auto& fam : kl_families(ops, form.ring(), rank)) {
    const int arity = static_cast<int>(fam.index_names.size());
    Rng shuffle = Rng::stream(options.seed, suite + "/tuples/" + fam.name, 0);
    TupleCycler cycler(enumerate_tuples(rank, arity, fam.admissible), shuffle);
    for (std::uint64_t t = 0; t < options.trials; ++t) {
      Draw d(form, rank, Rng::stream(options.seed, suite + "/" + fam.name, t), options.bound);
      const auto& tuple = cycler.next();
      Binding b;
      for (std::size_t k = 0; k < tuple.size(); ++k) b.emplace_back(fam.index_names[k], std::to_string(tuple[k]));
      auto [lhs, rhs] = fam.sides(tuple, d, b);
      Record rec{suite, fam.name, std::move(b), Outcome::pass, Exactness::image_level, ""};
      check(lhs, rhs, rec);
      rep.add(std::move(rec));
    }
  }
  return rep;
}

}  // namespace stsp::detail

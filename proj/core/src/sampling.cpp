#include "stsp/sampling.hpp"

#include <algorithm>

namespace stsp {

std::vector<std::vector<int>> enumerate_tuples(int rank, int arity,
                                               const std::function<bool(const std::vector<int>&)>& ok) {
  const auto idx = indices(rank);
  std::vector<std::vector<int>> out;
  std::vector<int> t;
  std::function<void()> rec = [&] {
    if (t.size() == static_cast<std::size_t>(arity)) {
      if (ok(t)) out.push_back(t);
      return;
    }
    for (int i : idx) {
      t.push_back(i);
      rec();
      t.pop_back();
    }
  };
  rec();
  return out;
}

TupleCycler::TupleCycler(std::vector<std::vector<int>> tuples, Rng& rng) : tuples_(std::move(tuples)) {
  if (tuples_.empty()) throw std::invalid_argument("TupleCycler: no admissible index tuple");
  rng.shuffle(tuples_);
}

const std::vector<int>& TupleCycler::next() {
  const auto& t = tuples_[pos_];
  pos_ = (pos_ + 1) % tuples_.size();
  return t;
}

Draw::Draw(const FormIdeal& form, int rank, Rng rng, long bound)
    : form_(form), rank_(rank), rng_(std::move(rng)), bound_(bound) {}

Scalar Draw::r() { return random_scalar(ring(), rng_, bound_); }

Scalar Draw::nonzero_r() {
  if (ring().is_finite()) return ring().from(mpz_class(static_cast<unsigned long>(1 + rng_.below(ring().modulus() - 1))));
  long x = rng_.uniform(1, bound_);
  return ring()(rng_.coin() ? x : -x);
}

Scalar Draw::ideal() { return form_.random_ideal_element(rng_, bound_); }
Scalar Draw::gamma() { return form_.random_gamma_element(rng_, bound_); }

HVector Draw::vec(const std::vector<int>& zeros) {
  HVector v(ring(), rank_);
  for (int i : indices(rank_))
    if (std::find(zeros.begin(), zeros.end(), i) == zeros.end()) v.set(i, r());
  return v;
}

HVector Draw::ideal_vec(const std::vector<int>& zeros) {
  HVector v(ring(), rank_);
  for (int i : indices(rank_))
    if (std::find(zeros.begin(), zeros.end(), i) == zeros.end()) v.set(i, ideal());
  return v;
}

int Draw::index() {
  const auto idx = indices(rank_);
  return idx[rng_.below(idx.size())];
}

int Draw::index_not_in(const std::vector<int>& excluded) {
  std::vector<int> pool;
  for (int i : indices(rank_))
    if (std::find(excluded.begin(), excluded.end(), i) == excluded.end()) pool.push_back(i);
  if (pool.empty()) throw std::invalid_argument("index_not_in: every index excluded");
  return pool[rng_.below(pool.size())];
}

AbsWord Draw::abs_word(std::size_t length) {
  AbsWord w(ring(), rank_);
  for (std::size_t k = 0; k < length; ++k) {
    int i = index();
    int j = index_not_in({i});
    w.push(i, j, r());
  }
  return w;
}

AbsWord Draw::parabolic_word(int i, std::size_t length) {
  auto pairs = enumerate_tuples(rank_, 2, [i](const std::vector<int>& t) {
    return t[0] != t[1] && t[1] != i && t[0] != -i;
  });
  AbsWord w(ring(), rank_);
  for (std::size_t k = 0; k < length; ++k) {
    const auto& p = pairs[rng_.below(pairs.size())];
    w.push(p[0], p[1], r());
  }
  return w;
}

AbsWord Draw::levi_word(int i, std::size_t length) {
  auto pairs = enumerate_tuples(rank_, 2, [i](const std::vector<int>& t) {
    return t[0] != t[1] && t[0] != i && t[0] != -i && t[1] != i && t[1] != -i;
  });
  AbsWord w(ring(), rank_);
  for (std::size_t k = 0; k < length; ++k) {
    const auto& p = pairs[rng_.below(pairs.size())];
    w.push(p[0], p[1], r());
  }
  return w;
}

ElemColumn Draw::elem_column(std::size_t max_length) {
  std::size_t length = rng_.below(max_length + 1);
  AbsWord w = abs_word(length);
  return ElemColumn(std::move(w), index());
}

void Draw::orthogonalize(HVector& x, const std::vector<HVector>& constraints, const std::vector<int>& zeros,
                         bool ideal) {
  auto is_free = [&](int q) { return std::find(zeros.begin(), zeros.end(), q) == zeros.end(); };
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const HVector& c = constraints[k];
    Scalar s = stsp::form(c, x);
    if (s.is_zero()) continue;

    // <c, x> = sum_q -eps(q) c_{-q} x_q
    std::vector<int> candidates;
    for (int q : indices(rank_)) {
      if (!is_free(q)) continue;
      Scalar coef = c[-q] * (-eps(q));
      if (!coef.is_unit()) continue;
      bool clean = true;
      for (std::size_t p = 0; p < k && clean; ++p) clean = constraints[p].raw(-q) == 0;
      if (clean) candidates.push_back(q);
    }
    if (!candidates.empty()) {
      int q = candidates[rng_.below(candidates.size())];
      Scalar coef = c[-q] * (-eps(q));
      x.set(q, x[q] - s * coef.inverse());
      continue;
    }

    std::vector<HVector> earlier(constraints.begin(), constraints.begin() + static_cast<long>(k));
    HVector z(ring(), rank_);
    Scalar t = ring().zero();
    for (int attempt = 0; attempt < 4 && t.is_zero(); ++attempt) {
      z = ideal ? ideal_vec(zeros) : vec(zeros);
      orthogonalize(z, earlier, zeros, ideal);
      t = stsp::form(c, z);
    }
    x = x * t - z * s;
  }
}

std::vector<int> pairs_of(std::initializer_list<int> idx) {
  std::vector<int> out;
  for (int i : idx) {
    out.push_back(i);
    out.push_back(-i);
  }
  return out;
}

}  // namespace stsp

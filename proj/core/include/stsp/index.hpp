#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace stsp {

// Hyperbolic indices run over {-l, ..., -1, 1, ..., l}. Storage slots are
// negative-ascending then positive-ascending: e_{-l} -> 0, ..., e_{-1} -> l-1,
// e_1 -> l, ..., e_l -> 2l-1. Every module goes through these helpers.

inline constexpr int kMinRank = 3;

constexpr int eps(int i) noexcept { return i > 0 ? 1 : -1; }

constexpr std::size_t slot(int i, int rank) noexcept {
  return static_cast<std::size_t>(i < 0 ? i + rank : i + rank - 1);
}

constexpr int index_of_slot(std::size_t s, int rank) noexcept {
  const int k = static_cast<int>(s);
  return k < rank ? k - rank : k - rank + 1;
}

constexpr bool valid_index(int i, int rank) noexcept {
  return i != 0 && i >= -rank && i <= rank;
}

/// All indices in storage order.
inline std::vector<int> indices(int rank) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(2 * rank));
  for (int i = -rank; i <= rank; ++i)
    if (i != 0) out.push_back(i);
  return out;
}

inline std::string index_name(int i) { return std::to_string(i); }

}  // namespace stsp

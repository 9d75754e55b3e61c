#ifndef CBG_SRC_BITCOMBS_HPP
#define CBG_SRC_BITCOMBS_HPP

#include <cstdint>

namespace cbg::detail {

// Binomial coefficients saturated well below overflow; plenty for ranking
// combinations of at most 64 bits.
inline std::uint64_t binom(int n, int k) {
  static constexpr std::uint64_t kCap = std::uint64_t{1} << 62;
  static const auto table = [] {
    struct T {
      std::uint64_t c[65][65];
    };
    static T t;
    for (int i = 0; i <= 64; ++i) {
      t.c[i][0] = 1;
      for (int j = 1; j <= 64; ++j) {
        std::uint64_t v = (i == 0) ? 0 : t.c[i - 1][j - 1] + t.c[i - 1][j];
        t.c[i][j] = v > kCap ? kCap : v;
      }
    }
    return &t;
  }();
  if (k < 0 || k > n) return 0;
  return table->c[n][k];
}

// Next subset with the same popcount, in ascending numeric order.
inline std::uint64_t gosper_next(std::uint64_t m) {
  const std::uint64_t c = m & (~m + 1);
  const std::uint64_t r = m + c;
  return (((r ^ m) >> 2) / c) | r;
}

// Rank-r combination of k bits in colex order (equals ascending numeric
// order of masks for fixed popcount).
inline std::uint64_t unrank_colex(std::uint64_t rank, int k) {
  std::uint64_t mask = 0;
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (binom(c + 1, i) <= rank) ++c;
    mask |= std::uint64_t{1} << c;
    rank -= binom(c, i);
  }
  return mask;
}

}  // namespace cbg::detail

#endif  // CBG_SRC_BITCOMBS_HPP

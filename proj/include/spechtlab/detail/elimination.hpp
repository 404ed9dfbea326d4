#ifndef SPECHTLAB_DETAIL_ELIMINATION_HPP
#define SPECHTLAB_DETAIL_ELIMINATION_HPP

#include <cstddef>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spechtlab {

namespace detail {

// Below this many scalar updates per pivot the OpenMP region costs more
// than it saves.
inline constexpr std::size_t parallel_update_threshold = 1u << 14;

// Forward elimination in place. Returns pivot columns; rows [0, rank)
// of `data` hold an echelon form afterwards. When `reduce` is set, entries
// above each pivot are cleared and pivots are normalized to 1.
template<class Field>
std::vector<std::size_t> eliminate(Field const &f, std::vector<Scalar> &data, std::size_t rows,
                                   std::size_t cols, bool reduce)
{
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (data[i * cols + c] != f.zero()) {
        piv = i;
        break;
      }
    if (piv == rows)
      continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j)
        std::swap(data[piv * cols + j], data[r * cols + j]);

    Scalar inv = f.inv(data[r * cols + c]);
    Scalar *prow = data.data() + r * cols;
    for (std::size_t j = c; j < cols; ++j)
      prow[j] = f.mul(prow[j], inv);

    std::size_t first = reduce ? 0 : r + 1;
    std::ptrdiff_t nrows = static_cast<std::ptrdiff_t>(rows);
    [[maybe_unused]] bool big = (rows - first) * (cols - c) >= parallel_update_threshold;
#pragma omp parallel for schedule(static) if (big)
    for (std::ptrdiff_t ii = static_cast<std::ptrdiff_t>(first); ii < nrows; ++ii) {
      std::size_t i = static_cast<std::size_t>(ii);
      if (i == r)
        continue;
      Scalar *row = data.data() + i * cols;
      Scalar factor = row[c];
      if (factor == f.zero())
        continue;
      for (std::size_t j = c; j < cols; ++j)
        if (prow[j] != f.zero())
          row[j] = f.sub(row[j], f.mul(factor, prow[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace detail

template<class Field>
std::size_t rank_in_field(Field const &f, std::vector<Scalar> &data, std::size_t rows,
                          std::size_t cols)
{
  return detail::eliminate(f, data, rows, cols, false).size();
}

} // namespace spechtlab

#endif

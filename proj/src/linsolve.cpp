#include "jnp/linsolve.hpp"

#include <algorithm>

#include "jnp/error.hpp"

namespace jnp {

// Row-scales to integers, then runs fraction-free (Bareiss) forward
// elimination with column pivot tracking and back-substitutes over Q.
std::optional<std::vector<Q>> solve_linear(std::vector<std::vector<Q>> A, std::vector<Q> b) {
  size_t rows = A.size();
  if (b.size() != rows) fail(Errc::bad_input, "solve_linear shape mismatch");
  size_t cols = rows ? A[0].size() : 0;
  for (auto& row : A)
    if (row.size() != cols) fail(Errc::bad_input, "solve_linear ragged matrix");

  std::vector<std::vector<Z>> M(rows, std::vector<Z>(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    Z l(1);
    for (const Q& q : A[i]) l = z_lcm(l, q.get_den());
    l = z_lcm(l, b[i].get_den());
    for (size_t j = 0; j < cols; ++j) M[i][j] = Z(A[i][j] * l);
    M[i][cols] = Z(b[i] * l);
  }

  std::vector<size_t> pivot_col;
  Z prev(1);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pr = row;
    while (pr < rows && M[pr][col] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(M[row], M[pr]);
    for (size_t i = row + 1; i < rows; ++i) {
      for (size_t j = col + 1; j <= cols; ++j)
        M[i][j] = (M[i][j] * M[row][col] - M[i][col] * M[row][j]) / prev;
      M[i][col] = 0;
    }
    prev = M[row][col];
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t i = row; i < rows; ++i)
    if (M[i][cols] != 0) return std::nullopt;

  std::vector<Q> x(cols, Q(0));
  for (size_t k = pivot_col.size(); k-- > 0;) {
    size_t col = pivot_col[k];
    Q acc = Q(M[k][cols]);
    for (size_t j = col + 1; j < cols; ++j)
      if (M[k][j] != 0) acc -= Q(M[k][j]) * x[j];
    x[col] = acc / Q(M[k][col]);
  }
  return x;
}

}  // namespace jnp

#include "xprod/smith.hpp"

#include <cmath>
#include <cstdlib>

#include "xprod/errors.hpp"

namespace xprod {

namespace {

constexpr std::int64_t kMagnitudeCap = std::int64_t{1} << 40;

void check_magnitude(std::int64_t v) {
  if (v > kMagnitudeCap || v < -kMagnitudeCap)
    throw Error("integer overflow guard tripped in smith_form");
}

IntMatrix identity(std::size_t n) {
  IntMatrix id(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

}  // namespace

SmithForm smith_form(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  SmithForm f;
  f.u = identity(rows);
  f.v = identity(cols);

  auto row_sub = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t j = 0; j < cols; ++j) { a[dst][j] -= q * a[src][j]; check_magnitude(a[dst][j]); }
    for (std::size_t j = 0; j < rows; ++j) { f.u[dst][j] -= q * f.u[src][j]; check_magnitude(f.u[dst][j]); }
  };
  auto col_sub = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t i = 0; i < rows; ++i) { a[i][dst] -= q * a[i][src]; check_magnitude(a[i][dst]); }
    for (std::size_t i = 0; i < cols; ++i) { f.v[i][dst] -= q * f.v[i][src]; check_magnitude(f.v[i][dst]); }
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    if (i != j) { std::swap(a[i], a[j]); std::swap(f.u[i], f.u[j]); }
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(f.v[r][i], f.v[r][j]);
  };
  auto row_negate = [&](std::size_t i) {
    for (auto& v : a[i]) v = -v;
    for (auto& v : f.u[i]) v = -v;
  };

  const std::size_t steps = std::min(rows, cols);
  bool exhausted = false;
  for (std::size_t t = 0; t < steps && !exhausted; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing submatrix, deterministic ties
      std::size_t pi = rows, pj = cols;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          std::int64_t v = std::llabs(a[i][j]);
          if (v != 0 && (best == 0 || v < best)) { best = v; pi = i; pj = j; }
        }
      if (pi == rows) { exhausted = true; break; }
      row_swap(t, pi);
      col_swap(t, pj);
      if (a[t][t] < 0) row_negate(t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        std::int64_t q = a[i][t] / a[t][t];
        if (q != 0) row_sub(i, t, q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        std::int64_t q = a[t][j] / a[t][t];
        if (q != 0) col_sub(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
  }
  f.diag.assign(steps, 0);
  for (std::size_t i = 0; i < steps; ++i) f.diag[i] = a[i][i];
  return f;
}

std::optional<std::vector<std::int64_t>> solve_mod(const IntMatrix& a,
                                                   const std::vector<std::int64_t>& b,
                                                   std::int64_t m) {
  if (m < 1) throw ModulusMismatch("modulus must be >= 1");
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  if (b.size() != rows) throw DimensionMismatch("solve_mod shape mismatch");

  // augmented system [A | m I] z = b over Z
  IntMatrix aug(rows, std::vector<std::int64_t>(cols + rows, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols + i] = m;
  }
  SmithForm f = smith_form(std::move(aug));

  const std::size_t n = cols + rows;
  std::vector<std::int64_t> ub(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < rows; ++j) acc += f.u[i][j] * b[j];
    ub[i] = acc;
  }
  std::vector<std::int64_t> w(n, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    std::int64_t d = i < f.diag.size() ? f.diag[i] : 0;
    if (d != 0) {
      if (ub[i] % d != 0) return std::nullopt;
      w[i] = ub[i] / d;
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  auto mod = [m](std::int64_t v) { return ((v % m) + m) % m; };
  std::vector<std::int64_t> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (w[j] != 0) acc = mod(acc + mod(f.v[i][j]) * mod(w[j]));
    x[i] = acc;
  }
  return x;
}

}  // namespace xprod

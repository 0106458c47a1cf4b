#include "twist8/algebra/resultant.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace twist8 {

UPoly bareiss_determinant(std::vector<std::vector<UPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UPoly(1L);
  UPoly prev(1L);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return UPoly();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = UPoly();
    }
    prev = m[k][k];
  }
  UPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

Poly resultant(const Poly& f, const Poly& g, std::string_view var) {
  if (!f.depends_on(var) && !g.depends_on(var)) {
    throw std::invalid_argument("variable absent");
  }
  // The one remaining variable, if any.
  std::string other;
  for (const Poly* p : {&f, &g}) {
    for (const auto& v : p->variables()) {
      if (v == var || !p->depends_on(v)) continue;
      if (!other.empty() && other != v) {
        throw std::invalid_argument("resultant supports at most one extra variable");
      }
      other = v;
    }
  }
  const std::string y = other.empty() ? std::string("_y") : other;
  auto coeffs = [&](const Poly& p) {
    std::vector<UPoly> out;
    for (const Poly& c : p.coefficients_in(var)) out.push_back(c.to_upoly(y));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
  };
  const auto fc = coeffs(f);
  const auto gc = coeffs(g);
  if (fc.empty() || gc.empty()) return Poly();
  const std::size_t m = fc.size() - 1;  // degree of f in var
  const std::size_t n = gc.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return Poly(1L);
  std::vector<std::vector<UPoly>> s(size, std::vector<UPoly>(size));
  // Rows hold coefficients from the leading term down.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = fc[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = gc[n - k];
  }
  const UPoly det = bareiss_determinant(std::move(s));
  if (other.empty()) return Poly(det.coeff(0));
  return Poly::from_upoly(det, other);
}

}  // namespace twist8

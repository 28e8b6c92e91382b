#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hofstadter/spectrum.hpp"

namespace hofstadter {

bool Matrix::is_symmetric() const noexcept {
  double scale = 0.0;
  for (double v : data_) scale = std::max(scale, std::abs(v));
  const double tol = 1e-12 * std::max(1.0, scale);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    }
  }
  return true;
}

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> off) {
  const std::size_t n = d.size();
  if (n == 0) throw std::invalid_argument("tridiagonal_eigenvalues: empty matrix");
  if (off.size() + 1 != n) {
    throw std::invalid_argument("tridiagonal_eigenvalues: off-diagonal must have n-1 entries");
  }
  // e[i] couples i and i+1; e[n-1] is a sentinel.
  std::vector<double> e(n, 0.0);
  std::copy(off.begin(), off.end(), e.begin());

  constexpr int kMaxIterations = 64;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (std::size_t l = 0; l < n; ++l) {
    int iterations = 0;
    for (;;) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iterations > kMaxIterations) {
        throw std::runtime_error("tridiagonal_eigenvalues: QL iteration did not converge");
      }

      // Wilkinson-type shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool deflated = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          // Underflow: the matrix split; restart from l.
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<double> symmetric_eigenvalues(const Matrix& input) {
  const std::size_t n = input.order();
  if (n == 0) throw std::invalid_argument("symmetric_eigenvalues: empty matrix");
  if (!input.is_symmetric()) throw std::invalid_argument("symmetric_eigenvalues: matrix is not symmetric");
  if (n == 1) return {input(0, 0)};

  // Householder reduction of the lower triangle to tridiagonal form.
  Matrix a = input;
  std::vector<double> diag(n, 0.0);
  std::vector<double> sub(n, 0.0);  // sub[i] couples i-1 and i
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (std::size_t k = 0; k <= l; ++k) scale += std::abs(a(i, k));
      if (scale == 0.0) {
        sub[i] = a(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          a(i, k) /= scale;
          h += a(i, k) * a(i, k);
        }
        double f = a(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        sub[i] = scale * g;
        h -= f * g;
        a(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
          sub[j] = g / h;
          f += sub[j] * a(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = a(i, j);
          g = sub[j] - hh * f;
          sub[j] = g;
          for (std::size_t k = 0; k <= j; ++k) a(j, k) -= f * sub[k] + g * a(i, k);
        }
      }
    } else {
      sub[i] = a(i, l);
    }
    diag[i] = h;
  }
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);

  std::vector<double> off(sub.begin() + 1, sub.end());
  return tridiagonal_eigenvalues(std::move(diag), std::move(off));
}

}  // namespace hofstadter

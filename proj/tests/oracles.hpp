#pragma once

// Independent numeric oracles used to cross-check the exact algorithms.
// Nothing here calls into the library's root counting or factorization.

#include "salemlat/polynomial.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <complex>
#include <vector>

namespace oracle {

using Float = boost::multiprecision::cpp_bin_float_50;
using Complex = std::complex<Float>;

inline Float to_float(const salemlat::Integer& x) { return Float(x); }

/// All complex roots of a non-constant polynomial (Aberth iteration in 50
/// digits).
inline std::vector<Complex> roots(const salemlat::IntPolynomial& p) {
  const int n = p.degree();
  std::vector<Complex> a;
  const Float lc = to_float(p.leading());
  for (int k = 0; k <= n; ++k) a.emplace_back(to_float(p.coefficient(k)) / lc, Float(0));
  auto eval = [&](const Complex& z) {
    Complex acc(0, 0);
    for (int k = n; k >= 0; --k) acc = acc * z + a[k];
    return acc;
  };
  Float radius = 1;
  for (int k = 0; k < n; ++k) radius = std::max(radius, Float(1) + abs(a[k].real()));
  std::vector<Complex> z(n);
  const Complex seed(Float("0.4"), Float("0.9"));
  Complex w(1, 0);
  for (int i = 0; i < n; ++i) {
    z[i] = w * Complex(radius / 2, Float(0));
    w *= seed;
  }
  // Aberth–Ehrlich iteration.
  auto deriv = [&](const Complex& x) {
    Complex acc(0, 0);
    for (int k = n; k >= 1; --k) acc = acc * x + a[k] * Float(k);
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    Float change = 0;
    for (int i = 0; i < n; ++i) {
      Complex value = eval(z[i]);
      if (value == Complex(0, 0)) continue;
      Complex ratio = value / deriv(z[i]);
      Complex sum(0, 0);
      for (int j = 0; j < n; ++j) {
        if (j != i) sum += Complex(1, 0) / (z[i] - z[j]);
      }
      Complex step = ratio / (Complex(1, 0) - ratio * sum);
      z[i] -= step;
      change = std::max(change, Float(abs(step)));
    }
    if (change < Float("1e-40")) break;
  }
  return z;
}

/// Some product of a proper sub-multiset of roots has integral coefficients
/// (monic p): the oracle's reducibility test.
inline bool numerically_reducible(const salemlat::IntPolynomial& p) {
  const int n = p.degree();
  if (n <= 1) return false;
  auto z = roots(p);
  const Float tol("1e-15");
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    if (__builtin_popcount(mask) * 2 > n) continue;
    std::vector<Complex> c{Complex(1, 0)};
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      std::vector<Complex> next(c.size() + 1, Complex(0, 0));
      for (std::size_t k = 0; k < c.size(); ++k) {
        next[k + 1] += c[k];
        next[k] -= c[k] * z[i];
      }
      c = std::move(next);
    }
    bool integral = true;
    for (const auto& x : c) {
      if (abs(x.imag()) > tol || abs(x.real() - boost::multiprecision::round(x.real())) > tol) {
        integral = false;
        break;
      }
    }
    if (integral) return true;
  }
  return false;
}

/// Salem test straight from the definition: monic irreducible, one real root
/// > 1, one real root in (0,1), all others on the unit circle.
inline bool is_salem(const salemlat::IntPolynomial& p) {
  if (!p.is_monic() || p.degree() < 2) return false;
  auto z = roots(p);
  const Float tol("1e-12");
  int above = 0, below = 0, circle = 0;
  for (const auto& r : z) {
    Float m = abs(r);
    if (abs(m - 1) < tol) {
      ++circle;
    } else if (m > 1 && abs(r.imag()) < tol && r.real() > 0) {
      ++above;
    } else if (m < 1 && abs(r.imag()) < tol && r.real() > 0) {
      ++below;
    } else {
      return false;
    }
  }
  if (above != 1 || below != 1 || circle != p.degree() - 2) return false;
  return !numerically_reducible(p);
}

inline double largest_real_root(const salemlat::IntPolynomial& p) {
  double best = -1e300;
  for (const auto& r : roots(p)) {
    if (abs(r.imag()) < Float("1e-20")) best = std::max(best, static_cast<double>(r.real()));
  }
  return best;
}

inline int count_real_roots_in(const salemlat::IntPolynomial& p, double lo, double hi) {
  int count = 0;
  for (const auto& r : roots(p)) {
    if (abs(r.imag()) < Float("1e-20") && r.real() > lo && r.real() < hi) ++count;
  }
  return count;
}

inline int count_outside_unit_circle(const salemlat::IntPolynomial& p) {
  int count = 0;
  for (const auto& r : roots(p)) {
    if (abs(r) > Float(1) + Float("1e-12")) ++count;
  }
  return count;
}

inline double spectral_radius(const salemlat::IntPolynomial& p) {
  Float best = 0;
  for (const auto& r : roots(p)) best = std::max(best, Float(abs(r)));
  return static_cast<double>(best);
}

}  // namespace oracle

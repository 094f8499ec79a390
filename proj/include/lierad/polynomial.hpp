#pragma once

#include "lierad/errors.hpp"

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

namespace lierad::poly {

/// Coefficients from the constant term upward; no trailing zeros.
using Poly = std::vector<Scalar>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline std::size_t degree(const Poly& p) { return p.empty() ? 0 : p.size() - 1; }

inline Poly monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  Scalar inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

inline Scalar evaluate(const Poly& p, const Scalar& x) {
  Scalar acc;
  for (std::size_t k = p.size(); k-- > 0;) {
    acc *= x;
    acc += p[k];
  }
  return acc;
}

inline Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(Scalar(static_cast<long>(k)) * p[k]);
  trim(d);
  return d;
}

/// Remainder of a modulo b (b nonzero).
inline Poly remainder(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = degree(b);
  Scalar lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    Scalar f = a.back() * lead_inv;
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k].sub_mul(f, b[k]);
    trim(a);
  }
  return a;
}

inline Poly quotient(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  const std::size_t db = degree(b);
  Poly q(a.size() - db);
  Scalar lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    Scalar f = a.back() * lead_inv;
    std::size_t shift = a.size() - 1 - db;
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k].sub_mul(f, b[k]);
    trim(a);
  }
  trim(q);
  return q;
}

inline Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline Poly squarefree_part(const Poly& p) {
  Poly d = derivative(p);
  if (d.empty()) return monic(p);
  return monic(quotient(p, gcd(p, d)));
}

/// Monic minimal polynomial of a square matrix.
inline Poly minimal_polynomial(const Matrix& x) {
  const std::size_t n = x.rows();
  std::vector<Vector> powers{Matrix::identity(n).data()};
  Matrix cur = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    cur = cur * x;
    Matrix basis = Matrix::from_columns(powers, n * n);
    if (auto c = solve(basis, cur.data())) {
      Poly p(k + 1);
      for (std::size_t t = 0; t < k; ++t) p[t] = -(*c)[t];
      p[k] = 1;
      return p;
    }
    powers.push_back(cur.data());
  }
  throw InternalError("minimal polynomial degree exceeds matrix size");
}

namespace detail {

inline std::complex<long double> to_complex(const Scalar& s) {
  return {static_cast<long double>(s.re().get_d()), static_cast<long double>(s.im().get_d())};
}

inline std::vector<std::complex<long double>> approximate_roots(const Poly& monic_p) {
  using C = std::complex<long double>;
  const std::size_t n = degree(monic_p);
  std::vector<C> coeffs;
  for (const auto& c : monic_p) coeffs.push_back(to_complex(c));
  auto eval = [&](C z) {
    C acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
    return acc;
  };
  long double bound = 1;
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, 1 + std::abs(coeffs[k]));
  std::vector<C> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::polar(bound * 0.7L, 0.4L + 6.283185307179586L * k / n);
  for (int it = 0; it < 2000; ++it) {
    long double change = 0;
    for (std::size_t k = 0; k < n; ++k) {
      C denom = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) denom *= (z[k] - z[j]);
      if (std::abs(denom) == 0) denom = 1e-30L;
      C step = eval(z[k]) / denom;
      z[k] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-28L) break;
  }
  return z;
}

inline Rational common_denominator(const Poly& p) {
  mpz_class d = 1;
  for (const auto& c : p) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.im().get_den_mpz_t());
  }
  return Rational(d);
}

}  // namespace detail

/// Roots of p lying in Q(i), each verified exactly.
///
/// After scaling y = D x the square-free monic part has Gaussian-integer
/// coefficients, so every root in Q(i) is a Gaussian integer over D; numeric
/// approximations locate the candidates and exact evaluation confirms them.
inline std::vector<Scalar> gaussian_rational_roots(const Poly& p) {
  Poly q = squarefree_part(p);
  std::vector<Scalar> roots;
  if (degree(q) == 0) return roots;
  if (degree(q) == 1) return {-q[0]};
  Rational d = detail::common_denominator(q);
  for (const auto& z : detail::approximate_roots(q)) {
    long double yr = z.real() * d.get_d(), yi = z.imag() * d.get_d();
    if (!std::isfinite(yr) || !std::isfinite(yi) || std::fabs(yr) > 1e15L || std::fabs(yi) > 1e15L) continue;
    Scalar cand(Rational(static_cast<long>(std::llround(yr))) / d, Rational(static_cast<long>(std::llround(yi))) / d);
    if (!evaluate(q, cand).is_zero()) continue;
    bool dup = false;
    for (const auto& r : roots) dup = dup || r == cand;
    if (!dup) roots.push_back(cand);
  }
  return roots;
}

}  // namespace lierad::poly

#include "blockroots/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace blockroots {

bool full_rank(const Matrix& a, double rel_tol) {
  try {
    lu_factor(a, rel_tol * frob_norm(a));
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularMatrix) return false;
    throw;
  }
}

double cond_frob(const Matrix& a) {
  try {
    return frob_norm(a) * frob_norm(invert(a));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularMatrix) return std::numeric_limits<double>::infinity();
    throw;
  }
}

namespace {

// Diagonal similarity scaling by powers of two (Parlett-Reinsch balancing).
void balance(std::vector<double>& a, std::size_t n) {
  constexpr double radix = 2.0;
  constexpr double sqrdx = radix * radix;
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double r = 0.0;
      double c = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a[j * n + i]);
        r += std::abs(a[i * n + j]);
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        g = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] *= g;
        for (std::size_t j = 0; j < n; ++j) a[j * n + i] *= f;
      }
    }
  }
}

void hessenberg(std::vector<double>& a, std::size_t n) {
  if (n < 3) return;
  std::vector<double> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double alpha = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) alpha += a[i * n + k] * a[i * n + k];
    alpha = std::sqrt(alpha);
    if (alpha == 0.0) continue;
    if (a[(k + 1) * n + k] > 0.0) alpha = -alpha;
    double vnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = a[i * n + k];
      if (i == k + 1) v[i] -= alpha;
      vnorm += v[i] * v[i];
    }
    if (vnorm == 0.0) continue;
    // H = I - 2 v v^T / (v^T v), applied on both sides.
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += v[i] * a[i * n + j];
      s *= 2.0 / vnorm;
      for (std::size_t i = k + 1; i < n; ++i) a[i * n + j] -= s * v[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += a[i * n + j] * v[j];
      s *= 2.0 / vnorm;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= s * v[j];
    }
    for (std::size_t i = k + 2; i < n; ++i) a[i * n + k] = 0.0;
  }
}

double sign_of(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

// Francis double-shift QR on an upper Hessenberg matrix (EISPACK hqr layout).
ComplexScalarList hqr(std::vector<double>& h, std::size_t n, std::size_t max_sweeps) {
  auto a = [&](std::ptrdiff_t i, std::ptrdiff_t j) -> double& { return h[i * n + j]; };
  std::vector<double> wr(n, 0.0);
  std::vector<double> wi(n, 0.0);
  double anorm = 0.0;
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    for (std::ptrdiff_t j = std::max<std::ptrdiff_t>(i - 1, 0); j < static_cast<std::ptrdiff_t>(n); ++j)
      anorm += std::abs(a(i, j));

  std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n) - 1;
  double t = 0.0;
  std::size_t sweeps = 0;
  double p = 0.0, q = 0.0, r = 0.0, s = 0.0, w = 0.0, x = 0.0, y = 0.0, z = 0.0;
  while (nn >= 0) {
    int its = 0;
    std::ptrdiff_t l = 0;
    do {
      for (l = nn; l >= 1; --l) {
        s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) + s == s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      x = a(nn, nn);
      if (l == nn) {
        wr[nn] = x + t;
        wi[nn] = 0.0;
        --nn;
      } else {
        y = a(nn - 1, nn - 1);
        w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          p = 0.5 * (y - x);
          q = p * p + w;
          z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + sign_of(z, p);
            wr[nn - 1] = wr[nn] = x + z;
            if (z != 0.0) wr[nn] = x - w / z;
            wi[nn - 1] = wi[nn] = 0.0;
          } else {
            wr[nn - 1] = wr[nn] = x + p;
            wi[nn - 1] = -z;
            wi[nn] = z;
          }
          nn -= 2;
        } else {
          if (its == 60 || ++sweeps > max_sweeps) {
            throw Error(ErrorCode::NoConvergence, "QR iteration exceeded its sweep budget");
          }
          if (its == 10 || its == 20 || its == 40) {
            t += x;
            for (std::ptrdiff_t i = 0; i <= nn; ++i) a(i, i) -= x;
            s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          std::ptrdiff_t m = nn - 2;
          for (; m >= l; --m) {
            z = a(m, m);
            r = x - z;
            s = y - z;
            p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - r - s;
            r = a(m + 2, m + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v = std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
            if (u + v == v) break;
          }
          for (std::ptrdiff_t i = m + 2; i <= nn; ++i) {
            a(i, i - 2) = 0.0;
            if (i != m + 2) a(i, i - 3) = 0.0;
          }
          for (std::ptrdiff_t k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = 0.0;
              if (k != nn - 1) r = a(k + 2, k - 1);
              if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            if ((s = sign_of(std::sqrt(p * p + q * q + r * r), p)) != 0.0) {
              if (k == m) {
                if (l != m) a(k, k - 1) = -a(k, k - 1);
              } else {
                a(k, k - 1) = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              for (std::ptrdiff_t j = k; j <= nn; ++j) {
                p = a(k, j) + q * a(k + 1, j);
                if (k != nn - 1) {
                  p += r * a(k + 2, j);
                  a(k + 2, j) -= p * z;
                }
                a(k + 1, j) -= p * y;
                a(k, j) -= p * x;
              }
              const std::ptrdiff_t mmin = nn < k + 3 ? nn : k + 3;
              for (std::ptrdiff_t i = l; i <= mmin; ++i) {
                p = x * a(i, k) + y * a(i, k + 1);
                if (k != nn - 1) {
                  p += z * a(i, k + 2);
                  a(i, k + 2) -= p * r;
                }
                a(i, k + 1) -= p * q;
                a(i, k) -= p;
              }
            }
          }
        }
      }
    } while (l < nn - 1);
  }
  ComplexScalarList out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {wr[i], wi[i]};
  return out;
}

}  // namespace

ComplexScalarList eigvals(const Matrix& a, std::size_t max_sweeps_per_dim) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "eigvals of non-square " + a.shape_string());
  if (!a.all_finite()) throw Error(ErrorCode::NonFiniteEntry, "eigvals of a non-finite matrix");
  const std::size_t n = a.rows();
  std::vector<double> h = a.data();
  balance(h, n);
  hessenberg(h, n);
  return hqr(h, n, max_sweeps_per_dim * n);
}

SpectrumMatch match_spectra(const ComplexScalarList& a, const ComplexScalarList& b) {
  SpectrumMatch m;
  m.same_size = a.size() == b.size();
  if (!m.same_size) return m;
  std::vector<bool> used_a(a.size(), false);
  std::vector<bool> used_b(b.size(), false);
  m.max_distance = 0.0;
  for (std::size_t step = 0; step < a.size(); ++step) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (used_a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (used_b[j]) continue;
        const double d = std::abs(a[i] - b[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    used_a[bi] = used_b[bj] = true;
    m.pairs.emplace_back(bi, bj);
    m.max_distance = std::max(m.max_distance, best);
  }
  return m;
}

double min_cross_distance(const ComplexScalarList& a, const ComplexScalarList& b) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& x : a)
    for (const auto& y : b) best = std::min(best, std::abs(x - y));
  return best;
}

double max_modulus(const ComplexScalarList& a) {
  double best = 0.0;
  for (const auto& x : a) best = std::max(best, std::abs(x));
  return best;
}

}  // namespace blockroots

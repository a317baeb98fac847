#pragma once

// Test-side reference arithmetic. Everything here is written from the
// defining formulas with its own integer Laurent type, so it shares no code
// with the library beyond the final comparison.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/ring.hpp"

namespace oracle {

// exponent -> coefficient, zero coefficients erased
struct Poly {
  std::map<int, long long> c;

  static Poly mono(long long k, int e) {
    Poly p;
    if (k) p.c[e] = k;
    return p;
  }
  static Poly one() { return mono(1, 0); }
  bool zero() const { return c.empty(); }

  Poly& operator+=(const Poly& o) {
    for (auto [e, k] : o.c)
      if ((c[e] += k) == 0) c.erase(e);
    return *this;
  }
  Poly operator+(const Poly& o) const { return Poly(*this) += o; }
  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, k] : r.c) k = -k;
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    Poly r;
    for (auto [e1, k1] : c)
      for (auto [e2, k2] : o.c) r += mono(k1 * k2, e1 + e2);
    return r;
  }
  bool operator==(const Poly& o) const { return c == o.c; }
};

inline Poly from(const skein::Laurent& x) {
  Poly p;
  for (const auto& [e, k] : x.terms()) p.c[e] = k.get_si();
  return p;
}

inline bool same(const skein::Laurent& x, const Poly& p) { return from(x) == p; }

inline long long sgn(int k) { return k % 2 ? -1 : 1; }

// q^x = v^(2 n x); callers pass 2 n x directly as a v-exponent
inline Poly q(int n, int x) { return Poly::mono(1, 2 * n * x); }

inline Poly t(int n) { return Poly::mono(sgn(n - 1), 2 * (n * n - 1)); }
inline Poly c(int n, int i) { return Poly::mono(sgn(n - i), n * (n + 1) - 2 * n * i + n * n - 1); }
inline Poly c_inv(int n, int i) { return Poly::mono(sgn(n - i), -(n * (n + 1) - 2 * n * i + n * n - 1)); }
inline Poly g(int n, int i) { return Poly::mono(sgn(n - 1), 2 * n * (2 * i - n - 1)); }
inline Poly t_half_pow_n(int n) { return Poly::mono(sgn(n * (n - 1) / 2), n * (n * n - 1)); }
inline Poly a(int n) { return Poly::mono(1, n * (n - 1) / 2 - n * (n * n - 1)); }
inline Poly qint(int n) {
  Poly r;
  for (int k = 0; k < n; ++k) r += q(n, n - 1 - 2 * k);
  return r;
}

// Dense square-or-not matrix over Poly, rows = outputs.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Poly> e;
  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c) {}
  Poly& at(int i, int j) { return e[static_cast<std::size_t>(i) * cols + j]; }
  const Poly& at(int i, int j) const { return e[static_cast<std::size_t>(i) * cols + j]; }
  static Mat id(int d) {
    Mat m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = Poly::one();
    return m;
  }
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
};

inline Mat mul(const Mat& x, const Mat& y) {
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Poly& a = x.at(i, k);
      if (a.zero()) continue;
      for (int j = 0; j < y.cols; ++j)
        if (!y.at(k, j).zero()) r.at(i, j) += a * y.at(k, j);
    }
  return r;
}

inline Mat add(const Mat& x, const Mat& y) {
  Mat r = x;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += y.e[i];
  return r;
}

inline Mat scale(const Mat& x, const Poly& s) {
  Mat r = x;
  for (auto& p : r.e) p = p * s;
  return r;
}

// x on the lower (more significant) slots
inline Mat kron(const Mat& x, const Mat& y) {
  Mat r(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      if (x.at(i, j).zero()) continue;
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l)
          if (!y.at(k, l).zero()) r.at(i * y.rows + k, j * y.cols + l) = x.at(i, j) * y.at(k, l);
    }
  return r;
}

inline int ipow(int n, int k) {
  int r = 1;
  while (k-- > 0) r *= n;
  return r;
}

// 0-based index of a 1-based state tuple, first entry most significant
inline int index(const std::vector<int>& s, int n) {
  int r = 0;
  for (int x : s) r = r * n + (x - 1);
  return r;
}

// Rhat(e_l (x) e_k): coefficient of e_k (x) e_l is q^(-1/n) q^[l==k];
// for l < k the coefficient of e_l (x) e_k is q^(-1/n)(q - q^-1).
inline Mat r_hat(int n) {
  Mat m(n * n, n * n);
  Poly qm = Poly::mono(1, -2);
  for (int l = 1; l <= n; ++l)
    for (int k = 1; k <= n; ++k) {
      int in = index({l, k}, n);
      m.at(index({k, l}, n), in) += qm * (l == k ? q(n, 1) : Poly::one());
      if (l < k) m.at(in, in) += qm * (q(n, 1) - q(n, -1));
    }
  return m;
}

// from the Hecke relation q^(1/n) R - q^(-1/n) R^-1 = (q - q^-1)
inline Mat r_hat_inv(int n) {
  return add(scale(r_hat(n), Poly::mono(1, 4)),
             scale(Mat::id(n * n), -(Poly::mono(1, 2) * (q(n, 1) - q(n, -1)))));
}

inline int perm_len(const std::vector<int>& p) {
  int l = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) l += p[i] > p[j];
  return l;
}

inline std::vector<std::vector<int>> perms(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Mat primitive(skein::Kind k, int n) {
  using skein::Kind;
  switch (k) {
    case Kind::IdPlus:
    case Kind::IdMinus: return Mat::id(n);
    case Kind::CrossPos: return r_hat(n);
    case Kind::CrossNeg: return r_hat_inv(n);
    case Kind::CapEv:
    case Kind::CapTildeEv: {
      Mat m(1, n * n);
      for (int top = 1; top <= n; ++top) m.at(0, index({n + 1 - top, top}, n)) = c(n, top);
      return m;
    }
    case Kind::CupCoev:
    case Kind::CupTildeCoev: {
      Mat m(n * n, 1);
      for (int bot = 1; bot <= n; ++bot) m.at(index({bot, n + 1 - bot}, n), 0) = c_inv(n, bot);
      return m;
    }
    case Kind::Sink:
    case Kind::Source: {
      bool sink = k == Kind::Sink;
      Mat m(sink ? 1 : ipow(n, n), sink ? ipow(n, n) : 1);
      Poly base = sink ? a(n) * t_half_pow_n(n) : a(n);
      for (const auto& p : perms(n)) {
        int l = perm_len(p);
        Poly v = base * Poly::mono(sgn(l), 2 * n * l);
        if (sink) m.at(0, index(p, n)) = v;
        else m.at(index(p, n), 0) = v;
      }
      return m;
    }
    default: return {};
  }
}

// Dense evaluation of a web built from primitives; the rightmost column acts first.
inline Mat eval(const skein::SlicedWeb& w) {
  int n = w.n();
  Mat acc = Mat::id(ipow(n, static_cast<int>(w.right_profile().size())));
  for (auto it = w.columns().rbegin(); it != w.columns().rend(); ++it) {
    Mat col = Mat::id(1);
    for (const auto& tok : *it) col = kron(col, primitive(tok.kind, n));
    acc = mul(col, acc);
  }
  return acc;
}

}  // namespace oracle

#include "skein/braided.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

#include "skein/random.hpp"
#include "skein/rtfunctor.hpp"

namespace skein {

void Tensor3::add(const Monomial& a, const Monomial& b, const Monomial& c, const Laurent& k) {
  if (k.is_zero()) return;
  auto [it, fresh] = terms.try_emplace({a, b, c}, k);
  if (fresh) return;
  it->second += k;
  if (it->second.is_zero()) terms.erase(it);
}

Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
  Tensor3 r = a;
  for (const auto& [k, c] : b.terms) r.add(k[0], k[1], k[2], -c);
  return r;
}

namespace {

NCPoly det_pow(int n, int k) {
  NCPoly r(n, Laurent(1));
  NCPoly d = detq(n);
  for (int i = 0; i < k; ++i) r = r * d;
  return r;
}

}  // namespace

bool sl_equal(const Tensor3& x, const Tensor3& y) {
  // same homogenization as for two legs, applied to each of the three
  if (x.n != y.n) throw std::invalid_argument("sl_equal: different n");
  int n = x.n;
  Tensor3 z = x - y;
  if (z.terms.empty()) return true;
  using Deg = std::array<int, 3>;
  std::map<Deg, Deg> top;
  for (const auto& [k, c] : z.terms) {
    Deg d{}, r{};
    for (int s = 0; s < 3; ++s) {
      d[static_cast<std::size_t>(s)] = static_cast<int>(k[static_cast<std::size_t>(s)].size());
      r[static_cast<std::size_t>(s)] = d[static_cast<std::size_t>(s)] % n;
    }
    auto& t = top.try_emplace(r, d).first->second;
    for (std::size_t s = 0; s < 3; ++s) t[s] = std::max(t[s], d[s]);
  }
  std::map<int, NCPoly> powers;
  auto dp = [&](int k) -> const NCPoly& {
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, det_pow(n, k)).first;
    return it->second;
  };
  Tensor3 h{n, {}};
  for (const auto& [k, c] : z.terms) {
    Deg r{};
    for (std::size_t s = 0; s < 3; ++s) r[s] = static_cast<int>(k[s].size()) % n;
    const Deg& t = top.at(r);
    std::array<NCPoly, 3> legs;
    for (std::size_t s = 0; s < 3; ++s)
      legs[s] = NCPoly::monomial(n, k[s]) * dp((t[s] - static_cast<int>(k[s].size())) / n);
    for (const auto& [a, ca] : legs[0].terms())
      for (const auto& [b, cb] : legs[1].terms())
        for (const auto& [d, cd] : legs[2].terms()) h.add(a, b, d, c * ca * cb * cd);
  }
  return h.terms.empty();
}

Tensor3 coproduct2(const NCPoly& x) {
  Tensor3 r{x.n(), {}};
  TensorPoly d = coproduct(x);
  for (const auto& [k, c] : d.terms()) {
    TensorPoly d2 = coproduct(NCPoly::monomial(x.n(), k.second));
    for (const auto& [k2, c2] : d2.terms()) r.add(k.first, k2.first, k2.second, c * c2);
  }
  return r;
}

TensorPoly ad_coaction(const NCPoly& x) {
  int n = x.n();
  TensorPoly r(n);
  for (const auto& [k, c] : coproduct2(x).terms) {
    NCPoly right = antipode(NCPoly::monomial(n, k[0])) * NCPoly::monomial(n, k[2]);
    for (const auto& [m, d] : right.terms()) r.add_term(k[1], m, c * d);
  }
  return r;
}

namespace {

struct MulCache {
  std::mutex mu;
  std::map<std::tuple<int, Monomial, Monomial>, NCPoly> memo;
};

MulCache& mul_cache() {
  static MulCache c;
  return c;
}

NCPoly braided_mul_mono(int n, const Monomial& x, const Monomial& y) {
  if (x.empty() || y.empty()) return NCPoly::monomial(n, x) * NCPoly::monomial(n, y);
  auto& cache = mul_cache();
  auto key = std::make_tuple(n, x, y);
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.memo.find(key);
    if (it != cache.memo.end()) return it->second;
  }
  // sum over x_(2) of S(x_(1)) x_(3), and over y_(2) of S(y_(1))
  std::map<Monomial, NCPoly, MonoLess> px, qy;
  for (const auto& [k, c] : coproduct2(NCPoly::monomial(n, x)).terms) {
    auto it = px.try_emplace(k[1], NCPoly(n)).first;
    it->second += c * (antipode(NCPoly::monomial(n, k[0])) * NCPoly::monomial(n, k[2]));
  }
  TensorPoly dy = coproduct(NCPoly::monomial(n, y));
  for (const auto& [k, c] : dy.terms()) {
    auto it = qy.try_emplace(k.second, NCPoly(n)).first;
    it->second += c * antipode(NCPoly::monomial(n, k.first));
  }
  NCPoly r(n);
  for (const auto& [x2, p] : px)
    for (const auto& [y2, q] : qy) {
      Laurent w = rho(p, q);
      if (w.is_zero()) continue;
      r += w * (NCPoly::monomial(n, x2) * NCPoly::monomial(n, y2));
    }
  std::lock_guard lock(cache.mu);
  cache.memo.emplace(std::move(key), r);
  return r;
}

}  // namespace

NCPoly braided_mul(const NCPoly& x, const NCPoly& y) {
  if (x.n() != y.n()) throw std::invalid_argument("braided_mul: different n");
  int n = x.n();
  NCPoly r(n);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) r += (ca * cb) * braided_mul_mono(n, a, b);
  return r;
}

BtpElem btp_mul(const BtpElem& p, const BtpElem& q) {
  // (y1 (x) y2)(x1 (x) x2) = y1 x1' (x) y2' x2 rho(y2'' (x) x1'')
  if (p.n() != q.n()) throw std::invalid_argument("btp_mul: different n");
  int n = p.n();
  BtpElem r(n);
  for (const auto& [kp, cp] : p.terms())
    for (const auto& [kq, cq] : q.terms()) {
      TensorPoly dy = coproduct(NCPoly::monomial(n, kp.second));
      TensorPoly dx = coproduct(NCPoly::monomial(n, kq.first));
      for (const auto& [ky, cy] : dy.terms())
        for (const auto& [kx, cx] : dx.terms()) {
          Laurent w = rho_word(n, ky.second, kx.second);
          if (w.is_zero()) continue;
          NCPoly left = NCPoly::monomial(n, kp.first) * NCPoly::monomial(n, kx.first);
          NCPoly right = NCPoly::monomial(n, ky.first) * NCPoly::monomial(n, kq.second);
          r += (cp * cq * cy * cx * w) * TensorPoly::pure(left, right);
        }
    }
  return r;
}

bool check_ad_coaction(const NCPoly& x, std::string* witness) {
  int n = x.n();
  TensorPoly ad = ad_coaction(x);
  Tensor3 lhs{n, {}}, rhs{n, {}};
  for (const auto& [k, c] : ad.terms()) {
    TensorPoly inner = ad_coaction(NCPoly::monomial(n, k.first));
    for (const auto& [k2, c2] : inner.terms()) lhs.add(k2.first, k2.second, k.second, c * c2);
    TensorPoly split = coproduct(NCPoly::monomial(n, k.second));
    for (const auto& [k2, c2] : split.terms()) rhs.add(k.first, k2.first, k2.second, c * c2);
  }
  if (!sl_equal(lhs, rhs)) {
    if (witness) *witness = "(Ad(x)id)Ad != (id(x)Delta)Ad for x = " + x.str();
    return false;
  }
  NCPoly back(n);
  for (const auto& [k, c] : ad.terms()) back += (c * counit(NCPoly::monomial(n, k.second))) * NCPoly::monomial(n, k.first);
  if (!sl_equal(back, x)) {
    if (witness) *witness = "(id(x)eps)Ad(x) = " + back.str() + " for x = " + x.str();
    return false;
  }
  return true;
}

bool check_comodule_algebra(const NCPoly& x, const NCPoly& y, std::string* witness) {
  int n = x.n();
  TensorPoly lhs = ad_coaction(braided_mul(x, y));
  TensorPoly ax = ad_coaction(x), ay = ad_coaction(y);
  TensorPoly rhs(n);
  for (const auto& [a, ca] : ax.terms())
    for (const auto& [b, cb] : ay.terms()) {
      NCPoly left = braided_mul(NCPoly::monomial(n, a.first), NCPoly::monomial(n, b.first));
      NCPoly right = NCPoly::monomial(n, a.second) * NCPoly::monomial(n, b.second);
      rhs += (ca * cb) * TensorPoly::pure(left, right);
    }
  if (sl_equal(lhs, rhs)) return true;
  if (witness) *witness = "Ad(x.y) != Ad(x)*Ad(y) for x = " + x.str() + ", y = " + y.str();
  return false;
}

namespace {

using Matrix = std::vector<NCPoly>;  // row-major, N x N

// X on the second slot of V (x) V (slot 0 most significant)
Matrix x_second(int n) {
  int N = n * n;
  Matrix m(static_cast<std::size_t>(N * N), NCPoly(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        m[static_cast<std::size_t>((b * n + a) * N + b * n + c)] = NCPoly::gen(n, a + 1, c + 1);
  return m;
}

Matrix scalar_matrix(int n, const SparseOp& op) {
  int N = n * n;
  Matrix m(static_cast<std::size_t>(N * N), NCPoly(n));
  for (const auto& [out, in, c] : op.sorted())
    m[static_cast<std::size_t>(out) * static_cast<std::size_t>(N) + static_cast<std::size_t>(in)] = NCPoly(n, c);
  return m;
}

template <class Mul>
Matrix mat_mul(int n, const Matrix& a, const Matrix& b, Mul&& mul) {
  int N = n * n;
  Matrix r(static_cast<std::size_t>(N * N), NCPoly(n));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const NCPoly& x = a[static_cast<std::size_t>(i * N + j)];
      if (x.is_zero()) continue;
      for (int k = 0; k < N; ++k) {
        const NCPoly& y = b[static_cast<std::size_t>(j * N + k)];
        if (y.is_zero()) continue;
        r[static_cast<std::size_t>(i * N + k)] += mul(x, y);
      }
    }
  return r;
}

}  // namespace

SuiteReport reflection_check(int n, std::uint64_t seed, int samples, bool ordinary) {
  SuiteReport rep;
  rep.suite = ordinary ? "reflection-ordinary" : "reflection";
  rep.n = n;
  rep.seed = seed;
  auto mul = [&](const NCPoly& x, const NCPoly& y) {
    if (x.degree() <= 0 || y.degree() <= 0 || ordinary) return x * y;
    return braided_mul(x, y);
  };
  int N = n * n;
  Matrix X = x_second(n), R = scalar_matrix(n, r_hat(n));
  Matrix xr = mat_mul(n, X, R, mul);
  Matrix rx = mat_mul(n, R, X, mul);
  std::vector<std::pair<int, int>> entries;
  if (samples <= 0) {
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) entries.emplace_back(i, k);
  } else {
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) entries.emplace_back(pick(rng, N), pick(rng, N));
  }
  for (auto [i, k] : entries) {
    NCPoly lhs(n), rhs(n);
    for (int j = 0; j < N; ++j) {
      const NCPoly& a = xr[static_cast<std::size_t>(i * N + j)];
      const NCPoly& b = xr[static_cast<std::size_t>(j * N + k)];
      if (!a.is_zero() && !b.is_zero()) lhs += mul(a, b);
      const NCPoly& c = rx[static_cast<std::size_t>(i * N + j)];
      const NCPoly& d = rx[static_cast<std::size_t>(j * N + k)];
      if (!c.is_zero() && !d.is_zero()) rhs += mul(c, d);
    }
    States si = decode(static_cast<Idx>(i), 2, n), sk = decode(static_cast<Idx>(k), 2, n);
    std::string id = "entry[" + std::to_string(si[0]) + std::to_string(si[1]) + "," + std::to_string(sk[0]) +
                     std::to_string(sk[1]) + "]";
    bool ok = sl_equal(lhs, rhs);
    rep.add(id, ok, ok ? std::string() : "lhs = " + lhs.str() + "; rhs = " + rhs.str());
  }
  return rep;
}

namespace {

std::vector<NCPoly> generators(int n) {
  std::vector<NCPoly> g;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) g.push_back(NCPoly::gen(n, i, j));
  return g;
}

// index triples: all of them for n = 2, a seeded sample otherwise
std::vector<std::array<int, 3>> triples(int k, bool all, int samples, Rng& rng) {
  std::vector<std::array<int, 3>> r;
  if (all) {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c) r.push_back({a, b, c});
  } else {
    for (int s = 0; s < samples; ++s) r.push_back({pick(rng, k), pick(rng, k), pick(rng, k)});
  }
  return r;
}

}  // namespace

SuiteReport braided_suite(int n, std::uint64_t seed) {
  SuiteReport rep{"braided", n, seed, {}};
  Rng rng(seed * 104729 + static_cast<std::uint64_t>(n));
  std::vector<NCPoly> g = generators(n);
  int k = static_cast<int>(g.size());
  NCPoly one(n, Laurent(1));
  bool exhaustive = n == 2;

  rep.add("ad-unit", ad_coaction(one) == TensorPoly::pure(one, one), ad_coaction(one).str());
  {
    Tally t;
    for (const auto& x : g) {
      std::string w;
      t.add(check_ad_coaction(x, &w), w);
    }
    for (int s = 0; s < 3; ++s) {
      NCPoly x = g[static_cast<std::size_t>(pick(rng, k))] * g[static_cast<std::size_t>(pick(rng, k))];
      std::string w;
      t.add(check_ad_coaction(x, &w), w);
    }
    rep.add("ad-coaction", t.ok, t.witness);
  }
  {
    Tally t;
    for (const auto& x : g) {
      bool ok = sl_equal(braided_mul(one, x), x) && sl_equal(braided_mul(x, one), x);
      t.add(ok, "unit fails on " + x.str());
    }
    rep.add("mul-unit", t.ok, t.witness);
  }
  {
    Tally t;
    for (auto [a, b, c] : triples(k, exhaustive, 64, rng)) {
      const NCPoly &x = g[static_cast<std::size_t>(a)], &y = g[static_cast<std::size_t>(b)], &z = g[static_cast<std::size_t>(c)];
      bool ok = sl_equal(braided_mul(braided_mul(x, y), z), braided_mul(x, braided_mul(y, z)));
      t.add(ok, "x = " + x.str() + ", y = " + y.str() + ", z = " + z.str());
    }
    rep.add("mul-assoc[" + std::to_string(t.count) + "]", t.ok, t.witness);
  }
  {
    SuiteReport r = reflection_check(n, seed, exhaustive ? 0 : 20);
    const Check* f = r.first_failure();
    rep.add("reflection[" + std::to_string(r.checks.size()) + "]", f == nullptr, f ? f->id + ": " + f->witness : "");
    SuiteReport ctrl = reflection_check(n, seed, 0, true);
    rep.add("reflection-ordinary-control", !ctrl.pass(), "plain product satisfies the reflection equation");
  }
  {
    Tally t;
    int pairs = exhaustive ? k * k : 12;
    for (int s = 0; s < pairs; ++s) {
      int a = exhaustive ? s / k : pick(rng, k), b = exhaustive ? s % k : pick(rng, k);
      std::string w;
      t.add(check_comodule_algebra(g[static_cast<std::size_t>(a)], g[static_cast<std::size_t>(b)], &w), w);
    }
    rep.add("comodule-algebra[" + std::to_string(t.count) + "]", t.ok, t.witness);
  }
  {
    std::vector<BtpElem> basis;
    for (const auto& x : g) {
      basis.push_back(TensorPoly::pure(x, one));
      basis.push_back(TensorPoly::pure(one, x));
    }
    BtpElem unit = TensorPoly::pure(one, one);
    Tally tu, ta;
    for (const auto& b : basis) tu.add(btp_mul(unit, b) == b && btp_mul(b, unit) == b, "unit fails on " + b.str());
    int kb = static_cast<int>(basis.size());
    for (auto [a, b, c] : triples(kb, exhaustive, 64, rng)) {
      const BtpElem &x = basis[static_cast<std::size_t>(a)], &y = basis[static_cast<std::size_t>(b)], &z = basis[static_cast<std::size_t>(c)];
      ta.add(sl_equal(btp_mul(btp_mul(x, y), z), btp_mul(x, btp_mul(y, z))), "x = " + x.str() + ", y = " + y.str() + ", z = " + z.str());
    }
    rep.add("btp-unit", tu.ok, tu.witness);
    rep.add("btp-assoc[" + std::to_string(ta.count) + "]", ta.ok, ta.witness);
  }
  return rep;
}

}  // namespace skein

#include "skein/oq.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "skein/rtfunctor.hpp"

namespace skein {

namespace {

using Raw = std::vector<std::pair<Laurent, Monomial>>;

struct Algebra {
  int n;
  std::map<std::pair<char, char>, Raw> rules;  // key (a,b) with a > b
  std::mutex mu;
  std::unordered_map<std::string, NCPoly> mul_memo;  // m + g -> normal form of m*g
};

std::map<std::pair<char, char>, Raw> derive_rules(int n) {
  // entries ((i,k),(j,l)) of (u(x)u) Rhat - Rhat (u(x)u), with (u(x)u)^{ik}_{jl} = u^i_j u^k_l
  SparseOp R = r_hat(n);
  auto Rv = [&](int a, int b, int c, int d) { return R.at(encode({a, b}, n), encode({c, d}, n)); };
  using Eq = std::map<Monomial, Laurent>;
  std::map<std::pair<std::string, std::string>, std::vector<Eq>> groups;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int l = 1; l <= n; ++l) {
          Eq e;
          auto put = [&](int r1, int c1, int r2, int c2, const Laurent& c) {
            if (c.is_zero()) return;
            Monomial w{gen_code(n, r1, c1), gen_code(n, r2, c2)};
            auto& slot = e[w];
            slot += c;
          };
          for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
              put(i, a, k, b, Rv(a, b, j, l));
              put(a, j, b, l, -Rv(i, k, a, b));
            }
          for (auto it = e.begin(); it != e.end();) it = it->second.is_zero() ? e.erase(it) : std::next(it);
          if (e.empty()) continue;
          std::string rows{static_cast<char>(std::min(i, k)), static_cast<char>(std::max(i, k))};
          std::string cols{static_cast<char>(std::min(j, l)), static_cast<char>(std::max(j, l))};
          groups[{rows, cols}].push_back(std::move(e));
        }

  std::map<std::pair<char, char>, Raw> rules;
  for (auto& [key, eqs] : groups) {
    std::vector<Monomial> bad;
    for (const auto& e : eqs)
      for (const auto& [w, c] : e)
        if (w[0] > w[1] && std::find(bad.begin(), bad.end(), w) == bad.end()) bad.push_back(w);
    std::sort(bad.begin(), bad.end());
    std::vector<bool> used(eqs.size(), false);
    std::vector<std::pair<Monomial, std::size_t>> pivots;
    for (const auto& w : bad) {
      std::size_t pick = eqs.size();
      for (std::size_t r = 0; r < eqs.size(); ++r) {
        if (used[r]) continue;
        auto it = eqs[r].find(w);
        if (it == eqs[r].end()) continue;
        if (it->second.is_unit()) {
          pick = r;
          break;
        }
        if (pick == eqs.size()) pick = r;
      }
      if (pick == eqs.size()) throw std::logic_error("derive_rules: no pivot for an out-of-order pair");
      Laurent p = eqs[pick][w];
      Eq normalized;
      for (const auto& [m, c] : eqs[pick]) {
        auto d = c.div_exact(p);
        if (!d) throw std::logic_error("derive_rules: inexact pivot division");
        normalized[m] = *d;
      }
      eqs[pick] = normalized;
      used[pick] = true;
      for (std::size_t r = 0; r < eqs.size(); ++r) {
        if (r == pick) continue;
        auto it = eqs[r].find(w);
        if (it == eqs[r].end()) continue;
        Laurent f = it->second;
        for (const auto& [m, c] : normalized) {
          auto& slot = eqs[r][m];
          slot -= f * c;
        }
        for (auto jt = eqs[r].begin(); jt != eqs[r].end();) jt = jt->second.is_zero() ? eqs[r].erase(jt) : std::next(jt);
      }
      pivots.emplace_back(w, pick);
    }
    for (const auto& [w, r] : pivots) {
      Raw rhs;
      for (const auto& [m, c] : eqs[r]) {
        if (m == w) continue;
        if (m[0] > m[1]) throw std::logic_error("derive_rules: rule not reduced");
        rhs.emplace_back(-c, m);
      }
      rules[{w[0], w[1]}] = std::move(rhs);
    }
  }
  // every out-of-order pair needs a rule
  for (int a = 0; a < n * n; ++a)
    for (int b = 0; b < a; ++b)
      if (!rules.count({static_cast<char>(a), static_cast<char>(b)}))
        throw std::logic_error("derive_rules: missing straightening rule");
  return rules;
}

Algebra& algebra(int n) {
  if (n < 2) throw std::invalid_argument("O_q: n must be at least 2");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Algebra>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<Algebra>();
    slot->n = n;
    slot->rules = derive_rules(n);
  }
  return *slot;
}

// normal monomial m times generator g
const NCPoly& mul_gen(Algebra& alg, const Monomial& m, char g) {
  std::string key = m;
  key.push_back(g);
  {
    std::lock_guard lock(alg.mu);
    auto it = alg.mul_memo.find(key);
    if (it != alg.mul_memo.end()) return it->second;
  }
  NCPoly r(alg.n);
  if (m.empty() || m.back() <= g) {
    r.add_term(key, Laurent(1));
  } else {
    Monomial head = m.substr(0, m.size() - 1);
    for (const auto& [c, yz] : alg.rules.at({m.back(), g})) {
      const NCPoly& left = mul_gen(alg, head, yz[0]);
      for (const auto& [w, d] : left.terms()) {
        const NCPoly& full = mul_gen(alg, w, yz[1]);
        for (const auto& [w2, e] : full.terms()) r.add_term(w2, c * d * e);
      }
    }
  }
  std::lock_guard lock(alg.mu);
  return alg.mul_memo.emplace(std::move(key), std::move(r)).first->second;
}

NCPoly mono_mul(Algebra& alg, const Monomial& a, const Monomial& b) {
  NCPoly cur = NCPoly::monomial(alg.n, a);
  for (char g : b) {
    NCPoly next(alg.n);
    for (const auto& [w, c] : cur.terms())
      for (const auto& [w2, d] : mul_gen(alg, w, g).terms()) next.add_term(w2, c * d);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

// ---------------------------------------------------------------- NCPoly

NCPoly::NCPoly(int n, const Laurent& c) : n_(n) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

NCPoly NCPoly::gen(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("generator index out of range");
  return monomial(n, Monomial(1, gen_code(n, i, j)));
}

NCPoly NCPoly::monomial(int n, const Monomial& m, const Laurent& c) {
  NCPoly r(n);
  r.add_term(m, c);
  return r;
}

int NCPoly::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }

NCPoly NCPoly::homogeneous_part(int d) const {
  NCPoly r(n_);
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) == d) r.terms_.emplace(m, c);
  return r;
}

void NCPoly::add_term(const Monomial& m, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("NCPoly: different n");
  Algebra& alg = algebra(a.n_);
  NCPoly r(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Laurent c = ca * cb;
      for (const auto& [w, d] : mono_mul(alg, ma, mb).terms_) r.add_term(w, c * d);
    }
  return r;
}

NCPoly operator*(const Laurent& c, const NCPoly& a) {
  NCPoly r(a.n_);
  if (c.is_zero()) return r;
  for (const auto& [m, d] : a.terms_) r.terms_.emplace(m, c * d);
  return r;
}

namespace {

std::string mono_str(int n, const Monomial& m) {
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k) s += '*';
    s += "u[" + std::to_string(gen_row(n, m[k])) + "," + std::to_string(gen_col(n, m[k])) + "]";
  }
  return s;
}

std::string term_str(int n, const Monomial& m, const Laurent& c) {
  if (m.empty()) return c.terms().size() == 1 ? c.str() : "(" + c.str() + ")";
  if (c.is_one()) return mono_str(n, m);
  return "(" + c.str() + ")*" + mono_str(n, m);
}

}  // namespace

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += term_str(n_, m, c);
  }
  return s;
}

nlohmann::json NCPoly::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json w = nlohmann::json::array();
    for (char g : m) w.push_back({gen_row(n_, g), gen_col(n_, g)});
    j.push_back({{"coef", c.str()}, {"word", w}});
  }
  return j;
}

NCPoly normal_form(int n, const Monomial& word, const Laurent& c) {
  Algebra& alg = algebra(n);
  for (char g : word)
    if (g < 0 || g >= n * n) throw std::invalid_argument("normal_form: generator out of range");
  return c * mono_mul(alg, Monomial(), word);
}

NCPoly normal_form(int n, const std::vector<std::pair<Laurent, Monomial>>& raw) {
  NCPoly r(n);
  for (const auto& [c, w] : raw) r += normal_form(n, w, c);
  return r;
}

const std::vector<std::pair<Laurent, Monomial>>& straighten(int n, char a, char b) {
  return algebra(n).rules.at({a, b});
}

std::vector<StraighteningRule> straightening_rules(int n) {
  std::vector<StraighteningRule> out;
  for (const auto& [k, rhs] : algebra(n).rules) out.push_back({Monomial{k.first, k.second}, rhs});
  return out;
}

// ---------------------------------------------------------------- determinants

NCPoly quantum_minor(int n, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("quantum_minor: size mismatch");
  std::vector<int> r = rows, c = cols;
  std::sort(r.begin(), r.end());
  std::sort(c.begin(), c.end());
  int k = static_cast<int>(r.size());
  NCPoly res(n);
  Laurent mq = Laurent::mono(-1, q_exp(n, 1));
  for (const auto& p : all_perms(k)) {
    Monomial w;
    for (int s = 0; s < k; ++s) w.push_back(gen_code(n, r[s], c[p[s] - 1]));
    res += normal_form(n, w, mq.pow(perm_length(p)));
  }
  return res;
}

NCPoly detq(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  return quantum_minor(n, all, all);
}

namespace {
std::vector<int> all_but(int n, int x) {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i)
    if (i != x) v.push_back(i);
  return v;
}
}  // namespace

NCPoly ahat(int i, int j, int n) {
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("ahat: index out of range");
  return quantum_minor(n, all_but(n, n + 1 - i), all_but(n, n + 1 - j));
}

// ---------------------------------------------------------------- TensorPoly

TensorPoly TensorPoly::pure(const NCPoly& a, const NCPoly& b) {
  TensorPoly r(a.n());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma, mb, ca * cb);
  return r;
}

void TensorPoly::add_term(const Monomial& a, const Monomial& b, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(Key(a, b), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorPoly operator*(const TensorPoly& x, const TensorPoly& y) {
  Algebra& alg = algebra(x.n_);
  TensorPoly r(x.n_);
  for (const auto& [kx, cx] : x.terms_)
    for (const auto& [ky, cy] : y.terms_) {
      NCPoly a = mono_mul(alg, kx.first, ky.first);
      NCPoly b = mono_mul(alg, kx.second, ky.second);
      Laurent c = cx * cy;
      for (const auto& [ma, da] : a.terms())
        for (const auto& [mb, db] : b.terms()) r.add_term(ma, mb, c * da * db);
    }
  return r;
}

TensorPoly operator*(const Laurent& c, const TensorPoly& x) {
  TensorPoly r(x.n_);
  if (c.is_zero()) return r;
  for (const auto& [k, d] : x.terms_) r.terms_.emplace(k, c * d);
  return r;
}

std::string TensorPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    std::string l = k.first.empty() ? "1" : mono_str(n_, k.first);
    std::string r = k.second.empty() ? "1" : mono_str(n_, k.second);
    s += (c.is_one() ? "" : "(" + c.str() + ")*") + "[" + l + " # " + r + "]";
  }
  return s;
}

nlohmann::json TensorPoly::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [k, c] : terms_)
    j.push_back({{"coef", c.str()},
                 {"left", NCPoly::monomial(n_, k.first).str()},
                 {"right", NCPoly::monomial(n_, k.second).str()}});
  return j;
}

// ---------------------------------------------------------------- Hopf structure

TensorPoly coproduct(const NCPoly& x) {
  int n = x.n();
  TensorPoly r(n);
  for (const auto& [m, c] : x.terms()) {
    TensorPoly cur(n);
    cur.add_term(Monomial(), Monomial(), c);
    for (char g : m) {
      TensorPoly dg(n);
      int i = gen_row(n, g), j = gen_col(n, g);
      for (int k = 1; k <= n; ++k)
        dg.add_term(Monomial(1, gen_code(n, i, k)), Monomial(1, gen_code(n, k, j)), Laurent(1));
      cur = cur * dg;
    }
    r += cur;
  }
  return r;
}

Laurent counit(const NCPoly& x) {
  Laurent r;
  int n = x.n();
  for (const auto& [m, c] : x.terms()) {
    bool diag = std::all_of(m.begin(), m.end(), [&](char g) { return gen_row(n, g) == gen_col(n, g); });
    if (diag) r += c;
  }
  return r;
}

namespace {
const NCPoly& antipode_gen(int n, char g) {
  static std::mutex mu;
  static std::map<std::pair<int, char>, NCPoly> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find({n, g});
    if (it != memo.end()) return it->second;
  }
  int i = gen_row(n, g), j = gen_col(n, g);
  // S(u^i_j) = (-q)^{i-j} M^j_i, the minor deleting row j and column i
  NCPoly s = Laurent::mono(1, q_exp(n, i - j)) * quantum_minor(n, all_but(n, j), all_but(n, i));
  if ((i - j) % 2) s = -s;
  std::lock_guard lock(mu);
  return memo.emplace(std::make_pair(n, g), std::move(s)).first->second;
}
}  // namespace

NCPoly antipode(const NCPoly& x) {
  int n = x.n();
  NCPoly r(n);
  for (const auto& [m, c] : x.terms()) {
    NCPoly cur(n, c);
    for (auto it = m.rbegin(); it != m.rend(); ++it) cur = cur * antipode_gen(n, *it);
    r += cur;
  }
  return r;
}

NCPoly multiply_legs(const TensorPoly& t) {
  Algebra& alg = algebra(t.n());
  NCPoly r(t.n());
  for (const auto& [k, c] : t.terms()) {
    NCPoly prod = mono_mul(alg, k.first, k.second);
    for (const auto& [w, d] : prod.terms()) r.add_term(w, c * d);
  }
  return r;
}

// ---------------------------------------------------------------- quotient by det_q - 1

bool sl_equal(const NCPoly& x, const NCPoly& y) {
  if (x.n() != y.n()) throw std::invalid_argument("sl_equal: different n");
  int n = x.n();
  NCPoly z = x - y;
  if (z.is_zero()) return true;
  int D = z.degree();
  NCPoly det = detq(n);
  // z = w (det - 1) with w = sum w_e forces w_d = w_{d-n} det - z_d
  std::vector<NCPoly> w(static_cast<std::size_t>(D + 1), NCPoly(n));
  for (int d = 0; d <= D; ++d) {
    NCPoly wd = -z.homogeneous_part(d);
    if (d - n >= 0) wd += w[static_cast<std::size_t>(d - n)] * det;
    w[static_cast<std::size_t>(d)] = std::move(wd);
  }
  for (int d = std::max(0, D - n + 1); d <= D; ++d)
    if (!w[static_cast<std::size_t>(d)].is_zero()) return false;
  return true;
}

namespace {
// det^k cached
const NCPoly& det_power(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, NCPoly> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
  }
  NCPoly r = k == 0 ? NCPoly(n, Laurent(1)) : det_power(n, k - 1) * detq(n);
  std::lock_guard lock(mu);
  return memo.emplace(std::make_pair(n, k), std::move(r)).first->second;
}
}  // namespace

bool sl_equal(const TensorPoly& x, const TensorPoly& y) {
  // The map sending a homogeneous x_d to x_d det^{(N-d)/n} (N the top degree of
  // its residue class mod n) kills (det - 1) and is injective on the quotient;
  // applied on both legs it decides equality in O_q(SL) (x) O_q(SL).
  if (x.n() != y.n()) throw std::invalid_argument("sl_equal: different n");
  int n = x.n();
  TensorPoly z = x - y;
  if (z.is_zero()) return true;
  std::map<std::pair<int, int>, std::pair<int, int>> top;
  for (const auto& [k, c] : z.terms()) {
    int d1 = static_cast<int>(k.first.size()), d2 = static_cast<int>(k.second.size());
    auto& t = top.try_emplace({d1 % n, d2 % n}, d1, d2).first->second;
    t.first = std::max(t.first, d1);
    t.second = std::max(t.second, d2);
  }
  TensorPoly h(n);
  for (const auto& [k, c] : z.terms()) {
    int d1 = static_cast<int>(k.first.size()), d2 = static_cast<int>(k.second.size());
    auto t = top.at({d1 % n, d2 % n});
    NCPoly a = NCPoly::monomial(n, k.first) * det_power(n, (t.first - d1) / n);
    NCPoly b = NCPoly::monomial(n, k.second) * det_power(n, (t.second - d2) / n);
    h += c * TensorPoly::pure(a, b);
  }
  return h.is_zero();
}

// ---------------------------------------------------------------- co-R-matrix

Laurent r_entry(int n, int i, int k, int j, int l) {
  // R^{ik}_{jl} = <(k,i)| Rhat |(j,l)>
  return r_hat(n).at(encode({k, i}, n), encode({j, l}, n));
}

namespace {

struct RTable {
  std::vector<Laurent> v;  // index ((i*n+k)*n+j)*n+l, 0-based
};

const RTable& rtable(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<RTable>();
    slot->v.resize(static_cast<std::size_t>(n * n * n * n));
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j)
          for (int l = 1; l <= n; ++l)
            slot->v[static_cast<std::size_t>((((i - 1) * n + k - 1) * n + j - 1) * n + l - 1)] = r_entry(n, i, k, j, l);
  }
  return *slot;
}

using RhoKey = std::tuple<int, Monomial, Monomial>;

struct RhoCache {
  std::mutex mu;
  std::map<RhoKey, Laurent> memo;
};

RhoCache& rho_cache() {
  static RhoCache c;
  return c;
}

// Each letter of x is a strand crossing the letters of y from the last to the first;
// the state is the current index on every y strand plus the index carried by the x strand.
Laurent rho_sweep(int n, const Monomial& x, const Monomial& y) {
  const auto& R = rtable(n).v;
  int p = static_cast<int>(y.size());
  std::vector<int> rows(static_cast<std::size_t>(p)), cols(static_cast<std::size_t>(p));
  for (int s = 0; s < p; ++s) {
    rows[static_cast<std::size_t>(s)] = gen_row(n, y[static_cast<std::size_t>(s)]);
    cols[static_cast<std::size_t>(s)] = gen_col(n, y[static_cast<std::size_t>(s)]);
  }
  std::vector<Idx> place(static_cast<std::size_t>(p));
  for (int s = 0; s < p; ++s) place[static_cast<std::size_t>(s)] = ipow(n, p - 1 - s);
  std::unordered_map<Idx, Laurent> cur{{encode(rows, n), Laurent(1)}};
  for (char letter : x) {
    int a = gen_row(n, letter), b = gen_col(n, letter);
    // key = K * n + (m - 1)
    std::unordered_map<Idx, Laurent> st;
    for (auto& [K, c] : cur) st[K * static_cast<Idx>(n) + static_cast<Idx>(a - 1)] = c;
    for (int s = p - 1; s >= 0; --s) {
      Idx pl = place[static_cast<std::size_t>(s)];
      std::unordered_map<Idx, Laurent> next;
      for (const auto& [key, c] : st) {
        int m0 = static_cast<int>(key % static_cast<Idx>(n)) + 1;
        Idx K = key / static_cast<Idx>(n);
        int kk = static_cast<int>((K / pl) % static_cast<Idx>(n)) + 1;
        Idx base = K - static_cast<Idx>(kk - 1) * pl;
        for (int m1 = 1; m1 <= n; ++m1)
          for (int ll = 1; ll <= n; ++ll) {
            const Laurent& r = R[static_cast<std::size_t>((((m0 - 1) * n + kk - 1) * n + m1 - 1) * n + ll - 1)];
            if (r.is_zero()) continue;
            Idx K2 = base + static_cast<Idx>(ll - 1) * pl;
            next[K2 * static_cast<Idx>(n) + static_cast<Idx>(m1 - 1)] += c * r;
          }
      }
      st = std::move(next);
    }
    cur.clear();
    for (const auto& [key, c] : st)
      if (static_cast<int>(key % static_cast<Idx>(n)) + 1 == b && !c.is_zero()) cur[key / static_cast<Idx>(n)] += c;
  }
  auto it = cur.find(encode(cols, n));
  return it == cur.end() ? Laurent() : it->second;
}

}  // namespace

Laurent rho_word(int n, const Monomial& x, const Monomial& y) {
  auto& cache = rho_cache();
  RhoKey key{n, x, y};
  {
    std::lock_guard<std::mutex> lk(cache.mu);
    auto it = cache.memo.find(key);
    if (it != cache.memo.end()) return it->second;
  }
  Laurent r = rho_sweep(n, x, y);
  std::lock_guard<std::mutex> lk(cache.mu);
  cache.memo.emplace(std::move(key), r);
  return r;
}

Laurent rho(const NCPoly& x, const NCPoly& y) {
  if (x.n() != y.n()) throw std::invalid_argument("rho: different n");
  Laurent r;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) r += cx * cy * rho_word(x.n(), mx, my);
  return r;
}

Laurent rho_bar(const NCPoly& x, const NCPoly& y) { return rho(antipode(x), y); }

// ---------------------------------------------------------------- element grammar

namespace {

class ElementParser {
 public:
  ElementParser(const std::string& s, int n) : s_(s), n_(n) {}

  NCPoly parse() {
    NCPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("element: " + msg + " at column " + std::to_string(pos_ + 1));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool keyword(const std::string& k) {
    skip();
    if (s_.compare(pos_, k.size(), k) == 0) {
      pos_ += k.size();
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
      fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }
  std::pair<int, int> index_pair() {
    expect('[');
    long i = integer();
    expect(',');
    long j = integer();
    expect(']');
    if (i < 1 || i > n_ || j < 1 || j > n_) fail("index out of range");
    return {static_cast<int>(i), static_cast<int>(j)};
  }

  NCPoly expr() {
    NCPoly r = term();
    for (;;) {
      if (accept('+')) r += term();
      else if (accept('-')) r -= term();
      else return r;
    }
  }
  NCPoly term() {
    bool neg = false;
    while (true) {
      if (accept('-')) neg = !neg;
      else if (!accept('+')) break;
    }
    NCPoly r = factor();
    while (accept('*')) r = r * factor();
    return neg ? -r : r;
  }
  NCPoly factor() {
    NCPoly base = atom();
    if (accept('^')) {
      long k = integer();
      if (k < 0) {
        if (base.degree() != 0 || !base.terms().begin()->second.is_unit()) fail("negative power of a non-unit");
        return NCPoly(n_, base.terms().begin()->second.pow(static_cast<int>(k)));
      }
      NCPoly r(n_, Laurent(1));
      for (long s = 0; s < k; ++s) r = r * base;
      return r;
    }
    return base;
  }
  NCPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NCPoly r = expr();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return NCPoly(n_, Laurent(integer()));
    if (keyword("detq")) return detq(n_);
    if (keyword("ah")) {
      auto [i, j] = index_pair();
      return ahat(i, j, n_);
    }
    if (keyword("u")) {
      auto [i, j] = index_pair();
      return NCPoly::gen(n_, i, j);
    }
    if (keyword("v")) return NCPoly(n_, Laurent::v(1));
    fail("unknown token");
  }

  const std::string& s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_element(const std::string& text, int n) { return ElementParser(text, n).parse(); }

}  // namespace skein

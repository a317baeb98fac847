#include "skein/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace skein {

Laurent::Laurent(long c) {
  if (c != 0) terms_.emplace_back(0, mpz_class(c));
}

Laurent Laurent::mono(long c, int e) {
  Laurent r;
  if (c != 0) r.terms_.emplace_back(e, mpz_class(c));
  return r;
}

bool Laurent::is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }

bool Laurent::is_unit() const { return terms_.size() == 1 && abs(terms_[0].second) == 1; }

int Laurent::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of zero");
  return terms_.front().first;
}

int Laurent::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of zero");
  return terms_.back().first;
}

mpz_class Laurent::coeff(int e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

void Laurent::add_term(int e, const mpz_class& c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term(e, c));
  }
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  if (&o == this) return *this += Laurent(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.cbegin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      mpz_class s = a->second + b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a, ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const Laurent& m = a.terms_.size() == 1 ? a : b;
    const Laurent& o = a.terms_.size() == 1 ? b : a;
    r.terms_.reserve(o.terms_.size());
    for (const auto& t : o.terms_) r.terms_.emplace_back(t.first + m.terms_[0].first, t.second * m.terms_[0].second);
    return r;
  }
  int lo = a.terms_.front().first + b.terms_.front().first;
  int hi = a.terms_.back().first + b.terms_.back().first;
  std::vector<mpz_class> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) acc[static_cast<std::size_t>(x.first + y.first - lo)] += x.second * y.second;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) r.terms_.emplace_back(lo + static_cast<int>(i), std::move(acc[i]));
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::shift(int e) const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.first += e;
  return r;
}

Laurent Laurent::inv() const {
  if (!is_unit()) throw std::domain_error("not a unit: " + str());
  return mono(terms_[0].second.get_si(), -terms_[0].first);
}

Laurent Laurent::pow(int k) const {
  if (k < 0) return inv().pow(-k);
  Laurent r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

std::optional<Laurent> Laurent::div_exact(const Laurent& o) const {
  if (o.is_zero()) return std::nullopt;
  if (is_zero()) return Laurent();
  Laurent rem = *this, quot;
  const auto& lead = o.terms_.back();
  while (!rem.is_zero()) {
    if (rem.max_exp() - rem.min_exp() < o.max_exp() - o.min_exp()) return std::nullopt;
    const auto& top = rem.terms_.back();
    if (!mpz_divisible_p(top.second.get_mpz_t(), lead.second.get_mpz_t())) return std::nullopt;
    mpz_class c = top.second / lead.second;
    int e = top.first - lead.first;
    Laurent m;
    m.terms_.emplace_back(e, c);
    quot += m;
    rem -= m * o;
  }
  return quot;
}

Laurent Laurent::bar() const {
  Laurent r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
  return r;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    const auto& [e, c] = *it;
    if (e == 0) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += "v^" + std::to_string(e);
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.str(); }

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool at_end() {
    ws();
    return i >= s.size();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(i + 1) + " in '" + std::string(s) + "'");
  }
  std::optional<std::string> digits() {
    ws();
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) return std::nullopt;
    std::string d(s.substr(i, j - i));
    i = j;
    return d;
  }
  int signed_int() {
    bool neg = false;
    while (true) {
      if (eat('-'))
        neg = !neg;
      else if (!eat('+'))
        break;
    }
    auto d = digits();
    if (!d) fail("expected integer");
    long x = std::stol(*d);
    return static_cast<int>(neg ? -x : x);
  }
};

}  // namespace

Laurent Laurent::parse(std::string_view text) {
  Cursor c{text};
  Laurent r;
  bool first = true;
  while (!c.at_end()) {
    bool neg = false;
    bool had_sign = false;
    while (true) {
      if (c.eat('-')) {
        neg = !neg;
        had_sign = true;
      } else if (c.eat('+')) {
        had_sign = true;
      } else {
        break;
      }
    }
    if (!first && !had_sign) c.fail("expected '+' or '-'");
    first = false;
    mpz_class coef = 1;
    int e = 0;
    bool any = false;
    if (auto d = c.digits()) {
      coef = mpz_class(*d);
      any = true;
      if (c.eat('*')) {
        if (!c.eat('v')) c.fail("expected 'v'");
        e = c.eat('^') ? c.signed_int() : 1;
      }
    } else if (c.eat('v')) {
      any = true;
      e = c.eat('^') ? c.signed_int() : 1;
    }
    if (!any) c.fail("expected term");
    r.add_term(e, neg ? mpz_class(-coef) : coef);
  }
  if (first) c.fail("empty polynomial");
  return r;
}

nlohmann::json Laurent::to_json() const {
  auto j = nlohmann::json::array();
  for (const auto& [e, c] : terms_) j.push_back({e, c.get_str()});
  return j;
}

Laurent Laurent::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("laurent json must be an array");
  Laurent r;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer()) throw ParseError("bad laurent term");
    mpz_class c = t[1].is_string() ? mpz_class(t[1].get<std::string>()) : mpz_class(t[1].get<long>());
    r.add_term(t[0].get<int>(), c);
  }
  return r;
}

std::size_t Laurent::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [e, c] : terms_) {
    h ^= std::hash<int>()(e) + 0x9e3779b9 + (h << 6) + (h >> 2);
    h ^= std::hash<long>()(c.get_si()) + 0x9e3779b9 + (h << 6) + (h >> 2);
  }
  return h;
}

int q_exp(int n, long num, long den) {
  long top = 2L * n * num;
  if (den == 0 || top % den != 0)
    throw std::logic_error("q^(" + std::to_string(num) + "/" + std::to_string(den) + ") is not integral in v for n=" +
                           std::to_string(n));
  return static_cast<int>(top / den);
}

Laurent quantum_int(int m, int n) {
  if (m < 0) throw std::invalid_argument("quantum_int: m < 0");
  Laurent r;
  for (int k = 0; k < m; ++k) r += qpow(n, m - 1 - 2 * k);
  return r;
}

Laurent quantum_factorial(int m, int n) {
  Laurent r(1);
  for (int k = 2; k <= m; ++k) r *= quantum_int(k, n);
  return r;
}

ScalarTable scalar_table(int n) {
  if (n < 2) throw std::invalid_argument("scalar_table: n must be >= 2");
  ScalarTable s;
  s.n = n;
  long nn = static_cast<long>(n) * n;
  long binom = static_cast<long>(n) * (n - 1) / 2;
  int sgn_n1 = (n - 1) % 2 ? -1 : 1;
  // t0^(1/2) = q^((n^2-1)/(2n))
  s.t0_half = qpow(n, nn - 1, 2L * n);
  s.t = Laurent::mono(sgn_n1, q_exp(n, nn - 1, n));
  s.t_half_pow_n = Laurent::mono(binom % 2 ? -1 : 1, q_exp(n, nn - 1, 2));
  s.a = qpow(n, (1L - n) * (2L * n + 1), 4);
  s.c.assign(n + 1, Laurent());
  s.c_inv.assign(n + 1, Laurent());
  s.g.assign(n + 1, Laurent());
  s.d2.assign(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    s.d2[i] = 2 * i - n - 1;
    int sg = (n - i) % 2 ? -1 : 1;
    // c_i = (-1)^(n-i) q^(-d_i) t0^(1/2)
    s.c[i] = Laurent::mono(sg, q_exp(n, -s.d2[i], 2)) * s.t0_half;
    s.c_inv[i] = s.c[i].inv();
    s.g[i] = Laurent::mono(sgn_n1, q_exp(n, s.d2[i]));
  }
  return s;
}

const ScalarTable& scalars(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ScalarTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<ScalarTable>(scalar_table(n));
  return *slot;
}

bool is_perm(const Perm& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int x : p) {
    if (x < 1 || x > static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

int perm_length(const Perm& p) {
  if (!is_perm(p)) throw std::invalid_argument("perm_length: not a permutation");
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

std::vector<int> min_braid_word(const Perm& p) {
  if (!is_perm(p)) throw std::invalid_argument("min_braid_word: not a permutation");
  // bubble sort; each swap of an adjacent descent removes one inversion
  Perm w = p;
  std::vector<int> word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<Perm> all_perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm longest_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = n - i;
  return p;
}

}  // namespace skein

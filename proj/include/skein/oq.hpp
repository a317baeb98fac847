#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "skein/ring.hpp"

namespace skein {

// A word in the generators u^i_j, stored as bytes g = (i-1)n + (j-1).
using Monomial = std::string;

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

inline char gen_code(int n, int i, int j) { return static_cast<char>((i - 1) * n + (j - 1)); }
inline int gen_row(int n, char g) { return static_cast<unsigned char>(g) / n + 1; }
inline int gen_col(int n, char g) { return static_cast<unsigned char>(g) % n + 1; }

// Element of O_q(M(n)) in PBW normal form.
class NCPoly {
 public:
  using Terms = std::map<Monomial, Laurent, MonoLess>;

  NCPoly() = default;
  explicit NCPoly(int n) : n_(n) {}
  NCPoly(int n, const Laurent& c);
  static NCPoly gen(int n, int i, int j);
  // wraps an already normal monomial
  static NCPoly monomial(int n, const Monomial& m, const Laurent& c = Laurent(1));

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  NCPoly homogeneous_part(int d) const;
  void add_term(const Monomial& m, const Laurent& c);  // m must be normal

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly operator-() const;
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const Laurent& c, const NCPoly& a);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  int n_ = 2;
  Terms terms_;
};

// Normal form of an arbitrary word.
NCPoly normal_form(int n, const Monomial& word, const Laurent& c = Laurent(1));
NCPoly normal_form(int n, const std::vector<std::pair<Laurent, Monomial>>& raw);
// Straightening of an out-of-order adjacent pair (a > b) as normal pairs.
const std::vector<std::pair<Laurent, Monomial>>& straighten(int n, char a, char b);

NCPoly detq(int n);
NCPoly quantum_minor(int n, const std::vector<int>& rows, const std::vector<int>& cols);
NCPoly ahat(int i, int j, int n);

// Element of O_q(M(n)) (x) O_q(M(n)).
class TensorPoly {
 public:
  using Key = std::pair<Monomial, Monomial>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      MonoLess l;
      if (l(a.first, b.first)) return true;
      if (l(b.first, a.first)) return false;
      return l(a.second, b.second);
    }
  };
  using Terms = std::map<Key, Laurent, KeyLess>;

  TensorPoly() = default;
  explicit TensorPoly(int n) : n_(n) {}
  static TensorPoly pure(const NCPoly& a, const NCPoly& b);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Monomial& a, const Monomial& b, const Laurent& c);

  TensorPoly& operator+=(const TensorPoly& o);
  TensorPoly& operator-=(const TensorPoly& o);
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
  // componentwise product (a(x)b)(c(x)d) = ac (x) bd
  friend TensorPoly operator*(const TensorPoly& x, const TensorPoly& y);
  friend TensorPoly operator*(const Laurent& c, const TensorPoly& x);
  friend bool operator==(const TensorPoly& a, const TensorPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  int n_ = 2;
  Terms terms_;
};

// Apply a linear map to one leg.
template <class F>
TensorPoly map_left(const TensorPoly& t, F&& f) {
  TensorPoly r(t.n());
  for (const auto& [k, c] : t.terms()) {
    NCPoly img = f(NCPoly::monomial(t.n(), k.first));
    for (const auto& [m, d] : img.terms()) r.add_term(m, k.second, c * d);
  }
  return r;
}
template <class F>
TensorPoly map_right(const TensorPoly& t, F&& f) {
  TensorPoly r(t.n());
  for (const auto& [k, c] : t.terms()) {
    NCPoly img = f(NCPoly::monomial(t.n(), k.second));
    for (const auto& [m, d] : img.terms()) r.add_term(k.first, m, c * d);
  }
  return r;
}

TensorPoly coproduct(const NCPoly& x);
Laurent counit(const NCPoly& x);
NCPoly antipode(const NCPoly& x);
// multiplication O (x) O -> O
NCPoly multiply_legs(const TensorPoly& t);

// Decide x - y in the two-sided ideal (det_q - 1).
bool sl_equal(const NCPoly& x, const NCPoly& y);
// Leg-wise: the difference lies in I (x) O + O (x) I.
bool sl_equal(const TensorPoly& x, const TensorPoly& y);

// Co-R-matrix.
Laurent rho(const NCPoly& x, const NCPoly& y);
Laurent rho_word(int n, const Monomial& x, const Monomial& y);
Laurent rho_bar(const NCPoly& x, const NCPoly& y);
// R^{ik}_{jl}
Laurent r_entry(int n, int i, int k, int j, int l);

// Element grammar: u[i,j], ah[i,j], detq, v, v^k, integers, ( ), *, +, -, ^k.
NCPoly parse_element(const std::string& text, int n);

// The out-of-order pairs and their straightening, for inspection and tests.
struct StraighteningRule {
  Monomial lhs;
  std::vector<std::pair<Laurent, Monomial>> rhs;
};
std::vector<StraighteningRule> straightening_rules(int n);

}  // namespace skein

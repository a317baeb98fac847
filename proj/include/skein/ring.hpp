#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace skein {

// Element of Z[v, v^-1]. Terms are kept sorted by exponent with no zero
// coefficients, so structural equality is ring equality.
class Laurent {
 public:
  using Term = std::pair<int, mpz_class>;

  Laurent() = default;
  Laurent(long c);  // NOLINT: implicit integer constants are convenient
  static Laurent mono(long c, int e);
  static Laurent v(int e) { return mono(1, e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // ±v^k
  bool is_unit() const;
  const std::vector<Term>& terms() const { return terms_; }
  int min_exp() const;
  int max_exp() const;
  mpz_class coeff(int e) const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  // multiply by v^e
  Laurent shift(int e) const;
  // inverse of a unit, throws otherwise
  Laurent inv() const;
  // integer power; negative exponents need a unit
  Laurent pow(int k) const;
  // exact quotient, nullopt when o does not divide *this
  std::optional<Laurent> div_exact(const Laurent& o) const;
  // v -> v^-1
  Laurent bar() const;

  std::string str() const;
  static Laurent parse(std::string_view s);
  nlohmann::json to_json() const;
  static Laurent from_json(const nlohmann::json& j);

  std::size_t hash() const;

 private:
  void add_term(int e, const mpz_class& c);
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Laurent& p);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// v-exponent of q^(num/den) with q = v^(2n); throws if not integral
int q_exp(int n, long num, long den = 1);
inline Laurent qpow(int n, long num, long den = 1) { return Laurent::v(q_exp(n, num, den)); }

Laurent quantum_int(int m, int n);
Laurent quantum_factorial(int m, int n);

struct ScalarTable {
  int n = 0;
  Laurent t0_half, t, t_half_pow_n, a;
  // 1-based; index 0 unused
  std::vector<Laurent> c, g, c_inv;
  std::vector<int> d2;

  int bar(int i) const { return n + 1 - i; }
};

ScalarTable scalar_table(int n);
// cached, thread-safe
const ScalarTable& scalars(int n);

using Perm = std::vector<int>;  // 1-based images

bool is_perm(const Perm& p);
int perm_length(const Perm& p);
// reduced word of adjacent transpositions (1-based indices) with length perm_length(p)
std::vector<int> min_braid_word(const Perm& p);
std::vector<Perm> all_perms(int n);
Perm longest_perm(int n);

}  // namespace skein

template <>
struct std::hash<skein::Laurent> {
  std::size_t operator()(const skein::Laurent& p) const { return p.hash(); }
};

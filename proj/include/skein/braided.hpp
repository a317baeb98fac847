#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "skein/oq.hpp"
#include "skein/report.hpp"

namespace skein {

// Element of O_q (x) O_q carrying the braided tensor product.
using BtpElem = TensorPoly;

// Element of O_q (x) O_q (x) O_q.
struct Tensor3 {
  int n = 2;
  std::map<std::array<Monomial, 3>, Laurent> terms;
  void add(const Monomial& a, const Monomial& b, const Monomial& c, const Laurent& k);
};

Tensor3 operator-(const Tensor3& a, const Tensor3& b);
bool sl_equal(const Tensor3& x, const Tensor3& y);

// (Delta (x) id) Delta
Tensor3 coproduct2(const NCPoly& x);

TensorPoly ad_coaction(const NCPoly& x);
NCPoly braided_mul(const NCPoly& x, const NCPoly& y);
BtpElem btp_mul(const BtpElem& p, const BtpElem& q);

// (Ad (x) id) Ad(x) = (id (x) Delta) Ad(x) and (id (x) eps) Ad(x) = x
bool check_ad_coaction(const NCPoly& x, std::string* witness = nullptr);
// Ad(x . y) = Ad(x) * Ad(y) with the braided product on the first leg
bool check_comodule_algebra(const NCPoly& x, const NCPoly& y, std::string* witness = nullptr);

// X_2 Rhat X_2 Rhat = Rhat X_2 Rhat X_2 entry-wise, X = (u^i_j).
// samples = 0 checks every entry; ordinary = true uses the plain product.
SuiteReport reflection_check(int n, std::uint64_t seed = 0, int samples = 0, bool ordinary = false);

SuiteReport braided_suite(int n, std::uint64_t seed = 0);

}  // namespace skein

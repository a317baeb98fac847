#include "doctest.h"
#include "skein/braided.hpp"
#include "skein/random.hpp"

using namespace skein;

namespace {

NCPoly u(int n, int i, int j) { return NCPoly::gen(n, i, j); }
NCPoly one(int n) { return NCPoly(n, Laurent(1)); }

}  // namespace

// frozen reference values
TEST_CASE("braided square of u11") {
  CHECK(braided_mul(u(2, 1, 1), u(2, 1, 1)).str() == "u[1,1]*u[1,1] + (-1*v^-4 + v^-12)*u[1,2]*u[2,1]");
  CHECK(braided_mul(u(3, 1, 1), u(3, 1, 1)).str() ==
        "u[1,1]*u[1,1] + (-1*v^-6 + v^-18)*u[1,2]*u[2,1] + (-1*v^-18 + v^-30)*u[1,3]*u[3,1]");
}

TEST_CASE("braided tensor product of crossed generators") {
  BtpElem a = TensorPoly::pure(one(2), u(2, 1, 1)), b = TensorPoly::pure(u(2, 1, 1), one(2));
  CHECK(btp_mul(a, b).str() == "(v^2)*[u[1,1] # u[1,1]]");
  CHECK(btp_mul(b, a) == TensorPoly::pure(u(2, 1, 1), u(2, 1, 1)));
  BtpElem a3 = TensorPoly::pure(one(3), u(3, 1, 1)), b3 = TensorPoly::pure(u(3, 1, 1), one(3));
  CHECK(btp_mul(a3, b3).str() == "(v^4)*[u[1,1] # u[1,1]]");
}

TEST_CASE("units") {
  for (int n = 2; n <= 3; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        CHECK(braided_mul(one(n), u(n, i, j)) == u(n, i, j));
        CHECK(braided_mul(u(n, i, j), one(n)) == u(n, i, j));
        CHECK(sl_equal(ad_coaction(one(n)), TensorPoly::pure(one(n), one(n))));
      }
}

TEST_CASE("braided product is associative on seeded generator triples") {
  for (int n = 2; n <= 3; ++n) {
    Rng rng(61 + n);
    for (int k = 0; k < 12; ++k) {
      NCPoly x = u(n, 1 + pick(rng, n), 1 + pick(rng, n));
      NCPoly y = u(n, 1 + pick(rng, n), 1 + pick(rng, n));
      NCPoly z = u(n, 1 + pick(rng, n), 1 + pick(rng, n));
      CAPTURE(x.str() + " " + y.str() + " " + z.str());
      CHECK(sl_equal(braided_mul(braided_mul(x, y), z), braided_mul(x, braided_mul(y, z))));
    }
  }
}

TEST_CASE("adjoint coaction and comodule algebra") {
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      std::string w;
      CHECK_MESSAGE(check_ad_coaction(u(2, i, j), &w), w);
      CHECK_MESSAGE(check_comodule_algebra(u(2, i, j), u(2, j, i), &w), w);
    }
}

TEST_CASE("reflection equation holds for the braided product only") {
  CHECK(reflection_check(2).pass());
  CHECK_FALSE(reflection_check(2, 0, 0, true).pass());
  CHECK(reflection_check(3, 5, 6).pass());
}

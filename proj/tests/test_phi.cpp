#include "doctest.h"
#include "oracle.hpp"
#include "skein/random.hpp"
#include "skein/skeinmap.hpp"

using namespace skein;

namespace {

Laurent to_laurent(const oracle::Poly& p) {
  Laurent r;
  for (auto [e, k] : p.c) r += Laurent::mono(static_cast<long>(k), e);
  return r;
}

StatedWeb stated(SlicedWeb w, States l, States r) { return {std::move(w), std::move(l), std::move(r)}; }

}  // namespace

TEST_CASE("phi of a crossing is the R-matrix row times generators") {
  for (int n = 2; n <= 3; ++n) {
    oracle::Mat r = oracle::r_hat(n);
    SlicedWeb x = webs::single(n, Token::of(Kind::CrossPos));
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c)
          for (int d = 1; d <= n; ++d) {
            NCPoly want(n);
            for (int k0 = 1; k0 <= n; ++k0)
              for (int k1 = 1; k1 <= n; ++k1) {
                const oracle::Poly& e = r.at(oracle::index({a, b}, n), oracle::index({k0, k1}, n));
                if (!e.zero()) want += NCPoly(n, to_laurent(e)) * NCPoly::gen(n, k0, c) * NCPoly::gen(n, k1, d);
              }
            CHECK(phi(stated(x, {a, b}, {c, d})) == want);
          }
  }
  CHECK(phi(stated(webs::single(2, Token::of(Kind::CrossPos)), {1, 2}, {2, 1})).str() == "(v^-2)*u[1,1]*u[2,2]");
}

TEST_CASE("phi of strands") {
  for (int n = 2; n <= 3; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        CHECK(phi(stated(webs::strands(n, {1}), {i}, {j})) == NCPoly::gen(n, i, j));
        CHECK(phi(stated(webs::strands(n, {-1}), {i}, {j})) == ahat(i, j, n));
      }
}

TEST_CASE("counit of phi is the RT entry on seeded webs") {
  for (int n = 2; n <= 3; ++n) {
    Rng rng(300 + n);
    for (int k = 0; k < 40; ++k) {
      StatedWeb w = random_stated_web(n, rng);
      CAPTURE(web_to_json(w).dump());
      CHECK(counit(phi(w)) == rt_entry(w));
      CHECK(skein_counit(w) == rt_entry(w));
    }
  }
}

TEST_CASE("splitting and stacking on seeded webs") {
  Rng rng(404);
  WebGenOptions small{3, 4, true, true};
  for (int k = 0; k < 25; ++k) {
    StatedWeb w = random_stated_web(2, rng);
    CAPTURE(web_to_json(w).dump());
    CHECK(sl_equal(splitting(w), coproduct(phi(w))));
    StatedWeb a = random_stated_web(2, rng, small), b = random_stated_web(2, rng, small);
    CHECK(sl_equal(phi(stack(a, b)), phi(a) * phi(b)));
  }
}

TEST_CASE("half twists and markings") {
  for (int n = 2; n <= 3; ++n) {
    Rng rng(500 + n);
    for (int k = 0; k < 15; ++k) {
      StatedWeb w = random_stated_web(n, rng, {3, 4, true, true});
      Side side = k % 2 ? Side::Left : Side::Right;
      auto [c1, w1] = half_twist_compose(w, side, true);
      auto [c2, w2] = half_twist_compose(w1, side, false);
      CHECK((c1 * c2).is_one());
      CHECK(sl_equal(phi(w2), phi(w)));
      auto [g, same] = marking_auto(w, side);
      const States& st = side == Side::Right ? *w.right : *w.left;
      Laurent want = Laurent(1);
      for (int s : st) want *= to_laurent(oracle::g(n, s));
      CHECK(g == want);
      CHECK(web_to_json(same) == web_to_json(w));
    }
  }
}

TEST_CASE("phi rejects half-stated webs") {
  StatedWeb w{webs::strands(2, {1}), States{1}, std::nullopt};
  CHECK_THROWS_AS(phi(w), WebError);
}

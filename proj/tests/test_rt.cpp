#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "skein/diagram.hpp"
#include "skein/random.hpp"
#include "skein/rtfunctor.hpp"

using namespace skein;
using oracle::Mat;

namespace {

Mat r_on(int n, int k, int i, const Mat& r) {
  return oracle::kron(oracle::kron(Mat::id(oracle::ipow(n, i)), r), Mat::id(oracle::ipow(n, k - i - 2)));
}

StatedWeb load(const std::string& text) { return parse_web(text); }

}  // namespace

TEST_CASE("braiding matches the R-matrix formula") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(matches(r_hat(n), oracle::r_hat(n)));
    CHECK(matches(r_hat_inv(n), oracle::r_hat_inv(n)));
    Mat id = Mat::id(n * n);
    CHECK(oracle::mul(oracle::r_hat(n), oracle::r_hat_inv(n)) == id);
  }
}

TEST_CASE("Yang-Baxter relation in dense arithmetic") {
  for (int n = 2; n <= 3; ++n) {
    CAPTURE(n);
    Mat r = oracle::r_hat(n);
    Mat r1 = r_on(n, 3, 0, r), r2 = r_on(n, 3, 1, r);
    CHECK(oracle::mul(r1, oracle::mul(r2, r1)) == oracle::mul(r2, oracle::mul(r1, r2)));
  }
}

TEST_CASE("primitives agree with the dense formulas") {
  for (int n = 2; n <= 3; ++n)
    for (Kind k : {Kind::IdPlus, Kind::CrossPos, Kind::CrossNeg, Kind::CapEv, Kind::CapTildeEv, Kind::CupCoev,
                   Kind::CupTildeCoev, Kind::Sink, Kind::Source}) {
      CAPTURE(n);
      CAPTURE(static_cast<int>(k));
      CHECK(matches(elementary_matrix(Token::of(k), n), oracle::primitive(k, n)));
    }
}

TEST_CASE("evaluation of seeded random webs matches the dense oracle") {
  for (int n = 2; n <= 3; ++n) {
    Rng rng(100 + n);
    WebGenOptions opt;
    opt.max_width = n == 2 ? 5 : 3;
    for (int k = 0; k < 40; ++k) {
      SlicedWeb w = random_web(n, rng, opt);
      SlicedWeb p = expand_macros(w);
      CAPTURE(web_to_json({w, std::nullopt, std::nullopt}).dump());
      CHECK(matches(eval(w), oracle::eval(p)));
    }
  }
}

TEST_CASE("named webs") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const auto& sc = scalars(n);
    CHECK(eval(webs::kink(n, 1)) == SparseOp::identity(n, 1) * sc.t);
    CHECK(eval(webs::kink(n, -1)) == SparseOp::identity(n, 1) * sc.t.inv());
    Laurent loop = (n % 2 ? Laurent(1) : Laurent(-1)) * quantum_int(n, n);
    CHECK(eval(webs::loop(n, 1)) == SparseOp::scalar(n, loop));
    CHECK(eval(webs::loop(n, -1)) == SparseOp::scalar(n, loop));
  }
}

TEST_CASE("web-script examples") {
  StatedWeb unknot = load(R"({"n": 2, "columns": [[{"k": "cap_tev"}], [{"k": "cup_coev"}]]})");
  unknot.left = States{};
  unknot.right = States{};
  CHECK(rt_entry(unknot).str() == "-1*v^4 + -1*v^-4");

  StatedWeb strand = load(R"({"n": 2, "columns": [[{"k": "id+"}]], "left": [1], "right": [2]})");
  CHECK(rt_entry(strand).is_zero());

  StatedWeb kink = load(R"({"n": 2, "columns": [[{"k": "id+"}, {"k": "cap_tev"}],
                              [{"k": "x+"}, {"k": "id-"}], [{"k": "id+"}, {"k": "cup_coev"}]]})");
  CHECK(eval(kink.web) == SparseOp::identity(2, 1) * Laurent::mono(-1, 6));
}

TEST_CASE("cap values at a wall for n = 2") {
  // state tuples are bottom-to-top
  SparseOp cap = elementary_matrix(Token::of(Kind::CapEv), 2);
  CHECK(cap.entry({}, {2, 1}) == Laurent::mono(-1, 5));
  CHECK(cap.entry({}, {1, 2}) == Laurent::v(1));
}

TEST_CASE("web-script errors") {
  CHECK_THROWS_AS(load("{\"n\": 2, \"columns\": [[{\"k\": \"x+\"}]"), WebError);
  CHECK_THROWS_AS(load(R"({"n": 2, "columns": [[{"k": "bogus"}]]})"), WebError);
  CHECK_THROWS_AS(load(R"({"n": 2, "columns": [[{"k": "x+"}], [{"k": "id+"}]]})"), WebError);
  CHECK_THROWS_AS(load(R"({"n": 2, "columns": [[{"k": "id+"}]], "left": [3]})"), WebError);
  CHECK_THROWS_AS(load(R"({"columns": []})"), WebError);
  try {
    load("{\"n\": 2,\n \"columns\": [[{\"k\": \"x+\"}]\n");
  } catch (const WebError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    load(R"({"n": 2, "columns": [[{"k": "id+"}, {"k": "nope"}]]})");
  } catch (const WebError& e) {
    CHECK(std::string(e.what()).find("column 0, slot 1") != std::string::npos);
  }
}

TEST_CASE("web-script round trip") {
  Rng rng(5);
  for (int k = 0; k < 30; ++k) {
    StatedWeb w = random_stated_web(3, rng);
    StatedWeb back = web_from_json(web_to_json(w));
    CHECK(back.web == w.web);
    CHECK(back.left == w.left);
    CHECK(back.right == w.right);
  }
}

TEST_CASE("orientation reversal and rotation preserve values") {
  for (int n = 2; n <= 3; ++n) {
    Rng rng(900 + n);
    for (int k = 0; k < 40; ++k) {
      StatedWeb w = random_stated_web(n, rng);
      CAPTURE(web_to_json(w).dump());
      Laurent x = rt_entry(w);
      CHECK(x == rt_entry(reverse_orientation(w)));
      auto [c1, w1] = rotate_dual(w);
      auto [c2, w2] = rotate_dual(w1);
      CHECK(web_to_json(w2) == web_to_json(w));
      CHECK(x == c1 * rt_entry(w1));
      CHECK(x == c1 * c2 * rt_entry(w2));
      if (!x.is_zero()) CHECK((c1 * c2).is_one());
    }
  }
}

TEST_CASE("stacking is the tensor product and composition is the operator product") {
  Rng rng(77);
  for (int k = 0; k < 30; ++k) {
    SlicedWeb a = random_web(2, rng, {3, 4, true, true});
    SlicedWeb b = random_web(2, rng, {2, 3, true, true});
    CHECK(eval(stack(a, b)) == tensor(eval(a), eval(b)));
    SlicedWeb id = SlicedWeb::identity(2, a.left_profile());
    CHECK(eval(compose(id, a)) == eval(a));
  }
}

TEST_CASE("sparse operator algebra") {
  SparseOp r = r_hat(3);
  CHECK(compose(r, invert(r)) == SparseOp::identity(3, 2));
  CHECK(tensor(SparseOp::identity(3, 1), SparseOp::identity(3, 1)) == SparseOp::identity(3, 2));
  SparseOp c = clamp(r, Side::Right, {1, 2});
  CHECK(c.in_arity() == 0);
  CHECK(c.entry({2, 1}, {}) == r.entry({2, 1}, {1, 2}));
  for (Idx x = 0; x < 27; ++x) CHECK(encode(decode(x, 3, 3), 3) == x);
}

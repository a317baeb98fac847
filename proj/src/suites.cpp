#include "skein/suites.hpp"

#include <array>

#include "skein/braided.hpp"
#include "skein/diagram.hpp"
#include "skein/oq.hpp"
#include "skein/random.hpp"
#include "skein/rtfunctor.hpp"
#include "skein/skeinmap.hpp"

namespace skein {

namespace {

std::string entry_str(const States& out, const States& in) {
  auto s = [](const States& x) {
    std::string r = "(";
    for (std::size_t i = 0; i < x.size(); ++i) r += (i ? "," : "") + std::to_string(x[i]);
    return r + ")";
  };
  return s(out) + s(in);
}

std::string states_str(const States& x) {
  std::string r;
  for (int v : x) r += std::to_string(v);
  return r;
}

// first differing entry of two operators
std::string op_diff(const SparseOp& a, const SparseOp& b) {
  SparseOp d = a - b;
  auto e = d.sorted();
  if (e.empty()) return {};
  const auto& [out, in, c] = e.front();
  return "entry " + entry_str(decode(out, d.out_arity(), d.n()), decode(in, d.in_arity(), d.n())) + " differs by " + c.str();
}

void add_op(SuiteReport& rep, const std::string& id, const SparseOp& a, const SparseOp& b) {
  bool ok = a == b;
  rep.add(id, ok, ok ? std::string() : op_diff(a, b));
}

int choose2(int n) { return n * (n - 1) / 2; }
Laurent sign_pow(int k) { return k % 2 ? Laurent(-1) : Laurent(1); }

void require(int n, int lo, int hi, const std::string& suite) {
  if (n < lo || n > hi)
    throw SuiteError("suite " + suite + " supports n in " + std::to_string(lo) + ".." + std::to_string(hi));
}

StatedWeb stated(SlicedWeb w, States left, States right) { return {std::move(w), std::move(left), std::move(right)}; }

}  // namespace

// ---------------------------------------------------------------- constants

SuiteReport constants_suite(int n) {
  SuiteReport rep{"constants", n, 0, {}};
  const auto& sc = scalars(n);
  Laurent prod(1);
  for (int i = 1; i <= n; ++i) prod *= sc.c[static_cast<std::size_t>(i)];
  rep.add("prod-c=t^(n/2)", prod == sc.t_half_pow_n, prod.str());
  Laurent closed = sign_pow(choose2(n)) * qpow(n, n * n - 1, 2);
  rep.add("prod-c-closed-form", prod == closed, prod.str() + " vs " + closed.str());
  Tally cc;
  for (int i = 1; i <= n; ++i) {
    Laurent p = sc.c[static_cast<std::size_t>(i)] * sc.c[static_cast<std::size_t>(sc.bar(i))];
    cc.add(p == sc.t, "i=" + std::to_string(i) + ": " + p.str());
  }
  rep.add("c_i*c_ibar=t", cc);
  rep.add("t^(n/2)^2=t^n", sc.t_half_pow_n * sc.t_half_pow_n == sc.t.pow(n));
  Laurent at = sc.a * sc.t_half_pow_n, mv = Laurent::mono(-1, 1).pow(choose2(n));
  rep.add("a*t^(n/2)=(-v)^C(n,2)", at == mv, at.str());
  Tally g;
  Laurent gprod(1);
  for (int i = 1; i <= n; ++i) {
    const Laurent& gi = sc.g[static_cast<std::size_t>(i)];
    g.add(gi == sign_pow(n - 1) * qpow(n, 2 * i - n - 1) && gi.is_unit(), "g_" + std::to_string(i) + " = " + gi.str());
    gprod *= gi;
  }
  rep.add("g_i-closed-form", g);
  rep.add("prod-g=1", gprod.is_one(), gprod.str());
  Tally fac;
  for (int m = 0; m <= n; ++m) {
    Laurent f = quantum_factorial(m, n);
    fac.add(f == f.bar(), "[" + std::to_string(m) + "]! = " + f.str());
  }
  rep.add("quantum-factorial-bar-symmetric", fac);
  SparseOp X = x_matrix(n);
  add_op(rep, "X^2=t*Id", compose(X, X), SparseOp::identity(n, 1) * sc.t);
  if (n == 2) {
    rep.add("n2:c1=-v^5", sc.c[1] == Laurent::mono(-1, 5), sc.c[1].str());
    rep.add("n2:c2=v", sc.c[2] == Laurent::v(1), sc.c[2].str());
    rep.add("n2:t=-v^6", sc.t == Laurent::mono(-1, 6), sc.t.str());
    rep.add("n2:a=v^-5", sc.a == Laurent::v(-5), sc.a.str());
  }
  return rep;
}

// ---------------------------------------------------------------- Hecke and braid relations

SuiteReport hecke_suite(int n) {
  SuiteReport rep{"hecke", n, 0, {}};
  SparseOp id1 = SparseOp::identity(n, 1), id2 = SparseOp::identity(n, 2);
  SparseOp R = r_hat(n), Ri = r_hat_inv(n);
  add_op(rep, "hecke", R * qpow(n, 1, n) - Ri * qpow(n, -1, n), id2 * (qpow(n, 1) - qpow(n, -1)));
  add_op(rep, "R*Rinv=Id", compose(R, Ri), id2);
  add_op(rep, "Rinv*R=Id", compose(Ri, R), id2);
  add_op(rep, "crossneg-web=Rinv", eval(webs::single(n, Token::of(Kind::CrossNeg))), Ri);
  for (const auto& [name, op] : {std::pair{std::string("ybe"), R}, std::pair{std::string("ybe-inverse"), Ri}}) {
    SparseOp r1 = tensor(op, id1), r2 = tensor(id1, op);
    add_op(rep, name, compose(r1, compose(r2, r1)), compose(r2, compose(r1, r2)));
  }
  // the same relation through braid webs
  SignSeq pp{1, 1, 1};
  add_op(rep, "ybe-webs", eval(braid_web(n, pp, {1, 2, 1}, 1)), eval(braid_web(n, pp, {2, 1, 2}, 1)));
  return rep;
}

// ---------------------------------------------------------------- internal annihilators

SuiteReport internal_suite(int n, std::uint64_t seed) {
  SuiteReport rep{"internal", n, seed, {}};
  const auto& sc = scalars(n);
  SparseOp id1 = SparseOp::identity(n, 1), id2 = SparseOp::identity(n, 2);
  const Token P = Token::id(1), M = Token::id(-1);

  add_op(rep, "kink+=t", eval(webs::kink(n, 1)), id1 * sc.t);
  add_op(rep, "kink-=t^-1", eval(webs::kink(n, -1)), id1 * sc.t.inv());
  Laurent loopv = sign_pow(n - 1) * quantum_int(n, n);
  for (Sign o : {1, -1})
    add_op(rep, std::string("loop") + (o > 0 ? "+" : "-") + "=(-1)^(n-1)[n]", eval(webs::loop(n, o)), SparseOp::scalar(n, loopv));

  {
    SparseOp rhs(n, n, n);
    Laurent base = Laurent::mono(-1, q_exp(n, 1)).pow(choose2(n));
    Laurent step = Laurent::mono(-1, q_exp(n, 1 - n, n));
    for (const auto& p : all_perms(n)) rhs += eval(webs::positive_braid(n, p)) * (base * step.pow(perm_length(p)));
    add_op(rep, "sinksource-braid-sum", eval(webs::sink_source(n)), rhs);
  }

  SparseOp sink = eval(webs::single(n, Token::of(Kind::Sink)));
  SparseOp source = eval(webs::single(n, Token::of(Kind::Source)));
  add_op(rep, "cyclic-sink", eval(webs::sink_cyclic(n)), sink);
  add_op(rep, "cyclic-source", eval(webs::source_cyclic(n)), source);
  {
    Tally sk, so;
    Laurent f = -qpow(n, -(n + 1), n);
    for (int i = 1; i < n; ++i) {
      SparseOp a = eval(webs::sink_with_cross(n, i)), b = sink * f;
      sk.add(a == b, "leg " + std::to_string(i) + ": " + op_diff(a, b));
      SparseOp c = eval(webs::source_with_cross(n, i)), d = source * f;
      so.add(c == d, "leg " + std::to_string(i) + ": " + op_diff(c, d));
    }
    rep.add("vertextwist-sink", sk);
    rep.add("vertextwist-source", so);
  }
  {
    Laurent f = quantum_factorial(n - 2, n);
    SparseOp lhs = r_hat(n) * f;
    SparseOp rhs = id2 * (f * qpow(n, n - 1, n)) - eval(webs::crossing_h(n)) * (sign_pow(choose2(n)) * qpow(n, -1, n));
    add_op(rep, "crossing-elimination", lhs, rhs);
  }

  // zig-zags for both strand orientations and both cap/cup pairings
  {
    const Token ev = Token::of(Kind::CapEv), tev = Token::of(Kind::CapTildeEv);
    const Token co = Token::of(Kind::CupCoev), tco = Token::of(Kind::CupTildeCoev);
    std::vector<std::pair<std::string, SlicedWeb>> zz{
        {"zigzag+a", SlicedWeb(n, {{tev, P}, {P, tco}})},
        {"zigzag+b", SlicedWeb(n, {{P, ev}, {co, P}})},
        {"zigzag-a", SlicedWeb(n, {{ev, M}, {M, co}})},
        {"zigzag-b", SlicedWeb(n, {{M, tev}, {tco, M}})},
    };
    for (const auto& [id, w] : zz) add_op(rep, id, eval(w), SparseOp::identity(n, 1));
  }

  // orientation reversal and rotation of the vertex macros
  {
    SlicedWeb sk = webs::single(n, Token::of(Kind::Sink)), so = webs::single(n, Token::of(Kind::Source));
    add_op(rep, "reverse-sink=sink-", eval(reverse_orientation(sk)), eval(webs::single(n, Token::of(Kind::SinkMinus))));
    add_op(rep, "reverse-source=source-", eval(reverse_orientation(so)), eval(webs::single(n, Token::of(Kind::SourceMinus))));
    add_op(rep, "rotate-sink=source-", eval(rotate(sk)), eval(webs::single(n, Token::of(Kind::SourceMinus))));
  }
  {
    Tally rot, conf;
    Rng rng(seed * 31 + static_cast<std::uint64_t>(n));
    for (Sign e1 : {1, -1})
      for (Sign e2 : {1, -1})
        for (Sign s : {1, -1}) {
          Token t = Token::cross(e1, e2, s);
          SlicedWeb w = webs::single(n, t);
          SparseOp a = eval(rotate(w)), b = eval(webs::single(n, rotate_token(t)));
          rot.add(a == b, t.name() + ": " + op_diff(a, b));
          SparseOp c = eval(expand_macros(w, rng)), d = eval(w);
          conf.add(c == d, t.name() + ": " + op_diff(c, d));
        }
    rep.add("rotate-cross-macros", rot);
    rep.add("macro-expansion-order", conf);
  }

  // random webs: orientation reversal, rotation, macro confluence, stacking
  {
    Rng rng(seed * 1000003 + static_cast<std::uint64_t>(n));
    WebGenOptions opt;
    if (n >= 4) opt.max_width = 4;
    Tally rev, rot, conf, stk;
    for (int k = 0; k < 30; ++k) {
      StatedWeb w = random_stated_web(n, rng, opt);
      std::string tag = "web " + std::to_string(k) + " " + web_to_json(w).dump();
      Laurent x = rt_entry(w);
      rev.add(x == rt_entry(reverse_orientation(w)), tag);
      auto [c1, w1] = rotate_dual(w);
      auto [c2, w2] = rotate_dual(w1);
      bool same = web_to_json(w2) == web_to_json(w);
      rot.add(x == c1 * rt_entry(w1) && same && x == c1 * c2 * rt_entry(w2), tag);
      if (w.web.has_macros()) {
        SparseOp a = eval(expand_macros(w.web, rng)), b = eval(expand_macros(w.web));
        conf.add(a == b, tag);
      }
      SlicedWeb u = random_web(n, rng, {2, 3, true, true});
      SparseOp a = eval(stack(w.web, u)), b = tensor(eval(w.web), eval(u));
      stk.add(a == b, tag);
    }
    rep.add("reverse-invariance[30]", rev);
    rep.add("rotate-dual-invariance[30]", rot);
    rep.add("macro-confluence[" + std::to_string(conf.count) + "]", conf);
    rep.add("stack=tensor[30]", stk);
  }
  return rep;
}

// ---------------------------------------------------------------- boundary relations

SuiteReport annihilator_suite(int n, std::uint64_t seed) {
  SuiteReport rep = boundary_relation_suite(n, seed);
  rep.suite = "annihilators";
  if (n == 2) {
    for (const auto& r : kauffman_wall_relations()) {
      std::string w;
      bool ok = check_clamped(r, &w);
      rep.add(r.id + ":rt", ok, w);
      w.clear();
      ok = check_phi(r, &w);
      rep.add(r.id + ":phi", ok, w);
    }
  }
  return rep;
}

// ---------------------------------------------------------------- O_q Hopf structure

namespace {

// product of the generator coproducts of a raw word, in order
TensorPoly word_coproduct(int n, const Monomial& w) {
  NCPoly one(n, Laurent(1));
  TensorPoly r = TensorPoly::pure(one, one);
  for (char g : w) r = r * coproduct(NCPoly::monomial(n, Monomial(1, g)));
  return r;
}

NCPoly word_antipode(int n, const Monomial& w) {
  NCPoly r(n, Laurent(1));
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = r * antipode(NCPoly::monomial(n, Monomial(1, *it)));
  return r;
}

Laurent word_counit(int n, const Monomial& w) {
  for (char g : w)
    if (gen_row(n, g) != gen_col(n, g)) return Laurent();
  return Laurent(1);
}

NCPoly rule_rhs(int n, const StraighteningRule& r) {
  NCPoly p(n);
  for (const auto& [c, m] : r.rhs) p.add_term(m, c);
  return p;
}

std::string word_str(int n, const Monomial& w) {
  std::string s;
  for (char g : w) s += (s.empty() ? "" : "*") + std::string("u[") + std::to_string(gen_row(n, g)) + "," + std::to_string(gen_col(n, g)) + "]";
  return s.empty() ? "1" : s;
}

// (id (x) Delta) Delta
Tensor3 coproduct2_right(const NCPoly& x) {
  Tensor3 r{x.n(), {}};
  TensorPoly d = coproduct(x);
  for (const auto& [k, c] : d.terms()) {
    TensorPoly d2 = coproduct(NCPoly::monomial(x.n(), k.first));
    for (const auto& [k2, c2] : d2.terms()) r.add(k2.first, k2.second, k.second, c * c2);
  }
  return r;
}

NCPoly hopf_identity(const NCPoly& x, bool left) {
  int n = x.n();
  NCPoly r(n);
  TensorPoly d = coproduct(x);
  for (const auto& [k, c] : d.terms()) {
    NCPoly a = NCPoly::monomial(n, k.first), b = NCPoly::monomial(n, k.second);
    r += c * (left ? antipode(a) * b : a * antipode(b));
  }
  return r;
}

}  // namespace

SuiteReport oq_hopf_suite(int n, std::uint64_t seed) {
  SuiteReport rep{"oq-hopf", n, seed, {}};
  Rng rng(seed * 7727 + static_cast<std::uint64_t>(n));
  NCPoly one(n, Laurent(1));
  NCPoly det = detq(n);
  std::vector<NCPoly> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) gens.push_back(NCPoly::gen(n, i, j));

  // RTT: ((u (x) u) Rhat)_{(i,k),(j,l)} = (Rhat (u (x) u))_{(i,k),(j,l)}, (u(x)u)^{ik}_{jl} = u^i_j u^k_l
  {
    SparseOp R = r_hat(n);
    int N = n * n;
    auto uu = [&](Idx out, Idx in) {
      States o = decode(out, 2, n), i = decode(in, 2, n);
      return NCPoly::gen(n, o[0], i[0]) * NCPoly::gen(n, o[1], i[1]);
    };
    Tally t;
    for (Idx a = 0; a < static_cast<Idx>(N); ++a)
      for (Idx b = 0; b < static_cast<Idx>(N); ++b) {
        NCPoly lhs(n), rhs(n);
        for (Idx m = 0; m < static_cast<Idx>(N); ++m) {
          Laurent r1 = R.at(m, b), r2 = R.at(a, m);
          if (!r1.is_zero()) lhs += r1 * uu(a, m);
          if (!r2.is_zero()) rhs += r2 * uu(m, b);
        }
        t.add(lhs == rhs, "entry " + entry_str(decode(a, 2, n), decode(b, 2, n)));
      }
    rep.add("rtt[" + std::to_string(t.count) + "]", t);
  }
  {
    Tally t;
    for (const auto& g : gens) t.add(det * g == g * det, g.str());
    rep.add("detq-central", t);
  }
  rep.add("sl:detq=1", sl_equal(det, one));
  rep.add("sl:u11*detq=u11", sl_equal(gens[0] * det, gens[0]));
  rep.add("sl:u11!=u22", !sl_equal(gens[0], gens[static_cast<std::size_t>(n + 1)]));
  {
    Tally t;
    for (int k = 0; k < 30; ++k) {
      Monomial a = random_monomial(n, rng, 2), b = random_monomial(n, rng, 2), c = random_monomial(n, rng, 2);
      NCPoly x = normal_form(n, a + b + c);
      NCPoly y = (normal_form(n, a) * normal_form(n, b)) * normal_form(n, c);
      NCPoly z = normal_form(n, a) * (normal_form(n, b) * normal_form(n, c));
      t.add(x == y && y == z, word_str(n, a + b + c));
    }
    rep.add("normal-form-confluence[30]", t);
  }

  // Hopf maps respect the defining relations
  {
    Tally d, e, s;
    for (const auto& r : straightening_rules(n)) {
      NCPoly rhs = rule_rhs(n, r);
      TensorPoly dr(n);
      Laurent er;
      NCPoly sr(n);
      for (const auto& [m, c] : rhs.terms()) {
        dr += c * word_coproduct(n, m);
        er += c * word_counit(n, m);
        sr += c * word_antipode(n, m);
      }
      d.add(word_coproduct(n, r.lhs) == dr, word_str(n, r.lhs));
      e.add(word_counit(n, r.lhs) == er, word_str(n, r.lhs));
      s.add(sl_equal(word_antipode(n, r.lhs), sr), word_str(n, r.lhs));
    }
    rep.add("coproduct-respects-relations", d);
    rep.add("counit-respects-relations", e);
    rep.add("antipode-respects-relations", s);
  }
  std::vector<NCPoly> samples = gens;
  for (int k = 0; k < 6; ++k) samples.push_back(random_element(n, rng));
  {
    Tally ca, cu;
    for (const auto& x : samples) {
      ca.add(coproduct2(x).terms == coproduct2_right(x).terms, x.str());
      TensorPoly d = coproduct(x);
      NCPoly l(n), r(n);
      for (const auto& [k, c] : d.terms()) {
        l += (c * counit(NCPoly::monomial(n, k.first))) * NCPoly::monomial(n, k.second);
        r += (c * counit(NCPoly::monomial(n, k.second))) * NCPoly::monomial(n, k.first);
      }
      cu.add(l == x && r == x, x.str());
    }
    rep.add("coassociativity", ca);
    rep.add("counit-axiom", cu);
  }
  rep.add("coproduct-detq", coproduct(det) == TensorPoly::pure(det, det));
  rep.add("counit-detq=1", counit(det).is_one());
  rep.add("antipode-detq=1", sl_equal(antipode(det), one));
  {
    Tally l, r;
    for (const auto& x : samples) {
      NCPoly e(n, counit(x));
      l.add(sl_equal(hopf_identity(x, true), e), x.str());
      r.add(sl_equal(hopf_identity(x, false), e), x.str());
    }
    rep.add("antipode-left", l);
    rep.add("antipode-right", r);
  }
  {
    Tally dc, sa;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        TensorPoly rhs(n);
        for (int k = 1; k <= n; ++k) rhs += TensorPoly::pure(ahat(i, k, n), ahat(k, j, n));
        std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        dc.add(sl_equal(coproduct(ahat(i, j, n)), rhs), tag);
        Laurent f = sign_pow(i - j) * qpow(n, i - j);
        sa.add(f * ahat(n + 1 - j, n + 1 - i, n) == antipode(NCPoly::gen(n, i, j)), tag);
      }
    rep.add("coproduct-ahat", dc);
    rep.add("antipode=(-q)^(i-j)*ahat", sa);
  }
  return rep;
}

// ---------------------------------------------------------------- Phi

SuiteReport phi_suite(int n, std::uint64_t seed) {
  SuiteReport rep{"phi", n, seed, {}};
  Rng rng(seed * 15485863 + static_cast<std::uint64_t>(n));
  const auto& sc = scalars(n);
  {
    Tally g1, g2;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        g1.add(phi(stated(webs::strands(n, {1}), {i}, {j})) == NCPoly::gen(n, i, j), tag);
        g2.add(phi(stated(webs::strands(n, {-1}), {i}, {j})) == ahat(i, j, n), tag);
      }
    rep.add("phi-strand+=u", g1);
    rep.add("phi-strand-=ahat", g2);
  }
  {
    // rotating a + strand gives the antipode up to the c-coefficients
    Tally t;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        auto [c, w] = rotate_dual(stated(webs::strands(n, {1}), {i}, {j}));
        t.add(c * phi(w) == antipode(NCPoly::gen(n, i, j)), "(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    rep.add("antipode-by-rotation", t);
  }
  {
    Tally t;
    for (const auto& p : all_perms(n)) {
      StatedWeb w = stated(webs::single(n, Token::of(Kind::Source)), p, {});
      w.right = States{};
      Laurent want = sc.a * Laurent::mono(-1, q_exp(n, 1)).pow(perm_length(p));
      t.add(skein_counit(w) == want && counit(phi(w)) == want, states_str(p));
    }
    rep.add("counit-source=a(-q)^l", t);
  }
  {
    Tally t;
    for (int k = 0; k < 100; ++k) {
      StatedWeb w = random_stated_web(n, rng);
      t.add(counit(phi(w)) == rt_entry(w), web_to_json(w).dump());
    }
    rep.add("counit-phi=rt[100]", t);
  }
  {
    Tally t;
    for (int k = 0; k < 50; ++k) {
      StatedWeb w = random_stated_web(n, rng);
      t.add(sl_equal(splitting(w), coproduct(phi(w))), web_to_json(w).dump());
    }
    rep.add("splitting=coproduct-phi[50]", t);
  }
  {
    Tally t;
    WebGenOptions opt{3, 4, true, true};
    for (int k = 0; k < 50; ++k) {
      StatedWeb a = random_stated_web(n, rng, opt), b = random_stated_web(n, rng, opt);
      t.add(sl_equal(phi(stack(a, b)), phi(a) * phi(b)), web_to_json(a).dump() + " / " + web_to_json(b).dump());
    }
    rep.add("phi-stacking-multiplicative[50]", t);
  }
  {
    Tally t;
    for (int k = 0; k < 50; ++k) {
      StatedWeb w = random_stated_web(n, rng);
      Side side = k % 2 ? Side::Left : Side::Right;
      auto [c1, w1] = half_twist_compose(w, side, true);
      auto [c2, w2] = half_twist_compose(w1, side, false);
      t.add((c1 * c2).is_one() && sl_equal((c1 * c2) * phi(w2), phi(w)), web_to_json(w).dump());
    }
    rep.add("half-twist-round-trip[50]", t);
  }
  {
    // the marking scalar and its action on Phi: u^i_j -> g_j u^i_j (right), g_i u^i_j (left)
    auto act = [n, &sc](const NCPoly& x, Side side) {
      NCPoly r(n);
      for (const auto& [m, c] : x.terms()) {
        Laurent f(1);
        for (char g : m) f *= sc.g[static_cast<std::size_t>(side == Side::Right ? gen_col(n, g) : gen_row(n, g))];
        r.add_term(m, c * f);
      }
      return r;
    };
    Tally sc1, sc2, aut;
    for (int k = 0; k < 50; ++k) {
      StatedWeb w = random_stated_web(n, rng);
      Side side = k % 2 ? Side::Left : Side::Right;
      auto [c, w2] = marking_auto(w, side);
      std::size_t ends = (side == Side::Right ? w.right : w.left)->size();
      Laurent want = sign_pow((n - 1) * static_cast<int>(ends)) * qpow(n, web_degree2(w, side));
      sc1.add(c == want, web_to_json(w).dump());
      NCPoly p = phi(w);
      sc2.add(act(p, side) == c * p, web_to_json(w).dump());
    }
    for (const auto& r : straightening_rules(n))
      for (Side side : {Side::Left, Side::Right}) {
        NCPoly lhs = act(normal_form(n, r.lhs), side), rhs = act(rule_rhs(n, r), side);
        aut.add(lhs == rhs, word_str(n, r.lhs));
      }
    aut.add(act(detq(n), Side::Right) == detq(n) && act(detq(n), Side::Left) == detq(n), "detq");
    rep.add("marking-scalar=(-1)^((n-1)k)q^(2deg)[50]", sc1);
    rep.add("marking-acts-on-phi[50]", sc2);
    rep.add("marking-is-automorphism", aut);
  }
  return rep;
}

// ---------------------------------------------------------------- cobraiding

SuiteReport cobraid_suite(int n, std::uint64_t seed) {
  SuiteReport rep{"cobraid", n, seed, {}};
  Rng rng(seed * 2654435761ULL + static_cast<std::uint64_t>(n));
  NCPoly one(n, Laurent(1));
  NCPoly det = detq(n);
  std::vector<NCPoly> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) gens.push_back(NCPoly::gen(n, i, j));
  {
    Tally t;
    SlicedWeb cross = webs::single(n, Token::of(Kind::CrossPos));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            Laurent r = rho(NCPoly::gen(n, i, j), NCPoly::gen(n, k, l));
            t.add(r == skein_counit(stated(cross, {k, i}, {j, l})) && r == r_entry(n, i, k, j, l),
                  "u[" + std::to_string(i) + "," + std::to_string(j) + "] (x) u[" + std::to_string(k) + "," + std::to_string(l) + "]");
          }
    rep.add("base=crossing-counit", t);
  }
  {
    Tally t;
    for (const auto& g : gens) t.add(rho(one, g) == counit(g) && rho(g, one) == counit(g), g.str());
    rep.add("rho-unit", t);
  }
  {
    Tally t;
    std::vector<NCPoly> zs = gens;
    for (int k = 0; k < 10; ++k) zs.push_back(NCPoly::monomial(n, random_monomial(n, rng, 2)));
    for (const auto& z : zs) t.add(rho(det, z) == counit(z) && rho(z, det) == counit(z), z.str());
    rep.add("rho-detq=counit", t);
  }
  {
    Tally t;
    for (const auto& r : straightening_rules(n)) {
      NCPoly rhs = rule_rhs(n, r);
      for (int a = 0; a < n * n; ++a) {
        std::vector<Monomial> zs{Monomial(1, static_cast<char>(a))};
        zs.push_back(random_monomial(n, rng, 2));
        for (const auto& z : zs) {
          // rho on a raw word against rho on its normal form
          NCPoly zz = normal_form(n, z);
          bool ok = rho_word(n, r.lhs, z) == rho(rhs, zz) && rho_word(n, z, r.lhs) == rho(zz, rhs);
          t.add(ok, word_str(n, r.lhs) + " against " + word_str(n, z));
        }
      }
    }
    rep.add("rho-well-defined", t);
  }
  {
    // sum y1 x1 rho(x2 (x) y2) = sum rho(x1 (x) y1) x2 y2
    Tally t;
    for (const auto& x : gens)
      for (const auto& y : gens) {
        TensorPoly dx = coproduct(x), dy = coproduct(y);
        NCPoly l(n), r(n);
        for (const auto& [kx, cx] : dx.terms())
          for (const auto& [ky, cy] : dy.terms()) {
            NCPoly x1 = NCPoly::monomial(n, kx.first), x2 = NCPoly::monomial(n, kx.second);
            NCPoly y1 = NCPoly::monomial(n, ky.first), y2 = NCPoly::monomial(n, ky.second);
            l += (cx * cy * rho_word(n, kx.second, ky.second)) * (y1 * x1);
            r += (cx * cy * rho_word(n, kx.first, ky.first)) * (x2 * y2);
          }
        t.add(l == r, x.str() + ", " + y.str());
      }
    rep.add("exchange", t);
  }
  {
    Tally t;
    for (const auto& x : gens)
      for (const auto& y : gens) {
        TensorPoly dx = coproduct(x), dy = coproduct(y);
        Laurent s;
        for (const auto& [kx, cx] : dx.terms())
          for (const auto& [ky, cy] : dy.terms())
            s += cx * cy * rho_bar(NCPoly::monomial(n, kx.first), NCPoly::monomial(n, ky.first)) * rho_word(n, kx.second, ky.second);
        t.add(s == counit(x) * counit(y), x.str() + ", " + y.str());
      }
    rep.add("convolution-inverse", t);
  }
  return rep;
}

// ---------------------------------------------------------------- n = 2 Kauffman specializations

SuiteReport kauffman2_suite() {
  const int n = 2;
  SuiteReport rep{"kauffman2", n, 0, {}};
  // scalars written directly in v (q = v^4) rather than through the scalar table
  Laurent q = Laurent::v(4), qi = Laurent::v(-4), qh = Laurent::v(2), qhi = Laurent::v(-2);
  SparseOp id1 = SparseOp::identity(n, 1), id2 = SparseOp::identity(n, 2);
  SparseOp Xp = eval(webs::single(n, Token::of(Kind::CrossPos)));
  SparseOp Xn = eval(webs::single(n, Token::of(Kind::CrossNeg)));
  add_op(rep, "pm2", Xp * qh - Xn * qhi, id2 * (q - qi));
  add_op(rep, "twist2", eval(webs::kink(n, 1)), id1 * Laurent::mono(-1, 6));
  for (Sign o : {1, -1})
    add_op(rep, std::string("unknot2") + (o > 0 ? "+" : "-"), eval(webs::loop(n, o)), SparseOp::scalar(n, -(q + qi)));
  add_op(rep, "sinksource2", eval(webs::sink_source(n)), id2 * (-q) + Xp * qh);
  {
    // cap against the wall: states listed bottom-to-top
    SlicedWeb cap = webs::single(n, Token::of(Kind::CapEv));
    auto val = [&](int b, int t) { return rt_entry(stated(cap, {}, {b, t})); };
    bool ok = val(1, 1).is_zero() && val(2, 2).is_zero() && val(2, 1) == Laurent::mono(-1, 5) && val(1, 2) == Laurent::v(1);
    rep.add("caps-wall-2-values", ok, "cap values " + val(2, 1).str() + ", " + val(1, 2).str());
  }
  for (const auto& r : kauffman_wall_relations()) {
    std::string w;
    bool ok = check_clamped(r, &w);
    rep.add(r.id + ":rt", ok, w);
    w.clear();
    ok = check_phi(r, &w);
    rep.add(r.id + ":phi", ok, w);
  }
  return rep;
}

// ---------------------------------------------------------------- dispatch

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"constants", "hecke",   "internal", "annihilators", "oq-hopf",
                                              "phi",       "cobraid", "braided",  "kauffman2",    "all"};
  return names;
}

SuiteReport run_suite(const std::string& name, int n, std::uint64_t seed) {
  if (name == "constants") {
    require(n, 2, 8, name);
    SuiteReport r = constants_suite(n);
    r.seed = seed;
    return r;
  }
  if (name == "hecke") {
    require(n, 2, 5, name);
    SuiteReport r = hecke_suite(n);
    r.seed = seed;
    return r;
  }
  if (name == "internal") {
    require(n, 2, 4, name);
    return internal_suite(n, seed);
  }
  if (name == "annihilators") {
    require(n, 2, 3, name);
    return annihilator_suite(n, seed);
  }
  if (name == "oq-hopf") {
    require(n, 2, 3, name);
    return oq_hopf_suite(n, seed);
  }
  if (name == "phi") {
    require(n, 2, 3, name);
    return phi_suite(n, seed);
  }
  if (name == "cobraid") {
    require(n, 2, 3, name);
    return cobraid_suite(n, seed);
  }
  if (name == "braided") {
    require(n, 2, 3, name);
    return braided_suite(n, seed);
  }
  if (name == "kauffman2") {
    require(n, 2, 2, name);
    SuiteReport r = kauffman2_suite();
    r.seed = seed;
    return r;
  }
  if (name == "all") {
    require(n, 2, 3, name);
    SuiteReport all{"all", n, seed, {}};
    for (const auto& s : suite_names()) {
      if (s == "all" || (s == "kauffman2" && n != 2)) continue;
      all.merge(run_suite(s, n, seed));
    }
    return all;
  }
  throw SuiteError("unknown suite: " + name);
}

}  // namespace skein

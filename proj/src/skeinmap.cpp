#include "skein/skeinmap.hpp"

#include <map>
#include <mutex>

#include "skein/random.hpp"

namespace skein {

const NCPoly& strand_generator(int n, Sign s, int i, int j) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int>, NCPoly> memo;
  auto key = std::make_tuple(n, s, i, j);
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  NCPoly g = s > 0 ? NCPoly::gen(n, i, j) : ahat(i, j, n);
  std::lock_guard lock(mu);
  return memo.emplace(key, std::move(g)).first->second;
}

namespace {

// prod_t gen_t(k_t, i_t), bottom strand leftmost
NCPoly strand_product(int n, const SignSeq& prof, const States& k, const States& i) {
  NCPoly r(n, Laurent(1));
  for (std::size_t t = 0; t < prof.size(); ++t) r = r * strand_generator(n, prof[t], k[t], i[t]);
  return r;
}

void require_stated(const StatedWeb& w) {
  if (!w.left || !w.right) throw WebError("phi: both sides must be stated");
}

}  // namespace

NCPoly phi(const StatedWeb& w) {
  require_stated(w);
  int n = w.web.n();
  const SignSeq& prof = w.web.right_profile();
  int len = static_cast<int>(prof.size());
  SparseOp row = clamp(eval(w.web), Side::Left, *w.left);
  NCPoly r(n);
  for (const auto& [o, in, c] : row.sorted()) r += c * strand_product(n, prof, decode(in, len, n), *w.right);
  return r;
}

NCPoly phi(const WebExpr& e) {
  if (e.empty()) throw std::invalid_argument("phi: empty expression");
  NCPoly r(e.front().second.web.n());
  for (const auto& [c, w] : e) r += c * phi(w);
  return r;
}

Laurent skein_counit(const StatedWeb& w) { return rt_entry(w); }

TensorPoly splitting(const StatedWeb& w) {
  require_stated(w);
  int n = w.web.n();
  const SignSeq& prof = w.web.right_profile();
  int len = static_cast<int>(prof.size());
  SparseOp row = clamp(eval(w.web), Side::Left, *w.left);
  TensorPoly r(n);
  Idx span = ipow(n, len);
  for (Idx kc = 0; kc < span; ++kc) {
    States k = decode(kc, len, n);
    NCPoly right = strand_product(n, prof, k, *w.right);
    NCPoly left(n);
    for (const auto& [o, in, c] : row.sorted()) left += c * strand_product(n, prof, decode(in, len, n), k);
    r += TensorPoly::pure(left, right);
  }
  return r;
}

std::pair<Laurent, StatedWeb> marking_auto(const StatedWeb& w, Side side) {
  const auto& st = side == Side::Right ? w.right : w.left;
  if (!st) throw WebError("marking_auto: side is not stated");
  const auto& sc = scalars(w.web.n());
  Laurent c(1);
  for (int s : *st) c *= sc.g[s];
  return {c, w};
}

int web_degree2(const StatedWeb& w, Side side) {
  const auto& st = side == Side::Right ? w.right : w.left;
  if (!st) throw WebError("web_degree: side is not stated");
  int d = 0;
  for (int s : *st) d += 2 * s - (w.web.n() + 1);
  return d;
}

WebExpr operator-(const WebExpr& a, const WebExpr& b) {
  WebExpr r = a;
  for (const auto& [c, w] : b) r.emplace_back(-c, w);
  return r;
}

WebExpr scale(const WebExpr& e, const Laurent& c) {
  WebExpr r;
  for (const auto& [d, w] : e) r.emplace_back(c * d, w);
  return r;
}

// ---------------------------------------------------------------- relations

namespace {

StatedWeb right_stated(const SlicedWeb& w, States s) { return {w, std::nullopt, std::move(s)}; }
StatedWeb left_stated(const SlicedWeb& w, States s) { return {w, std::move(s), std::nullopt}; }

WebExpr reversed(const WebExpr& e) {
  WebExpr r;
  for (const auto& [c, w] : e) r.emplace_back(c, reverse_orientation(w));
  return r;
}

void push_both(std::vector<WallRelation>& out, const std::string& family, const std::string& inst, Side side,
               WebExpr lhs, WebExpr rhs) {
  out.push_back({family + "[o+]/" + inst, side, lhs, rhs});
  out.push_back({family + "[o-]/" + inst, side, reversed(lhs), reversed(rhs)});
}

std::string states_str(const States& s) {
  std::string r = "(";
  for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
  return r + ")";
}

Laurent mq_pow(int n, int k) { return Laurent::mono(1, q_exp(n, k)) * Laurent(k % 2 ? -1 : 1); }

}  // namespace

std::vector<WallRelation> right_annihilators(int n) {
  const auto& sc = scalars(n);
  std::vector<WallRelation> out;
  SlicedWeb empty = SlicedWeb::identity(n, {});
  SignSeq plus(static_cast<std::size_t>(n), 1);
  {
    WebExpr rhs;
    for (const auto& p : all_perms(n)) rhs.emplace_back(sc.a * mq_pow(n, perm_length(p)), right_stated(webs::strands(n, plus), p));
    push_both(out, "ra1", "", Side::Right, {{Laurent(1), right_stated(webs::single(n, Token::of(Kind::Source)), {})}}, rhs);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      // pictures list the states top to bottom: i on top
      WebExpr rhs;
      if (n + 1 - j == i) rhs.emplace_back(sc.c[i], right_stated(empty, {}));
      push_both(out, "ra2", "i=" + std::to_string(i) + ",j=" + std::to_string(j), Side::Right,
                {{Laurent(1), right_stated(webs::single(n, Token::of(Kind::CapEv)), {j, i})}}, rhs);
    }
  {
    WebExpr rhs;
    for (int i = 1; i <= n; ++i) rhs.emplace_back(sc.c_inv[n + 1 - i], right_stated(webs::strands(n, {1, -1}), {n + 1 - i, i}));
    push_both(out, "ra3", "", Side::Right, {{Laurent(1), right_stated(webs::single(n, Token::of(Kind::CupCoev)), {})}}, rhs);
  }
  Laurent qm = qpow(n, -1, n), diff = qpow(n, 1) - qpow(n, -1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      WebExpr rhs;
      if (j < i) rhs.emplace_back(qm * diff, right_stated(webs::strands(n, {1, 1}), {j, i}));
      rhs.emplace_back(qm * (i == j ? qpow(n, 1) : Laurent(1)), right_stated(webs::strands(n, {1, 1}), {i, j}));
      push_both(out, "ra4", "i=" + std::to_string(i) + ",j=" + std::to_string(j), Side::Right,
                {{Laurent(1), right_stated(webs::single(n, Token::of(Kind::CrossPos)), {j, i})}}, rhs);
    }
  return out;
}

std::vector<WallRelation> derived_wall_relations(int n) {
  const auto& sc = scalars(n);
  std::vector<WallRelation> out;
  SlicedWeb empty = SlicedWeb::identity(n, {});
  SignSeq plus(static_cast<std::size_t>(n), 1);
  SlicedWeb sink = webs::single(n, Token::of(Kind::Sink)), source = webs::single(n, Token::of(Kind::Source));
  for (const auto& p : all_perms(n)) {
    Laurent l = mq_pow(n, perm_length(p));
    push_both(out, "vertexwall", "sigma=" + states_str(p), Side::Right, {{Laurent(1), right_stated(sink, p)}},
              {{sc.a * sc.t_half_pow_n * l, right_stated(empty, {})}});
    push_both(out, "vertexwall3", "sigma=" + states_str(p), Side::Left, {{Laurent(1), left_stated(source, p)}},
              {{sc.a * l, left_stated(empty, {})}});
  }
  {
    WebExpr rhs;
    for (const auto& p : all_perms(n))
      rhs.emplace_back(sc.a * sc.t_half_pow_n * mq_pow(n, perm_length(p)), left_stated(webs::strands(n, plus), p));
    push_both(out, "wallvertex", "", Side::Left, {{Laurent(1), left_stated(sink, {})}}, rhs);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      WebExpr rhs;
      if (n + 1 - i == j) rhs.emplace_back(sc.c_inv[i], left_stated(empty, {}));
      push_both(out, "capwallup", "i=" + std::to_string(i) + ",j=" + std::to_string(j), Side::Left,
                {{Laurent(1), left_stated(webs::single(n, Token::of(Kind::CupCoev)), {i, j})}}, rhs);
    }
  {
    WebExpr rhs;
    for (int i = 1; i <= n; ++i) rhs.emplace_back(sc.c[i], left_stated(webs::strands(n, {-1, 1}), {n + 1 - i, i}));
    push_both(out, "wallnearcap", "", Side::Left, {{Laurent(1), left_stated(webs::single(n, Token::of(Kind::CapEv)), {})}}, rhs);
  }
  Laurent qm = qpow(n, -1, n), diff = qpow(n, 1) - qpow(n, -1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      WebExpr rhs;
      if (j < i) rhs.emplace_back(qm * diff, left_stated(webs::strands(n, {1, 1}), {j, i}));
      rhs.emplace_back(qm * (i == j ? qpow(n, 1) : Laurent(1)), left_stated(webs::strands(n, {1, 1}), {i, j}));
      push_both(out, "wallcross", "i=" + std::to_string(i) + ",j=" + std::to_string(j), Side::Left,
                {{Laurent(1), left_stated(webs::single(n, Token::of(Kind::CrossPos)), {j, i})}}, rhs);
    }
  return out;
}

std::vector<WallRelation> kauffman_wall_relations() {
  const int n = 2;
  std::vector<WallRelation> out;
  SlicedWeb empty = SlicedWeb::identity(n, {});
  // q^{1/4} = v
  push_both(out, "vertex-wall-2", "", Side::Right, {{Laurent(1), right_stated(webs::single(n, Token::of(Kind::Source)), {})}},
            {{Laurent::v(-5), right_stated(webs::strands(n, {1, 1}), {1, 2})},
             {-Laurent::v(-1), right_stated(webs::strands(n, {1, 1}), {2, 1})}});
  const std::map<std::pair<int, int>, Laurent> capval{
      {{1, 1}, Laurent()}, {{2, 2}, Laurent()}, {{1, 2}, -Laurent::v(5)}, {{2, 1}, Laurent::v(1)}};
  for (const auto& [ij, val] : capval) {
    WebExpr rhs;
    if (!val.is_zero()) rhs.emplace_back(val, right_stated(empty, {}));
    push_both(out, "caps-wall-2", "i=" + std::to_string(ij.first) + ",j=" + std::to_string(ij.second), Side::Right,
              {{Laurent(1), right_stated(webs::single(n, Token::of(Kind::CapEv)), {ij.second, ij.first})}}, rhs);
  }
  push_both(out, "caps-wall-2a", "", Side::Right, {{Laurent(1), right_stated(webs::single(n, Token::of(Kind::CupCoev)), {})}},
            {{-Laurent::v(-5), right_stated(webs::strands(n, {1, -1}), {1, 2})},
             {Laurent::v(-1), right_stated(webs::strands(n, {1, -1}), {2, 1})}});
  return out;
}

bool check_clamped(const WallRelation& r, std::string* witness) {
  SparseOp d = eval_clamped(r.lhs - r.rhs, r.side);
  if (d.is_zero()) return true;
  if (witness) {
    const auto e = d.sorted().front();
    int len = r.side == Side::Right ? d.out_arity() : d.in_arity();
    Idx free = r.side == Side::Right ? std::get<0>(e) : std::get<1>(e);
    *witness = r.id + ": free states " + states_str(decode(free, len, d.n())) + " residual " + std::get<2>(e).str();
  }
  return false;
}

bool check_phi(const WallRelation& r, std::string* witness) {
  const StatedWeb& w0 = r.lhs.front().second;
  int n = w0.web.n();
  int len = static_cast<int>(r.side == Side::Right ? w0.web.left_profile().size() : w0.web.right_profile().size());
  Idx span = ipow(n, len);
  for (Idx code = 0; code < span; ++code) {
    States s = decode(code, len, n);
    auto complete = [&](const WebExpr& e) {
      WebExpr full;
      for (auto [c, w] : e) {
        if (r.side == Side::Right) w.left = s;
        else w.right = s;
        full.emplace_back(c, w);
      }
      return full;
    };
    NCPoly l = phi(complete(r.lhs));
    NCPoly rr = r.rhs.empty() ? NCPoly(n) : phi(complete(r.rhs));
    if (!sl_equal(l, rr)) {
      if (witness) *witness = r.id + ": free states " + states_str(s) + " lhs " + l.str() + " rhs " + rr.str();
      return false;
    }
  }
  return true;
}

bool check_hd(const WallRelation& r, std::string* witness) {
  if (r.side != Side::Right) throw std::invalid_argument("check_hd: expects a right relation");
  WebExpr img;
  for (const auto& [c, w] : r.lhs - r.rhs) img.emplace_back(c, hd(w));
  SparseOp d = eval_clamped(img, Side::Left);
  if (d.is_zero()) return true;
  if (witness) *witness = r.id + ": hd image has " + std::to_string(d.nnz()) + " nonzero entries";
  return false;
}

namespace {

// Aggregate instance checks "family/instance" into one entry per family.
class FamilyChecks {
 public:
  void add(const std::string& id, const std::string& kind, bool ok, const std::string& witness) {
    std::string fam = id.substr(0, id.find('/')) + ":" + kind;
    auto [it, fresh] = fams_.try_emplace(fam, Check{fam, true, ""});
    if (fresh) order_.push_back(fam);
    if (!ok && it->second.pass) {
      it->second.pass = false;
      it->second.witness = witness;
    }
  }
  void flush(SuiteReport& rep) const {
    for (const auto& f : order_) rep.add(f, fams_.at(f).pass, fams_.at(f).witness);
  }

 private:
  std::map<std::string, Check> fams_;
  std::vector<std::string> order_;
};

}  // namespace

SuiteReport boundary_relation_suite(int n, std::uint64_t seed) {
  SuiteReport rep{"boundary", n, seed, {}};
  FamilyChecks fam;
  auto run = [&](const std::vector<WallRelation>& rels) {
    for (const auto& r : rels) {
      std::string w;
      bool ok = check_clamped(r, &w);
      fam.add(r.id, "rt", ok, w);
      w.clear();
      ok = check_phi(r, &w);
      fam.add(r.id, "phi", ok, w);
      if (r.side == Side::Right) {
        w.clear();
        ok = check_hd(r, &w);
        fam.add(r.id, "hd", ok, w);
      }
    }
  };
  run(right_annihilators(n));
  run(derived_wall_relations(n));
  fam.flush(rep);

  // sink/source involution: the sink-source web as a sum over negative braids
  {
    SparseOp lhs = eval(webs::sink_source(n));
    int c2 = n * (n - 1) / 2;
    SparseOp rhs(n, n, n);
    Laurent pre = mq_pow(n, c2).inv();
    Laurent step = -Laurent::mono(1, q_exp(n, n - 1, n));
    for (const auto& p : all_perms(n)) rhs += eval(webs::negative_braid(n, p)) * (pre * step.pow(perm_length(p)));
    rep.add("sinksource-involution", lhs == rhs, "operator mismatch");
  }

  // crossing relation regenerated from the crossing elimination identity
  if (n <= 3) {
    Laurent sg = (n * (n - 1) / 2) % 2 ? Laurent(-1) : Laurent(1);
    Laurent qm = qpow(n, -1, n), diff = qpow(n, 1) - qpow(n, -1);
    SlicedWeb h = webs::crossing_h(n);
    SlicedWeb id2 = webs::strands(n, {1, 1});
    bool ok = true;
    std::string wit;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = 1; j <= n && ok; ++j)
        for (int a = 1; a <= n && ok; ++a)
          for (int b = 1; b <= n && ok; ++b) {
            // [n-2]! = 1 for n <= 3
            WebExpr elim{{qpow(n, n - 1, n), {id2, States{a, b}, States{j, i}}}, {-sg * qm, {h, States{a, b}, States{j, i}}}};
            WebExpr rhs;
            if (j < i) rhs.emplace_back(qm * diff, StatedWeb{id2, States{a, b}, States{j, i}});
            rhs.emplace_back(qm * (i == j ? qpow(n, 1) : Laurent(1)), StatedWeb{id2, States{a, b}, States{i, j}});
            if (!sl_equal(phi(elim), phi(rhs))) {
              ok = false;
              wit = "i=" + std::to_string(i) + ",j=" + std::to_string(j) + " left " + states_str({a, b});
            }
          }
    rep.add("crossing-relation-from-elimination", ok, wit);
  }

  // D-relations: Phi(D(s,i)) = sum_j RT(D)_{j,i} Phi(id(s,j)) on random right-stated webs
  {
    Rng rng(seed * 7919 + static_cast<std::uint64_t>(n));
    bool ok = true;
    std::string wit;
    WebGenOptions opt;
    opt.max_width = 4;
    opt.max_columns = 4;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      StatedWeb d = random_stated_web(n, rng, opt);
      SlicedWeb idl = SlicedWeb::identity(n, d.web.left_profile());
      SparseOp col = clamp(eval(d.web), Side::Right, *d.right);
      int len = static_cast<int>(d.web.left_profile().size());
      NCPoly lhs = phi(d);
      NCPoly rhs(n);
      for (const auto& [o, in, c] : col.sorted()) rhs += c * phi(StatedWeb{idl, d.left, decode(o, len, n)});
      if (!sl_equal(lhs, rhs)) {
        ok = false;
        wit = "trial " + std::to_string(trial) + ": " + web_to_json(d).dump();
      }
    }
    rep.add("d-relation-random", ok, wit);
  }
  return rep;
}

}  // namespace skein

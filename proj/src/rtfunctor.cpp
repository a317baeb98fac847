#include "skein/rtfunctor.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace skein {

Idx ipow(int n, int k) {
  Idx r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<Idx>(n);
  return r;
}

Idx encode(const States& s, int n) {
  Idx x = 0;
  for (int v : s) x = x * static_cast<Idx>(n) + static_cast<Idx>(v - 1);
  return x;
}

States decode(Idx x, int len, int n) {
  States s(static_cast<std::size_t>(len));
  for (int i = len - 1; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = static_cast<int>(x % static_cast<Idx>(n)) + 1;
    x /= static_cast<Idx>(n);
  }
  return s;
}

// ---------------------------------------------------------------- SparseOp

SparseOp SparseOp::identity(int n, int k) {
  SparseOp r(n, k, k);
  Idx d = ipow(n, k);
  for (Idx i = 0; i < d; ++i) r.entries_.emplace(Key(i, i), Laurent(1));
  return r;
}

SparseOp SparseOp::scalar(int n, const Laurent& c) {
  SparseOp r(n, 0, 0);
  r.add(0, 0, c);
  return r;
}

void SparseOp::add(Idx out, Idx in, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = entries_.try_emplace(Key(out, in), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Laurent SparseOp::at(Idx out, Idx in) const {
  auto it = entries_.find(Key(out, in));
  return it == entries_.end() ? Laurent() : it->second;
}

Laurent SparseOp::entry(const States& out, const States& in) const {
  if (static_cast<int>(out.size()) != out_ || static_cast<int>(in.size()) != in_)
    throw std::invalid_argument("entry: arity mismatch");
  return at(encode(out, n_), encode(in, n_));
}

SparseOp& SparseOp::operator+=(const SparseOp& o) {
  if (o.in_ != in_ || o.out_ != out_) throw std::invalid_argument("SparseOp +: arity mismatch");
  for (const auto& [k, v] : o.entries_) add(k.first, k.second, v);
  return *this;
}

SparseOp& SparseOp::operator-=(const SparseOp& o) {
  if (o.in_ != in_ || o.out_ != out_) throw std::invalid_argument("SparseOp -: arity mismatch");
  for (const auto& [k, v] : o.entries_) add(k.first, k.second, -v);
  return *this;
}

SparseOp SparseOp::operator*(const Laurent& c) const {
  SparseOp r(n_, in_, out_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : entries_) r.entries_.emplace(k, v * c);
  return r;
}

bool operator==(const SparseOp& a, const SparseOp& b) {
  if (a.n_ != b.n_ || a.in_ != b.in_ || a.out_ != b.out_ || a.entries_.size() != b.entries_.size()) return false;
  for (const auto& [k, v] : a.entries_) {
    auto it = b.entries_.find(k);
    if (it == b.entries_.end() || it->second != v) return false;
  }
  return true;
}

std::vector<std::tuple<Idx, Idx, Laurent>> SparseOp::sorted() const {
  std::vector<std::tuple<Idx, Idx, Laurent>> v;
  v.reserve(entries_.size());
  for (const auto& [k, c] : entries_) v.emplace_back(k.first, k.second, c);
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
  });
  return v;
}

nlohmann::json SparseOp::to_json() const {
  nlohmann::json j;
  j["in"] = in_;
  j["out"] = out_;
  j["entries"] = nlohmann::json::array();
  for (const auto& [o, i, c] : sorted()) j["entries"].push_back({decode(o, out_, n_), decode(i, in_, n_), c.str()});
  return j;
}

SparseOp compose(const SparseOp& a, const SparseOp& b) {
  if (a.n() != b.n() || a.in_arity() != b.out_arity()) throw std::invalid_argument("compose: arity mismatch");
  std::unordered_map<Idx, std::vector<std::pair<Idx, const Laurent*>>> by_in;
  for (const auto& [k, v] : a.entries()) by_in[k.second].emplace_back(k.first, &v);
  SparseOp r(a.n(), b.in_arity(), a.out_arity());
  for (const auto& [k, v] : b.entries()) {
    auto it = by_in.find(k.first);
    if (it == by_in.end()) continue;
    for (const auto& [out, c] : it->second) r.add(out, k.second, *c * v);
  }
  return r;
}

SparseOp tensor(const SparseOp& a, const SparseOp& b) {
  if (a.n() != b.n()) throw std::invalid_argument("tensor: different n");
  SparseOp r(a.n(), a.in_arity() + b.in_arity(), a.out_arity() + b.out_arity());
  Idx so = ipow(a.n(), b.out_arity()), si = ipow(a.n(), b.in_arity());
  for (const auto& [ka, va] : a.entries())
    for (const auto& [kb, vb] : b.entries()) r.add(ka.first * so + kb.first, ka.second * si + kb.second, va * vb);
  return r;
}

namespace {

Laurent det(const std::vector<std::vector<Laurent>>& m) {
  std::size_t k = m.size();
  if (k == 0) return Laurent(1);
  if (k == 1) return m[0][0];
  Laurent d;
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Laurent>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Laurent> row;
      for (std::size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    Laurent term = m[0][c] * det(minor);
    if (c % 2) d -= term;
    else d += term;
  }
  return d;
}

}  // namespace

SparseOp invert(const SparseOp& a) {
  if (a.in_arity() != a.out_arity()) throw std::invalid_argument("invert: not square");
  // connected components of the bipartite support graph (in and out share one index set)
  std::map<Idx, Idx> parent;
  std::function<Idx(Idx)> find = [&](Idx x) -> Idx {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    if (it->second == x) return x;
    return it->second = find(it->second);
  };
  for (const auto& [k, v] : a.entries()) parent[find(k.first)] = find(k.second);
  std::map<Idx, std::vector<Idx>> comps;
  for (const auto& [x, p] : parent) comps[find(x)].push_back(x);
  SparseOp r(a.n(), a.in_arity(), a.out_arity());
  std::size_t covered = 0;
  for (auto& [root, idx] : comps) {
    std::sort(idx.begin(), idx.end());
    std::size_t k = idx.size();
    covered += k;
    if (k > 6) throw std::runtime_error("invert: block too large");
    std::vector<std::vector<Laurent>> m(k, std::vector<Laurent>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] = a.at(idx[i], idx[j]);
    Laurent d = det(m);
    if (!d.is_unit()) throw std::runtime_error("invert: determinant is not a unit");
    Laurent dinv = d.inv();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::vector<Laurent>> minor;
        for (std::size_t rr = 0; rr < k; ++rr) {
          if (rr == j) continue;
          std::vector<Laurent> row;
          for (std::size_t cc = 0; cc < k; ++cc)
            if (cc != i) row.push_back(m[rr][cc]);
          minor.push_back(std::move(row));
        }
        Laurent cof = det(minor) * dinv;
        if ((i + j) % 2) cof = -cof;
        r.add(idx[i], idx[j], cof);
      }
  }
  if (covered != ipow(a.n(), a.in_arity())) throw std::runtime_error("invert: singular (empty rows)");
  return r;
}

// ---------------------------------------------------------------- primitives

namespace {

SparseOp build_r_hat(int n) {
  // Rhat(e_l (x) e_k) = q^(-1/n) [ q^(l==k) e_k (x) e_l + (l<k)(q - q^-1) e_l (x) e_k ]
  SparseOp r(n, 2, 2);
  Laurent qm = qpow(n, -1, n);
  Laurent diff = qpow(n, 1) - qpow(n, -1);
  for (int l = 1; l <= n; ++l)
    for (int k = 1; k <= n; ++k) {
      Idx in = encode({l, k}, n);
      r.add(encode({k, l}, n), in, l == k ? qm * qpow(n, 1) : qm);
      if (l < k) r.add(in, in, qm * diff);
    }
  return r;
}

SparseOp build_primitive(Kind k, int n) {
  const auto& sc = scalars(n);
  switch (k) {
    case Kind::IdPlus:
    case Kind::IdMinus: return SparseOp::identity(n, 1);
    case Kind::CrossPos: return build_r_hat(n);
    case Kind::CrossNeg: return invert(build_r_hat(n));
    case Kind::CapEv:
    case Kind::CapTildeEv: {
      // delta(bottom, conj top) c_top
      SparseOp r(n, 2, 0);
      for (int top = 1; top <= n; ++top) r.add(0, encode({n + 1 - top, top}, n), sc.c[top]);
      return r;
    }
    case Kind::CupCoev:
    case Kind::CupTildeCoev: {
      SparseOp r(n, 0, 2);
      for (int bot = 1; bot <= n; ++bot) r.add(encode({bot, n + 1 - bot}, n), 0, sc.c_inv[bot]);
      return r;
    }
    case Kind::Sink:
    case Kind::Source: {
      SparseOp r(n, k == Kind::Sink ? n : 0, k == Kind::Sink ? 0 : n);
      Laurent base = k == Kind::Sink ? sc.a * sc.t_half_pow_n : sc.a;
      Laurent mq = Laurent::mono(-1, q_exp(n, 1));
      for (const auto& p : all_perms(n)) {
        Laurent c = base * mq.pow(perm_length(p));
        if (k == Kind::Sink) r.add(0, encode(p, n), c);
        else r.add(encode(p, n), 0, c);
      }
      return r;
    }
    default: throw std::logic_error("build_primitive: macro kind");
  }
}

// Action table of a primitive: input sub-index -> list of (output sub-index, coefficient).
struct Action {
  int in_len = 0, out_len = 0;
  std::vector<std::vector<std::pair<Idx, Laurent>>> rows;
};

struct PrimitiveTables {
  std::array<SparseOp, 10> ops;
  std::array<Action, 10> actions;
};

const PrimitiveTables& tables(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<PrimitiveTables>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto t = std::make_unique<PrimitiveTables>();
    for (int k = 0; k < 10; ++k) {
      t->ops[k] = build_primitive(static_cast<Kind>(k), n);
      Action& a = t->actions[k];
      a.in_len = t->ops[k].in_arity();
      a.out_len = t->ops[k].out_arity();
      a.rows.assign(ipow(n, a.in_len), {});
      for (const auto& [o, i, c] : t->ops[k].sorted()) a.rows[i].emplace_back(o, c);
    }
    slot = std::move(t);
  }
  return *slot;
}

int kind_index(const Token& t) {
  if (!t.is_primitive()) throw std::logic_error("macro token reached the evaluator");
  return static_cast<int>(t.kind);
}

// apply a primitive column to every entry of `m` (m: right boundary -> current wires)
SparseOp apply_column(const Column& col, const SparseOp& m, int n) {
  const auto& tb = tables(n);
  std::vector<const Action*> acts;
  int in_len = 0, out_len = 0;
  for (const auto& t : col) {
    acts.push_back(&tb.actions[kind_index(t)]);
    in_len += acts.back()->in_len;
    out_len += acts.back()->out_len;
  }
  if (in_len != m.out_arity()) throw std::logic_error("apply_column: arity mismatch");
  std::unordered_map<Idx, std::vector<std::pair<Idx, Laurent>>> memo;
  auto act_on = [&](Idx cur) -> const std::vector<std::pair<Idx, Laurent>>& {
    auto it = memo.find(cur);
    if (it != memo.end()) return it->second;
    std::vector<std::pair<Idx, Laurent>> acc{{0, Laurent(1)}};
    int consumed = 0;
    for (const Action* a : acts) {
      Idx sub = (cur / ipow(n, in_len - consumed - a->in_len)) % ipow(n, a->in_len);
      consumed += a->in_len;
      const auto& row = a->rows[sub];
      std::vector<std::pair<Idx, Laurent>> next;
      next.reserve(acc.size() * row.size());
      Idx scale = ipow(n, a->out_len);
      for (const auto& [o, c] : acc)
        for (const auto& [so, sc] : row) next.emplace_back(o * scale + so, c * sc);
      acc = std::move(next);
      if (acc.empty()) break;
    }
    return memo.emplace(cur, std::move(acc)).first->second;
  };
  SparseOp r(n, m.in_arity(), out_len);
  for (const auto& [k, v] : m.entries())
    for (const auto& [o, c] : act_on(k.first)) r.add(o, k.second, c * v);
  return r;
}

}  // namespace

SparseOp elementary_matrix(const Token& t, int n) {
  if (t.is_primitive()) return tables(n).ops[kind_index(t)];
  return eval(macro_expansion(t, n));
}

SparseOp eval(const SlicedWeb& w) {
  const SlicedWeb& e = w.has_macros() ? expand_macros(w) : w;
  int n = e.n();
  SparseOp m = SparseOp::identity(n, static_cast<int>(e.right_profile().size()));
  for (auto it = e.columns().rbegin(); it != e.columns().rend(); ++it) m = apply_column(*it, m, n);
  return m;
}

Laurent rt_entry(const StatedWeb& w) {
  if (!w.left || !w.right) throw std::invalid_argument("rt_entry: both sides must be stated");
  return eval(w.web).entry(*w.left, *w.right);
}

SparseOp clamp(const SparseOp& op, Side side, const States& states) {
  int n = op.n();
  int len = side == Side::Right ? op.in_arity() : op.out_arity();
  if (static_cast<int>(states.size()) != len) throw std::invalid_argument("clamp: arity mismatch");
  Idx key = encode(states, n);
  SparseOp r(n, side == Side::Right ? 0 : op.in_arity(), side == Side::Right ? op.out_arity() : 0);
  for (const auto& [k, v] : op.entries()) {
    if (side == Side::Right && k.second == key) r.add(k.first, 0, v);
    if (side == Side::Left && k.first == key) r.add(0, k.second, v);
  }
  return r;
}

SparseOp eval_expr(const WebExpr& e) {
  if (e.empty()) throw std::invalid_argument("eval_expr: empty expression");
  SparseOp acc;
  bool first = true;
  for (const auto& [c, w] : e) {
    SparseOp t = eval(w.web) * c;
    if (first) {
      acc = SparseOp(t.n(), t.in_arity(), t.out_arity());
      first = false;
    }
    acc += t;
  }
  return acc;
}

SparseOp eval_clamped(const WebExpr& e, Side side) {
  if (e.empty()) throw std::invalid_argument("eval_clamped: empty expression");
  SparseOp acc;
  bool first = true;
  for (const auto& [c, w] : e) {
    const auto& st = side == Side::Right ? w.right : w.left;
    if (!st) throw std::invalid_argument("eval_clamped: side not stated");
    SparseOp t = clamp(eval(w.web), side, *st) * c;
    if (first) {
      acc = SparseOp(t.n(), t.in_arity(), t.out_arity());
      first = false;
    }
    acc += t;
  }
  return acc;
}

SparseOp r_hat(int n) { return tables(n).ops[static_cast<int>(Kind::CrossPos)]; }
SparseOp r_hat_inv(int n) { return tables(n).ops[static_cast<int>(Kind::CrossNeg)]; }

SparseOp x_matrix(int n) {
  const auto& sc = scalars(n);
  SparseOp r(n, 1, 1);
  for (int j = 1; j <= n; ++j) r.add(static_cast<Idx>(n - j), static_cast<Idx>(j - 1), sc.c[n + 1 - j]);
  return r;
}

SparseOp g_matrix(int n) {
  const auto& sc = scalars(n);
  SparseOp r(n, 1, 1);
  for (int j = 1; j <= n; ++j) r.add(static_cast<Idx>(j - 1), static_cast<Idx>(j - 1), sc.g[j]);
  return r;
}

}  // namespace skein

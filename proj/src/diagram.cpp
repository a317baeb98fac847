#include "skein/diagram.hpp"

#include <algorithm>
#include <map>

namespace skein {

namespace {

SignSeq rep(Sign s, int k) { return SignSeq(static_cast<std::size_t>(std::max(k, 0)), s); }

SignSeq neg_rev(const SignSeq& p) {
  SignSeq r(p.rbegin(), p.rend());
  for (auto& s : r) s = -s;
  return r;
}

Column ids(const SignSeq& p) {
  Column c;
  for (Sign s : p) c.push_back(Token::id(s));
  return c;
}

Column ids(Sign s, int k) { return ids(rep(s, k)); }

Column cat(std::initializer_list<Column> parts) {
  Column c;
  for (const auto& p : parts) c.insert(c.end(), p.begin(), p.end());
  return c;
}

const std::map<std::string, Kind>& kind_names() {
  static const std::map<std::string, Kind> m = {
      {"id+", Kind::IdPlus},          {"id-", Kind::IdMinus},
      {"x+", Kind::CrossPos},         {"x-", Kind::CrossNeg},
      {"cap_ev", Kind::CapEv},        {"cap_tev", Kind::CapTildeEv},
      {"cup_coev", Kind::CupCoev},    {"cup_tcoev", Kind::CupTildeCoev},
      {"sink", Kind::Sink},           {"source", Kind::Source},
      {"sink-", Kind::SinkMinus},     {"source-", Kind::SourceMinus},
  };
  return m;
}

}  // namespace

std::string sign_str(const SignSeq& s) {
  std::string r = "[";
  for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::string(s[i] > 0 ? "+" : "-");
  return r + "]";
}

Token Token::cross(Sign e1, Sign e2, Sign s) {
  if (e1 > 0 && e2 > 0) return {s > 0 ? Kind::CrossPos : Kind::CrossNeg};
  return {Kind::Cross, e1 > 0 ? 1 : -1, e2 > 0 ? 1 : -1, s > 0 ? 1 : -1};
}

bool Token::is_primitive() const {
  return kind != Kind::Cross && kind != Kind::SinkMinus && kind != Kind::SourceMinus;
}

SignSeq Token::right(int n) const {
  switch (kind) {
    case Kind::IdPlus: return {1};
    case Kind::IdMinus: return {-1};
    case Kind::CrossPos:
    case Kind::CrossNeg: return {1, 1};
    case Kind::CapEv: return {-1, 1};
    case Kind::CapTildeEv: return {1, -1};
    case Kind::CupCoev:
    case Kind::CupTildeCoev:
    case Kind::Source:
    case Kind::SourceMinus: return {};
    case Kind::Sink: return rep(1, n);
    case Kind::SinkMinus: return rep(-1, n);
    case Kind::Cross: return {e1, e2};
  }
  return {};
}

SignSeq Token::left(int n) const {
  switch (kind) {
    case Kind::IdPlus: return {1};
    case Kind::IdMinus: return {-1};
    case Kind::CrossPos:
    case Kind::CrossNeg: return {1, 1};
    case Kind::CupCoev: return {1, -1};
    case Kind::CupTildeCoev: return {-1, 1};
    case Kind::CapEv:
    case Kind::CapTildeEv:
    case Kind::Sink:
    case Kind::SinkMinus: return {};
    case Kind::Source: return rep(1, n);
    case Kind::SourceMinus: return rep(-1, n);
    case Kind::Cross: return {e2, e1};
  }
  return {};
}

std::string Token::name() const {
  if (kind == Kind::Cross) {
    auto c = [](Sign s) { return s > 0 ? '+' : '-'; };
    return std::string("x(") + c(e1) + "," + c(e2) + "," + c(s) + ")";
  }
  for (const auto& [k, v] : kind_names())
    if (v == kind) return k;
  return "?";
}

Token Token::parse(const std::string& s) {
  auto it = kind_names().find(s);
  if (it != kind_names().end()) return {it->second};
  auto sg = [&](char c) -> Sign {
    if (c == '+') return 1;
    if (c == '-') return -1;
    throw WebError("unknown generator '" + s + "'");
  };
  if (s.size() == 8 && s.rfind("x(", 0) == 0 && s[3] == ',' && s[5] == ',' && s[7] == ')')
    return cross(sg(s[2]), sg(s[4]), sg(s[6]));
  throw WebError("unknown generator '" + s + "'");
}

SlicedWeb::SlicedWeb(int n, std::vector<Column> cols) : n_(n), cols_(std::move(cols)) { validate(); }

SlicedWeb SlicedWeb::identity(int n, const SignSeq& profile) {
  SlicedWeb w;
  w.n_ = n;
  w.left_ = w.right_ = profile;
  return w;
}

void SlicedWeb::validate() {
  if (n_ < 2) throw WebError("n must be >= 2");
  SignSeq prev_right;
  for (std::size_t t = 0; t < cols_.size(); ++t) {
    SignSeq l, r;
    for (const auto& tok : cols_[t]) {
      auto a = tok.left(n_), b = tok.right(n_);
      l.insert(l.end(), a.begin(), a.end());
      r.insert(r.end(), b.begin(), b.end());
    }
    if (t == 0)
      left_ = l;
    else if (l != prev_right)
      throw WebError("profile mismatch at column " + std::to_string(t) + ": left profile " + sign_str(l) +
                     " does not match right profile " + sign_str(prev_right) + " of column " +
                     std::to_string(t - 1));
    prev_right = r;
  }
  right_ = prev_right;
}

bool SlicedWeb::has_macros() const {
  for (const auto& c : cols_)
    for (const auto& t : c)
      if (!t.is_primitive()) return true;
  return false;
}

SignSeq SlicedWeb::profile_at(std::size_t t) const {
  if (t >= cols_.size()) return right_;
  SignSeq l;
  for (const auto& tok : cols_[t]) {
    auto a = tok.left(n_);
    l.insert(l.end(), a.begin(), a.end());
  }
  return l;
}

// ---------------------------------------------------------------- json

StatedWeb web_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw WebError("web-script must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw WebError("missing integer field 'n'");
  int n = j["n"].get<int>();
  if (n < 2) throw WebError("n must be >= 2");
  if (!j.contains("columns") || !j["columns"].is_array()) throw WebError("missing array field 'columns'");
  std::vector<Column> cols;
  for (std::size_t t = 0; t < j["columns"].size(); ++t) {
    const auto& cj = j["columns"][t];
    if (!cj.is_array()) throw WebError("column " + std::to_string(t) + " must be an array");
    Column c;
    for (std::size_t r = 0; r < cj.size(); ++r) {
      const auto& g = cj[r];
      std::string where = "column " + std::to_string(t) + ", slot " + std::to_string(r) + ": ";
      if (!g.is_object() || !g.contains("k") || !g["k"].is_string())
        throw WebError(where + "generator needs a string field 'k'");
      try {
        c.push_back(Token::parse(g["k"].get<std::string>()));
      } catch (const WebError& e) {
        throw WebError(where + e.what());
      }
    }
    cols.push_back(std::move(c));
  }
  StatedWeb w{SlicedWeb(n, std::move(cols)), std::nullopt, std::nullopt};
  auto states = [&](const char* key, const SignSeq& prof) -> std::optional<States> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_array()) throw WebError(std::string("'") + key + "' must be an array");
    States s;
    for (const auto& x : j[key]) {
      if (!x.is_number_integer()) throw WebError(std::string("'") + key + "' entries must be integers");
      int v = x.get<int>();
      if (v < 1 || v > n) throw WebError(std::string("state ") + std::to_string(v) + " out of range 1.." + std::to_string(n));
      s.push_back(v);
    }
    if (s.size() != prof.size())
      throw WebError(std::string("'") + key + "' has " + std::to_string(s.size()) + " states but the profile " +
                     sign_str(prof) + " has " + std::to_string(prof.size()) + " endpoints");
    return s;
  };
  w.left = states("left", w.web.left_profile());
  w.right = states("right", w.web.right_profile());
  return w;
}

StatedWeb parse_web(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw WebError(std::string("invalid JSON: ") + e.what());
  }
  return web_from_json(j);
}

nlohmann::json web_to_json(const StatedWeb& w) {
  nlohmann::json j;
  j["n"] = w.web.n();
  j["columns"] = nlohmann::json::array();
  for (const auto& c : w.web.columns()) {
    auto cj = nlohmann::json::array();
    for (const auto& t : c) cj.push_back({{"k", t.name()}});
    j["columns"].push_back(cj);
  }
  if (w.left) j["left"] = *w.left;
  if (w.right) j["right"] = *w.right;
  return j;
}

// ---------------------------------------------------------------- composition

SlicedWeb compose(const SlicedWeb& left, const SlicedWeb& right) {
  if (left.n() != right.n()) throw WebError("compose: different n");
  if (left.right_profile() != right.left_profile())
    throw WebError("compose: profile mismatch " + sign_str(left.right_profile()) + " vs " +
                   sign_str(right.left_profile()));
  if (left.size() == 0) return right;
  if (right.size() == 0) return left;
  auto cols = left.columns();
  cols.insert(cols.end(), right.columns().begin(), right.columns().end());
  return SlicedWeb(left.n(), std::move(cols));
}

SlicedWeb compose(const std::vector<SlicedWeb>& parts) {
  if (parts.empty()) throw WebError("compose: nothing to compose");
  SlicedWeb w = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) w = compose(parts[i], w);
  return w;
}

SlicedWeb stack(const SlicedWeb& bottom, const SlicedWeb& top) {
  if (bottom.n() != top.n()) throw WebError("stack: different n");
  std::size_t m = std::max(bottom.size(), top.size());
  if (m == 0) {
    SignSeq p = bottom.left_profile();
    p.insert(p.end(), top.left_profile().begin(), top.left_profile().end());
    return SlicedWeb::identity(bottom.n(), p);
  }
  auto padded = [&](const SlicedWeb& w, std::size_t t) -> Column {
    std::size_t off = m - w.size();  // identity columns on the left
    if (t < off) return ids(w.left_profile());
    return w.columns()[t - off];
  };
  std::vector<Column> cols;
  for (std::size_t t = 0; t < m; ++t) cols.push_back(cat({padded(bottom, t), padded(top, t)}));
  return SlicedWeb(bottom.n(), std::move(cols));
}

StatedWeb stack(const StatedWeb& bottom, const StatedWeb& top) {
  StatedWeb r{stack(bottom.web, top.web), std::nullopt, std::nullopt};
  auto join = [](const std::optional<States>& a, const std::optional<States>& b) -> std::optional<States> {
    if (!a || !b) return std::nullopt;
    States s = *a;
    s.insert(s.end(), b->begin(), b->end());
    return s;
  };
  r.left = join(bottom.left, top.left);
  r.right = join(bottom.right, top.right);
  return r;
}

// ---------------------------------------------------------------- macros

SlicedWeb macro_expansion(const Token& t, int n) {
  const Token P = Token::id(1), M = Token::id(-1);
  switch (t.kind) {
    case Kind::Cross: {
      Token core = Token::cross(1, 1, t.s);
      if (t.e1 < 0 && t.e2 > 0)
        // the reversed strand runs an S-curve: cap on the left, cup on the right
        return SlicedWeb(n, {{Token::of(Kind::CapEv), P, M}, {M, core, M}, {M, P, Token::of(Kind::CupCoev)}});
      if (t.e1 > 0 && t.e2 < 0)
        return SlicedWeb(n, {{M, P, Token::of(Kind::CapTildeEv)}, {M, core, M}, {Token::of(Kind::CupTildeCoev), P, M}});
      // both reversed: conjugate the (+,+) crossing by nested caps and cups
      Token ev = Token::of(Kind::CapEv), co = Token::of(Kind::CupCoev);
      return SlicedWeb(n, {{ev, M, M}, {M, ev, P, M, M}, {M, M, core, M, M}, {M, M, P, co, M}, {M, M, co}});
    }
    case Kind::SinkMinus: {
      std::vector<Column> cols;
      for (int k = n; k >= 1; --k) cols.push_back(cat({ids(1, n - k), {Token::of(Kind::CapTildeEv)}, ids(-1, n - k)}));
      cols.push_back(cat({{Token::of(Kind::Source)}, ids(-1, n)}));
      return SlicedWeb(n, std::move(cols));
    }
    case Kind::SourceMinus: {
      std::vector<Column> cols;
      cols.push_back(cat({ids(-1, n), {Token::of(Kind::Sink)}}));
      for (int j = n - 1; j >= 0; --j) cols.push_back(cat({ids(-1, j), {Token::of(Kind::CupTildeCoev)}, ids(1, j)}));
      return SlicedWeb(n, std::move(cols));
    }
    default:
      return SlicedWeb(n, {{t}});
  }
}

namespace {

// Expand token k of column c; other tokens of the column sit at depth `depth`
// (clamped) of the expansion block.
SlicedWeb expand_one(const SlicedWeb& w, std::size_t c, std::size_t k, std::optional<std::size_t> depth) {
  int n = w.n();
  const Column& col = w.columns()[c];
  SlicedWeb block = macro_expansion(col[k], n);
  std::size_t d = block.size();
  std::vector<Column> sub(d);
  for (std::size_t idx = 0; idx < col.size(); ++idx) {
    if (idx == k) {
      for (std::size_t j = 0; j < d; ++j)
        sub[j].insert(sub[j].end(), block.columns()[j].begin(), block.columns()[j].end());
      continue;
    }
    std::size_t at = depth ? std::min(*depth, d - 1) : d - 1;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == at)
        sub[j].push_back(col[idx]);
      else {
        Column pad = ids(j < at ? col[idx].left(n) : col[idx].right(n));
        sub[j].insert(sub[j].end(), pad.begin(), pad.end());
      }
    }
  }
  std::vector<Column> cols(w.columns().begin(), w.columns().begin() + static_cast<long>(c));
  cols.insert(cols.end(), sub.begin(), sub.end());
  cols.insert(cols.end(), w.columns().begin() + static_cast<long>(c) + 1, w.columns().end());
  return SlicedWeb(n, std::move(cols));
}

}  // namespace

SlicedWeb expand_macros(const SlicedWeb& w) {
  SlicedWeb cur = w;
  while (cur.has_macros()) {
    bool done = false;
    for (std::size_t c = 0; c < cur.size() && !done; ++c)
      for (std::size_t k = 0; k < cur.columns()[c].size() && !done; ++k)
        if (!cur.columns()[c][k].is_primitive()) {
          cur = expand_one(cur, c, k, std::nullopt);
          done = true;
        }
  }
  return cur;
}

SlicedWeb expand_macros(const SlicedWeb& w, std::mt19937_64& rng) {
  SlicedWeb cur = w;
  while (cur.has_macros()) {
    std::vector<std::pair<std::size_t, std::size_t>> spots;
    for (std::size_t c = 0; c < cur.size(); ++c)
      for (std::size_t k = 0; k < cur.columns()[c].size(); ++k)
        if (!cur.columns()[c][k].is_primitive()) spots.emplace_back(c, k);
    auto [c, k] = spots[rng() % spots.size()];
    cur = expand_one(cur, c, k, static_cast<std::size_t>(rng() % 8));
  }
  return cur;
}

// ---------------------------------------------------------------- symmetries

Token reverse_token(const Token& t) {
  switch (t.kind) {
    case Kind::IdPlus: return Token::of(Kind::IdMinus);
    case Kind::IdMinus: return Token::of(Kind::IdPlus);
    case Kind::CrossPos: return Token::cross(-1, -1, 1);
    case Kind::CrossNeg: return Token::cross(-1, -1, -1);
    case Kind::Cross: return Token::cross(-t.e1, -t.e2, t.s);
    case Kind::CapEv: return Token::of(Kind::CapTildeEv);
    case Kind::CapTildeEv: return Token::of(Kind::CapEv);
    case Kind::CupCoev: return Token::of(Kind::CupTildeCoev);
    case Kind::CupTildeCoev: return Token::of(Kind::CupCoev);
    case Kind::Sink: return Token::of(Kind::SinkMinus);
    case Kind::SinkMinus: return Token::of(Kind::Sink);
    case Kind::Source: return Token::of(Kind::SourceMinus);
    case Kind::SourceMinus: return Token::of(Kind::Source);
  }
  return t;
}

Token rotate_token(const Token& t) {
  switch (t.kind) {
    case Kind::CapEv: return Token::of(Kind::CupTildeCoev);
    case Kind::CapTildeEv: return Token::of(Kind::CupCoev);
    case Kind::CupCoev: return Token::of(Kind::CapTildeEv);
    case Kind::CupTildeCoev: return Token::of(Kind::CapEv);
    case Kind::Sink: return Token::of(Kind::SourceMinus);
    case Kind::Source: return Token::of(Kind::SinkMinus);
    case Kind::SinkMinus: return Token::of(Kind::Source);
    case Kind::SourceMinus: return Token::of(Kind::Sink);
    default: return reverse_token(t);
  }
}

SlicedWeb reverse_orientation(const SlicedWeb& w) {
  if (w.size() == 0) {
    SignSeq p = w.left_profile();
    for (auto& s : p) s = -s;
    return SlicedWeb::identity(w.n(), p);
  }
  std::vector<Column> cols;
  for (const auto& c : w.columns()) {
    Column r;
    for (const auto& t : c) r.push_back(reverse_token(t));
    cols.push_back(std::move(r));
  }
  return SlicedWeb(w.n(), std::move(cols));
}

StatedWeb reverse_orientation(const StatedWeb& w) { return {reverse_orientation(w.web), w.left, w.right}; }

SlicedWeb rotate(const SlicedWeb& w) {
  if (w.size() == 0) return SlicedWeb::identity(w.n(), neg_rev(w.left_profile()));
  std::vector<Column> cols;
  for (auto it = w.columns().rbegin(); it != w.columns().rend(); ++it) {
    Column r;
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt) r.push_back(rotate_token(*jt));
    cols.push_back(std::move(r));
  }
  return SlicedWeb(w.n(), std::move(cols));
}

States dual_states(const States& s, int n) {
  States r(s.rbegin(), s.rend());
  for (auto& x : r) x = n + 1 - x;
  return r;
}

std::pair<Laurent, StatedWeb> rotate_dual(const StatedWeb& w) {
  int n = w.web.n();
  const auto& sc = scalars(n);
  Laurent coef(1);
  StatedWeb r{rotate(w.web), std::nullopt, std::nullopt};
  if (w.left) {
    for (int i : *w.left) coef *= sc.c_inv[i];
    r.right = dual_states(*w.left, n);
  }
  if (w.right) {
    for (int j : *w.right) coef *= sc.c[j];
    r.left = dual_states(*w.right, n);
  }
  return {coef, r};
}

// ---------------------------------------------------------------- braids

SlicedWeb braid_web(int n, const SignSeq& right_profile, const std::vector<int>& word, Sign s) {
  if (word.empty()) return SlicedWeb::identity(n, right_profile);
  SignSeq p = right_profile;
  std::vector<Column> cols;
  for (int w : word) {
    if (w < 1 || w >= static_cast<int>(p.size())) throw WebError("braid generator out of range");
    std::size_t i = static_cast<std::size_t>(w - 1);
    Column c;
    for (std::size_t k = 0; k < i; ++k) c.push_back(Token::id(p[k]));
    // geometric crossing type is fixed; the oriented sign flips for antiparallel strands
    c.push_back(Token::cross(p[i], p[i + 1], s * p[i] * p[i + 1]));
    for (std::size_t k = i + 2; k < p.size(); ++k) c.push_back(Token::id(p[k]));
    std::swap(p[i], p[i + 1]);
    cols.push_back(std::move(c));
  }
  std::reverse(cols.begin(), cols.end());
  return SlicedWeb(n, std::move(cols));
}

SlicedWeb half_twist(int n, const SignSeq& right_profile, Sign s) {
  int k = static_cast<int>(right_profile.size());
  return braid_web(n, right_profile, min_braid_word(longest_perm(k)), s);
}

std::pair<Laurent, StatedWeb> half_twist_compose(const StatedWeb& w, Side side, bool positive) {
  int n = w.web.n();
  const auto& sc = scalars(n);
  const auto& st = side == Side::Right ? w.right : w.left;
  if (!st) throw WebError("half_twist_compose: side is not stated");
  Laurent coef(1);
  for (int i : *st) coef *= positive ? sc.c[n + 1 - i] : sc.c_inv[i];
  if (st->empty()) return {coef, w};
  StatedWeb r = w;
  Sign s = positive ? 1 : -1;
  if (side == Side::Right) {
    SignSeq p = w.web.right_profile();
    r.web = compose(w.web, half_twist(n, SignSeq(p.rbegin(), p.rend()), s));
    r.right = dual_states(*st, n);
  } else {
    r.web = compose(half_twist(n, w.web.left_profile(), s), w.web);
    r.left = dual_states(*st, n);
  }
  return {coef, r};
}

StatedWeb hd(const StatedWeb& w) {
  if (w.left) throw WebError("hd: expects a web stated on the right only");
  if (!w.right) throw WebError("hd: right side not stated");
  SlicedWeb ro = rotate(w.web);
  SlicedWeb h = half_twist(w.web.n(), ro.left_profile(), -1);
  return {compose(h, ro), *w.right, std::nullopt};
}

// ---------------------------------------------------------------- named webs

namespace webs {

SlicedWeb strands(int n, const SignSeq& profile) { return SlicedWeb(n, {ids(profile)}); }

SlicedWeb single(int n, Token t) { return SlicedWeb(n, {{t}}); }

SlicedWeb kink(int n, Sign s) {
  const Token P = Token::id(1), M = Token::id(-1);
  return SlicedWeb(n, {{P, Token::of(Kind::CapTildeEv)}, {Token::cross(1, 1, s), M}, {P, Token::of(Kind::CupCoev)}});
}

SlicedWeb loop(int n, Sign orientation) {
  if (orientation > 0) return SlicedWeb(n, {{Token::of(Kind::CapTildeEv)}, {Token::of(Kind::CupCoev)}});
  return SlicedWeb(n, {{Token::of(Kind::CapEv)}, {Token::of(Kind::CupTildeCoev)}});
}

SlicedWeb sink_source(int n) { return SlicedWeb(n, {{Token::of(Kind::Source)}, {Token::of(Kind::Sink)}}); }

SlicedWeb positive_braid(int n, const Perm& p) {
  return braid_web(n, rep(1, static_cast<int>(p.size())), min_braid_word(p), 1);
}

SlicedWeb negative_braid(int n, const Perm& p) {
  return braid_web(n, rep(1, static_cast<int>(p.size())), min_braid_word(p), -1);
}

SlicedWeb sink_with_cross(int n, int i) {
  return SlicedWeb(n, {{Token::of(Kind::Sink)}, cat({ids(1, i - 1), {Token::of(Kind::CrossPos)}, ids(1, n - i - 1)})});
}

SlicedWeb source_with_cross(int n, int i) {
  return SlicedWeb(n, {cat({ids(1, i - 1), {Token::of(Kind::CrossPos)}, ids(1, n - i - 1)}), {Token::of(Kind::Source)}});
}

SlicedWeb sink_cyclic(int n) {
  return SlicedWeb(n, {{Token::of(Kind::CapTildeEv)},
                       {Token::id(1), Token::of(Kind::Sink), Token::id(-1)},
                       cat({ids(1, n), {Token::of(Kind::CupCoev)}})});
}

SlicedWeb source_cyclic(int n) {
  return SlicedWeb(n, {cat({ids(1, n), {Token::of(Kind::CapTildeEv)}}),
                       {Token::id(1), Token::of(Kind::Source), Token::id(-1)},
                       {Token::of(Kind::CupCoev)}});
}

SlicedWeb crossing_h(int n) {
  int m = n - 2;
  std::vector<Column> cols;  // built right to left, reversed at the end
  for (int j = 0; j < m; ++j) cols.push_back(cat({ids(-1, j), {Token::of(Kind::CupTildeCoev)}, ids(1, j + 2)}));
  cols.push_back(cat({ids(-1, m), {Token::of(Kind::Sink)}}));
  cols.push_back(cat({ids(-1, m), {Token::of(Kind::Source)}}));
  for (int k = m; k >= 1; --k) cols.push_back(cat({ids(-1, k - 1), {Token::of(Kind::CapEv)}, ids(1, n - (m - k) - 1)}));
  std::reverse(cols.begin(), cols.end());
  return SlicedWeb(n, std::move(cols));
}

}  // namespace webs

}  // namespace skein

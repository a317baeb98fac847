#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "skein/ring.hpp"

namespace skein {

using Sign = int;  // +1 or -1
using SignSeq = std::vector<Sign>;
using States = std::vector<int>;

enum class Kind {
  IdPlus,
  IdMinus,
  CrossPos,
  CrossNeg,
  CapEv,
  CapTildeEv,
  CupCoev,
  CupTildeCoev,
  Sink,
  Source,
  // macros
  Cross,  // mixed orientation crossing x(e1,e2,s)
  SinkMinus,
  SourceMinus,
};

// One generator in a column. For Kind::Cross the right profile is [e1,e2],
// the left profile [e2,e1] and s is the sign of the (+,+) core crossing.
struct Token {
  Kind kind = Kind::IdPlus;
  Sign e1 = 1, e2 = 1, s = 1;

  static Token id(Sign e) { return {e > 0 ? Kind::IdPlus : Kind::IdMinus}; }
  static Token cross(Sign e1, Sign e2, Sign s);
  static Token of(Kind k) { return {k}; }

  bool is_primitive() const;
  SignSeq right(int n) const;
  SignSeq left(int n) const;
  std::string name() const;
  static Token parse(const std::string& s);

  friend bool operator==(const Token& a, const Token& b) {
    return a.kind == b.kind && (a.kind != Kind::Cross || (a.e1 == b.e1 && a.e2 == b.e2 && a.s == b.s));
  }
};

using Column = std::vector<Token>;  // bottom-to-top

struct WebError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Columns left-to-right; the rightmost column acts first.
class SlicedWeb {
 public:
  SlicedWeb() = default;
  SlicedWeb(int n, std::vector<Column> cols);
  // web with no columns and a fixed through-profile (identity morphism)
  static SlicedWeb identity(int n, const SignSeq& profile);

  int n() const { return n_; }
  const std::vector<Column>& columns() const { return cols_; }
  const SignSeq& right_profile() const { return right_; }
  const SignSeq& left_profile() const { return left_; }
  bool has_macros() const;
  std::size_t size() const { return cols_.size(); }

  // profile of the wires to the left of column t (t == size() is the right boundary)
  SignSeq profile_at(std::size_t t) const;

  friend bool operator==(const SlicedWeb& a, const SlicedWeb& b) {
    return a.n_ == b.n_ && a.cols_ == b.cols_ && a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  void validate();
  int n_ = 2;
  std::vector<Column> cols_;
  SignSeq left_, right_;
};

struct StatedWeb {
  SlicedWeb web;
  std::optional<States> left, right;
};

using WebExpr = std::vector<std::pair<Laurent, StatedWeb>>;

std::string sign_str(const SignSeq& s);

// JSON web-script
StatedWeb parse_web(const std::string& text);
StatedWeb web_from_json(const nlohmann::json& j);
nlohmann::json web_to_json(const StatedWeb& w);

// Composition: `left` placed to the left of `right` (right acts first).
SlicedWeb compose(const SlicedWeb& left, const SlicedWeb& right);
SlicedWeb compose(const std::vector<SlicedWeb>& left_to_right);
// Vertical juxtaposition, `bottom` occupying the lower tensor slots.
SlicedWeb stack(const SlicedWeb& bottom, const SlicedWeb& top);
StatedWeb stack(const StatedWeb& bottom, const StatedWeb& top);

// Expansion of a single macro token into primitive-or-macro columns.
SlicedWeb macro_expansion(const Token& t, int n);

// Replace every macro by primitives. With an rng the macros are expanded one
// at a time in random order and the remaining tokens of an expanded column
// are placed at a random depth of the expansion block.
SlicedWeb expand_macros(const SlicedWeb& w);
SlicedWeb expand_macros(const SlicedWeb& w, std::mt19937_64& rng);

Token reverse_token(const Token& t);
Token rotate_token(const Token& t);
SlicedWeb reverse_orientation(const SlicedWeb& w);
StatedWeb reverse_orientation(const StatedWeb& w);
// 180 degree rotation ro of the diagram (no states)
SlicedWeb rotate(const SlicedWeb& w);
States dual_states(const States& s, int n);
// alpha* = (c_i)^-1 c_j (j*, ro(alpha), i*) for alpha = (i, alpha, j)
std::pair<Laurent, StatedWeb> rotate_dual(const StatedWeb& w);

// Braid on the given right profile following a word of adjacent
// transpositions (1-based); word[0] is applied first (rightmost column).
SlicedWeb braid_web(int n, const SignSeq& right_profile, const std::vector<int>& word, Sign s);
// positive (s=+1) or negative half twist whose right profile is given
SlicedWeb half_twist(int n, const SignSeq& right_profile, Sign s);

enum class Side { Left, Right };
std::pair<Laurent, StatedWeb> half_twist_compose(const StatedWeb& w, Side side, bool positive);
// hd((alpha, i)) = (i, Hbar o ro(alpha))
StatedWeb hd(const StatedWeb& w);

// Small library of named webs used by suites and tests.
namespace webs {
SlicedWeb strands(int n, const SignSeq& profile);
SlicedWeb single(int n, Token t);
SlicedWeb kink(int n, Sign s);
SlicedWeb loop(int n, Sign orientation);
SlicedWeb sink_source(int n);  // Source placed left of Sink
SlicedWeb positive_braid(int n, const Perm& p);
SlicedWeb negative_braid(int n, const Perm& p);
SlicedWeb sink_with_cross(int n, int i);    // Sink after a crossing on legs i,i+1
SlicedWeb source_with_cross(int n, int i);  // crossing on legs i,i+1 after Source
SlicedWeb sink_cyclic(int n);
SlicedWeb source_cyclic(int n);
SlicedWeb crossing_h(int n);  // two strands through a sink/source pair joined by n-2 edges
}  // namespace webs

}  // namespace skein

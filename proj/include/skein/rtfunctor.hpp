#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "skein/diagram.hpp"
#include "skein/ring.hpp"

namespace skein {

using Idx = std::uint64_t;

// Tuples over {1..n} packed base n, slot 0 (bottom) most significant, so the
// numeric order of equal-length codes is the lexicographic tuple order.
Idx encode(const States& s, int n);
States decode(Idx x, int len, int n);
Idx ipow(int n, int k);

struct PairHash {
  std::size_t operator()(const std::pair<Idx, Idx>& p) const {
    return std::hash<Idx>()(p.first * 0x9e3779b97f4a7c15ULL ^ (p.second + 0x632be59bd9b4e019ULL));
  }
};

// Sparse operator V^{in profile} -> V^{out profile} in the e/f tensor basis.
class SparseOp {
 public:
  using Key = std::pair<Idx, Idx>;  // (out, in)
  using Map = std::unordered_map<Key, Laurent, PairHash>;

  SparseOp() = default;
  SparseOp(int n, int in, int out) : n_(n), in_(in), out_(out) {}

  static SparseOp identity(int n, int k);
  static SparseOp scalar(int n, const Laurent& c);

  int n() const { return n_; }
  int in_arity() const { return in_; }
  int out_arity() const { return out_; }
  const Map& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  void add(Idx out, Idx in, const Laurent& c);
  Laurent at(Idx out, Idx in) const;
  Laurent entry(const States& out, const States& in) const;

  SparseOp& operator+=(const SparseOp& o);
  SparseOp& operator-=(const SparseOp& o);
  SparseOp operator*(const Laurent& c) const;
  friend SparseOp operator+(SparseOp a, const SparseOp& b) { return a += b; }
  friend SparseOp operator-(SparseOp a, const SparseOp& b) { return a -= b; }
  friend bool operator==(const SparseOp& a, const SparseOp& b);
  friend bool operator!=(const SparseOp& a, const SparseOp& b) { return !(a == b); }

  // sorted (out, in, value)
  std::vector<std::tuple<Idx, Idx, Laurent>> sorted() const;
  nlohmann::json to_json() const;

 private:
  int n_ = 2, in_ = 0, out_ = 0;
  Map entries_;
};

// A after B
SparseOp compose(const SparseOp& a, const SparseOp& b);
// a on the lower slots, b on the upper slots
SparseOp tensor(const SparseOp& a, const SparseOp& b);
// exact inverse; works block by block and requires unit determinants
SparseOp invert(const SparseOp& a);

SparseOp elementary_matrix(const Token& t, int n);
SparseOp eval(const SlicedWeb& w);
Laurent rt_entry(const StatedWeb& w);

// Fix the indices of one side; the result has arity 0 on that side.
SparseOp clamp(const SparseOp& op, Side side, const States& states);

// Evaluate a formal combination as an operator (all webs must share profiles).
SparseOp eval_expr(const WebExpr& e);
// Combination of webs stated on one side only, clamped on that side.
SparseOp eval_clamped(const WebExpr& e, Side side);

// constant operators
SparseOp r_hat(int n);       // CrossPos on V(x)V
SparseOp r_hat_inv(int n);   // CrossNeg
SparseOp x_matrix(int n);    // X^i_j = delta_{i,jbar} c_i on V
SparseOp g_matrix(int n);    // diag(g_i)

}  // namespace skein

#pragma once

#include "oracle.hpp"
#include "skein/rtfunctor.hpp"

inline bool matches(const skein::SparseOp& op, const oracle::Mat& m) {
  if (static_cast<int>(skein::ipow(op.n(), op.out_arity())) != m.rows) return false;
  if (static_cast<int>(skein::ipow(op.n(), op.in_arity())) != m.cols) return false;
  std::size_t nz = 0;
  for (const auto& p : m.e) nz += !p.zero();
  if (nz != op.nnz()) return false;
  for (const auto& [o, i, val] : op.sorted())
    if (!oracle::same(val, m.at(static_cast<int>(o), static_cast<int>(i)))) return false;
  return true;
}

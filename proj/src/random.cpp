#include "skein/random.hpp"

#include <algorithm>

#include "skein/rtfunctor.hpp"

namespace skein {

namespace {

struct Option {
  Token tok;
  int weight;
};

}  // namespace

SlicedWeb random_web(int n, Rng& rng, const WebGenOptions& opt) {
  int width = pick(rng, opt.max_width + 1);
  SignSeq prof;
  for (int i = 0; i < width; ++i) prof.push_back(opt.mixed && pick(rng, 2) ? -1 : 1);
  int ncols = 1 + pick(rng, opt.max_columns);
  std::vector<Column> cols;  // generated right to left
  for (int c = 0; c < ncols; ++c) {
    Column col;
    SignSeq next;
    std::size_t p = 0;
    int budget = opt.max_width - static_cast<int>(prof.size());
    while (p <= prof.size()) {
      // optional creation token (no inputs)
      if (pick(rng, 6) == 0) {
        std::vector<Option> births;
        if (budget >= 2) {
          births.push_back({Token::of(Kind::CupCoev), 3});
          if (opt.mixed) births.push_back({Token::of(Kind::CupTildeCoev), 3});
        }
        if (opt.vertices && budget >= n) {
          births.push_back({Token::of(Kind::Source), 1});
          if (opt.mixed) births.push_back({Token::of(Kind::SourceMinus), 1});
        }
        if (!births.empty()) {
          const Token& t = births[static_cast<std::size_t>(pick(rng, static_cast<int>(births.size())))].tok;
          col.push_back(t);
          auto l = t.left(n);
          next.insert(next.end(), l.begin(), l.end());
          budget -= static_cast<int>(l.size());
        }
      }
      if (p == prof.size()) break;
      std::vector<Option> opts{{Token::id(prof[p]), 3}};
      if (p + 1 < prof.size()) {
        opts.push_back({Token::cross(prof[p], prof[p + 1], pick(rng, 2) ? 1 : -1), 5});
        if (prof[p] != prof[p + 1]) opts.push_back({Token::of(prof[p] < 0 ? Kind::CapEv : Kind::CapTildeEv), 3});
      }
      if (opt.vertices && p + static_cast<std::size_t>(n) <= prof.size()) {
        bool allp = std::all_of(prof.begin() + static_cast<long>(p), prof.begin() + static_cast<long>(p) + n, [](int s) { return s > 0; });
        bool allm = std::all_of(prof.begin() + static_cast<long>(p), prof.begin() + static_cast<long>(p) + n, [](int s) { return s < 0; });
        if (allp) opts.push_back({Token::of(Kind::Sink), 2});
        if (allm) opts.push_back({Token::of(Kind::SinkMinus), 2});
      }
      int total = 0;
      for (const auto& o : opts) total += o.weight;
      int r = pick(rng, total);
      std::size_t k = 0;
      while (r >= opts[k].weight) r -= opts[k++].weight;
      const Token& t = opts[k].tok;
      col.push_back(t);
      auto l = t.left(n);
      auto rr = t.right(n);
      next.insert(next.end(), l.begin(), l.end());
      budget += static_cast<int>(rr.size()) - static_cast<int>(l.size());
      p += rr.size();
    }
    if (col.empty()) continue;  // empty profile and nothing created
    cols.push_back(std::move(col));
    prof = std::move(next);
  }
  std::reverse(cols.begin(), cols.end());
  if (cols.empty()) return SlicedWeb::identity(n, prof);
  return SlicedWeb(n, std::move(cols));
}

States random_states(int n, std::size_t len, Rng& rng) {
  States s(len);
  for (auto& x : s) x = 1 + pick(rng, n);
  return s;
}

StatedWeb random_stated_web(int n, Rng& rng, const WebGenOptions& opt) {
  SlicedWeb w = random_web(n, rng, opt);
  States right = random_states(n, w.right_profile().size(), rng);
  States left = random_states(n, w.left_profile().size(), rng);
  if (pick(rng, 4) != 0) {
    SparseOp col = clamp(eval(w), Side::Right, right);
    if (!col.is_zero()) {
      auto entries = col.sorted();
      const auto& e = entries[static_cast<std::size_t>(pick(rng, static_cast<int>(entries.size())))];
      left = decode(std::get<0>(e), static_cast<int>(w.left_profile().size()), n);
    }
  }
  return {w, left, right};
}

Monomial random_monomial(int n, Rng& rng, int max_degree) {
  int d = pick(rng, max_degree + 1);
  Monomial m;
  for (int i = 0; i < d; ++i) m.push_back(static_cast<char>(pick(rng, n * n)));
  return m;
}

NCPoly random_element(int n, Rng& rng, int max_terms) {
  NCPoly r(n);
  int terms = 1 + pick(rng, max_terms);
  for (int t = 0; t < terms; ++t) {
    Laurent c = Laurent::mono(pick(rng, 2) ? 1 : -1, pick(rng, 7) - 3);
    r += normal_form(n, random_monomial(n, rng, 2), c);
  }
  return r;
}

}  // namespace skein

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/oq.hpp"
#include "skein/report.hpp"
#include "skein/rtfunctor.hpp"

namespace skein {

// u^i_j for a + strand, ahat^i_j for a - strand
const NCPoly& strand_generator(int n, Sign s, int i, int j);

NCPoly phi(const StatedWeb& w);
NCPoly phi(const WebExpr& e);
Laurent skein_counit(const StatedWeb& w);
TensorPoly splitting(const StatedWeb& w);

// Scalar prod g_{s(x)} over the endpoints on one side; the web is unchanged.
std::pair<Laurent, StatedWeb> marking_auto(const StatedWeb& w, Side side);
// sum over endpoints of 2 s(x) - (n+1), i.e. twice the degree
int web_degree2(const StatedWeb& w, Side side);

// A local relation lhs = rhs between webs stated on one side only.
struct WallRelation {
  std::string id;
  Side side = Side::Right;
  WebExpr lhs, rhs;
};

WebExpr operator-(const WebExpr& a, const WebExpr& b);
WebExpr scale(const WebExpr& e, const Laurent& c);

// Basic right annihilators (both orientations, every state instance).
std::vector<WallRelation> right_annihilators(int n);
// Derived identities near a wall (both orientations).
std::vector<WallRelation> derived_wall_relations(int n);
// n = 2 boundary specializations
std::vector<WallRelation> kauffman_wall_relations();

// RT(lhs - rhs) clamped on the stated side vanishes.
bool check_clamped(const WallRelation& r, std::string* witness = nullptr);
// Phi(lhs) = Phi(rhs) in O_q(SL(n)) for every completion of the free side.
bool check_phi(const WallRelation& r, std::string* witness = nullptr);
// For right relations: the hd image is a left annihilator.
bool check_hd(const WallRelation& r, std::string* witness = nullptr);

SuiteReport boundary_relation_suite(int n, std::uint64_t seed = 0);

}  // namespace skein

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skein/braided.hpp"
#include "skein/diagram.hpp"
#include "skein/oq.hpp"
#include "skein/rtfunctor.hpp"
#include "skein/skeinmap.hpp"
#include "skein/suites.hpp"

using namespace skein;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

States parse_states(const std::string& s) {
  States out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("bad state list '" + s + "'");
    }
  }
  return out;
}

void apply_states(const std::optional<States>& given, std::optional<States>& slot, const SignSeq& prof, int n,
                  const char* name) {
  if (!given) return;
  if (given->size() != prof.size())
    throw UsageError(std::string("--") + name + " has " + std::to_string(given->size()) + " states, profile " +
                     sign_str(prof) + " has " + std::to_string(prof.size()));
  for (int v : *given)
    if (v < 1 || v > n) throw UsageError(std::string("--") + name + ": state out of range 1.." + std::to_string(n));
  slot = given;
}

struct WebArgs {
  std::string file, left, right;
  int n = 0;
};

StatedWeb load_web(const WebArgs& a) {
  std::ifstream in(a.file);
  if (!in) throw UsageError("cannot read " + a.file);
  std::stringstream buf;
  buf << in.rdbuf();
  StatedWeb w;
  try {
    w = parse_web(buf.str());
  } catch (const WebError& e) {
    throw WebError(a.file + ": " + e.what());
  }
  if (a.n && a.n != w.web.n())
    throw UsageError("--n " + std::to_string(a.n) + " disagrees with n = " + std::to_string(w.web.n()) + " in " + a.file);
  std::optional<States> l, r;
  if (!a.left.empty()) l = parse_states(a.left);
  if (!a.right.empty()) r = parse_states(a.right);
  apply_states(l, w.left, w.web.left_profile(), w.web.n(), "left");
  apply_states(r, w.right, w.web.right_profile(), w.web.n(), "right");
  return w;
}

void add_web_opts(CLI::App* c, WebArgs& a) {
  c->add_option("webfile", a.file, "web-script JSON file")->required();
  c->add_option("--n", a.n, "rank (must match the file)");
  c->add_option("--left", a.left, "comma-separated left states");
  c->add_option("--right", a.right, "comma-separated right states");
}

int cmd_rt_eval(const WebArgs& a) {
  StatedWeb w = load_web(a);
  // a side with no endpoints is trivially stated
  if (!w.left && w.web.left_profile().empty()) w.left = States{};
  if (!w.right && w.web.right_profile().empty()) w.right = States{};
  if (w.left && w.right) {
    std::cout << rt_entry(w).str() << "\n";
    return 0;
  }
  SparseOp op = eval(w.web);
  if (w.right) op = clamp(op, Side::Right, *w.right);
  if (w.left) op = clamp(op, Side::Left, *w.left);
  std::cout << op.to_json().dump(2) << "\n";
  return 0;
}

int print_report(const SuiteReport& r, bool json) {
  if (json) {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    for (const auto& c : r.checks) {
      std::cout << (c.pass ? "pass " : "FAIL ") << c.id;
      if (!c.pass) std::cout << "  " << c.witness;
      std::cout << "\n";
    }
    std::size_t bad = 0;
    for (const auto& c : r.checks) bad += !c.pass;
    std::cout << r.suite << " n=" << r.n << " seed=" << r.seed << ": " << (r.checks.size() - bad) << "/"
              << r.checks.size() << " passed\n";
  }
  return r.pass() ? 0 : 1;
}

std::vector<NCPoly> parse_all(const std::vector<std::string>& exprs, int n) {
  std::vector<NCPoly> out;
  for (const auto& e : exprs) out.push_back(parse_element(e, n));
  return out;
}

void need(const std::vector<std::string>& exprs, std::size_t k, const std::string& op) {
  if (exprs.size() != k)
    throw UsageError(op + " takes " + std::to_string(k) + " expression" + (k == 1 ? "" : "s") + ", got " +
                     std::to_string(exprs.size()));
}

int cmd_oq(const std::string& op, const std::vector<std::string>& exprs, int n) {
  if (op == "mul") {
    if (exprs.empty()) throw UsageError("mul takes at least one expression");
    auto xs = parse_all(exprs, n);
    NCPoly p = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) p = p * xs[i];
    std::cout << p.str() << "\n";
    return 0;
  }
  if (op == "rho") {
    need(exprs, 2, op);
    auto xs = parse_all(exprs, n);
    std::cout << rho(xs[0], xs[1]).str() << "\n";
    return 0;
  }
  need(exprs, 1, op);
  NCPoly x = parse_element(exprs[0], n);
  if (op == "nf")
    std::cout << x.str() << "\n";
  else if (op == "delta")
    std::cout << coproduct(x).str() << "\n";
  else if (op == "counit")
    std::cout << counit(x).str() << "\n";
  else if (op == "antipode")
    std::cout << antipode(x).str() << "\n";
  else
    throw UsageError("unknown oq operation '" + op + "'");
  return 0;
}

int cmd_skein(const std::string& op, const WebArgs& a) {
  StatedWeb w = load_web(a);
  if (op == "phi")
    std::cout << phi(w).str() << "\n";
  else if (op == "counit")
    std::cout << skein_counit(w).str() << "\n";
  else if (op == "split")
    std::cout << splitting(w).str() << "\n";
  else
    throw UsageError("unknown skein operation '" + op + "'");
  return 0;
}

int cmd_braided(const std::string& op, const std::vector<std::string>& exprs, int n, std::uint64_t seed, int samples,
                bool json) {
  if (op == "mul") {
    need(exprs, 2, op);
    auto xs = parse_all(exprs, n);
    std::cout << braided_mul(xs[0], xs[1]).str() << "\n";
    return 0;
  }
  if (op == "ad") {
    need(exprs, 1, op);
    std::cout << ad_coaction(parse_element(exprs[0], n)).str() << "\n";
    return 0;
  }
  if (op == "reflect") {
    need(exprs, 0, op);
    if (n < 2 || n > 3) throw UsageError("braided reflect supports n = 2, 3");
    return print_report(reflection_check(n, seed, samples), json);
  }
  throw UsageError("unknown braided operation '" + op + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stated SL(n) skein calculator"};
  app.require_subcommand(1);
  int code = 0;

  WebArgs web;
  auto* rt = app.add_subcommand("rt", "Reshetikhin-Turaev evaluation");
  rt->require_subcommand(1);
  auto* rt_eval = rt->add_subcommand("eval", "evaluate a web-script file");
  add_web_opts(rt_eval, web);

  std::string suite;
  int n = 2;
  std::uint64_t seed = 0;
  bool json = false;
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--n", n, "rank");
  verify->add_option("--seed", seed, "PRNG seed");
  verify->add_flag("--json", json, "JSON report");

  std::string op;
  std::vector<std::string> exprs;
  auto* oq = app.add_subcommand("oq", "operations in O_q(SL(n))");
  oq->add_option("op", op, "nf|mul|delta|counit|antipode|rho")->required();
  oq->add_option("exprs", exprs, "elements");
  oq->add_option("--n", n, "rank");

  auto* sk = app.add_subcommand("skein", "web to algebra maps");
  sk->add_option("op", op, "phi|counit|split")->required();
  add_web_opts(sk, web);

  int samples = 0;
  auto* br = app.add_subcommand("braided", "transmuted products and the reflection equation");
  br->add_option("op", op, "mul|ad|reflect")->required();
  br->add_option("exprs", exprs, "elements");
  br->add_option("--n", n, "rank");
  br->add_option("--seed", seed, "PRNG seed");
  br->add_option("--samples", samples, "reflect: sampled entries (0 = all)");
  br->add_flag("--json", json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  try {
    if (n < 2) throw UsageError("--n must be >= 2");
    if (rt_eval->parsed())
      code = cmd_rt_eval(web);
    else if (verify->parsed())
      code = print_report(run_suite(suite, n, seed), json);
    else if (oq->parsed())
      code = cmd_oq(op, exprs, n);
    else if (sk->parsed())
      code = cmd_skein(op, web);
    else if (br->parsed())
      code = cmd_braided(op, exprs, n, seed, samples, json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const WebError& e) {
    std::cerr << "web error: " << e.what() << "\n";
    return 2;
  } catch (const SuiteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}

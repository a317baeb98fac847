// One line per acceptance criterion; nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "skein/braided.hpp"
#include "skein/random.hpp"
#include "skein/skeinmap.hpp"
#include "skein/suites.hpp"

using namespace skein;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  int checks = 0;

  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

using Pick = std::function<bool(const std::string&)>;

bool all_ids(const std::string&) { return true; }

void take(Outcome& o, const SuiteReport& r, const Pick& pick = all_ids) {
  int seen = 0;
  for (const auto& c : r.checks) {
    if (!pick(c.id)) continue;
    ++seen;
    ++o.checks;
    if (!c.pass) o.fail(r.suite + " n=" + std::to_string(r.n) + " " + c.id + ": " + c.witness);
  }
  if (seen == 0) o.fail(r.suite + " n=" + std::to_string(r.n) + ": no matching checks");
}

Pick prefixed(std::vector<std::string> pre) {
  return [pre](const std::string& id) {
    for (const auto& p : pre)
      if (id.rfind(p, 0) == 0) return true;
    return false;
  };
}

std::pair<int, std::string> shell(const std::string& args) {
  std::string cmd = std::string(SKEIN_CLI) + " " + args;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, {}};
  std::string out;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

Laurent sign_pow(int k) { return k % 2 ? Laurent(-1) : Laurent(1); }

struct Criterion {
  int id;
  std::string title;
  double budget;  // seconds
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> crit;

  crit.push_back({1, "constants, n = 2..5", 1, [] {
                    Outcome o;
                    for (int n = 2; n <= 5; ++n) take(o, constants_suite(n));
                    return o;
                  }});
  crit.push_back({2, "Hecke and Yang-Baxter, n = 2..4", 5, [] {
                    Outcome o;
                    for (int n = 2; n <= 4; ++n) take(o, hecke_suite(n));
                    return o;
                  }});
  crit.push_back({3, "internal annihilators, n = 2, 3; braid sum at n = 4", 60, [] {
                    Outcome o;
                    for (int n = 2; n <= 3; ++n) take(o, internal_suite(n));
                    take(o, internal_suite(4), prefixed({"sinksource-braid-sum"}));
                    return o;
                  }});
  crit.push_back({4, "boundary annihilators, n = 2, 3; Kauffman n = 2", 30, [] {
                    Outcome o;
                    for (int n = 2; n <= 3; ++n) take(o, annihilator_suite(n));
                    take(o, kauffman2_suite());
                    return o;
                  }});
  crit.push_back({5, "O_q Hopf structure, n = 2, 3", 60, [] {
                    Outcome o;
                    for (int n = 2; n <= 3; ++n) take(o, oq_hopf_suite(n));
                    return o;
                  }});
  crit.push_back({6, "phi calibration, n = 2, 3", 300, [] {
                    Outcome o;
                    auto pick = prefixed({"counit-phi=rt[100]", "splitting=coproduct-phi[50]",
                                          "phi-stacking-multiplicative[50]", "phi-strand", "counit-source"});
                    for (int n = 2; n <= 3; ++n) take(o, phi_suite(n), pick);
                    return o;
                  }});
  crit.push_back({7, "cobraiding, n = 2, 3", 60, [] {
                    Outcome o;
                    for (int n = 2; n <= 3; ++n) take(o, cobraid_suite(n));
                    return o;
                  }});
  crit.push_back({8, "braided layer, n = 2, 3", 600, [] {
                    Outcome o;
                    for (int n = 2; n <= 3; ++n) take(o, braided_suite(n));
                    return o;
                  }});
  crit.push_back({9, "automorphisms, n = 2, 3", 30, [] {
                    Outcome o;
                    for (int n = 2; n <= 3; ++n) {
                      take(o, constants_suite(n), prefixed({"X^2=t*Id"}));
                      Rng rng(9000 + n);
                      for (int k = 0; k < 50; ++k) {
                        StatedWeb w = random_stated_web(n, rng);
                        std::string tag = "n=" + std::to_string(n) + " " + web_to_json(w).dump();
                        Side side = k % 2 ? Side::Left : Side::Right;
                        auto [c1, w1] = half_twist_compose(w, side, true);
                        auto [c2, w2] = half_twist_compose(w1, side, false);
                        ++o.checks;
                        if (!(c1 * c2).is_one() || !sl_equal(phi(w2), phi(w))) o.fail("half-twist round trip " + tag);
                        auto [g, same] = marking_auto(w, side);
                        int ends = static_cast<int>((side == Side::Right ? w.right : w.left)->size());
                        ++o.checks;
                        if (g != sign_pow((n - 1) * ends) * qpow(n, web_degree2(w, side)))
                          o.fail("marking scalar " + tag);
                      }
                    }
                    return o;
                  }});

  auto start = Clock::now();
  bool all_pass = true;
  auto line = [&](int id, const std::string& title, const Outcome& o, double secs, double budget) {
    bool ok = o.pass && secs < budget;
    all_pass = all_pass && ok;
    std::ostringstream s;
    s << "criterion " << std::setw(2) << id << ": " << (ok ? "PASS" : "FAIL") << "  " << title << "  [" << o.checks
      << " checks, " << std::fixed << std::setprecision(2) << secs << " s / " << budget << " s]";
    if (!o.pass) s << "  " << o.note;
    else if (secs >= budget) s << "  over the time budget";
    std::cout << s.str() << std::endl;
  };

  for (const auto& c : crit) {
    auto t0 = Clock::now();
    Outcome o = c.run();
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    line(c.id, c.title, o, secs, c.budget);
  }

  {
    auto t0 = Clock::now();
    Outcome o;
    for (int n : {2, 3}) {
      std::string args = "verify all --n " + std::to_string(n) + " --seed 0 --json";
      auto [c1, out1] = shell(args);
      auto [c2, out2] = shell(args);
      o.checks += 2;
      if (c1 != 0 || c2 != 0) o.fail("verify all --n " + std::to_string(n) + " exited with " + std::to_string(c1));
      if (out1 != out2 || out1.empty()) o.fail("verify all --n " + std::to_string(n) + " reports differ");
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    double total = std::chrono::duration<double>(Clock::now() - start).count();
    if (total >= 1200) o.fail("total wall time " + std::to_string(total) + " s exceeds 1200 s");
    line(10, "verify all determinism, n = 2, 3", o, secs, 1200);
  }

  return all_pass ? 0 : 1;
}

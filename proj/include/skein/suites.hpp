#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "skein/report.hpp"

namespace skein {

struct SuiteError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// constants, hecke, internal, annihilators, oq-hopf, phi, cobraid, braided, kauffman2, all
const std::vector<std::string>& suite_names();

// Throws SuiteError for an unknown name or an n outside the suite's range.
SuiteReport run_suite(const std::string& name, int n, std::uint64_t seed = 0);

SuiteReport constants_suite(int n);
SuiteReport hecke_suite(int n);
SuiteReport internal_suite(int n, std::uint64_t seed = 0);
SuiteReport annihilator_suite(int n, std::uint64_t seed = 0);
SuiteReport oq_hopf_suite(int n, std::uint64_t seed = 0);
SuiteReport phi_suite(int n, std::uint64_t seed = 0);
SuiteReport cobraid_suite(int n, std::uint64_t seed = 0);
SuiteReport kauffman2_suite();

}  // namespace skein

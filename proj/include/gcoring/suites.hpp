#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcoring/fixtures.hpp"
#include "gcoring/report.hpp"
#include "gcoring/structure_file.hpp"

namespace gcoring {

// validate, comodules, dual-ring, galois, structure-theorem, morita, graded-morita, section9, hopf, all.
const std::vector<std::string>& suite_names();

// Items are sorted by id. Throws UnknownSuite. Errors raised inside a battery
// become failing items, so the result is always a complete report.
CheckReport run_suite(const Fixture& fx, const std::string& suite, std::uint64_t seed = 0);
CheckReport run_suite(const StructureFile& sf, const std::string& suite, std::uint64_t seed = 0);

std::string format_machine(const CheckReport& r, const std::string& target, std::uint64_t seed);
std::string format_text(const CheckReport& r, const std::string& target, std::uint64_t seed);

}  // namespace gcoring

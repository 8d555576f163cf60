#pragma once

#include <string>

#include "bcdlab/serialize.hpp"

namespace bcdlab::report {

// Markdown: the default cost model plus per-circuit bills of materials for
// the lookahead adders (NCLA 74, MCLA 136) and the reference ripple adder.
std::string render_tables(const serialize::AnalysisConfig& cfg);

// Markdown comparison of cost, topological delay, functional worst-case
// delay, and estimated power for the 4-bit adders and the BCD chains at the
// preset digit widths (1, 2, 7, 16, 34).
std::string render_comparison(const serialize::AnalysisConfig& cfg);

}  // namespace bcdlab::report

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bcdlab/netlist.hpp"

namespace bcdlab::generators {

enum class AdderStyle { Ripple, Ncla, Mcla, CarrySkip };

std::string_view style_name(AdderStyle s);
std::optional<AdderStyle> style_from_name(std::string_view name);

struct BcdChainSpec {
    int digits = 1;
    AdderStyle style = AdderStyle::Ripple;
};

class GeneratorError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Propagate/generate cell: P = A^B, G = A&B, S = P^Cin.
// Inputs a, b, cin; outputs s, g, p.
Netlist gen_pga();

// 4-bit AND-OR carry-lookahead adder: PGA cells on bits 0-2, lookahead carry
// network, one mux-based full adder macro on bit 3.
// Inputs a0..a3, b0..b3, cin; outputs s0..s3, c4. Costs 74 transistors.
Netlist gen_ncla4();

// NAND-NAND reference lookahead adder built from MPFA cells. Inputs as
// gen_ncla4; outputs s0..s3, c4 plus auxiliary group propagate gp.
// Costs 136 transistors.
Netlist gen_mcla4();

// Chain of four 10T full adder macros. Inputs as gen_ncla4; outputs s0..s3, c4.
Netlist gen_ripple4();

// One BCD digit adder: binary 4-bit add, sum>9 detector, excess-6 correction
// through a second 4-bit adder fed (0,K,K,0). Inputs a0..a3, b0..b3, cin;
// outputs s0..s3, k. Style mcla is a comparison baseline only and is rejected.
Netlist gen_bcd_digit(AdderStyle style);

// n chained BCD digit adders, digit i's carry feeding digit i+1.
// Inputs a0..a(4n-1), b0..b(4n-1), cin; outputs s0..s(4n-1), k.
Netlist gen_bcd_chain(const BcdChainSpec& spec);

// Builds the circuit registered under a CLI name (pga, ncla4, mcla4, ripple4,
// bcd-ripple, bcd-ncla, bcd-cs). `digits` applies to the bcd-* names.
std::optional<Netlist> gen_by_name(std::string_view name, int digits = 1);

}  // namespace bcdlab::generators

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bcdlab/netlist.hpp"

namespace bcdlab::verify {

class VerifyError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumerable input-vector space over a netlist's primary inputs.
// AllBinary walks every bit pattern; BcdValid walks digit values 0-9 per
// operand digit plus the carry-in, assuming the generators' input layout
// (a bits, then b bits, then cin).
struct InputSpace {
    enum class Kind { AllBinary, BcdValid };
    Kind kind = Kind::AllBinary;
    int width_bits = 0;  // total primary inputs
    int digits = 0;      // BcdValid only

    static InputSpace all_binary(int width_bits);
    static InputSpace bcd_valid(int digits);
    static InputSpace for_netlist(const Netlist& nl, Kind kind);

    std::uint64_t size() const;
    void decode(std::uint64_t index, std::span<std::uint8_t> bits) const;
};

struct Counterexample {
    std::uint64_t index;
    std::vector<std::uint8_t> inputs;
    std::vector<std::uint8_t> expected;
    std::vector<std::uint8_t> actual;
};

struct CheckReport {
    static constexpr std::size_t kMaxCounterexamples = 16;

    std::string circuit;
    std::uint64_t vectors = 0;
    std::uint64_t passed = 0;
    bool sampled = false;
    std::uint64_t seed = 0;
    std::vector<Counterexample> counterexamples;  // lowest indices, capped

    std::uint64_t failed() const { return vectors - passed; }
    bool ok() const { return passed == vectors; }
};

// Expected output bits for a complete input assignment, in output order.
using Oracle = std::function<std::vector<std::uint8_t>(std::span<const std::uint8_t>)>;

// Integer-level ground truth.
struct BinaryAddResult {
    std::uint64_t sum;
    int cout;
};
BinaryAddResult oracle_binary_add(std::uint64_t a, std::uint64_t b, int cin,
                                  int width);  // throws VerifyError on range

struct BcdAddResult {
    std::vector<int> digits;  // little-endian
    int carry;
};
BcdAddResult oracle_bcd_add(const std::vector<int>& a, const std::vector<int>& b,
                            int cin);  // throws VerifyError on invalid digit

// Bit-level adapters over the generators' input/output layouts.
Oracle binary_add_oracle(int width);
// As binary_add_oracle plus a trailing group-propagate bit (AND of the
// per-bit propagates), matching the reference lookahead adder's gp output.
Oracle binary_add_gp_oracle(int width);
Oracle bcd_add_oracle(int digits);
Oracle pga_oracle();

// Evaluates every vector of the space against the oracle. Throws VerifyError
// ("space too large") past 2^24 vectors; switch to sampling instead. Workers
// partition the index range; the report is identical for any worker count.
CheckReport exhaustive_check(const Netlist& nl, const Oracle& oracle,
                             const InputSpace& space, int workers = 1);

struct EquivOptions {
    // Output pairs (index in a, index in b) to compare; empty = all, by
    // position (requires equal counts).
    std::vector<std::pair<int, int>> outputs;
    int exhaustive_input_bound = 20;
    std::uint64_t seed = 0x5eedbcd5ull;
    std::uint64_t samples = 100000;
    int workers = 1;
};

// Exhaustive when the input count is within the bound, else seeded random
// sampling. Throws VerifyError on input-shape mismatch.
CheckReport equiv_check(const Netlist& a, const Netlist& b,
                        const EquivOptions& opts = {});

std::string render(const CheckReport& report);

}  // namespace bcdlab::verify

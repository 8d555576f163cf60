#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcdlab/netlist.hpp"
#include "bcdlab/verify.hpp"

namespace bcdlab::analysis {

class AnalysisError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Transistors per gate kind. Defaults follow the pass-gate cost table:
// NOT=2, XOR2=4, NAND2/3/4=4/6/8, FA macros 10/12, AND/OR of arity n cost
// 2*(n-1) by the cascade rule.
struct CostModel {
    std::array<int, kNumGateKinds> counts;

    static CostModel defaults();
    int of(GateKind k) const { return counts[kind_index(k)]; }
    // Positive counts; AND/OR entries consistent with the cascade rule.
    void check() const;
};

struct CostRow {
    std::string label;  // macro-cell class or gate-kind name
    int count;
    int each;
    int subtotal;
};

struct CostReport {
    std::array<int, kNumGateKinds> kind_counts{};  // flat gate tally
    std::vector<CostRow> rows;                     // cell-grouped bill of materials
    int total = 0;
};

CostReport transistor_cost(const Netlist& nl, const CostModel& model = CostModel::defaults());

// Unit delay per primitive gate; full-adder macros take 2 units from any
// input to either output.
struct DelayModel {
    std::array<int, kNumGateKinds> delays;

    static DelayModel defaults();
    int of(GateKind k) const { return delays[kind_index(k)]; }
    void check() const;
};

struct DelayReport {
    std::vector<int> output_arrival;  // per primary output
    int max_arrival = 0;
    int worst_output = 0;                 // index into outputs()
    std::vector<GateId> critical_path;    // input-to-output gate sequence
};

DelayReport delay_topological(const Netlist& nl,
                              const DelayModel& model = DelayModel::defaults());

// Vector-pair source for event-driven settle-time measurement.
struct PairStimulus {
    enum class Mode { Auto, Exhaustive, Random };
    Mode mode = Mode::Auto;
    verify::InputSpace space;
    std::uint64_t seed = 0x5eedbcd5ull;
    std::uint64_t samples = 10000;
    int exhaustive_input_bound = 10;  // Auto picks exhaustive at or below this
};

struct FunctionalDelayReport {
    int worst_settle = 0;
    std::uint64_t pairs_run = 0;
    bool exhaustive = false;
    std::vector<std::uint8_t> witness_from;
    std::vector<std::uint8_t> witness_to;
};

// Settles each pair's first vector, switches to the second at t=0, runs a
// unit-delay (transport) event simulation and records the time of the last
// primary-output change. Returns the maximum over all pairs with a witness.
// Deterministic for a given stimulus regardless of worker count.
FunctionalDelayReport delay_functional(const Netlist& nl, const DelayModel& model,
                                       const PairStimulus& stim, int workers = 1);

struct ActivityReport {
    std::vector<std::uint64_t> toggles;  // per net
    std::vector<double> probability;     // toggles / (length - 1)
    std::uint64_t length = 0;
};

// Zero-delay settled simulation over the vector sequence, counting per-net
// toggles between consecutive settled states. Needs length >= 2.
ActivityReport estimate_activity(const Netlist& nl,
                                 const std::vector<std::vector<std::uint8_t>>& sequence);

std::vector<std::vector<std::uint8_t>> random_stimulus(const Netlist& nl,
                                                       std::uint64_t length,
                                                       std::uint64_t seed);

struct PowerParams {
    double unit_cap_f = 0.5e-15;  // farads per transistor of the driving gate
    double vdd = 3.3;
    double vt = 0.7;
    // Pass-gate AND/OR outputs swing VDD - Vt by default; everything else
    // swings full VDD.
    bool reduced_swing_pass_gates = true;
    double f_clk = 100e6;
    double i_sc = 0.0;    // no short-circuit path in the pass-gate cells
    double i_leak = 0.0;  // per gate-output net
    // When set, the dynamic term carries the conventional extra VDD factor
    // (C * Vswing * VDD * P * f) instead of the as-printed C * Vswing * P * f.
    bool vdd_factor = false;
    std::map<std::string, double> load_override_f;   // by net name
    std::map<std::string, double> swing_override_v;  // by net name

    void check() const;  // all physical quantities non-negative
};

// (sum_i C_i * Vswing_i * P_i) * f_clk + I_sc * VDD + sum_i I_leak * VDD,
// summed over gate-driven nets. Throws AnalysisError if the activity report
// does not cover the netlist.
double estimate_power(const Netlist& nl, const ActivityReport& activity,
                      const PowerParams& params);

}  // namespace bcdlab::analysis

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bcdlab/analysis.hpp"
#include "bcdlab/generators.hpp"

using namespace bcdlab;
using namespace bcdlab::analysis;

namespace {

Netlist not_chain(int length) {
    Netlist nl("not_chain");
    NetId prev = nl.add_input("a");
    for (int i = 0; i < length; ++i) {
        NetId next = nl.add_net("n" + std::to_string(i));
        nl.add_gate(GateKind::Not, {prev}, {next});
        prev = next;
    }
    nl.mark_output(prev);
    nl.freeze();
    return nl;
}

Netlist and2_only() {
    Netlist nl("and2");
    NetId a = nl.add_input("a");
    NetId b = nl.add_input("b");
    NetId o = nl.add_net("o");
    nl.add_gate(GateKind::And2, {a, b}, {o});
    nl.mark_output(o);
    nl.freeze();
    return nl;
}

}  // namespace

TEST_CASE("cost model defaults follow the pass-gate table") {
    CostModel m = CostModel::defaults();
    m.check();
    CHECK(m.of(GateKind::Not) == 2);
    CHECK(m.of(GateKind::And2) == 2);
    CHECK(m.of(GateKind::And3) == 4);
    CHECK(m.of(GateKind::And4) == 6);
    CHECK(m.of(GateKind::Or2) == 2);
    CHECK(m.of(GateKind::Or3) == 4);
    CHECK(m.of(GateKind::Or4) == 6);
    CHECK(m.of(GateKind::Nand2) == 4);
    CHECK(m.of(GateKind::Nand3) == 6);
    CHECK(m.of(GateKind::Nand4) == 8);
    CHECK(m.of(GateKind::Xor2) == 4);
    CHECK(m.of(GateKind::Fa10T) == 10);
    CHECK(m.of(GateKind::FaMux12) == 12);
}

TEST_CASE("cost model rejects inconsistent AND/OR entries") {
    CostModel m = CostModel::defaults();
    m.counts[kind_index(GateKind::And3)] = 5;  // breaks 2*(n-1)
    CHECK_THROWS_AS(m.check(), AnalysisError);
    m = CostModel::defaults();
    m.counts[kind_index(GateKind::Not)] = 0;
    CHECK_THROWS_AS(m.check(), AnalysisError);
}

TEST_CASE("cost report groups macro cells") {
    CostReport r = transistor_cost(generators::gen_ripple4());
    CHECK(r.total == 40);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].count == 4);
    CHECK(r.rows[0].each == 10);
    CHECK(r.rows[0].subtotal == 40);
    CHECK(r.kind_counts[kind_index(GateKind::Fa10T)] == 4);
}

TEST_CASE("topological delay of simple chains") {
    DelayModel m = DelayModel::defaults();
    m.check();
    CHECK(m.of(GateKind::Not) == 1);
    CHECK(m.of(GateKind::Fa10T) == 2);

    DelayReport one = delay_topological(not_chain(1));
    CHECK(one.max_arrival == 1);
    DelayReport five = delay_topological(not_chain(5));
    CHECK(five.max_arrival == 5);
    CHECK(five.critical_path.size() == 5);
}

TEST_CASE("topological carry-out arrival of the 4-bit adders") {
    DelayReport ripple = delay_topological(generators::gen_ripple4());
    CHECK(ripple.output_arrival[4] == 8);
    DelayReport ncla = delay_topological(generators::gen_ncla4());
    CHECK(ncla.output_arrival[4] == 5);
    CHECK(ncla.max_arrival < ripple.max_arrival);
}

TEST_CASE("functional settle time of an inverter pair") {
    Netlist nl = not_chain(2);
    PairStimulus stim;
    stim.space = verify::InputSpace::all_binary(1);
    stim.mode = PairStimulus::Mode::Exhaustive;
    FunctionalDelayReport r = delay_functional(nl, DelayModel::defaults(), stim);
    CHECK(r.exhaustive);
    CHECK(r.pairs_run == 4);
    CHECK(r.worst_settle == 2);
}

TEST_CASE("functional worst settle equals the ripple critical path") {
    Netlist nl = generators::gen_ripple4();
    PairStimulus stim;
    stim.space = verify::InputSpace::all_binary(9);
    stim.mode = PairStimulus::Mode::Exhaustive;
    FunctionalDelayReport r = delay_functional(nl, DelayModel::defaults(), stim);
    CHECK(r.exhaustive);
    CHECK(r.pairs_run == 512ull * 512);
    CHECK(r.worst_settle == 8);
    // The witness pair must reproduce the reported settle time.
    CHECK(r.witness_from.size() == 9);
    CHECK(r.witness_to.size() == 9);
}

TEST_CASE("functional settle never exceeds the topological bound") {
    for (Netlist nl : {generators::gen_ripple4(), generators::gen_ncla4(),
                       generators::gen_mcla4()}) {
        CAPTURE(nl.name());
        const int topo = delay_topological(nl).max_arrival;
        PairStimulus stim;
        stim.space = verify::InputSpace::all_binary(9);
        stim.mode = PairStimulus::Mode::Exhaustive;
        FunctionalDelayReport r =
            delay_functional(nl, DelayModel::defaults(), stim);
        CHECK(r.worst_settle <= topo);
    }
}

TEST_CASE("sampled mode is deterministic and worker-independent") {
    Netlist nl = generators::gen_bcd_chain({2, generators::AdderStyle::Ncla});
    PairStimulus stim;
    stim.space = verify::InputSpace::bcd_valid(2);
    stim.mode = PairStimulus::Mode::Random;
    stim.samples = 3000;
    DelayModel m = DelayModel::defaults();
    FunctionalDelayReport r1 = delay_functional(nl, m, stim, 1);
    FunctionalDelayReport r2 = delay_functional(nl, m, stim, 3);
    CHECK(!r1.exhaustive);
    CHECK(r1.pairs_run == 3000);
    CHECK(r1.worst_settle == r2.worst_settle);
    CHECK(r1.witness_from == r2.witness_from);
    CHECK(r1.witness_to == r2.witness_to);
}

TEST_CASE("activity of deterministic sequences") {
    Netlist nl = not_chain(1);
    std::vector<std::vector<std::uint8_t>> alternating = {
        {0}, {1}, {0}, {1}, {0}};
    ActivityReport r = estimate_activity(nl, alternating);
    CHECK(r.length == 5);
    for (double p : r.probability) CHECK(p == doctest::Approx(1.0));

    std::vector<std::vector<std::uint8_t>> constant = {{1}, {1}, {1}};
    ActivityReport rc = estimate_activity(nl, constant);
    for (double p : rc.probability) CHECK(p == 0.0);

    CHECK_THROWS_AS(estimate_activity(nl, {{0}}), AnalysisError);
}

TEST_CASE("AND gate output toggles near 3/8 under random inputs") {
    Netlist nl = and2_only();
    auto seq = random_stimulus(nl, 10000, 42);
    REQUIRE(seq.size() == 10000);
    ActivityReport r = estimate_activity(nl, seq);
    const double p = r.probability[*nl.find_net("o")];
    CHECK(std::abs(p - 0.375) < 0.03);
}

TEST_CASE("power worked example") {
    // One driven net with transition probability 1/2 into a 0.01 pF load at
    // 3.3 V and 100 MHz: 0.01e-12 * 3.3 * 0.5 * 1e8 = 1.65e-6 W.
    Netlist nl = not_chain(1);
    ActivityReport activity;
    activity.length = 2;
    activity.toggles.assign(nl.net_count(), 0);
    activity.probability.assign(nl.net_count(), 0.0);
    activity.probability[nl.outputs()[0]] = 0.5;
    PowerParams params;
    params.load_override_f[nl.net(nl.outputs()[0]).name] = 0.01e-12;
    params.check();
    const double p = estimate_power(nl, activity, params);
    CHECK(std::abs(p - 1.65e-6) <= 1e-12 * 1.65e-6);
}

TEST_CASE("power is zero for a quiet circuit and linear in frequency") {
    Netlist nl = and2_only();
    ActivityReport activity;
    activity.length = 2;
    activity.toggles.assign(nl.net_count(), 0);
    activity.probability.assign(nl.net_count(), 0.0);
    PowerParams params;
    CHECK(estimate_power(nl, activity, params) == 0.0);

    activity.probability[nl.outputs()[0]] = 0.25;
    const double base = estimate_power(nl, activity, params);
    CHECK(base > 0.0);
    params.f_clk *= 2;
    CHECK(estimate_power(nl, activity, params) ==
          doctest::Approx(2 * base).epsilon(1e-12));
}

TEST_CASE("power grows monotonically along parameter grids") {
    Netlist nl = generators::gen_ncla4();
    auto seq = random_stimulus(nl, 2000, 7);
    ActivityReport activity = estimate_activity(nl, seq);

    double prev = -1.0;
    for (double f : {1e6, 5e7, 1e8, 2e8, 4e8}) {
        PowerParams p;
        p.f_clk = f;
        const double w = estimate_power(nl, activity, p);
        CHECK(w >= prev);
        prev = w;
    }
    prev = -1.0;
    for (double leak : {0.0, 1e-9, 1e-8, 1e-7, 1e-6}) {
        PowerParams p;
        p.i_leak = leak;
        const double w = estimate_power(nl, activity, p);
        CHECK(w >= prev);
        prev = w;
    }
}

TEST_CASE("reduced pass-gate swing lowers the estimate") {
    Netlist nl = and2_only();
    auto seq = random_stimulus(nl, 2000, 9);
    ActivityReport activity = estimate_activity(nl, seq);
    PowerParams reduced;
    PowerParams full;
    full.reduced_swing_pass_gates = false;
    CHECK(estimate_power(nl, activity, reduced) <
          estimate_power(nl, activity, full));
}

TEST_CASE("power params validation") {
    PowerParams p;
    p.vdd = -1.0;
    CHECK_THROWS_AS(p.check(), AnalysisError);
    p = PowerParams{};
    p.unit_cap_f = -1e-15;
    CHECK_THROWS_AS(p.check(), AnalysisError);
}

TEST_CASE("activity report must cover the netlist") {
    Netlist nl = and2_only();
    ActivityReport activity;
    activity.length = 2;
    activity.probability.assign(1, 0.0);  // too short
    CHECK_THROWS_AS(estimate_power(nl, activity, PowerParams{}), AnalysisError);
}

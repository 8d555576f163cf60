#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcdlab/switchlevel.hpp"

using namespace bcdlab::switchlevel;

namespace {

SignalState settle_out(const SwitchNetwork& net, bool a, bool b) {
    std::map<int, bool> in = {{net.node_by_name("a"), a},
                              {net.node_by_name("b"), b}};
    return settle(net, in).states[net.node_by_name("out")];
}

}  // namespace

TEST_CASE("2T AND structure: two devices, ground rail only") {
    SwitchNetwork net = build_two_t_and();
    REQUIRE(net.devices.size() == 2);
    CHECK(net.has_tied(false));
    CHECK(!net.has_tied(true));
    int nmos = 0, pmos = 0;
    for (const auto& d : net.devices)
        (d.kind == DeviceKind::Nmos ? nmos : pmos)++;
    CHECK(nmos == 1);
    CHECK(pmos == 1);
}

TEST_CASE("2T OR structure: two devices, supply rail only") {
    SwitchNetwork net = build_two_t_or();
    REQUIRE(net.devices.size() == 2);
    CHECK(net.has_tied(true));
    CHECK(!net.has_tied(false));
    int nmos = 0, pmos = 0;
    for (const auto& d : net.devices)
        (d.kind == DeviceKind::Nmos ? nmos : pmos)++;
    CHECK(nmos == 1);
    CHECK(pmos == 1);
}

TEST_CASE("2T AND settled states") {
    SwitchNetwork net = build_two_t_and();
    // A=1 passes B through the NMOS: a 1 arrives weakened, a 0 intact.
    CHECK(settle_out(net, true, true) ==
          SignalState{Level::One, Strength::Weak, 1});
    CHECK(settle_out(net, true, false) ==
          SignalState{Level::Zero, Strength::Strong, 0});
    // A=0 turns on the PMOS pull toward the tied-0 rail, which a PMOS
    // passes only degraded.
    CHECK(settle_out(net, false, false) ==
          SignalState{Level::Zero, Strength::Weak, 1});
    CHECK(settle_out(net, false, true) ==
          SignalState{Level::Zero, Strength::Weak, 1});
}

TEST_CASE("2T OR settled states") {
    SwitchNetwork net = build_two_t_or();
    CHECK(settle_out(net, false, true) ==
          SignalState{Level::One, Strength::Strong, 0});
    CHECK(settle_out(net, false, false) ==
          SignalState{Level::Zero, Strength::Weak, 1});
    CHECK(settle_out(net, true, false) ==
          SignalState{Level::One, Strength::Weak, 1});
    CHECK(settle_out(net, true, true) ==
          SignalState{Level::One, Strength::Weak, 1});
}

TEST_CASE("2T gates never fight strong against strong") {
    for (int which = 0; which < 2; ++which) {
        SwitchNetwork net = which ? build_two_t_or() : build_two_t_and();
        for (int v = 0; v < 4; ++v) {
            std::map<int, bool> in = {{net.node_by_name("a"), (v & 1) != 0},
                                      {net.node_by_name("b"), (v & 2) != 0}};
            CHECK(!settle(net, in).strong_conflict());
        }
    }
}

TEST_CASE("logical readout enforces the drop budget") {
    CHECK(logical_readout({Level::One, Strength::Weak, 1}, 1) == true);
    CHECK(logical_readout({Level::Zero, Strength::Strong, 0}, 1) == false);
    CHECK(!logical_readout({Level::One, Strength::Weak, 2}, 1).has_value());
    CHECK(!logical_readout({Level::X, Strength::Weak, 0}, 3).has_value());
    CHECK(!logical_readout({Level::One, Strength::Floating, 0}, 3).has_value());
}

TEST_CASE("functional readout matches AND/OR truth tables") {
    SwitchNetwork gand = build_two_t_and();
    SwitchNetwork gor = build_two_t_or();
    for (int v = 0; v < 4; ++v) {
        const bool a = (v & 1) != 0, b = (v & 2) != 0;
        auto rand_ = logical_readout(settle_out(gand, a, b), 1);
        auto ror = logical_readout(settle_out(gor, a, b), 1);
        REQUIRE(rand_.has_value());
        REQUIRE(ror.has_value());
        CHECK(*rand_ == (a && b));
        CHECK(*ror == (a || b));
    }
}

TEST_CASE("floating nodes read as unknown") {
    SwitchNetwork net;
    net.add_node("a", NodeRole::Input);
    int dangling = net.add_node("dangling", NodeRole::Internal);
    auto result = settle(net, {{net.node_by_name("a"), true}});
    CHECK(result.states[dangling].level == Level::X);
    CHECK(result.states[dangling].strength == Strength::Floating);
}

TEST_CASE("settle is deterministic and idempotent") {
    SwitchNetwork net = build_two_t_and();
    std::map<int, bool> in = {{net.node_by_name("a"), true},
                              {net.node_by_name("b"), true}};
    auto r1 = settle(net, in);
    auto r2 = settle(net, in);
    CHECK(r1.states == r2.states);
    CHECK(r1.conflict_nodes == r2.conflict_nodes);
}

TEST_CASE("cascade drop profile grows one drop per stage") {
    CHECK(cascade_analysis(TwoTKind::And, 1) == std::vector<int>{1});
    CHECK(cascade_analysis(TwoTKind::And, 2) == std::vector<int>{1, 2});
    CHECK(cascade_analysis(TwoTKind::Or, 1) == std::vector<int>{1});
    CHECK(cascade_analysis(TwoTKind::Or, 2) == std::vector<int>{1, 2});

    for (TwoTKind kind : {TwoTKind::And, TwoTKind::Or}) {
        auto profile = cascade_analysis(kind, 5);
        REQUIRE(profile.size() == 5);
        for (std::size_t i = 1; i < profile.size(); ++i)
            CHECK(profile[i] >= profile[i - 1]);
        // One stage within a unit budget reads out; a deep chain does not.
        CHECK(profile[0] <= 1);
        CHECK(profile[4] > 1);
    }
}

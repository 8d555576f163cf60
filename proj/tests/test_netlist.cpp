#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcdlab/netlist.hpp"

using namespace bcdlab;

namespace {

// inputs a, b -> single two-input gate -> output o
Netlist single_gate(GateKind kind) {
    Netlist nl("tiny");
    NetId a = nl.add_input("a");
    NetId b = nl.add_input("b");
    NetId o = nl.add_net("o");
    nl.add_gate(kind, {a, b}, {o});
    nl.mark_output(o);
    nl.freeze();
    return nl;
}

}  // namespace

TEST_CASE("gate kind names round-trip") {
    for (int k = 0; k < kNumGateKinds; ++k) {
        const GateKind kind = static_cast<GateKind>(k);
        auto back = kind_from_name(kind_name(kind));
        REQUIRE(back.has_value());
        CHECK(*back == kind);
    }
    CHECK(!kind_from_name("bogus").has_value());
    CHECK(role_from_name("input") == NetRole::Input);
    CHECK(!role_from_name("bogus").has_value());
}

TEST_CASE("primitive gate truth values") {
    Netlist nand2 = single_gate(GateKind::Nand2);
    CHECK(evaluate(nand2, std::vector<std::uint8_t>{1, 1}) ==
          std::vector<std::uint8_t>{0});
    Netlist xor2 = single_gate(GateKind::Xor2);
    CHECK(evaluate(xor2, std::vector<std::uint8_t>{1, 0}) ==
          std::vector<std::uint8_t>{1});
}

TEST_CASE("full adder macro semantics") {
    Netlist nl("fa");
    NetId a = nl.add_input("a");
    NetId b = nl.add_input("b");
    NetId c = nl.add_input("cin");
    NetId s = nl.add_net("s");
    NetId co = nl.add_net("cout");
    nl.add_gate(GateKind::Fa10T, {a, b, c}, {s, co});
    nl.mark_output(s);
    nl.mark_output(co);
    nl.freeze();

    CHECK(evaluate(nl, std::vector<std::uint8_t>{1, 1, 0}) ==
          std::vector<std::uint8_t>{0, 1});

    // The macro must equal its two-XOR-plus-majority expansion everywhere.
    Netlist ex("fa_expanded");
    NetId ea = ex.add_input("a");
    NetId eb = ex.add_input("b");
    NetId ec = ex.add_input("cin");
    NetId p = ex.add_net("p");
    NetId es = ex.add_net("s");
    NetId t1 = ex.add_net("t1");
    NetId t2 = ex.add_net("t2");
    NetId eco = ex.add_net("cout");
    ex.add_gate(GateKind::Xor2, {ea, eb}, {p});
    ex.add_gate(GateKind::Xor2, {p, ec}, {es});
    ex.add_gate(GateKind::And2, {ea, eb}, {t1});
    ex.add_gate(GateKind::And2, {ec, p}, {t2});
    ex.add_gate(GateKind::Or2, {t1, t2}, {eco});
    ex.mark_output(es);
    ex.mark_output(eco);
    ex.freeze();

    for (int v = 0; v < 8; ++v) {
        std::vector<std::uint8_t> in = {
            static_cast<std::uint8_t>(v & 1),
            static_cast<std::uint8_t>((v >> 1) & 1),
            static_cast<std::uint8_t>((v >> 2) & 1)};
        CHECK(evaluate(nl, in) == evaluate(ex, in));
    }
}

TEST_CASE("construction rejects malformed gates") {
    Netlist nl("bad");
    NetId a = nl.add_input("a");
    NetId o = nl.add_net("o");

    CHECK_THROWS_AS(nl.add_gate(GateKind::And2, {a}, {o}), NetlistError);
    CHECK_THROWS_AS(nl.add_gate(GateKind::Not, {o}, {a}),
                    NetlistError);  // inputs are not gate-drivable
    CHECK_THROWS_AS(nl.add_net("a"), NetlistError);  // duplicate name
    CHECK_THROWS_AS(nl.add_gate(GateKind::Not, {a, a}, {o}), NetlistError);

    nl.add_gate(GateKind::Not, {a}, {o});
    NetId o2 = nl.add_net("o2");
    (void)o2;
    CHECK_THROWS_AS(nl.add_gate(GateKind::Not, {a}, {o}),
                    NetlistError);  // second driver
}

TEST_CASE("validate names undriven nets and cycles") {
    Netlist nl("undriven");
    nl.add_input("a");
    nl.add_net("floaty");
    auto diags = nl.validate();
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message.find("floaty") != std::string::npos);
    CHECK(diags[0].message.find("no driver") != std::string::npos);

    Netlist cyc("cycle");
    NetId x = cyc.add_net("x");
    NetId y = cyc.add_net("y");
    cyc.add_gate(GateKind::Not, {y}, {x});
    cyc.add_gate(GateKind::Not, {x}, {y});
    auto cdiags = cyc.validate();
    REQUIRE(cdiags.size() == 1);
    CHECK(cdiags[0].message.find("cycle") != std::string::npos);
    CHECK_THROWS_AS(cyc.freeze(), NetlistError);
}

TEST_CASE("freeze is required before evaluation") {
    Netlist nl("unfrozen");
    NetId a = nl.add_input("a");
    NetId o = nl.add_net("o");
    nl.add_gate(GateKind::Not, {a}, {o});
    nl.mark_output(o);
    CHECK_THROWS_AS(nl.topo_order(), NetlistError);
    nl.freeze();
    CHECK(nl.frozen());
    CHECK(evaluate(nl, std::vector<std::uint8_t>{0}) ==
          std::vector<std::uint8_t>{1});
}

TEST_CASE("assignments must cover all inputs") {
    Netlist nl = single_gate(GateKind::And2);
    CHECK_THROWS_AS(evaluate(nl, std::vector<std::uint8_t>{1}), NetlistError);
    CHECK_THROWS_AS(evaluate(nl, std::vector<std::uint8_t>{1, 0, 1}),
                    NetlistError);
}

TEST_CASE("constant nets are shared and fixed") {
    Netlist nl("consts");
    NetId a = nl.add_input("a");
    CHECK(nl.constant(true) == nl.constant(true));
    CHECK(nl.constant(false) != nl.constant(true));
    NetId o = nl.add_net("o");
    nl.add_gate(GateKind::Or2, {nl.constant(true), a}, {o});
    nl.mark_output(o);
    nl.freeze();
    CHECK(evaluate(nl, std::vector<std::uint8_t>{0}) ==
          std::vector<std::uint8_t>{1});
    CHECK(evaluate(nl, std::vector<std::uint8_t>{1}) ==
          std::vector<std::uint8_t>{1});
}

TEST_CASE("rename keeps lookup consistent") {
    Netlist nl("rename");
    NetId a = nl.add_input("a");
    NetId o = nl.add_net("o");
    nl.add_gate(GateKind::Not, {a}, {o});
    nl.mark_output(o);
    nl.rename_net(o, "result");
    CHECK(nl.find_net("result") == o);
    CHECK(!nl.find_net("o").has_value());
    CHECK_THROWS_AS(nl.rename_net(o, "a"), NetlistError);
    nl.freeze();
    CHECK(nl.net(o).name == "result");
}

TEST_CASE("evaluation is deterministic") {
    Netlist nl = single_gate(GateKind::Xor2);
    for (int v = 0; v < 4; ++v) {
        std::vector<std::uint8_t> in = {static_cast<std::uint8_t>(v & 1),
                                        static_cast<std::uint8_t>(v >> 1)};
        CHECK(evaluate(nl, in) == evaluate(nl, in));
    }
}

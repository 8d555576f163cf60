#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include <json.hpp>

#include "bcdlab/generators.hpp"
#include "bcdlab/serialize.hpp"
#include "bcdlab/verify.hpp"

using namespace bcdlab;
using namespace bcdlab::serialize;

TEST_CASE("round trip is byte-identical") {
    for (Netlist nl :
         {generators::gen_pga(), generators::gen_ncla4(), generators::gen_mcla4(),
          generators::gen_bcd_chain({2, generators::AdderStyle::CarrySkip})}) {
        CAPTURE(nl.name());
        const std::string text = to_json(nl);
        Netlist back = from_json(text);
        CHECK(to_json(back) == text);
        CHECK(back.name() == nl.name());
        CHECK(back.digits() == nl.digits());
        CHECK(back.inputs().size() == nl.inputs().size());
        CHECK(back.outputs().size() == nl.outputs().size());
    }
}

TEST_CASE("generation is reproducible down to the bytes") {
    CHECK(to_json(generators::gen_ncla4()) == to_json(generators::gen_ncla4()));
    CHECK(to_json(generators::gen_bcd_chain({3, generators::AdderStyle::Ncla})) ==
          to_json(generators::gen_bcd_chain({3, generators::AdderStyle::Ncla})));
}

TEST_CASE("a reloaded netlist still computes") {
    Netlist nl = from_json(to_json(generators::gen_ripple4()));
    auto report = verify::exhaustive_check(nl, verify::binary_add_oracle(4),
                                           verify::InputSpace::all_binary(9));
    CHECK(report.ok());
}

TEST_CASE("document ends with a newline and fixed shape") {
    const std::string text = to_json(generators::gen_pga());
    REQUIRE(!text.empty());
    CHECK(text.back() == '\n');
    auto doc = nlohmann::ordered_json::parse(text);
    CHECK(doc["format_version"] == kFormatVersion);
    auto it = doc.begin();
    CHECK(it.key() == "format_version");
    ++it;
    CHECK(it.key() == "circuit");
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(from_json("{"), SerializeError);
    CHECK_THROWS_AS(from_json("[]"), SerializeError);
    CHECK_THROWS_AS(from_json("{\"format_version\": 99}"), SerializeError);

    auto doc = nlohmann::ordered_json::parse(to_json(generators::gen_pga()));
    auto bad = doc;
    std::swap(bad["nets"][0], bad["nets"][1]);
    CHECK_THROWS_AS(from_json(bad.dump()), SerializeError);

    bad = doc;
    bad["gates"][0]["kind"] = "frobnicator";
    CHECK_THROWS_AS(from_json(bad.dump()), SerializeError);

    bad = doc;
    bad["gates"][0]["inputs"] = {0};  // arity mismatch surfaces as invalid doc
    CHECK_THROWS_AS(from_json(bad.dump()), SerializeError);
}

TEST_CASE("file round trip and I/O errors") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "bcdlab_serialize_test.json";
    Netlist nl = generators::gen_ncla4();
    save_netlist(nl, path);
    Netlist back = load_netlist(path);
    CHECK(to_json(back) == to_json(nl));
    std::remove(path.string().c_str());

    CHECK_THROWS_AS(load_netlist("/nonexistent/nowhere.json"), SerializeError);
    CHECK_THROWS_AS(save_netlist(nl, "/nonexistent/nowhere.json"), SerializeError);
}

TEST_CASE("config defaults") {
    AnalysisConfig cfg = config_from_json("{}");
    CHECK(cfg.cost.of(GateKind::Fa10T) == 10);
    CHECK(cfg.delay.of(GateKind::Fa10T) == 2);
    CHECK(cfg.power.vdd == 3.3);
    CHECK(cfg.samples == 10000);
    CHECK(cfg.exhaustive_input_bound == 10);
}

TEST_CASE("config sections override the defaults") {
    const std::string text = R"({
        "cost_overrides": {"fa10t": 14},
        "delay": {"default": 1, "overrides": {"fa10t": 3}},
        "power": {
            "vdd": 2.5,
            "vt": 0.5,
            "f_clk": 5e7,
            "i_leak": 1e-9,
            "vdd_factor": true,
            "load_override_f": {"c4": 2e-14},
            "swing_override_v": {"s0": 1.8}
        },
        "sweep": {"seed": 123, "samples": 500, "exhaustive_input_bound": 12}
    })";
    AnalysisConfig cfg = config_from_json(text);
    CHECK(cfg.cost.of(GateKind::Fa10T) == 14);
    CHECK(cfg.delay.of(GateKind::Fa10T) == 3);
    CHECK(cfg.delay.of(GateKind::Not) == 1);
    CHECK(cfg.power.vdd == 2.5);
    CHECK(cfg.power.vt == 0.5);
    CHECK(cfg.power.f_clk == 5e7);
    CHECK(cfg.power.i_leak == 1e-9);
    CHECK(cfg.power.vdd_factor);
    CHECK(cfg.power.load_override_f.at("c4") == 2e-14);
    CHECK(cfg.power.swing_override_v.at("s0") == 1.8);
    CHECK(cfg.seed == 123);
    CHECK(cfg.samples == 500);
    CHECK(cfg.exhaustive_input_bound == 12);
}

TEST_CASE("config rejects bad input") {
    CHECK_THROWS_AS(config_from_json("{"), SerializeError);
    CHECK_THROWS_AS(config_from_json(R"({"cost_overrides": {"bogus": 3}})"),
                    SerializeError);
    CHECK_THROWS_AS(config_from_json(R"({"power": {"vdd": "tall"}})"),
                    SerializeError);
    CHECK_THROWS_AS(load_config("/nonexistent/nowhere.json"), SerializeError);
}

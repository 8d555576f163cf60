#include "bcdlab/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bcdlab::serialize {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const Netlist& nl) {
    ordered_json doc;
    doc["format_version"] = kFormatVersion;
    doc["circuit"] = nl.name();
    doc["digits"] = nl.digits();
    ordered_json nets = ordered_json::array();
    for (const Net& n : nl.nets()) {
        ordered_json jn;
        jn["id"] = n.id;
        jn["name"] = n.name;
        jn["role"] = std::string(role_name(n.role));
        nets.push_back(std::move(jn));
    }
    doc["nets"] = std::move(nets);
    ordered_json gates = ordered_json::array();
    for (const Gate& g : nl.gates()) {
        ordered_json jg;
        jg["id"] = g.id;
        jg["kind"] = std::string(kind_name(g.kind));
        jg["inputs"] = g.inputs;
        jg["outputs"] = g.outputs;
        if (!g.cell.empty()) jg["cell"] = g.cell;
        gates.push_back(std::move(jg));
    }
    doc["gates"] = std::move(gates);
    doc["inputs"] = std::vector<NetId>(nl.inputs().begin(), nl.inputs().end());
    doc["outputs"] = std::vector<NetId>(nl.outputs().begin(), nl.outputs().end());
    return doc.dump(2) + "\n";
}

Netlist from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SerializeError(std::string("netlist document parse error: ") +
                             e.what());
    }
    try {
        if (doc.at("format_version").get<int>() != kFormatVersion)
            throw SerializeError("unsupported netlist format version");
        Netlist nl(doc.at("circuit").get<std::string>(),
                   doc.value("digits", 0));
        for (const auto& jn : doc.at("nets")) {
            auto role = role_from_name(jn.at("role").get<std::string>());
            if (!role) throw SerializeError("unknown net role");
            NetId id = nl.add_net(jn.at("name").get<std::string>(), *role);
            if (id != jn.at("id").get<NetId>())
                throw SerializeError("net ids must be dense and in order");
        }
        for (const auto& jg : doc.at("gates")) {
            auto kind = kind_from_name(jg.at("kind").get<std::string>());
            if (!kind) throw SerializeError("unknown gate kind");
            GateId id = nl.add_gate(*kind,
                                    jg.at("inputs").get<std::vector<NetId>>(),
                                    jg.at("outputs").get<std::vector<NetId>>(),
                                    jg.value("cell", std::string{}));
            if (id != jg.at("id").get<GateId>())
                throw SerializeError("gate ids must be dense and in order");
        }
        const auto inputs = doc.at("inputs").get<std::vector<NetId>>();
        if (inputs != std::vector<NetId>(nl.inputs().begin(), nl.inputs().end()))
            throw SerializeError("input order does not match input-role nets");
        for (NetId out : doc.at("outputs").get<std::vector<NetId>>())
            nl.mark_output(out);
        nl.freeze();
        return nl;
    } catch (const nlohmann::json::exception& e) {
        throw SerializeError(std::string("netlist document parse error: ") +
                             e.what());
    } catch (const NetlistError& e) {
        throw SerializeError(std::string("netlist document invalid: ") +
                             e.what());
    }
}

void save_netlist(const Netlist& nl, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SerializeError("cannot open '" + path.string() + "' for writing");
    out << to_json(nl);
    if (!out) throw SerializeError("write failure on '" + path.string() + "'");
}

Netlist load_netlist(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SerializeError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

namespace {

template <typename Fn>
void for_each_kind_entry(const ordered_json& obj, Fn fn) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        auto kind = kind_from_name(it.key());
        if (!kind)
            throw SerializeError("unknown gate kind '" + it.key() + "' in config");
        fn(*kind, it.value());
    }
}

}  // namespace

AnalysisConfig config_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SerializeError(std::string("config parse error: ") + e.what());
    }
    AnalysisConfig cfg;
    try {
        if (doc.contains("cost_overrides"))
            for_each_kind_entry(doc["cost_overrides"],
                                [&](GateKind k, const ordered_json& v) {
                                    cfg.cost.counts[kind_index(k)] = v.get<int>();
                                });
        if (doc.contains("delay")) {
            const auto& d = doc["delay"];
            if (d.contains("default")) cfg.delay.delays.fill(d["default"].get<int>());
            if (d.contains("overrides"))
                for_each_kind_entry(d["overrides"],
                                    [&](GateKind k, const ordered_json& v) {
                                        cfg.delay.delays[kind_index(k)] = v.get<int>();
                                    });
        }
        if (doc.contains("power")) {
            const auto& p = doc["power"];
            auto& pw = cfg.power;
            pw.unit_cap_f = p.value("unit_cap_f", pw.unit_cap_f);
            pw.vdd = p.value("vdd", pw.vdd);
            pw.vt = p.value("vt", pw.vt);
            pw.f_clk = p.value("f_clk", pw.f_clk);
            pw.i_sc = p.value("i_sc", pw.i_sc);
            pw.i_leak = p.value("i_leak", pw.i_leak);
            pw.reduced_swing_pass_gates =
                p.value("reduced_swing_pass_gates", pw.reduced_swing_pass_gates);
            pw.vdd_factor = p.value("vdd_factor", pw.vdd_factor);
            if (p.contains("load_override_f"))
                pw.load_override_f =
                    p["load_override_f"].get<std::map<std::string, double>>();
            if (p.contains("swing_override_v"))
                pw.swing_override_v =
                    p["swing_override_v"].get<std::map<std::string, double>>();
        }
        if (doc.contains("sweep")) {
            const auto& s = doc["sweep"];
            cfg.seed = s.value("seed", cfg.seed);
            cfg.samples = s.value("samples", cfg.samples);
            cfg.exhaustive_input_bound =
                s.value("exhaustive_input_bound", cfg.exhaustive_input_bound);
        }
    } catch (const nlohmann::json::exception& e) {
        throw SerializeError(std::string("config parse error: ") + e.what());
    }
    cfg.delay.check();
    cfg.power.check();
    return cfg;
}

AnalysisConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SerializeError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str());
}

}  // namespace bcdlab::serialize

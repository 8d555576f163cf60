#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcdlab/analysis.hpp"
#include "bcdlab/generators.hpp"
#include "bcdlab/netlist.hpp"
#include "bcdlab/report.hpp"
#include "bcdlab/serialize.hpp"
#include "bcdlab/verify.hpp"

using namespace bcdlab;

namespace {

// Stable exit contract: 0 success, 1 check failure, 2 usage/parse error,
// 3 I/O error, 4 configuration error.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitConfig = 4;

struct Options {
    std::string circuit;  // registered name or path to a netlist document
    int digits = 1;
    std::string output;
    std::string config_path;
    std::string inputs;
    std::string mode = "topological";
    bool exhaustive = false;
    bool json = false;
    std::uint64_t samples = 0;
    std::optional<std::uint64_t> seed;
    int workers = 1;
    std::string scope = "tables";
};

std::uint64_t effective_seed(const Options& opt, const serialize::AnalysisConfig& cfg) {
    if (opt.seed) return *opt.seed;
    if (const char* env = std::getenv("BCDLAB_SEED")) return std::strtoull(env, nullptr, 0);
    return cfg.seed;
}

// A positional that is either a registered circuit name or a document path.
Netlist resolve_circuit(const Options& opt) {
    if (std::filesystem::exists(opt.circuit))
        return serialize::load_netlist(opt.circuit);
    auto nl = generators::gen_by_name(opt.circuit, opt.digits);
    if (!nl)
        throw CLI::ValidationError("circuit",
                                   "unknown circuit '" + opt.circuit + "'");
    return std::move(*nl);
}

serialize::AnalysisConfig resolve_config(const Options& opt) {
    if (opt.config_path.empty()) return {};
    return serialize::load_config(opt.config_path);
}

// --inputs A=0101,B=0111,C0=0  (bits most-significant first per operand).
std::vector<std::uint8_t> parse_assignment(const Netlist& nl,
                                           const std::string& spec) {
    // Group primary inputs by their leading letter; index defaults to 0.
    struct Operand {
        std::vector<std::pair<int, std::size_t>> bits;  // (index, input pos)
    };
    std::map<std::string, Operand> operands;
    for (std::size_t pos = 0; pos < nl.inputs().size(); ++pos) {
        const std::string& name = nl.net(nl.inputs()[pos]).name;
        if (name == "cin") {
            operands["C0"].bits.emplace_back(0, pos);
            continue;
        }
        std::size_t i = 0;
        while (i < name.size() && !std::isdigit(static_cast<unsigned char>(name[i])))
            ++i;
        std::string key = name.substr(0, i);
        for (auto& c : key) c = std::toupper(static_cast<unsigned char>(c));
        const int index = i < name.size() ? std::stoi(name.substr(i)) : 0;
        operands[key].bits.emplace_back(index, pos);
    }
    for (auto& [key, op] : operands)
        std::sort(op.bits.begin(), op.bits.end());

    std::vector<std::uint8_t> assignment(nl.inputs().size(), 0);
    std::vector<bool> covered(nl.inputs().size(), false);
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--inputs", "expected NAME=BITS in '" + item + "'");
        std::string key = item.substr(0, eq);
        for (auto& c : key) c = std::toupper(static_cast<unsigned char>(c));
        if (key == "CIN") key = "C0";
        const std::string bits = item.substr(eq + 1);
        auto it = operands.find(key);
        if (it == operands.end())
            throw CLI::ValidationError("--inputs", "no operand named '" + key + "'");
        if (bits.size() != it->second.bits.size())
            throw CLI::ValidationError(
                "--inputs", "operand " + key + " has " +
                                std::to_string(it->second.bits.size()) +
                                " bits, got " + std::to_string(bits.size()));
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] != '0' && bits[i] != '1')
                throw CLI::ValidationError("--inputs", "bits must be 0/1");
            // MSB first: bits[0] is the operand's highest index.
            const auto pos = it->second.bits[bits.size() - 1 - i].second;
            assignment[pos] = bits[i] == '1';
            covered[pos] = true;
        }
    }
    for (std::size_t pos = 0; pos < covered.size(); ++pos)
        if (!covered[pos])
            throw CLI::ValidationError(
                "--inputs", "input '" + nl.net(nl.inputs()[pos]).name + "' unassigned");
    return assignment;
}

std::string format_outputs(const Netlist& nl, const std::vector<std::uint8_t>& out) {
    // Mirror the input grouping: operands, MSB first.
    struct Group {
        std::vector<std::pair<int, std::uint8_t>> bits;
        std::string sole_name;  // original name while the group has one member
    };
    std::map<std::string, Group> groups;
    std::vector<std::string> order;
    for (std::size_t i = 0; i < nl.outputs().size(); ++i) {
        const std::string& name = nl.net(nl.outputs()[i]).name;
        std::size_t p = name.size();
        while (p > 0 && std::isdigit(static_cast<unsigned char>(name[p - 1]))) --p;
        std::string key = name.substr(0, p);
        for (auto& c : key) c = std::toupper(static_cast<unsigned char>(c));
        const int index = p < name.size() ? std::stoi(name.substr(p)) : 0;
        if (!groups.contains(key)) order.push_back(key);
        auto& g = groups[key];
        g.bits.emplace_back(index, out[i]);
        std::string upper = name;
        for (auto& c : upper) c = std::toupper(static_cast<unsigned char>(c));
        g.sole_name = upper;
    }
    std::string text;
    for (const auto& key : order) {
        auto& g = groups[key];
        std::sort(g.bits.begin(), g.bits.end());
        if (!text.empty()) text += ", ";
        // Single nets keep their full name (C4=0); vectors print MSB first.
        text += (g.bits.size() == 1 ? g.sole_name : key) + "=";
        for (auto it = g.bits.rbegin(); it != g.bits.rend(); ++it)
            text += it->second ? '1' : '0';
    }
    return text;
}

verify::Oracle oracle_for(const Netlist& nl) {
    if (nl.name() == "pga") return verify::pga_oracle();
    if (nl.digits() > 0) return verify::bcd_add_oracle(nl.digits());
    const int width = static_cast<int>((nl.inputs().size() - 1) / 2);
    // The reference lookahead adder also exposes its group propagate.
    if (nl.outputs().size() == static_cast<std::size_t>(width) + 2)
        return verify::binary_add_gp_oracle(width);
    return verify::binary_add_oracle(width);
}

verify::InputSpace space_for(const Netlist& nl) {
    if (nl.digits() > 0) return verify::InputSpace::bcd_valid(nl.digits());
    return verify::InputSpace::all_binary(static_cast<int>(nl.inputs().size()));
}

int write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

int cmd_generate(const Options& opt) {
    auto nl = generators::gen_by_name(opt.circuit, opt.digits);
    if (!nl) {
        std::cerr << "error: unknown circuit '" << opt.circuit << "'\n";
        return kExitUsage;
    }
    return write_text(opt.output, serialize::to_json(*nl));
}

int cmd_export(const Options& opt) {
    Netlist nl = serialize::load_netlist(opt.circuit);
    return write_text(opt.output, serialize::to_json(nl));
}

int cmd_sim(const Options& opt) {
    Netlist nl = resolve_circuit(opt);
    auto assignment = parse_assignment(nl, opt.inputs);
    auto out = evaluate(nl, assignment);
    if (opt.json) {
        nlohmann::ordered_json doc;
        for (std::size_t i = 0; i < out.size(); ++i)
            doc[nl.net(nl.outputs()[i]).name] = int(out[i]);
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << format_outputs(nl, out) << "\n";
    }
    return kExitOk;
}

int cmd_check(const Options& opt) {
    Netlist nl = resolve_circuit(opt);
    auto report = verify::exhaustive_check(nl, oracle_for(nl), space_for(nl),
                                           opt.workers);
    std::cout << verify::render(report);
    return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_cost(const Options& opt) {
    Netlist nl = resolve_circuit(opt);
    auto cfg = resolve_config(opt);
    auto report = analysis::transistor_cost(nl, cfg.cost);
    if (opt.json) {
        nlohmann::ordered_json doc;
        doc["circuit"] = nl.name();
        doc["total"] = report.total;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : report.rows)
            rows.push_back({{"label", row.label},
                            {"count", row.count},
                            {"each", row.each},
                            {"subtotal", row.subtotal}});
        doc["rows"] = std::move(rows);
        std::cout << doc.dump() << "\n";
    } else {
        for (const auto& row : report.rows)
            std::cout << row.count << " x " << row.label << " = "
                      << row.subtotal << "\n";
        std::cout << nl.name() << " total: " << report.total << " transistors\n";
    }
    return kExitOk;
}

int cmd_delay(const Options& opt) {
    Netlist nl = resolve_circuit(opt);
    auto cfg = resolve_config(opt);
    if (opt.mode == "topological") {
        auto report = analysis::delay_topological(nl, cfg.delay);
        if (opt.json) {
            nlohmann::ordered_json doc;
            doc["circuit"] = nl.name();
            doc["mode"] = "topological";
            doc["max_delay"] = report.max_arrival;
            doc["worst_output"] =
                nl.net(nl.outputs()[report.worst_output]).name;
            doc["critical_path"] = report.critical_path;
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << nl.name() << " topological delay: "
                      << report.max_arrival << " units (output "
                      << nl.net(nl.outputs()[report.worst_output]).name
                      << ")\n";
        }
        return kExitOk;
    }
    if (opt.mode != "functional") {
        std::cerr << "error: --mode must be topological or functional\n";
        return kExitUsage;
    }
    analysis::PairStimulus stim;
    stim.space = space_for(nl);
    stim.mode = opt.exhaustive ? analysis::PairStimulus::Mode::Exhaustive
                               : analysis::PairStimulus::Mode::Auto;
    stim.seed = effective_seed(opt, cfg);
    stim.samples = opt.samples ? opt.samples : cfg.samples;
    stim.exhaustive_input_bound = cfg.exhaustive_input_bound;
    auto report = analysis::delay_functional(nl, cfg.delay, stim, opt.workers);
    if (opt.json) {
        nlohmann::ordered_json doc;
        doc["circuit"] = nl.name();
        doc["mode"] = "functional";
        doc["worst_settle"] = report.worst_settle;
        doc["pairs"] = report.pairs_run;
        doc["exhaustive"] = report.exhaustive;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << nl.name() << " functional worst settle: "
                  << report.worst_settle << " units over " << report.pairs_run
                  << (report.exhaustive ? " exhaustive" : " sampled")
                  << " pairs\n";
    }
    return kExitOk;
}

int cmd_power(const Options& opt) {
    Netlist nl = resolve_circuit(opt);
    auto cfg = resolve_config(opt);
    if (opt.samples == 0) {
        std::cerr << "error: missing activity: power needs a stimulus spec "
                     "(--samples N)\n";
        return kExitConfig;
    }
    auto activity = analysis::estimate_activity(
        nl, analysis::random_stimulus(nl, opt.samples, effective_seed(opt, cfg)));
    const double watts = analysis::estimate_power(nl, activity, cfg.power);
    if (opt.json) {
        nlohmann::ordered_json doc;
        doc["circuit"] = nl.name();
        doc["samples"] = opt.samples;
        doc["watts"] = watts;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << nl.name() << " estimated power: " << watts << " W over "
                  << opt.samples << " random vectors\n";
    }
    return kExitOk;
}

int cmd_report(const Options& opt) {
    auto cfg = resolve_config(opt);
    std::string text;
    if (opt.scope == "tables") {
        text = report::render_tables(cfg);
    } else if (opt.scope == "compare") {
        text = report::render_comparison(cfg);
    } else {
        std::cerr << "error: --scope must be tables or compare\n";
        return kExitUsage;
    }
    return write_text(opt.output, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Gate-level workbench for pass-transistor BCD adders: generation, "
        "simulation, exhaustive checking, and area/delay/power analysis"};
    app.require_subcommand(1);
    Options opt;

    auto add_circuit_arg = [&](CLI::App* sub, bool with_digits = true) {
        sub->add_option("circuit", opt.circuit,
                        "circuit name (pga, ncla4, mcla4, ripple4, bcd-ripple, "
                        "bcd-ncla, bcd-cs) or netlist document path")
            ->required();
        if (with_digits)
            sub->add_option("--digits", opt.digits, "digit count for bcd-* chains")
                ->check(CLI::PositiveNumber);
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", opt.json, "machine-readable output");
        sub->add_option("--config", opt.config_path, "analysis config (JSON)");
        sub->add_option("--seed", opt.seed,
                        "sweep seed (BCDLAB_SEED env overrides the default)");
        sub->add_option("--workers", opt.workers, "parallel sweep workers")
            ->check(CLI::PositiveNumber);
    };

    auto* generate = app.add_subcommand("generate", "write a netlist document");
    add_circuit_arg(generate);
    generate->add_option("-o,--output", opt.output, "output path (default stdout)");

    auto* sim = app.add_subcommand("sim", "evaluate one input assignment");
    add_circuit_arg(sim);
    sim->add_option("--inputs", opt.inputs,
                    "comma-separated NAME=BITS, bits most-significant first "
                    "per operand (e.g. A=0101,B=0111,C0=0); C0/CIN is the "
                    "carry-in")
        ->required();
    sim->add_flag("--json", opt.json, "machine-readable output");

    auto* check = app.add_subcommand("check", "exhaustive sweep against the oracle");
    add_circuit_arg(check);
    add_common(check);

    auto* cost = app.add_subcommand("cost", "transistor count");
    add_circuit_arg(cost);
    add_common(cost);

    auto* delay = app.add_subcommand("delay", "topological or functional delay");
    add_circuit_arg(delay);
    delay->add_option("--mode", opt.mode, "topological | functional");
    delay->add_flag("--exhaustive", opt.exhaustive,
                    "force exhaustive vector-pair enumeration");
    delay->add_option("--pairs", opt.samples, "sampled pair count");
    add_common(delay);

    auto* power = app.add_subcommand("power", "switching power estimate");
    add_circuit_arg(power);
    power->add_option("--samples", opt.samples,
                      "random stimulus length (required)");
    add_common(power);

    auto* exp = app.add_subcommand("export", "canonicalize a netlist document");
    exp->add_option("circuit", opt.circuit, "netlist document path")->required();
    exp->add_option("-o,--output", opt.output, "output path (default stdout)");

    auto* rep = app.add_subcommand("report", "markdown cost/comparison reports");
    rep->add_option("--scope", opt.scope, "tables | compare");
    rep->add_option("-o,--output", opt.output, "output path (default stdout)");
    rep->add_option("--config", opt.config_path, "analysis config (JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(opt);
        if (sim->parsed()) return cmd_sim(opt);
        if (check->parsed()) return cmd_check(opt);
        if (cost->parsed()) return cmd_cost(opt);
        if (delay->parsed()) return cmd_delay(opt);
        if (power->parsed()) return cmd_power(opt);
        if (exp->parsed()) return cmd_export(opt);
        if (rep->parsed()) return cmd_report(opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const serialize::SerializeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

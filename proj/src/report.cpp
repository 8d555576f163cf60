#include "bcdlab/report.hpp"

#include <sstream>

#include "bcdlab/generators.hpp"

namespace bcdlab::report {

using namespace bcdlab::analysis;
using namespace bcdlab::generators;

namespace {

const char* kKindLabels[kNumGateKinds] = {
    "NOT gate",
    "2 input AND gate",
    "3 input AND gate",
    "4 input AND gate",
    "2 input OR gate",
    "3 input OR gate",
    "4 input OR gate",
    "2 input NAND gate",
    "3 input NAND gate",
    "4 input NAND gate",
    "2 input XOR gate",
    "1 bit full adder (10T)",
    "1 bit mux-based full adder (12T)",
};

void bom_table(std::ostringstream& os, const Netlist& nl, const CostModel& cost) {
    CostReport r = transistor_cost(nl, cost);
    os << "| Blocks | Count | Transistors each | Subtotal |\n";
    os << "|---|---:|---:|---:|\n";
    for (const auto& row : r.rows)
        os << "| " << row.label << " | " << row.count << " | " << row.each
           << " | " << row.subtotal << " |\n";
    os << "| **" << nl.name() << " total** | | | **" << r.total << "** |\n\n";
}

}  // namespace

std::string render_tables(const serialize::AnalysisConfig& cfg) {
    std::ostringstream os;
    os << "# Transistor cost tables\n\n";
    os << "## Cost model (transistors per logic function)\n\n";
    os << "| Logic function | Transistors |\n|---|---:|\n";
    for (int k = 0; k < kNumGateKinds; ++k)
        os << "| " << kKindLabels[k] << " | "
           << cfg.cost.of(static_cast<GateKind>(k)) << " |\n";
    os << "\n";
    os << "## NCLA bill of materials\n\n";
    bom_table(os, gen_ncla4(), cfg.cost);
    os << "## MCLA bill of materials\n\n";
    bom_table(os, gen_mcla4(), cfg.cost);
    os << "## Ripple baseline bill of materials\n\n";
    bom_table(os, gen_ripple4(), cfg.cost);
    return os.str();
}

namespace {

struct CompareRow {
    std::string name;
    int cost;
    int topo;
    int functional;
    bool sampled;
    std::vector<double> power_uw;  // one per frequency grid point
};

const double kLoadGridF[] = {0.01e-12, 0.02e-12, 0.05e-12,
                             0.1e-12,  0.3e-12,  0.5e-12};
const double kFreqGridHz[] = {1e6, 50e6, 100e6, 200e6};
const double kReportLoadF = 0.01e-12;  // the load the paper's curves use

CompareRow compare_circuit(const Netlist& nl, const serialize::AnalysisConfig& cfg) {
    CompareRow row;
    row.name = nl.name();
    if (nl.digits() > 0) row.name += "/" + std::to_string(nl.digits());
    row.cost = transistor_cost(nl, cfg.cost).total;
    row.topo = delay_topological(nl, cfg.delay).max_arrival;

    PairStimulus stim;
    stim.space = nl.digits() > 0
                     ? verify::InputSpace::bcd_valid(nl.digits())
                     : verify::InputSpace::all_binary(
                           static_cast<int>(nl.inputs().size()));
    stim.seed = cfg.seed;
    stim.samples = cfg.samples;
    stim.exhaustive_input_bound = cfg.exhaustive_input_bound;
    auto fd = delay_functional(nl, cfg.delay, stim);
    row.functional = fd.worst_settle;
    row.sampled = !fd.exhaustive;

    auto activity = estimate_activity(nl, random_stimulus(nl, 256, cfg.seed));
    for (double f : kFreqGridHz) {
        PowerParams p = cfg.power;
        p.f_clk = f;
        // Uniform external load at the reporting grid point.
        for (const Net& net : nl.nets())
            if (nl.driver(net.id)) p.load_override_f[net.name] = kReportLoadF;
        row.power_uw.push_back(estimate_power(nl, activity, p) * 1e6);
    }
    return row;
}

}  // namespace

std::string render_comparison(const serialize::AnalysisConfig& cfg) {
    std::vector<CompareRow> rows;
    rows.push_back(compare_circuit(gen_ripple4(), cfg));
    rows.push_back(compare_circuit(gen_ncla4(), cfg));
    rows.push_back(compare_circuit(gen_mcla4(), cfg));
    for (int digits : {1, 2, 7, 16, 34})
        for (AdderStyle style :
             {AdderStyle::Ripple, AdderStyle::Ncla, AdderStyle::CarrySkip})
            rows.push_back(compare_circuit(gen_bcd_chain({digits, style}), cfg));

    std::ostringstream os;
    os << "# Adder comparison\n\n";
    os << "Functional delay uses exhaustive vector pairs where the input "
          "count permits and seeded sampling (seed " << cfg.seed << ", "
       << cfg.samples << " pairs) otherwise; sampled entries are marked *. "
          "Power is the switching estimate at a uniform "
       << kReportLoadF * 1e12 << " pF load over the frequency grid";
    os << " (loads ";
    for (std::size_t i = 0; i < std::size(kLoadGridF); ++i)
        os << (i ? ", " : "") << kLoadGridF[i] * 1e12 << " pF";
    os << " are accepted in configs).\n\n";
    os << "| Circuit | Transistors | Topological delay | Functional worst "
          "delay |";
    for (double f : kFreqGridHz) os << " uW @ " << f / 1e6 << " MHz |";
    os << "\n|---|---:|---:|---:|";
    for (std::size_t i = 0; i < std::size(kFreqGridHz); ++i) os << "---:|";
    os << "\n";
    for (const auto& row : rows) {
        os << "| " << row.name << " | " << row.cost << " | " << row.topo
           << " | " << row.functional << (row.sampled ? "*" : "") << " |";
        for (double p : row.power_uw) {
            os << " " << p << " |";
        }
        os << "\n";
    }
    os << "\n";
    return os.str();
}

}  // namespace bcdlab::report

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "bcdlab/analysis.hpp"
#include "bcdlab/netlist.hpp"

namespace bcdlab::serialize {

class SerializeError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kFormatVersion = 1;

// Canonical JSON form: fixed key order, nets and gates sorted by id, 2-space
// indent, trailing newline. Two serializations of the same netlist are
// byte-identical.
std::string to_json(const Netlist& nl);
Netlist from_json(const std::string& text);  // validates and freezes

void save_netlist(const Netlist& nl, const std::filesystem::path& path);
Netlist load_netlist(const std::filesystem::path& path);

// Analysis configuration document. Every field is optional and falls back to
// the built-in defaults (cost table, unit delays, VDD 3.3 V).
struct AnalysisConfig {
    analysis::CostModel cost = analysis::CostModel::defaults();
    analysis::DelayModel delay = analysis::DelayModel::defaults();
    analysis::PowerParams power;
    std::uint64_t seed = 0x5eedbcd5ull;
    std::uint64_t samples = 10000;
    int exhaustive_input_bound = 10;
};

AnalysisConfig config_from_json(const std::string& text);
AnalysisConfig load_config(const std::filesystem::path& path);

}  // namespace bcdlab::serialize

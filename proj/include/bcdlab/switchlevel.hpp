#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcdlab::switchlevel {

enum class Level { Zero, One, X };
enum class Strength { Floating, Weak, Strong };

// Discrete switch-level signal value. `drops` counts accumulated threshold
// degradations: an NMOS passing a 1 or a PMOS passing a 0 weakens the signal
// and bumps the counter, which is what bounds cascading of the pass-gate
// AND/OR cells.
struct SignalState {
    Level level = Level::X;
    Strength strength = Strength::Floating;
    int drops = 0;

    bool operator==(const SignalState&) const = default;
};

enum class NodeRole { Input, Output, Internal, Tied0, Tied1 };

struct SwitchNode {
    int id;
    std::string name;
    NodeRole role;
};

enum class DeviceKind { Nmos, Pmos };

struct Device {
    DeviceKind kind;
    int gate;
    int source;
    int drain;
};

class SwitchError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SwitchNetwork {
    std::vector<SwitchNode> nodes;
    std::vector<Device> devices;

    int add_node(std::string name, NodeRole role);
    void add_device(DeviceKind kind, int gate, int source, int drain);
    int node_by_name(const std::string& name) const;
    bool has_tied(bool value) const;
};

struct SettleResult {
    std::vector<SignalState> states;      // indexed by node id
    std::vector<int> conflict_nodes;      // strong-strong opposition
    bool strong_conflict() const { return !conflict_nodes.empty(); }
};

// Relaxes the network to a fixed point of the MOS pass rules. NMOS conducts
// on gate level 1 and passes a 0 unchanged but degrades a 1 to weak with
// drops+1; PMOS is the mirror. A node takes its strongest contribution;
// equal-strength opposing levels resolve to X. Unconnected nodes float as X.
// Throws SwitchError("no convergence") past the nodes*devices iteration bound.
SettleResult settle(const SwitchNetwork& net,
                    const std::map<int, bool>& inputs);

// Level if determinate and within the drop budget, otherwise nullopt.
std::optional<bool> logical_readout(const SignalState& s, int max_drops);

// Powerless AND: NMOS(gate=A, source=B, drain=out), PMOS(gate=A, source=tied-0,
// drain=out). No VDD node anywhere in the network.
SwitchNetwork build_two_t_and();

// Groundless OR: PMOS(gate=A, source=B, drain=out), NMOS(gate=A, source=tied-1,
// drain=out). No GND node.
SwitchNetwork build_two_t_or();

enum class TwoTKind { And, Or };

// Chains `depth` copies of the 2T gate, feeding each stage's output into the
// next stage's pass input, settles under worst-case inputs (all 1 for AND,
// all 0 for OR) and returns the drop count seen at each stage output.
std::vector<int> cascade_analysis(TwoTKind kind, int depth);

}  // namespace bcdlab::switchlevel

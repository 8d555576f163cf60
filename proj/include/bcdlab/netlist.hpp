#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bcdlab {

using NetId = std::uint32_t;
using GateId = std::uint32_t;

enum class NetRole { Input, Output, Internal, Const0, Const1 };

struct Net {
    NetId id;
    std::string name;
    NetRole role;
};

// Gate vocabulary: every row of the transistor cost table plus the two
// full-adder macro cells. AND/OR wider than 4 inputs must be cascaded
// explicitly.
enum class GateKind {
    Not,
    And2, And3, And4,
    Or2, Or3, Or4,
    Nand2, Nand3, Nand4,
    Xor2,
    Fa10T,    // 10-transistor full adder macro (sum, carry)
    FaMux12,  // 12-transistor multiplexer-based full adder macro (sum, carry)
};

inline constexpr int kNumGateKinds = 13;

constexpr int kind_index(GateKind k) { return static_cast<int>(k); }

constexpr int input_arity(GateKind k) {
    switch (k) {
    case GateKind::Not: return 1;
    case GateKind::And2: case GateKind::Or2:
    case GateKind::Nand2: case GateKind::Xor2: return 2;
    case GateKind::And3: case GateKind::Or3: case GateKind::Nand3: return 3;
    case GateKind::And4: case GateKind::Or4: case GateKind::Nand4: return 4;
    case GateKind::Fa10T: case GateKind::FaMux12: return 3;
    }
    return 0;
}

constexpr int output_arity(GateKind k) {
    return (k == GateKind::Fa10T || k == GateKind::FaMux12) ? 2 : 1;
}

constexpr bool is_macro_cell(GateKind k) {
    return k == GateKind::Fa10T || k == GateKind::FaMux12;
}

std::string_view kind_name(GateKind k);
std::optional<GateKind> kind_from_name(std::string_view name);

std::string_view role_name(NetRole r);
std::optional<NetRole> role_from_name(std::string_view name);

struct Gate {
    GateId id;
    GateKind kind;
    std::vector<NetId> inputs;
    std::vector<NetId> outputs;  // [sum, carry] for macro full adders
    std::string cell;            // optional macro-cell instance label, "" = none
};

enum class NetlistErrc {
    ArityMismatch,
    MultipleDrivers,
    UnknownNet,
    DuplicateName,
    IncompleteAssignment,
    NotFrozen,
    Invalid,
};

class NetlistError : public std::runtime_error {
public:
    NetlistError(NetlistErrc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    NetlistErrc code() const { return code_; }

private:
    NetlistErrc code_;
};

struct Diagnostic {
    std::string message;
};

// Word-parallel gate evaluation: each uint64_t carries 64 independent
// simulation lanes. All evaluation paths (functional, sweeps, event-driven
// timing) share this one semantic definition.
struct GateWords {
    std::uint64_t out0 = 0;
    std::uint64_t out1 = 0;
};

inline GateWords eval_gate_words(GateKind k, std::span<const std::uint64_t> in) {
    GateWords r;
    switch (k) {
    case GateKind::Not:   r.out0 = ~in[0]; break;
    case GateKind::And2:  r.out0 = in[0] & in[1]; break;
    case GateKind::And3:  r.out0 = in[0] & in[1] & in[2]; break;
    case GateKind::And4:  r.out0 = in[0] & in[1] & in[2] & in[3]; break;
    case GateKind::Or2:   r.out0 = in[0] | in[1]; break;
    case GateKind::Or3:   r.out0 = in[0] | in[1] | in[2]; break;
    case GateKind::Or4:   r.out0 = in[0] | in[1] | in[2] | in[3]; break;
    case GateKind::Nand2: r.out0 = ~(in[0] & in[1]); break;
    case GateKind::Nand3: r.out0 = ~(in[0] & in[1] & in[2]); break;
    case GateKind::Nand4: r.out0 = ~(in[0] & in[1] & in[2] & in[3]); break;
    case GateKind::Xor2:  r.out0 = in[0] ^ in[1]; break;
    case GateKind::Fa10T:
    case GateKind::FaMux12: {
        const std::uint64_t a = in[0], b = in[1], c = in[2];
        r.out0 = a ^ b ^ c;                 // sum
        r.out1 = (a & b) | (c & (a ^ b));   // carry = majority(a, b, cin)
        break;
    }
    }
    return r;
}

// Immutable-after-freeze gate-level netlist. Construction appends nets and
// gates; freeze() checks the invariants and fixes the topological order.
// A frozen netlist is safe to evaluate from any number of threads with
// caller-owned scratch state.
class Netlist {
public:
    Netlist() = default;
    explicit Netlist(std::string name, int digits = 0)
        : name_(std::move(name)), digits_(digits) {}

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    int digits() const { return digits_; }
    void set_digits(int d) { digits_ = d; }

    NetId add_net(std::string name, NetRole role = NetRole::Internal);
    NetId add_input(std::string name);
    NetId constant(bool value);  // shared per netlist, created on demand
    void mark_output(NetId id);
    void rename_net(NetId id, std::string name);  // pre-freeze only

    GateId add_gate(GateKind kind, std::vector<NetId> inputs,
                    std::vector<NetId> outputs, std::string cell = {});

    std::optional<NetId> find_net(std::string_view name) const;
    const Net& net(NetId id) const { return nets_.at(id); }
    const Gate& gate(GateId id) const { return gates_.at(id); }
    std::span<const Net> nets() const { return nets_; }
    std::span<const Gate> gates() const { return gates_; }
    std::span<const NetId> inputs() const { return inputs_; }
    std::span<const NetId> outputs() const { return outputs_; }
    std::size_t net_count() const { return nets_.size(); }
    std::size_t gate_count() const { return gates_.size(); }

    // Gate driving a net, or nullopt for inputs/constants/undriven nets.
    std::optional<GateId> driver(NetId id) const;

    std::vector<Diagnostic> validate() const;

    // Validates and computes the evaluation order; throws NetlistError on
    // any diagnostic. Required before evaluation.
    void freeze();
    bool frozen() const { return frozen_; }
    std::span<const GateId> topo_order() const;

private:
    void require_net(NetId id) const;

    std::string name_;
    int digits_ = 0;
    std::vector<Net> nets_;
    std::vector<Gate> gates_;
    std::vector<NetId> inputs_;
    std::vector<NetId> outputs_;
    std::unordered_map<std::string, NetId> by_name_;
    std::array<std::optional<NetId>, 2> const_nets_;
    std::vector<std::int64_t> driver_;  // gate id per net, -1 if none
    std::vector<GateId> topo_;
    bool frozen_ = false;
};

// Caller-owned scratch for repeated evaluations; one word of 64 lanes per net.
struct EvalWords {
    std::vector<std::uint64_t> values;
};

// Fills scratch.values with the settled word state of every net. `inputs`
// holds one word per primary input, in primary-input order.
void evaluate_words(const Netlist& nl, std::span<const std::uint64_t> inputs,
                    EvalWords& scratch);

// Single-vector convenience wrapper: one bit per primary input, returns one
// bit per primary output.
std::vector<std::uint8_t> evaluate(const Netlist& nl,
                                   std::span<const std::uint8_t> assignment);

}  // namespace bcdlab

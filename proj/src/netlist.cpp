#include "bcdlab/netlist.hpp"

#include <algorithm>
#include <queue>

namespace bcdlab {

namespace {

constexpr std::array<std::string_view, kNumGateKinds> kKindNames = {
    "not", "and2", "and3", "and4", "or2", "or3", "or4",
    "nand2", "nand3", "nand4", "xor2", "fa10t", "famux12",
};

constexpr std::array<std::string_view, 5> kRoleNames = {
    "input", "output", "internal", "const0", "const1",
};

}  // namespace

std::string_view kind_name(GateKind k) { return kKindNames[kind_index(k)]; }

std::optional<GateKind> kind_from_name(std::string_view name) {
    for (int i = 0; i < kNumGateKinds; ++i)
        if (kKindNames[i] == name) return static_cast<GateKind>(i);
    return std::nullopt;
}

std::string_view role_name(NetRole r) { return kRoleNames[static_cast<int>(r)]; }

std::optional<NetRole> role_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kRoleNames.size(); ++i)
        if (kRoleNames[i] == name) return static_cast<NetRole>(i);
    return std::nullopt;
}

NetId Netlist::add_net(std::string name, NetRole role) {
    if (by_name_.contains(name))
        throw NetlistError(NetlistErrc::DuplicateName,
                           "duplicate net name '" + name + "'");
    NetId id = static_cast<NetId>(nets_.size());
    by_name_.emplace(name, id);
    nets_.push_back(Net{id, std::move(name), role});
    driver_.push_back(-1);
    if (role == NetRole::Input) inputs_.push_back(id);
    frozen_ = false;
    return id;
}

NetId Netlist::add_input(std::string name) {
    return add_net(std::move(name), NetRole::Input);
}

NetId Netlist::constant(bool value) {
    auto& slot = const_nets_[value ? 1 : 0];
    if (!slot)
        slot = add_net(value ? "const1" : "const0",
                       value ? NetRole::Const1 : NetRole::Const0);
    return *slot;
}

void Netlist::mark_output(NetId id) {
    require_net(id);
    if (nets_[id].role == NetRole::Internal) nets_[id].role = NetRole::Output;
    outputs_.push_back(id);
}

void Netlist::rename_net(NetId id, std::string name) {
    require_net(id);
    if (nets_[id].name == name) return;
    if (by_name_.contains(name))
        throw NetlistError(NetlistErrc::DuplicateName,
                           "duplicate net name '" + name + "'");
    by_name_.erase(nets_[id].name);
    by_name_.emplace(name, id);
    nets_[id].name = std::move(name);
    frozen_ = false;
}

void Netlist::require_net(NetId id) const {
    if (id >= nets_.size())
        throw NetlistError(NetlistErrc::UnknownNet,
                           "unknown net id " + std::to_string(id));
}

GateId Netlist::add_gate(GateKind kind, std::vector<NetId> inputs,
                         std::vector<NetId> outputs, std::string cell) {
    if (inputs.size() != static_cast<std::size_t>(input_arity(kind)) ||
        outputs.size() != static_cast<std::size_t>(output_arity(kind)))
        throw NetlistError(
            NetlistErrc::ArityMismatch,
            std::string("gate kind ") + std::string(kind_name(kind)) +
                " expects " + std::to_string(input_arity(kind)) + " inputs / " +
                std::to_string(output_arity(kind)) + " outputs, got " +
                std::to_string(inputs.size()) + "/" +
                std::to_string(outputs.size()));
    for (NetId id : inputs) require_net(id);
    for (NetId id : outputs) {
        require_net(id);
        const Net& n = nets_[id];
        if (n.role == NetRole::Input || n.role == NetRole::Const0 ||
            n.role == NetRole::Const1)
            throw NetlistError(NetlistErrc::MultipleDrivers,
                               "net '" + n.name + "' is not gate-drivable");
        if (driver_[id] >= 0)
            throw NetlistError(NetlistErrc::MultipleDrivers,
                               "net '" + n.name + "' already has a driver");
    }
    GateId gid = static_cast<GateId>(gates_.size());
    for (NetId id : outputs) driver_[id] = gid;
    gates_.push_back(Gate{gid, kind, std::move(inputs), std::move(outputs),
                          std::move(cell)});
    frozen_ = false;
    return gid;
}

std::optional<NetId> Netlist::find_net(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::optional<GateId> Netlist::driver(NetId id) const {
    require_net(id);
    if (driver_[id] < 0) return std::nullopt;
    return static_cast<GateId>(driver_[id]);
}

std::vector<Diagnostic> Netlist::validate() const {
    std::vector<Diagnostic> diags;
    for (const Net& n : nets_) {
        bool needs_driver = n.role == NetRole::Internal || n.role == NetRole::Output;
        if (needs_driver && driver_[n.id] < 0)
            diags.push_back({"net '" + n.name + "' has no driver"});
    }
    // Cycle detection over the gate graph (Kahn's algorithm).
    std::vector<int> pending(gates_.size(), 0);
    std::vector<std::vector<GateId>> consumers(nets_.size());
    for (const Gate& g : gates_) {
        for (NetId in : g.inputs) {
            if (driver_[in] >= 0) {
                ++pending[g.id];
                consumers[in].push_back(g.id);
            }
        }
    }
    std::queue<GateId> ready;
    for (const Gate& g : gates_)
        if (pending[g.id] == 0) ready.push(g.id);
    std::size_t done = 0;
    while (!ready.empty()) {
        GateId gid = ready.front();
        ready.pop();
        ++done;
        for (NetId out : gates_[gid].outputs)
            for (GateId next : consumers[out])
                if (--pending[next] == 0) ready.push(next);
    }
    if (done != gates_.size()) {
        std::string cyc = "combinational cycle through gates:";
        for (const Gate& g : gates_)
            if (pending[g.id] > 0) cyc += " " + std::to_string(g.id);
        diags.push_back({cyc});
    }
    return diags;
}

void Netlist::freeze() {
    auto diags = validate();
    if (!diags.empty()) {
        std::string msg = "netlist '" + name_ + "' is invalid:";
        for (const auto& d : diags) msg += "\n  " + d.message;
        throw NetlistError(NetlistErrc::Invalid, msg);
    }
    std::vector<int> pending(gates_.size(), 0);
    std::vector<std::vector<GateId>> consumers(nets_.size());
    for (const Gate& g : gates_)
        for (NetId in : g.inputs)
            if (driver_[in] >= 0) {
                ++pending[g.id];
                consumers[in].push_back(g.id);
            }
    topo_.clear();
    topo_.reserve(gates_.size());
    // Min-heap on gate id keeps the order deterministic.
    std::priority_queue<GateId, std::vector<GateId>, std::greater<>> ready;
    for (const Gate& g : gates_)
        if (pending[g.id] == 0) ready.push(g.id);
    while (!ready.empty()) {
        GateId gid = ready.top();
        ready.pop();
        topo_.push_back(gid);
        for (NetId out : gates_[gid].outputs)
            for (GateId next : consumers[out])
                if (--pending[next] == 0) ready.push(next);
    }
    frozen_ = true;
}

std::span<const GateId> Netlist::topo_order() const {
    if (!frozen_)
        throw NetlistError(NetlistErrc::NotFrozen,
                           "netlist '" + name_ + "' is not frozen");
    return topo_;
}

void evaluate_words(const Netlist& nl, std::span<const std::uint64_t> inputs,
                    EvalWords& scratch) {
    if (inputs.size() != nl.inputs().size())
        throw NetlistError(NetlistErrc::IncompleteAssignment,
                           "assignment covers " + std::to_string(inputs.size()) +
                               " of " + std::to_string(nl.inputs().size()) +
                               " primary inputs");
    auto order = nl.topo_order();
    auto& v = scratch.values;
    v.assign(nl.net_count(), 0);
    for (std::size_t i = 0; i < inputs.size(); ++i) v[nl.inputs()[i]] = inputs[i];
    for (const Net& n : nl.nets())
        if (n.role == NetRole::Const1) v[n.id] = ~0ull;
    std::array<std::uint64_t, 4> in{};
    for (GateId gid : order) {
        const Gate& g = nl.gate(gid);
        for (std::size_t i = 0; i < g.inputs.size(); ++i) in[i] = v[g.inputs[i]];
        GateWords r = eval_gate_words(g.kind, {in.data(), g.inputs.size()});
        v[g.outputs[0]] = r.out0;
        if (g.outputs.size() > 1) v[g.outputs[1]] = r.out1;
    }
}

std::vector<std::uint8_t> evaluate(const Netlist& nl,
                                   std::span<const std::uint8_t> assignment) {
    if (assignment.size() != nl.inputs().size())
        throw NetlistError(NetlistErrc::IncompleteAssignment,
                           "assignment covers " +
                               std::to_string(assignment.size()) + " of " +
                               std::to_string(nl.inputs().size()) +
                               " primary inputs");
    std::vector<std::uint64_t> words(assignment.size());
    for (std::size_t i = 0; i < assignment.size(); ++i)
        words[i] = assignment[i] ? ~0ull : 0ull;
    EvalWords scratch;
    evaluate_words(nl, words, scratch);
    std::vector<std::uint8_t> out(nl.outputs().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = scratch.values[nl.outputs()[i]] & 1;
    return out;
}

}  // namespace bcdlab

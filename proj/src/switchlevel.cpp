#include "bcdlab/switchlevel.hpp"

#include <algorithm>

namespace bcdlab::switchlevel {

int SwitchNetwork::add_node(std::string name, NodeRole role) {
    int id = static_cast<int>(nodes.size());
    nodes.push_back(SwitchNode{id, std::move(name), role});
    return id;
}

void SwitchNetwork::add_device(DeviceKind kind, int gate, int source, int drain) {
    auto check = [&](int id) {
        if (id < 0 || id >= static_cast<int>(nodes.size()))
            throw SwitchError("device references unknown node " +
                              std::to_string(id));
    };
    check(gate);
    check(source);
    check(drain);
    devices.push_back(Device{kind, gate, source, drain});
}

int SwitchNetwork::node_by_name(const std::string& name) const {
    for (const auto& n : nodes)
        if (n.name == name) return n.id;
    throw SwitchError("no node named '" + name + "'");
}

bool SwitchNetwork::has_tied(bool value) const {
    NodeRole want = value ? NodeRole::Tied1 : NodeRole::Tied0;
    return std::any_of(nodes.begin(), nodes.end(),
                       [&](const SwitchNode& n) { return n.role == want; });
}

namespace {

// Pass transform through a conducting channel. `good` is the level the device
// passes at full strength (0 for NMOS, 1 for PMOS); the opposite level comes
// out weak with one more threshold drop.
SignalState pass(const SignalState& s, Level good) {
    if (s.strength == Strength::Floating) return SignalState{};
    SignalState out = s;
    if (s.level == good) return out;
    out.strength = Strength::Weak;
    out.drops = s.drops + 1;
    return out;
}

struct Resolver {
    SignalState best;
    bool have = false;
    bool conflict = false;

    void add(const SignalState& c) {
        if (c.strength == Strength::Floating) return;
        if (!have || c.strength > best.strength) {
            best = c;
            have = true;
            return;
        }
        if (c.strength < best.strength) return;
        // Equal strength.
        if (c.level == best.level && c.level != Level::X) {
            best.drops = std::min(best.drops, c.drops);
        } else {
            if (best.strength == Strength::Strong && best.level != Level::X &&
                c.level != Level::X && c.level != best.level)
                conflict = true;
            best.level = Level::X;
            best.drops = std::max(best.drops, c.drops);
        }
    }

    SignalState result() const { return have ? best : SignalState{}; }
};

}  // namespace

SettleResult settle(const SwitchNetwork& net, const std::map<int, bool>& inputs) {
    const std::size_t n = net.nodes.size();
    std::vector<SignalState> state(n);
    std::vector<bool> fixed(n, false);

    for (const auto& node : net.nodes) {
        if (node.role == NodeRole::Tied0) {
            state[node.id] = {Level::Zero, Strength::Strong, 0};
            fixed[node.id] = true;
        } else if (node.role == NodeRole::Tied1) {
            state[node.id] = {Level::One, Strength::Strong, 0};
            fixed[node.id] = true;
        } else if (node.role == NodeRole::Input) {
            auto it = inputs.find(node.id);
            if (it == inputs.end())
                throw SwitchError("input node '" + node.name + "' unassigned");
            state[node.id] = {it->second ? Level::One : Level::Zero,
                              Strength::Strong, 0};
            fixed[node.id] = true;
        }
    }

    const int bound =
        static_cast<int>(n * std::max<std::size_t>(net.devices.size(), 1)) + 4;
    std::vector<int> conflicts;
    for (int iter = 0;; ++iter) {
        if (iter > bound) throw SwitchError("no convergence");
        bool changed = false;
        conflicts.clear();
        for (const auto& node : net.nodes) {
            if (fixed[node.id]) continue;
            Resolver r;
            for (const auto& d : net.devices) {
                int here, other;
                if (d.source == node.id) {
                    here = d.source;
                    other = d.drain;
                } else if (d.drain == node.id) {
                    here = d.drain;
                    other = d.source;
                } else {
                    continue;
                }
                (void)here;
                const SignalState& g = state[d.gate];
                const Level good =
                    d.kind == DeviceKind::Nmos ? Level::Zero : Level::One;
                if (g.level == Level::X) {
                    // Unknown gate: channel may or may not conduct.
                    SignalState c = pass(state[other], good);
                    if (c.strength != Strength::Floating) c.level = Level::X;
                    r.add(c);
                    continue;
                }
                const bool on = d.kind == DeviceKind::Nmos
                                    ? g.level == Level::One
                                    : g.level == Level::Zero;
                if (!on) continue;
                r.add(pass(state[other], good));
            }
            if (r.conflict) conflicts.push_back(node.id);
            SignalState next = r.result();
            if (!(next == state[node.id])) {
                state[node.id] = next;
                changed = true;
            }
        }
        if (!changed) break;
    }
    // Re-scan once for conflicts so they are reported from the fixed point.
    SettleResult res;
    res.states = std::move(state);
    res.conflict_nodes = std::move(conflicts);
    return res;
}

std::optional<bool> logical_readout(const SignalState& s, int max_drops) {
    if (s.level == Level::X || s.strength == Strength::Floating)
        return std::nullopt;
    if (s.drops > max_drops) return std::nullopt;
    return s.level == Level::One;
}

SwitchNetwork build_two_t_and() {
    SwitchNetwork net;
    int a = net.add_node("a", NodeRole::Input);
    int b = net.add_node("b", NodeRole::Input);
    int out = net.add_node("out", NodeRole::Output);
    int gnd = net.add_node("tied0", NodeRole::Tied0);
    net.add_device(DeviceKind::Nmos, a, b, out);
    net.add_device(DeviceKind::Pmos, a, gnd, out);
    return net;
}

SwitchNetwork build_two_t_or() {
    SwitchNetwork net;
    int a = net.add_node("a", NodeRole::Input);
    int b = net.add_node("b", NodeRole::Input);
    int out = net.add_node("out", NodeRole::Output);
    int vdd = net.add_node("tied1", NodeRole::Tied1);
    net.add_device(DeviceKind::Pmos, a, b, out);
    net.add_device(DeviceKind::Nmos, a, vdd, out);
    return net;
}

std::vector<int> cascade_analysis(TwoTKind kind, int depth) {
    if (depth < 1) throw SwitchError("cascade depth must be >= 1");
    SwitchNetwork net;
    std::map<int, bool> worst;
    const bool one = kind == TwoTKind::And;

    int b = net.add_node("b", NodeRole::Input);
    worst[b] = one;
    int tied = net.add_node(one ? "tied0" : "tied1",
                            one ? NodeRole::Tied0 : NodeRole::Tied1);
    int prev = b;
    std::vector<int> stage_out;
    for (int i = 0; i < depth; ++i) {
        int a = net.add_node("a" + std::to_string(i), NodeRole::Input);
        worst[a] = one;
        int out = net.add_node("out" + std::to_string(i), NodeRole::Output);
        if (kind == TwoTKind::And) {
            net.add_device(DeviceKind::Nmos, a, prev, out);
            net.add_device(DeviceKind::Pmos, a, tied, out);
        } else {
            net.add_device(DeviceKind::Pmos, a, prev, out);
            net.add_device(DeviceKind::Nmos, a, tied, out);
        }
        stage_out.push_back(out);
        prev = out;
    }

    SettleResult res = settle(net, worst);
    std::vector<int> profile;
    profile.reserve(stage_out.size());
    for (int id : stage_out) profile.push_back(res.states[id].drops);
    return profile;
}

}  // namespace bcdlab::switchlevel

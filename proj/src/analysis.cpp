#include "bcdlab/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <random>
#include <thread>

namespace bcdlab::analysis {

CostModel CostModel::defaults() {
    CostModel m{};
    m.counts[kind_index(GateKind::Not)] = 2;
    m.counts[kind_index(GateKind::And2)] = 2;
    m.counts[kind_index(GateKind::And3)] = 4;
    m.counts[kind_index(GateKind::And4)] = 6;
    m.counts[kind_index(GateKind::Or2)] = 2;
    m.counts[kind_index(GateKind::Or3)] = 4;
    m.counts[kind_index(GateKind::Or4)] = 6;
    m.counts[kind_index(GateKind::Nand2)] = 4;
    m.counts[kind_index(GateKind::Nand3)] = 6;
    m.counts[kind_index(GateKind::Nand4)] = 8;
    m.counts[kind_index(GateKind::Xor2)] = 4;
    m.counts[kind_index(GateKind::Fa10T)] = 10;
    m.counts[kind_index(GateKind::FaMux12)] = 12;
    return m;
}

void CostModel::check() const {
    for (int c : counts)
        if (c <= 0) throw AnalysisError("cost model entries must be positive");
    auto cascade = [&](GateKind k, int n) {
        if (of(k) != 2 * (n - 1))
            throw AnalysisError("AND/OR cost violates the cascade rule 2*(n-1)");
    };
    cascade(GateKind::And2, 2);
    cascade(GateKind::And3, 3);
    cascade(GateKind::And4, 4);
    cascade(GateKind::Or2, 2);
    cascade(GateKind::Or3, 3);
    cascade(GateKind::Or4, 4);
}

namespace {

// "d0_t_nfa1" -> "nfa": macro-cell instances group by the trailing token with
// its instance number stripped.
std::string cell_class(const std::string& cell) {
    auto pos = cell.rfind('_');
    std::string tok = pos == std::string::npos ? cell : cell.substr(pos + 1);
    while (!tok.empty() && std::isdigit(static_cast<unsigned char>(tok.back())))
        tok.pop_back();
    return tok;
}

}  // namespace

CostReport transistor_cost(const Netlist& nl, const CostModel& model) {
    CostReport report;
    struct CellAgg {
        std::vector<std::string> instances;
        int subtotal = 0;
    };
    std::vector<std::string> cell_order;
    std::map<std::string, CellAgg> cells;
    std::array<int, kNumGateKinds> loose_counts{};

    for (const Gate& g : nl.gates()) {
        const int cost = model.of(g.kind);
        ++report.kind_counts[kind_index(g.kind)];
        report.total += cost;
        if (g.cell.empty()) {
            ++loose_counts[kind_index(g.kind)];
            continue;
        }
        const std::string cls = cell_class(g.cell);
        auto [it, inserted] = cells.try_emplace(cls);
        if (inserted) cell_order.push_back(cls);
        auto& agg = it->second;
        if (std::find(agg.instances.begin(), agg.instances.end(), g.cell) ==
            agg.instances.end())
            agg.instances.push_back(g.cell);
        agg.subtotal += cost;
    }

    for (const auto& cls : cell_order) {
        const auto& agg = cells.at(cls);
        const int count = static_cast<int>(agg.instances.size());
        report.rows.push_back(
            CostRow{cls, count, agg.subtotal / count, agg.subtotal});
    }
    for (int k = 0; k < kNumGateKinds; ++k) {
        if (loose_counts[k] == 0) continue;
        const GateKind kind = static_cast<GateKind>(k);
        const int each = model.of(kind);
        report.rows.push_back(CostRow{std::string(kind_name(kind)),
                                      loose_counts[k], each,
                                      loose_counts[k] * each});
    }
    return report;
}

DelayModel DelayModel::defaults() {
    DelayModel m{};
    m.delays.fill(1);
    m.delays[kind_index(GateKind::Fa10T)] = 2;
    m.delays[kind_index(GateKind::FaMux12)] = 2;
    return m;
}

void DelayModel::check() const {
    for (int d : delays)
        if (d <= 0) throw AnalysisError("delays must be positive integers");
}

namespace {

struct ArrivalMap {
    std::vector<int> arrival;       // per net, longest path
    std::vector<std::int64_t> pred;  // gate id feeding the arrival, -1 = input
    int max_over_nets = 0;
};

// Earliest and latest possible change times per net: a net can only toggle
// inside [earliest, latest]; primary inputs switch exactly at 0 and constant
// nets never switch (empty window).
struct ChangeWindows {
    std::vector<int> earliest, latest;
};

constexpr int kNever = 1 << 29;

ChangeWindows compute_windows(const Netlist& nl, const DelayModel& model) {
    ChangeWindows w;
    w.earliest.assign(nl.net_count(), kNever);
    w.latest.assign(nl.net_count(), -kNever);
    for (NetId in : nl.inputs()) {
        w.earliest[in] = 0;
        w.latest[in] = 0;
    }
    for (GateId gid : nl.topo_order()) {
        const Gate& g = nl.gate(gid);
        int lo = kNever, hi = -kNever;
        for (NetId in : g.inputs) {
            lo = std::min(lo, w.earliest[in]);
            hi = std::max(hi, w.latest[in]);
        }
        const int d = model.of(g.kind);
        for (NetId out : g.outputs) {
            w.earliest[out] = lo >= kNever ? kNever : lo + d;
            w.latest[out] = hi <= -kNever ? -kNever : hi + d;
        }
    }
    return w;
}

ArrivalMap compute_arrivals(const Netlist& nl, const DelayModel& model) {
    ArrivalMap m;
    m.arrival.assign(nl.net_count(), 0);
    m.pred.assign(nl.net_count(), -1);
    for (GateId gid : nl.topo_order()) {
        const Gate& g = nl.gate(gid);
        int t = 0;
        for (NetId in : g.inputs) t = std::max(t, m.arrival[in]);
        t += model.of(g.kind);
        for (NetId out : g.outputs) {
            m.arrival[out] = t;
            m.pred[out] = gid;
        }
        m.max_over_nets = std::max(m.max_over_nets, t);
    }
    return m;
}

}  // namespace

DelayReport delay_topological(const Netlist& nl, const DelayModel& model) {
    model.check();
    ArrivalMap arrivals = compute_arrivals(nl, model);
    DelayReport report;
    report.output_arrival.reserve(nl.outputs().size());
    for (std::size_t i = 0; i < nl.outputs().size(); ++i) {
        const int t = arrivals.arrival[nl.outputs()[i]];
        report.output_arrival.push_back(t);
        if (t > report.max_arrival) {
            report.max_arrival = t;
            report.worst_output = static_cast<int>(i);
        }
    }
    // Backtrack the worst output, taking the latest input at each gate and
    // breaking ties toward the smallest net id.
    NetId net = nl.outputs()[report.worst_output];
    while (arrivals.pred[net] >= 0) {
        const GateId gid = static_cast<GateId>(arrivals.pred[net]);
        report.critical_path.push_back(gid);
        const Gate& g = nl.gate(gid);
        NetId next = g.inputs[0];
        for (NetId in : g.inputs)
            if (arrivals.arrival[in] > arrivals.arrival[next] ||
                (arrivals.arrival[in] == arrivals.arrival[next] && in < next))
                next = in;
        net = next;
    }
    std::reverse(report.critical_path.begin(), report.critical_path.end());
    return report;
}

namespace {

// Word-parallel transport-delay event simulation: 64 independent transitions
// per run. State at time t for a gate with delay d is a pure function of the
// state at t-d, so two history buffers cover the d in {1, 2} delay model.
class EventEngine {
public:
    EventEngine(const Netlist& nl, const DelayModel& model)
        : nl_(nl), max_steps_(compute_arrivals(nl, model).max_over_nets + 4) {
        // Flatten the gate list into contiguous ops so the hot loop touches
        // no per-gate heap vectors. Every gate reads only previous-step
        // buffers, so evaluation order within a step is free: bucket by kind
        // (no indirect dispatch per gate) and by step, evaluating each gate
        // only inside its structural change window. The +2 slack keeps the
        // three rotating buffers coherent after the last possible change.
        const ChangeWindows w = compute_windows(nl, model);
        step_buckets_.resize(max_steps_ + 1);
        for (GateId gid : nl.topo_order()) {
            const Gate& g = nl.gate(gid);
            if (model.of(g.kind) > 2)
                throw AnalysisError(
                    "functional delay supports gate delays of 1 or 2 only");
            Op op{};
            op.nin = static_cast<std::uint8_t>(g.inputs.size());
            op.delay2 = model.of(g.kind) == 2;
            for (std::size_t i = 0; i < g.inputs.size(); ++i)
                op.in[i] = g.inputs[i];
            op.out0 = g.outputs[0];
            op.out1 = g.outputs.size() > 1 ? g.outputs[1] : g.outputs[0];
            const int lo = w.earliest[g.outputs[0]];
            if (lo >= kNever) continue;  // constant-fed, can never change
            const int hi =
                std::min(w.latest[g.outputs[0]] + 2, max_steps_);
            for (int t = std::max(lo, 1); t <= hi; ++t)
                step_buckets_[t][kind_index(g.kind)].push_back(op);
        }
        const auto n = nl.net_count();
        s1_.resize(n);
        s2_.resize(n);
        cur_.resize(n);
    }

    // init: settled per-net words for the first vectors; v_inputs: one word
    // per primary input holding the second vectors. Returns per-lane time of
    // the last primary-output change (0 = no change).
    void run(const std::vector<std::uint64_t>& init,
             std::span<const std::uint64_t> v_inputs,
             std::array<int, 64>& last_change) {
        const auto inputs = nl_.inputs();
        s2_ = init;  // t = -1: inputs still at their first vectors
        s1_ = init;
        for (std::size_t i = 0; i < inputs.size(); ++i)
            s1_[inputs[i]] = v_inputs[i];  // t = 0: inputs switched
        cur_ = s1_;
        last_change.fill(0);

        std::uint64_t prev_diff = ~0ull;  // t=0 input edges count as activity
        for (int t = 1; t <= max_steps_; ++t) {
            // The buffer rotated in for step 2 still holds the first vectors
            // on the input nets; from step 3 on every buffer is post-switch.
            if (t <= 2)
                for (std::size_t i = 0; i < inputs.size(); ++i)
                    cur_[inputs[i]] = v_inputs[i];
            const std::uint64_t* ps1 = s1_.data();
            const std::uint64_t* ps2 = s2_.data();
            std::uint64_t* pc = cur_.data();
            std::uint64_t diff = 0;
            for (int k = 0; k < kNumGateKinds; ++k) {
                const auto& bucket = step_buckets_[t][k];
                if (bucket.empty()) continue;
                const std::uint64_t* from = bucket.front().delay2 ? ps2 : ps1;
                switch (static_cast<GateKind>(k)) {
                case GateKind::Not:
                    for (const Op& op : bucket)
                        diff |= store(pc, ps1, op.out0, ~from[op.in[0]]);
                    break;
                case GateKind::And2:
                    for (const Op& op : bucket)
                        diff |= store(pc, ps1, op.out0,
                                      from[op.in[0]] & from[op.in[1]]);
                    break;
                case GateKind::And3:
                    for (const Op& op : bucket)
                        diff |= store(pc, ps1, op.out0,
                                      from[op.in[0]] & from[op.in[1]] &
                                          from[op.in[2]]);
                    break;
                case GateKind::And4:
                    for (const Op& op : bucket)
                        diff |= store(pc, ps1, op.out0,
                                      from[op.in[0]] & from[op.in[1]] &
                                          from[op.in[2]] & from[op.in[3]]);
                    break;
                case GateKind::Or2:
                    for (const Op& op : bucket)
                        diff |= store(pc, ps1, op.out0,
                                      from[op.in[0]] | from[op.in[1]]);
                    break;
                case GateKind::Or3:
                    for (const Op& op : bucket)
                        diff |= store(pc, ps1, op.out0,
                                      from[op.in[0]] | from[op.in[1]] |
                                          from[op.in[2]]);
                    break;
                case GateKind::Or4:
                    for (const Op& op : bucket)
                        diff |= store(pc, ps1, op.out0,
                                      from[op.in[0]] | from[op.in[1]] |
                                          from[op.in[2]] | from[op.in[3]]);
                    break;
                case GateKind::Nand2:
                    for (const Op& op : bucket)
                        diff |= store(pc, ps1, op.out0,
                                      ~(from[op.in[0]] & from[op.in[1]]));
                    break;
                case GateKind::Nand3:
                    for (const Op& op : bucket)
                        diff |= store(pc, ps1, op.out0,
                                      ~(from[op.in[0]] & from[op.in[1]] &
                                        from[op.in[2]]));
                    break;
                case GateKind::Nand4:
                    for (const Op& op : bucket)
                        diff |= store(pc, ps1, op.out0,
                                      ~(from[op.in[0]] & from[op.in[1]] &
                                        from[op.in[2]] & from[op.in[3]]));
                    break;
                case GateKind::Xor2:
                    for (const Op& op : bucket)
                        diff |= store(pc, ps1, op.out0,
                                      from[op.in[0]] ^ from[op.in[1]]);
                    break;
                case GateKind::Fa10T:
                case GateKind::FaMux12:
                    for (const Op& op : bucket) {
                        const std::uint64_t a = from[op.in[0]];
                        const std::uint64_t b = from[op.in[1]];
                        const std::uint64_t c = from[op.in[2]];
                        diff |= store(pc, ps1, op.out0, a ^ b ^ c);
                        diff |= store(pc, ps1, op.out1,
                                      (a & b) | (c & (a ^ b)));
                    }
                    break;
                }
            }
            std::uint64_t out_diff = 0;
            for (NetId out : nl_.outputs()) out_diff |= pc[out] ^ ps1[out];
            while (out_diff) {
                last_change[std::countr_zero(out_diff)] = t;
                out_diff &= out_diff - 1;
            }
            if (diff == 0 && prev_diff == 0) return;
            prev_diff = diff;
            std::swap(s2_, s1_);
            std::swap(s1_, cur_);
        }
        throw AnalysisError("event simulation failed to settle within bound");
    }

private:
    struct Op {
        std::uint8_t nin;
        bool delay2;
        NetId in[4];
        NetId out0, out1;
    };

    static std::uint64_t store(std::uint64_t* cur, const std::uint64_t* prev,
                               NetId out, std::uint64_t value) {
        cur[out] = value;
        return value ^ prev[out];
    }

    const Netlist& nl_;
    int max_steps_;
    std::vector<std::array<std::vector<Op>, kNumGateKinds>> step_buckets_;
    std::vector<std::uint64_t> s1_, s2_, cur_;
};

struct WorstPair {
    int settle = -1;
    std::uint64_t pair_index = 0;
    std::uint64_t u_index = 0, v_index = 0;

    void offer(int time, std::uint64_t pair, std::uint64_t u, std::uint64_t v) {
        if (time > settle || (time == settle && pair < pair_index)) {
            settle = time;
            pair_index = pair;
            u_index = u;
            v_index = v;
        }
    }
    void merge(const WorstPair& o) {
        if (o.settle >= 0) offer(o.settle, o.pair_index, o.u_index, o.v_index);
    }
};

}  // namespace

FunctionalDelayReport delay_functional(const Netlist& nl, const DelayModel& model,
                                       const PairStimulus& stim, int workers) {
    model.check();
    const verify::InputSpace& space = stim.space;
    if (space.width_bits != static_cast<int>(nl.inputs().size()))
        throw AnalysisError("stimulus space does not match netlist inputs");
    const std::uint64_t m = space.size();
    bool exhaustive = stim.mode == PairStimulus::Mode::Exhaustive;
    if (stim.mode == PairStimulus::Mode::Auto)
        exhaustive = space.width_bits <= stim.exhaustive_input_bound;

    const std::size_t width = space.width_bits;
    workers = std::max(1, workers);

    auto pack_vector = [&](std::uint64_t index, int lane,
                           std::vector<std::uint64_t>& words,
                           std::vector<std::uint8_t>& bits) {
        space.decode(index, bits);
        for (std::size_t i = 0; i < width; ++i)
            if (bits[i]) words[i] |= 1ull << lane;
    };

    std::vector<WorstPair> results(workers);

    if (exhaustive) {
        // Decode and lane-pack the whole space once; the packed blocks are
        // shared read-only by every worker.
        const std::uint64_t nblocks = (m + 63) / 64;
        std::vector<std::uint64_t> packed(nblocks * width, 0);
        {
            std::vector<std::uint8_t> bits(width);
            for (std::uint64_t v = 0; v < m; ++v) {
                space.decode(v, bits);
                std::uint64_t* block = packed.data() + (v / 64) * width;
                for (std::size_t i = 0; i < width; ++i)
                    if (bits[i]) block[i] |= 1ull << (v % 64);
            }
        }
        // Partition by the first vector of the pair; each worker re-settles
        // its own u states so results do not depend on the partitioning.
        auto run_range = [&](std::uint64_t ubegin, std::uint64_t uend,
                             WorstPair& best) {
            EventEngine engine(nl, model);
            EvalWords settled;
            std::vector<std::uint8_t> bits(width);
            std::vector<std::uint64_t> u_words(width), v_words(width);
            std::array<int, 64> last{};
            for (std::uint64_t ui = ubegin; ui < uend; ++ui) {
                space.decode(ui, bits);
                for (std::size_t i = 0; i < width; ++i)
                    u_words[i] = bits[i] ? ~0ull : 0ull;
                evaluate_words(nl, u_words, settled);
                for (std::uint64_t vb = 0; vb < m; vb += 64) {
                    const int lanes = static_cast<int>(std::min<std::uint64_t>(64, m - vb));
                    const std::uint64_t* block = packed.data() + (vb / 64) * width;
                    if (lanes == 64) {
                        std::copy(block, block + width, v_words.begin());
                    } else {
                        for (std::size_t i = 0; i < width; ++i)
                            v_words[i] = block[i] |
                                         (settled.values[nl.inputs()[i]] &
                                          (~0ull << lanes));
                    }
                    engine.run(settled.values, v_words, last);
                    for (int l = 0; l < lanes; ++l)
                        best.offer(last[l], ui * m + vb + l, ui, vb + l);
                }
            }
        };
        if (workers == 1) {
            run_range(0, m, results[0]);
        } else {
            std::vector<std::thread> threads;
            const std::uint64_t chunk = (m + workers - 1) / workers;
            for (int w = 0; w < workers; ++w) {
                const std::uint64_t b = std::min<std::uint64_t>(w * chunk, m);
                const std::uint64_t e = std::min<std::uint64_t>(b + chunk, m);
                threads.emplace_back([&, w, b, e] { run_range(b, e, results[w]); });
            }
            for (auto& t : threads) t.join();
        }
    } else {
        // Sample index k -> pair; the mapping is fixed by the seed alone
        // (splitmix64 steps, cheap enough to key per index).
        auto mix = [](std::uint64_t z) {
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            return z ^ (z >> 31);
        };
        auto pair_for = [&](std::uint64_t k) {
            const std::uint64_t base =
                stim.seed ^ (k * 0x9e3779b97f4a7c15ull + 1);
            const std::uint64_t u = mix(base) % m;
            const std::uint64_t v = mix(base + 0x9e3779b97f4a7c15ull) % m;
            return std::pair<std::uint64_t, std::uint64_t>(u, v);
        };
        auto run_range = [&](std::uint64_t kbegin, std::uint64_t kend,
                             WorstPair& best) {
            EventEngine engine(nl, model);
            EvalWords settled;
            std::vector<std::uint8_t> bits(width);
            std::vector<std::uint64_t> u_words(width), v_words(width);
            std::array<int, 64> last{};
            std::vector<std::pair<std::uint64_t, std::uint64_t>> block(64);
            for (std::uint64_t kb = kbegin; kb < kend; kb += 64) {
                const int lanes = static_cast<int>(std::min<std::uint64_t>(64, kend - kb));
                std::fill(u_words.begin(), u_words.end(), 0);
                std::fill(v_words.begin(), v_words.end(), 0);
                for (int l = 0; l < lanes; ++l) {
                    block[l] = pair_for(kb + l);
                    pack_vector(block[l].first, l, u_words, bits);
                    pack_vector(block[l].second, l, v_words, bits);
                }
                evaluate_words(nl, u_words, settled);
                for (std::size_t i = 0; i < width; ++i)
                    if (lanes < 64)
                        v_words[i] |= u_words[i] & (~0ull << lanes);
                engine.run(settled.values, v_words, last);
                for (int l = 0; l < lanes; ++l)
                    best.offer(last[l], kb + l, block[l].first, block[l].second);
            }
        };
        const std::uint64_t n = stim.samples;
        if (workers == 1) {
            run_range(0, n, results[0]);
        } else {
            std::vector<std::thread> threads;
            // 64-aligned chunks keep lane packing identical per sample.
            std::uint64_t chunk = ((n / workers + 63) / 64) * 64;
            if (chunk == 0) chunk = 64;
            for (int w = 0; w < workers; ++w) {
                const std::uint64_t b = std::min<std::uint64_t>(w * chunk, n);
                const std::uint64_t e = std::min<std::uint64_t>(b + chunk, n);
                threads.emplace_back([&, w, b, e] { run_range(b, e, results[w]); });
            }
            for (auto& t : threads) t.join();
        }
    }

    WorstPair best;
    for (const auto& r : results) best.merge(r);

    FunctionalDelayReport report;
    report.exhaustive = exhaustive;
    report.pairs_run = exhaustive ? m * m : stim.samples;
    report.worst_settle = std::max(best.settle, 0);
    report.witness_from.resize(width);
    report.witness_to.resize(width);
    if (best.settle >= 0) {
        space.decode(best.u_index, report.witness_from);
        space.decode(best.v_index, report.witness_to);
    }
    return report;
}

ActivityReport estimate_activity(const Netlist& nl,
                                 const std::vector<std::vector<std::uint8_t>>& sequence) {
    if (sequence.size() < 2)
        throw AnalysisError("activity estimation needs a sequence of length >= 2");
    ActivityReport report;
    report.length = sequence.size();
    report.toggles.assign(nl.net_count(), 0);
    EvalWords scratch;
    std::vector<std::uint64_t> words(nl.inputs().size());
    std::vector<std::uint64_t> prev;
    for (std::size_t k = 0; k < sequence.size(); ++k) {
        const auto& vec = sequence[k];
        if (vec.size() != nl.inputs().size())
            throw AnalysisError("stimulus vector width mismatch");
        for (std::size_t i = 0; i < vec.size(); ++i)
            words[i] = vec[i] ? ~0ull : 0ull;
        evaluate_words(nl, words, scratch);
        if (k > 0)
            for (std::size_t n = 0; n < report.toggles.size(); ++n)
                report.toggles[n] += (scratch.values[n] ^ prev[n]) & 1;
        prev = scratch.values;
    }
    report.probability.resize(report.toggles.size());
    for (std::size_t n = 0; n < report.toggles.size(); ++n)
        report.probability[n] =
            static_cast<double>(report.toggles[n]) / (report.length - 1);
    return report;
}

std::vector<std::vector<std::uint8_t>> random_stimulus(const Netlist& nl,
                                                       std::uint64_t length,
                                                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::uint8_t>> seq(length);
    for (auto& vec : seq) {
        vec.resize(nl.inputs().size());
        for (auto& bit : vec) bit = rng() & 1;
    }
    return seq;
}

void PowerParams::check() const {
    if (unit_cap_f < 0 || vdd < 0 || vt < 0 || f_clk < 0 || i_sc < 0 ||
        i_leak < 0)
        throw AnalysisError("power parameters must be non-negative");
}

double estimate_power(const Netlist& nl, const ActivityReport& activity,
                      const PowerParams& params) {
    params.check();
    if (activity.probability.size() != nl.net_count())
        throw AnalysisError("missing activity: report does not cover the netlist");
    double dynamic = 0.0;
    std::uint64_t driven = 0;
    for (const Net& net : nl.nets()) {
        auto drv = nl.driver(net.id);
        if (!drv) continue;  // input and constant nets are charged upstream
        ++driven;
        const GateKind kind = nl.gate(*drv).kind;
        double cap = CostModel::defaults().of(kind) * params.unit_cap_f;
        if (auto it = params.load_override_f.find(net.name);
            it != params.load_override_f.end())
            cap = it->second;
        const bool pass_gate_output =
            kind == GateKind::And2 || kind == GateKind::And3 ||
            kind == GateKind::And4 || kind == GateKind::Or2 ||
            kind == GateKind::Or3 || kind == GateKind::Or4;
        double swing = params.vdd;
        if (params.reduced_swing_pass_gates && pass_gate_output)
            swing = std::max(0.0, params.vdd - params.vt);
        if (auto it = params.swing_override_v.find(net.name);
            it != params.swing_override_v.end())
            swing = it->second;
        double term = cap * swing * activity.probability[net.id];
        if (params.vdd_factor) term *= params.vdd;
        dynamic += term;
    }
    return dynamic * params.f_clk + params.i_sc * params.vdd +
           static_cast<double>(driven) * params.i_leak * params.vdd;
}

}  // namespace bcdlab::analysis

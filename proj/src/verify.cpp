#include "bcdlab/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

namespace bcdlab::verify {

InputSpace InputSpace::all_binary(int width_bits) {
    if (width_bits < 0 || width_bits > 63)
        throw VerifyError("all-binary space limited to 63 input bits");
    return InputSpace{Kind::AllBinary, width_bits, 0};
}

InputSpace InputSpace::bcd_valid(int digits) {
    if (digits < 1) throw VerifyError("bcd-valid space needs >= 1 digit");
    return InputSpace{Kind::BcdValid, 8 * digits + 1, digits};
}

InputSpace InputSpace::for_netlist(const Netlist& nl, Kind kind) {
    const int w = static_cast<int>(nl.inputs().size());
    if (kind == Kind::AllBinary) return all_binary(w);
    if ((w - 1) % 8 != 0)
        throw VerifyError("netlist input layout is not BCD-shaped");
    return bcd_valid((w - 1) / 8);
}

std::uint64_t InputSpace::size() const {
    if (kind == Kind::AllBinary) return 1ull << width_bits;
    std::uint64_t n = 2;  // carry-in
    for (int d = 0; d < 2 * digits; ++d) n *= 10;
    return n;
}

void InputSpace::decode(std::uint64_t index, std::span<std::uint8_t> bits) const {
    if (bits.size() != static_cast<std::size_t>(width_bits))
        throw VerifyError("decode buffer size mismatch");
    if (kind == Kind::AllBinary) {
        for (int i = 0; i < width_bits; ++i) bits[i] = (index >> i) & 1;
        return;
    }
    const std::uint8_t cin = index & 1;
    std::uint64_t rest = index >> 1;
    for (int operand = 0; operand < 2; ++operand) {
        for (int d = 0; d < digits; ++d) {
            const int v = static_cast<int>(rest % 10);
            rest /= 10;
            for (int i = 0; i < 4; ++i)
                bits[operand * 4 * digits + 4 * d + i] = (v >> i) & 1;
        }
    }
    bits[8 * digits] = cin;
}

BinaryAddResult oracle_binary_add(std::uint64_t a, std::uint64_t b, int cin,
                                  int width) {
    if (width < 1 || width > 63) throw VerifyError("width out of range");
    const std::uint64_t lim = 1ull << width;
    if (a >= lim || b >= lim) throw VerifyError("operand out of range");
    const std::uint64_t t = a + b + static_cast<std::uint64_t>(cin);
    return BinaryAddResult{t & (lim - 1), t >= lim ? 1 : 0};
}

BcdAddResult oracle_bcd_add(const std::vector<int>& a, const std::vector<int>& b,
                            int cin) {
    if (a.size() != b.size()) throw VerifyError("digit lists differ in length");
    BcdAddResult r;
    int carry = cin;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || a[i] > 9 || b[i] < 0 || b[i] > 9)
            throw VerifyError("invalid BCD digit");
        const int t = a[i] + b[i] + carry;
        r.digits.push_back(t % 10);
        carry = t / 10;
    }
    r.carry = carry;
    return r;
}

Oracle binary_add_oracle(int width) {
    return [width](std::span<const std::uint8_t> in) {
        std::uint64_t a = 0, b = 0;
        for (int i = 0; i < width; ++i) {
            a |= static_cast<std::uint64_t>(in[i]) << i;
            b |= static_cast<std::uint64_t>(in[width + i]) << i;
        }
        const int cin = in[2 * width];
        BinaryAddResult r = oracle_binary_add(a, b, cin, width);
        std::vector<std::uint8_t> out(width + 1);
        for (int i = 0; i < width; ++i) out[i] = (r.sum >> i) & 1;
        out[width] = static_cast<std::uint8_t>(r.cout);
        return out;
    };
}

Oracle binary_add_gp_oracle(int width) {
    Oracle base = binary_add_oracle(width);
    return [base, width](std::span<const std::uint8_t> in) {
        std::vector<std::uint8_t> out = base(in);
        std::uint8_t gp = 1;
        for (int i = 0; i < width; ++i) gp &= in[i] ^ in[width + i];
        out.push_back(gp);
        return out;
    };
}

Oracle bcd_add_oracle(int digits) {
    return [digits](std::span<const std::uint8_t> in) {
        std::vector<int> a(digits), b(digits);
        for (int d = 0; d < digits; ++d)
            for (int i = 0; i < 4; ++i) {
                a[d] |= in[4 * d + i] << i;
                b[d] |= in[4 * digits + 4 * d + i] << i;
            }
        BcdAddResult r = oracle_bcd_add(a, b, in[8 * digits]);
        std::vector<std::uint8_t> out(4 * digits + 1);
        for (int d = 0; d < digits; ++d)
            for (int i = 0; i < 4; ++i) out[4 * d + i] = (r.digits[d] >> i) & 1;
        out[4 * digits] = static_cast<std::uint8_t>(r.carry);
        return out;
    };
}

Oracle pga_oracle() {
    return [](std::span<const std::uint8_t> in) {
        const std::uint8_t a = in[0], b = in[1], cin = in[2];
        const std::uint8_t p = a ^ b;
        return std::vector<std::uint8_t>{static_cast<std::uint8_t>(p ^ cin),
                                         static_cast<std::uint8_t>(a & b), p};
    };
}

namespace {

struct Partial {
    std::uint64_t vectors = 0;
    std::uint64_t passed = 0;
    std::vector<Counterexample> counterexamples;
};

void merge_into(CheckReport& report, Partial&& part) {
    report.vectors += part.vectors;
    report.passed += part.passed;
    for (auto& ce : part.counterexamples)
        report.counterexamples.push_back(std::move(ce));
}

void finish(CheckReport& report) {
    std::sort(report.counterexamples.begin(), report.counterexamples.end(),
              [](const auto& x, const auto& y) { return x.index < y.index; });
    if (report.counterexamples.size() > CheckReport::kMaxCounterexamples)
        report.counterexamples.resize(CheckReport::kMaxCounterexamples);
}

// Runs `fn(begin, end, partial)` over a partition of [0, total) and merges
// the pieces in range order, so the result is worker-count independent.
template <typename Fn>
CheckReport run_partitioned(std::uint64_t total, int workers, Fn fn) {
    CheckReport report;
    workers = std::max(1, workers);
    if (workers == 1 || total < 1024) {
        Partial p;
        fn(0, total, p);
        merge_into(report, std::move(p));
        finish(report);
        return report;
    }
    std::vector<Partial> parts(workers);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t begin = std::min<std::uint64_t>(w * chunk, total);
        const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total);
        threads.emplace_back(
            [&, w, begin, end] { fn(begin, end, parts[w]); });
    }
    for (auto& t : threads) t.join();
    for (auto& p : parts) merge_into(report, std::move(p));
    finish(report);
    return report;
}

}  // namespace

CheckReport exhaustive_check(const Netlist& nl, const Oracle& oracle,
                             const InputSpace& space, int workers) {
    if (space.width_bits != static_cast<int>(nl.inputs().size()))
        throw VerifyError("space width does not match netlist inputs");
    if (space.size() > (1ull << 24))
        throw VerifyError("space too large for exhaustive mode");

    CheckReport report = run_partitioned(
        space.size(), workers,
        [&](std::uint64_t begin, std::uint64_t end, Partial& part) {
            std::vector<std::uint8_t> bits(space.width_bits);
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                space.decode(idx, bits);
                auto actual = evaluate(nl, bits);
                auto expected = oracle(bits);
                ++part.vectors;
                if (actual == expected) {
                    ++part.passed;
                } else if (part.counterexamples.size() <
                           CheckReport::kMaxCounterexamples) {
                    part.counterexamples.push_back(
                        Counterexample{idx, bits, expected, actual});
                }
            }
        });
    report.circuit = nl.name();
    return report;
}

CheckReport equiv_check(const Netlist& a, const Netlist& b,
                        const EquivOptions& opts) {
    if (a.inputs().size() != b.inputs().size())
        throw VerifyError("input shape mismatch");
    std::vector<std::pair<int, int>> outs = opts.outputs;
    if (outs.empty()) {
        if (a.outputs().size() != b.outputs().size())
            throw VerifyError("output shape mismatch");
        for (int i = 0; i < static_cast<int>(a.outputs().size()); ++i)
            outs.emplace_back(i, i);
    }
    const int width = static_cast<int>(a.inputs().size());
    const bool exhaustive = width <= opts.exhaustive_input_bound;
    const std::uint64_t total =
        exhaustive ? (1ull << width) : opts.samples;

    CheckReport report = run_partitioned(
        total, opts.workers,
        [&](std::uint64_t begin, std::uint64_t end, Partial& part) {
            std::vector<std::uint8_t> bits(width);
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                if (exhaustive) {
                    for (int i = 0; i < width; ++i) bits[i] = (idx >> i) & 1;
                } else {
                    // Index-keyed sampling keeps partitioning deterministic.
                    std::mt19937_64 rng(opts.seed + idx);
                    for (int i = 0; i < width; ++i) bits[i] = rng() & 1;
                }
                auto ra = evaluate(a, bits);
                auto rb = evaluate(b, bits);
                bool same = true;
                for (auto [ia, ib] : outs)
                    if (ra[ia] != rb[ib]) same = false;
                ++part.vectors;
                if (same) {
                    ++part.passed;
                } else if (part.counterexamples.size() <
                           CheckReport::kMaxCounterexamples) {
                    std::vector<std::uint8_t> ea, eb;
                    for (auto [ia, ib] : outs) {
                        ea.push_back(ra[ia]);
                        eb.push_back(rb[ib]);
                    }
                    part.counterexamples.push_back(
                        Counterexample{idx, bits, ea, eb});
                }
            }
        });
    report.circuit = a.name() + " vs " + b.name();
    report.sampled = !exhaustive;
    report.seed = opts.seed;
    return report;
}

std::string render(const CheckReport& report) {
    std::ostringstream os;
    os << report.circuit << ": " << report.passed << "/" << report.vectors
       << " pass";
    if (report.sampled) os << " (sampled, seed " << report.seed << ")";
    os << "\n";
    for (const auto& ce : report.counterexamples) {
        os << "  counterexample #" << ce.index << " inputs=";
        for (auto bit : ce.inputs) os << int(bit);
        os << " expected=";
        for (auto bit : ce.expected) os << int(bit);
        os << " actual=";
        for (auto bit : ce.actual) os << int(bit);
        os << "\n";
    }
    return os.str();
}

}  // namespace bcdlab::verify

#include "bcdlab/generators.hpp"

#include <array>

namespace bcdlab::generators {

namespace {

using Bits4 = std::array<NetId, 4>;

// Single-output gate helper: creates the output net and the gate.
NetId g1(Netlist& nl, GateKind kind, std::vector<NetId> ins, std::string name,
         std::string cell = {}) {
    NetId out = nl.add_net(std::move(name));
    nl.add_gate(kind, std::move(ins), {out}, std::move(cell));
    return out;
}

struct PgaOuts {
    NetId s, g, p;
};

PgaOuts build_pga_cell(Netlist& nl, const std::string& prefix, NetId a, NetId b,
                       NetId cin, const std::string& cell) {
    PgaOuts o;
    o.p = g1(nl, GateKind::Xor2, {a, b}, prefix + "p", cell);
    o.g = g1(nl, GateKind::And2, {a, b}, prefix + "g", cell);
    o.s = g1(nl, GateKind::Xor2, {o.p, cin}, prefix + "s", cell);
    return o;
}

struct AdderOuts {
    Bits4 s;
    NetId c4;
};

AdderOuts build_ripple4(Netlist& nl, const std::string& prefix, const Bits4& a,
                        const Bits4& b, NetId cin) {
    AdderOuts o;
    NetId c = cin;
    for (int i = 0; i < 4; ++i) {
        NetId sum = nl.add_net(prefix + "s" + std::to_string(i));
        NetId cout = nl.add_net(prefix + "c" + std::to_string(i + 1));
        nl.add_gate(GateKind::Fa10T, {a[i], b[i], c}, {sum, cout});
        o.s[i] = sum;
        c = cout;
    }
    o.c4 = c;
    return o;
}

AdderOuts build_ncla4(Netlist& nl, const std::string& prefix, const Bits4& a,
                      const Bits4& b, NetId c0) {
    AdderOuts o;
    std::array<NetId, 3> p, g;
    // Bits 0-2: PGA cells (the NFA rows of the bill of materials).
    NetId c1 = nl.add_net(prefix + "c1");
    NetId c2 = nl.add_net(prefix + "c2");
    std::array<NetId, 3> cin = {c0, c1, c2};
    for (int i = 0; i < 3; ++i) {
        PgaOuts cell = build_pga_cell(nl, prefix + "b" + std::to_string(i) + "_",
                                      a[i], b[i], cin[i],
                                      prefix + "nfa" + std::to_string(i));
        p[i] = cell.p;
        g[i] = cell.g;
        o.s[i] = cell.s;
    }
    // Lookahead carries from AND/OR product terms.
    nl.add_gate(GateKind::Or2,
                {g[0], g1(nl, GateKind::And2, {p[0], c0}, prefix + "t_p0c0")},
                {c1});
    nl.add_gate(GateKind::Or3,
                {g[1], g1(nl, GateKind::And2, {p[1], g[0]}, prefix + "t_p1g0"),
                 g1(nl, GateKind::And3, {p[1], p[0], c0}, prefix + "t_p1p0c0")},
                {c2});
    NetId c3 = g1(
        nl, GateKind::Or4,
        {g[2], g1(nl, GateKind::And2, {p[2], g[1]}, prefix + "t_p2g1"),
         g1(nl, GateKind::And3, {p[2], p[1], g[0]}, prefix + "t_p2p1g0"),
         g1(nl, GateKind::And4, {p[2], p[1], p[0], c0}, prefix + "t_p2p1p0c0")},
        prefix + "c3");
    // Bit 3: mux-based full adder macro instead of a fourth PGA.
    NetId s3 = nl.add_net(prefix + "s3");
    NetId c4 = nl.add_net(prefix + "c4");
    nl.add_gate(GateKind::FaMux12, {a[3], b[3], c3}, {s3, c4});
    o.s[3] = s3;
    o.c4 = c4;
    return o;
}

struct MclaOuts {
    Bits4 s;
    NetId c4;
    NetId gp;  // auxiliary group propagate
};

MclaOuts build_mcla4(Netlist& nl, const std::string& prefix, const Bits4& a,
                     const Bits4& b, NetId c0) {
    MclaOuts o;
    std::array<NetId, 4> p, gbar;
    std::array<NetId, 3> g;
    NetId c1 = nl.add_net(prefix + "c1");
    NetId c2 = nl.add_net(prefix + "c2");
    NetId c3 = nl.add_net(prefix + "c3");
    NetId c4 = nl.add_net(prefix + "c4");
    std::array<NetId, 4> cin = {c0, c1, c2, c3};
    for (int i = 0; i < 4; ++i) {
        const std::string bp = prefix + "b" + std::to_string(i) + "_";
        const std::string cell = prefix + "mpfa" + std::to_string(i);
        p[i] = g1(nl, GateKind::Xor2, {a[i], b[i]}, bp + "p", cell);
        o.s[i] = g1(nl, GateKind::Xor2, {p[i], cin[i]}, bp + "s", cell);
        gbar[i] = g1(nl, GateKind::Nand2, {a[i], b[i]}, bp + "gbar", cell);
    }
    for (int i = 0; i < 3; ++i)
        g[i] = g1(nl, GateKind::Not, {gbar[i]}, prefix + "g" + std::to_string(i));
    nl.add_gate(GateKind::Nand2,
                {gbar[0], g1(nl, GateKind::Nand2, {p[0], c0}, prefix + "n_p0c0")},
                {c1});
    nl.add_gate(
        GateKind::Nand3,
        {gbar[1], g1(nl, GateKind::Nand2, {p[1], g[0]}, prefix + "n_p1g0"),
         g1(nl, GateKind::Nand3, {p[1], p[0], c0}, prefix + "n_p1p0c0")},
        {c2});
    nl.add_gate(
        GateKind::Nand4,
        {gbar[2], g1(nl, GateKind::Nand2, {p[2], g[1]}, prefix + "n_p2g1"),
         g1(nl, GateKind::Nand3, {p[2], p[1], g[0]}, prefix + "n_p2p1g0"),
         g1(nl, GateKind::Nand4, {p[2], p[1], p[0], c0}, prefix + "n_p2p1p0c0")},
        {c3});
    nl.add_gate(
        GateKind::Nand4,
        {gbar[3], g1(nl, GateKind::Nand2, {p[3], g[2]}, prefix + "n_p3g2"),
         g1(nl, GateKind::Nand3, {p[3], p[2], g[1]}, prefix + "n_p3p2g1"),
         g1(nl, GateKind::Nand4, {p[3], p[2], p[1], c1}, prefix + "n_p3p2p1c1")},
        {c4});
    o.gp = g1(nl, GateKind::And4, {p[3], p[2], p[1], p[0]}, prefix + "gp");
    o.c4 = c4;
    return o;
}

// Carry-skip top adder: ripple chain plus block propagate bypass. The fast
// carry is OR(AND(P, cin), ripple carry); when P = 1 the ripple carry already
// equals cin, so the bypass only shortens the timing path.
AdderOuts build_skip_top(Netlist& nl, const std::string& prefix, const Bits4& a,
                         const Bits4& b, NetId cin) {
    AdderOuts ripple = build_ripple4(nl, prefix, a, b, cin);
    std::array<NetId, 4> p;
    for (int i = 0; i < 4; ++i)
        p[i] = g1(nl, GateKind::Xor2, {a[i], b[i]},
                  prefix + "p" + std::to_string(i));
    NetId blockp =
        g1(nl, GateKind::And4, {p[0], p[1], p[2], p[3]}, prefix + "bp");
    NetId skip = g1(nl, GateKind::And2, {blockp, cin}, prefix + "skip");
    AdderOuts o;
    o.s = ripple.s;
    o.c4 = g1(nl, GateKind::Or2, {skip, ripple.c4}, prefix + "c4fast");
    return o;
}

AdderOuts build_binary4(Netlist& nl, AdderStyle style, const std::string& prefix,
                        const Bits4& a, const Bits4& b, NetId cin) {
    switch (style) {
    case AdderStyle::Ripple: return build_ripple4(nl, prefix, a, b, cin);
    case AdderStyle::Ncla: return build_ncla4(nl, prefix, a, b, cin);
    case AdderStyle::CarrySkip: return build_skip_top(nl, prefix, a, b, cin);
    case AdderStyle::Mcla: break;
    }
    throw GeneratorError("unsupported style for BCD wrapping: mcla");
}

struct DigitOuts {
    Bits4 s;
    NetId k;
};

DigitOuts build_bcd_digit(Netlist& nl, AdderStyle style,
                          const std::string& prefix, const Bits4& a,
                          const Bits4& b, NetId cin) {
    if (style == AdderStyle::Mcla)
        throw GeneratorError(
            "unsupported style: mcla is a comparison baseline, not a BCD digit");
    AdderOuts top = build_binary4(nl, style, prefix + "t_", a, b, cin);
    // Sum > 9 detector: K = C4 + Z3*Z2 + Z3*Z1.
    NetId t1 = g1(nl, GateKind::And2, {top.s[3], top.s[2]}, prefix + "z3z2");
    NetId t2 = g1(nl, GateKind::And2, {top.s[3], top.s[1]}, prefix + "z3z1");
    NetId k = g1(nl, GateKind::Or3, {top.c4, t1, t2}, prefix + "k");
    // Excess-6 correction: add (0, K, K, 0) in a bottom adder; its carry out
    // is left unconnected. A carry-skip bottom would be dead logic (constant
    // carry-in, ignored carry-out), so the skip style corrects with the plain
    // ripple chain it is built from.
    Bits4 corr = {nl.constant(false), k, k, nl.constant(false)};
    AdderStyle bottom = style == AdderStyle::CarrySkip ? AdderStyle::Ripple : style;
    AdderOuts low =
        build_binary4(nl, bottom, prefix + "c_", top.s, corr, nl.constant(false));
    return DigitOuts{low.s, k};
}

Bits4 add_input_bits(Netlist& nl, char letter, int base) {
    Bits4 bits;
    for (int i = 0; i < 4; ++i)
        bits[i] = nl.add_input(std::string(1, letter) + std::to_string(base + i));
    return bits;
}

}  // namespace

std::string_view style_name(AdderStyle s) {
    switch (s) {
    case AdderStyle::Ripple: return "ripple";
    case AdderStyle::Ncla: return "ncla";
    case AdderStyle::Mcla: return "mcla";
    case AdderStyle::CarrySkip: return "carry-skip";
    }
    return "?";
}

std::optional<AdderStyle> style_from_name(std::string_view name) {
    if (name == "ripple") return AdderStyle::Ripple;
    if (name == "ncla") return AdderStyle::Ncla;
    if (name == "mcla") return AdderStyle::Mcla;
    if (name == "carry-skip" || name == "skip" || name == "cs")
        return AdderStyle::CarrySkip;
    return std::nullopt;
}

Netlist gen_pga() {
    Netlist nl("pga");
    NetId a = nl.add_input("a");
    NetId b = nl.add_input("b");
    NetId cin = nl.add_input("cin");
    PgaOuts o = build_pga_cell(nl, "", a, b, cin, "");
    nl.mark_output(o.s);
    nl.mark_output(o.g);
    nl.mark_output(o.p);
    nl.freeze();
    return nl;
}

namespace {

Netlist gen_binary4(AdderStyle style, const std::string& name) {
    Netlist nl(name);
    Bits4 a = add_input_bits(nl, 'a', 0);
    Bits4 b = add_input_bits(nl, 'b', 0);
    NetId cin = nl.add_input("cin");
    auto finish = [&](const Bits4& s, NetId c4) {
        // Canonical primary-output names regardless of internal naming.
        for (int i = 0; i < 4; ++i) {
            nl.rename_net(s[i], "s" + std::to_string(i));
            nl.mark_output(s[i]);
        }
        nl.rename_net(c4, "c4");
        nl.mark_output(c4);
    };
    if (style == AdderStyle::Mcla) {
        MclaOuts o = build_mcla4(nl, "", a, b, cin);
        finish(o.s, o.c4);
        nl.mark_output(o.gp);
    } else {
        AdderOuts o = build_binary4(nl, style, "", a, b, cin);
        finish(o.s, o.c4);
    }
    nl.freeze();
    return nl;
}

}  // namespace

Netlist gen_ncla4() { return gen_binary4(AdderStyle::Ncla, "ncla4"); }
Netlist gen_mcla4() { return gen_binary4(AdderStyle::Mcla, "mcla4"); }
Netlist gen_ripple4() { return gen_binary4(AdderStyle::Ripple, "ripple4"); }

Netlist gen_bcd_digit(AdderStyle style) {
    BcdChainSpec spec{1, style};
    return gen_bcd_chain(spec);
}

Netlist gen_bcd_chain(const BcdChainSpec& spec) {
    if (spec.digits < 1) throw GeneratorError("digit count must be >= 1");
    if (spec.style == AdderStyle::Mcla)
        throw GeneratorError(
            "unsupported style: mcla is a comparison baseline, not a BCD digit");
    std::string name = std::string("bcd-") +
                       (spec.style == AdderStyle::CarrySkip
                            ? "cs"
                            : std::string(style_name(spec.style)));
    Netlist nl(name, spec.digits);
    std::vector<Bits4> a(spec.digits), b(spec.digits);
    for (int d = 0; d < spec.digits; ++d) a[d] = add_input_bits(nl, 'a', 4 * d);
    for (int d = 0; d < spec.digits; ++d) b[d] = add_input_bits(nl, 'b', 4 * d);
    NetId carry = nl.add_input("cin");
    std::vector<DigitOuts> digits;
    for (int d = 0; d < spec.digits; ++d) {
        digits.push_back(build_bcd_digit(
            nl, spec.style, "d" + std::to_string(d) + "_", a[d], b[d], carry));
        carry = digits.back().k;
    }
    for (int d = 0; d < spec.digits; ++d)
        for (int i = 0; i < 4; ++i) {
            nl.rename_net(digits[d].s[i], "s" + std::to_string(4 * d + i));
            nl.mark_output(digits[d].s[i]);
        }
    nl.rename_net(carry, "k");
    nl.mark_output(carry);
    nl.freeze();
    return nl;
}

std::optional<Netlist> gen_by_name(std::string_view name, int digits) {
    if (name == "pga") return gen_pga();
    if (name == "ncla4") return gen_ncla4();
    if (name == "mcla4") return gen_mcla4();
    if (name == "ripple4") return gen_ripple4();
    if (name == "bcd-ripple")
        return gen_bcd_chain({digits, AdderStyle::Ripple});
    if (name == "bcd-ncla") return gen_bcd_chain({digits, AdderStyle::Ncla});
    if (name == "bcd-cs") return gen_bcd_chain({digits, AdderStyle::CarrySkip});
    return std::nullopt;
}

}  // namespace bcdlab::generators

#include "spinunitary/intertwine.hpp"

#include "spinunitary/errors.hpp"

#include <algorithm>
#include <array>

namespace spinunitary {

std::string format(const SignedEntry& e) {
    return format(e.value) + (e.sign > 0 ? "^+" : "^-");
}

std::string format(const SignedSeq& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += format(s[i]);
    }
    return out + ")";
}

Rational simple_scalar_case1(const Rational& pairing) {
    if (pairing == Rational(-2)) throw Pole("case one scalar at pairing -2");
    return (Rational(2) - pairing) / (Rational(2) + pairing);
}

Rational simple_scalar_case2(const Rational& pairing, bool dim4) {
    if (!dim4) return Rational(1);
    if (pairing == Rational(-3)) throw Pole("case two scalar at pairing -3");
    return (Rational(-3) + pairing) / (Rational(3) + pairing);
}

namespace {

HalfInt offset(bool opposite) { return HalfInt(opposite ? 3 : 2); }

bool ascending_gap_two(const SignedSeq& chain) {
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (chain[i].value - chain[i - 1].value != HalfInt(2)) return false;
        if (chain[i].sign != chain[0].sign) return false;
    }
    return true;
}

}  // namespace

Rational gl_move_scalar(const HalfIntVec& chain, HalfInt x, bool oppositeSign) {
    if (chain.empty()) throw ScriptError("gl_move_scalar needs a nonempty chain");
    Rational c(oppositeSign ? 3 : 2);
    Rational den = c + chain.back().to_rational() - x.to_rational();
    if (den == Rational(0)) throw Pole("block move at x = " + format(x));
    return (-c + chain.front().to_rational() - x.to_rational()) / den;
}

bool pass_left_ok(const SignedSeq& chain, const SignedEntry& xi) {
    if (chain.empty()) return true;
    HalfInt c = offset(chain.front().sign != xi.sign);
    return xi.value != chain.front().value - c && xi.value != chain.back().value + c;
}

bool sort_ok(const SignedSeq& prefix, const SignedSeq& chain) {
    if (chain.empty()) return true;
    return std::none_of(prefix.begin(), prefix.end(), [&](const SignedEntry& xi) {
        return xi.value == chain.back().value + offset(chain.back().sign != xi.sign);
    });
}

bool short_root_ok(HalfInt a) { return a != half(3) && a != half(-3); }

std::string to_string(MoveKind k) {
    switch (k) {
        case MoveKind::PassLeft: return "pass-left";
        case MoveKind::SortDescending: return "sort";
        case MoveKind::BarGL: return "bar-gl";
        case MoveKind::ShortRootFlip: return "short-root";
    }
    return "?";
}

namespace {

SignedEntry bar(const SignedEntry& e) { return {-e.value, -e.sign}; }

void check_range(const BlockMove& m, std::size_t size) {
    if (m.kind == MoveKind::ShortRootFlip) {
        if (m.first + 1 != size) throw ScriptError("short-root flip must act on the last coordinate");
        return;
    }
    if (!(m.first <= m.middle && m.middle <= m.last && m.last <= size))
        throw ScriptError("move range [" + std::to_string(m.first) + "," + std::to_string(m.middle) + "," +
                          std::to_string(m.last) + ") outside a sequence of length " + std::to_string(size));
    if (m.middle == m.last) throw ScriptError("move with an empty moving block");
}

StepReport pass_left(const BlockMove& m, SignedSeq& seq, bool barred) {
    StepReport rep;
    rep.move = m;
    SignedSeq chain(seq.begin() + m.first, seq.begin() + m.middle);
    SignedSeq xis(seq.begin() + m.middle, seq.begin() + m.last);
    if (barred)
        for (auto& x : xis) x = bar(x);
    if (!ascending_gap_two(chain)) throw ScriptError("chain " + format(chain) + " is not an ascending gap-2 run");
    for (const auto& xi : xis) {
        if (chain.empty()) break;
        HalfInt c = offset(chain.front().sign != xi.sign);
        if (xi.value == chain.back().value + c) {
            rep.wellDefined = false;
            rep.reason = format(xi) + " equals the top of the chain plus " + format(c);
        }
        if (xi.value == chain.front().value - c) {
            rep.injective = false;
            if (rep.reason.empty()) rep.reason = format(xi) + " equals the bottom of the chain minus " + format(c);
        }
    }
    if (rep.wellDefined && rep.injective) {
        rep.reason = barred ? (chain.empty() ? "bar reading" : "bar-gl block move") : "block move";
        if (xis.size() == 1 && !chain.empty()) {
            HalfIntVec values;
            for (const auto& e : chain) values.push_back(e.value);
            rep.scalar = gl_move_scalar(values, xis.front().value, chain.front().sign != xis.front().sign);
        }
    }
    SignedSeq out(seq.begin(), seq.begin() + m.first);
    out.insert(out.end(), xis.begin(), xis.end());
    out.insert(out.end(), chain.begin(), chain.end());
    out.insert(out.end(), seq.begin() + m.last, seq.end());
    seq = std::move(out);
    return rep;
}

StepReport sort_descending(const BlockMove& m, SignedSeq& seq) {
    StepReport rep;
    rep.move = m;
    SignedSeq prefix(seq.begin() + m.first, seq.begin() + m.middle);
    SignedSeq chain(seq.begin() + m.middle, seq.begin() + m.last);
    if (!ascending_gap_two(chain)) throw ScriptError("chain " + format(chain) + " is not an ascending gap-2 run");
    if (!sort_ok(prefix, chain)) {
        rep.injective = false;
        rep.reason = "a prefix entry equals the top of the chain plus the offset";
    } else {
        rep.reason = "type A sort";
    }
    std::stable_sort(seq.begin() + m.first, seq.begin() + m.last,
                     [](const SignedEntry& l, const SignedEntry& r) { return l.value < r.value; });
    return rep;
}

StepReport short_root_flip(const BlockMove& m, SignedSeq& seq) {
    StepReport rep;
    rep.move = m;
    if (!short_root_ok(seq[m.first].value)) {
        rep.injective = false;
        rep.reason = "short root flip at " + format(seq[m.first].value);
    } else {
        rep.reason = "short root flip";
    }
    seq[m.first] = bar(seq[m.first]);
    return rep;
}

}  // namespace

std::vector<StepReport> verify_chain(const std::vector<BlockMove>& script, SignedSeq start) {
    std::vector<StepReport> out;
    out.reserve(script.size());
    for (const auto& m : script) {
        if (m.kind == MoveKind::SortDescending) {
            if (!(m.first <= m.middle && m.middle <= m.last && m.last <= start.size()))
                throw ScriptError("sort range outside the sequence");
        } else {
            check_range(m, start.size());
        }
        StepReport rep;
        switch (m.kind) {
            case MoveKind::PassLeft: rep = pass_left(m, start, false); break;
            case MoveKind::BarGL: rep = pass_left(m, start, true); break;
            case MoveKind::SortDescending: rep = sort_descending(m, start); break;
            case MoveKind::ShortRootFlip: rep = short_root_flip(m, start); break;
        }
        rep.after = start;
        out.push_back(std::move(rep));
    }
    return out;
}

namespace {

// (low, low + 2, ..., high) given doubled endpoints.
SignedSeq run(std::int64_t lowDoubled, std::int64_t highDoubled, int sign) {
    SignedSeq s;
    for (std::int64_t v = lowDoubled; v <= highDoubled; v += 4) s.push_back({half(v), sign});
    return s;
}

SignedSeq concat(std::initializer_list<SignedSeq> parts) {
    SignedSeq out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// Start of the maximal constant-sign ascending gap-2 run ending right before `pos`, keeping only
// entries strictly above `bound`.
std::size_t run_start(const SignedSeq& s, std::size_t pos, HalfInt bound) {
    std::size_t i = pos;
    while (i > 0) {
        const auto& e = s[i - 1];
        if (e.value <= bound) break;
        if (i < pos && (s[i].value - e.value != HalfInt(2) || s[i].sign != e.sign)) break;
        --i;
    }
    return i;
}

// Tracks the state while a builder emits moves, so chain ranges can be read off the sequence.
struct Recorder {
    ChainScript script;
    SignedSeq state;

    Recorder(std::string name, SignedSeq start) : state(start) {
        script.name = std::move(name);
        script.start = std::move(start);
    }
    void emit(MoveKind kind, std::size_t first, std::size_t middle, std::size_t last) {
        BlockMove m{kind, first, middle, last};
        script.moves.push_back(m);
        state = verify_chain({m}, state).back().after;
    }
};

}  // namespace

std::vector<ChainScript> case_one_scripts_D(int a, int b) {
    if (a < 1 || b < 0) throw ScriptError("case one needs a >= 1 and b >= 0");
    std::vector<ChainScript> out;

    Recorder omega("omega", run(1 - 4 * b, 4 * a - 3, 1));
    std::size_t size = omega.state.size();
    for (int k = 1; k < a; ++k) {
        SignedEntry target = omega.script.start[size - static_cast<std::size_t>(k)];
        std::size_t pos = static_cast<std::size_t>(
            std::find(omega.state.begin(), omega.state.end(), target) - omega.state.begin());
        HalfInt read = -target.value;
        std::size_t first = run_start(omega.state, pos, read);
        omega.emit(MoveKind::BarGL, first, pos, pos + 1);
    }
    out.push_back(std::move(omega.script));

    Recorder hermitian("omega^h", run(3 - 4 * a, 4 * b - 1, 1));
    std::size_t flipped = 0;
    std::size_t firstPositive = 0;
    while (firstPositive < size && hermitian.state[firstPositive].value < half(3)) ++firstPositive;
    for (std::size_t pos = size; pos-- > firstPositive;) {
        hermitian.emit(MoveKind::BarGL, firstPositive + flipped, size - 1, size);
        ++flipped;
    }
    if (flipped > 0 && firstPositive > 0)
        hermitian.emit(MoveKind::SortDescending, 0, firstPositive, size);
    out.push_back(std::move(hermitian.script));
    return out;
}

std::vector<ChainScript> case_two_scripts_D(int c, int d, int e, int f) {
    if (!(c >= d && d >= 1 && e >= f && f >= 0)) throw ScriptError("case two needs c >= d >= 1, e >= f >= 0");
    SignedSeq upper = run(1 - 4 * e, 4 * d - 3, 1);
    SignedSeq lowerNeg = run(1 - 4 * f, -3, 1);
    SignedSeq lowerPos = run(3 - 4 * c, -1, -1);
    Recorder omega("omega", concat({upper, lowerNeg, lowerPos}));
    if (!lowerNeg.empty()) omega.emit(MoveKind::PassLeft, 0, upper.size(), upper.size() + lowerNeg.size());
    std::size_t top = lowerNeg.size();
    while (top < lowerNeg.size() + upper.size() && omega.state[top].value < half(9)) ++top;
    std::size_t end = lowerNeg.size() + upper.size();
    if (top < end && !lowerPos.empty()) omega.emit(MoveKind::PassLeft, top, end, omega.state.size());
    return {std::move(omega.script)};
}

std::vector<ChainScript> case_one_scripts_B(int a, int b) {
    if (a < 1 || b < 0) throw ScriptError("case one needs a >= 1 and b >= 0");
    std::vector<ChainScript> out;

    // flip everything above 5/2, then the (1/2, 5/2) cell
    Recorder omega("omega", run(1 - 4 * b, 4 * a - 3, 1));
    std::size_t n = omega.state.size();
    std::size_t keep = 0;
    while (keep < n && omega.state[keep].value <= half(5)) ++keep;
    for (std::size_t done = 0; keep + done < n; ++done) {
        if (done > 0) omega.emit(MoveKind::PassLeft, n - done - 1, n - done, n);
        omega.emit(MoveKind::ShortRootFlip, n - 1, n - 1, n);
    }
    std::size_t flippedBlock = n - keep;
    std::size_t cellStart = keep;
    while (cellStart > 0 && omega.state[cellStart - 1].value >= half(1)) --cellStart;
    std::size_t cellSize = keep - cellStart;
    if (flippedBlock > 0 && cellSize > 0) omega.emit(MoveKind::PassLeft, cellStart, keep, n);
    if (cellSize > 0) {
        std::size_t cellFirst = n - cellSize;
        for (std::size_t done = 0; done < cellSize; ++done) {
            if (done > 0) omega.emit(MoveKind::PassLeft, n - done - 1, n - done, n);
            omega.emit(MoveKind::ShortRootFlip, n - 1, n - 1, n);
        }
        if (flippedBlock > 0) omega.emit(MoveKind::SortDescending, cellFirst - flippedBlock, cellFirst, n);
    }
    out.push_back(std::move(omega.script));

    // flip from the top, slotting each flipped entry below the positive run
    Recorder hermitian("omega^h", run(3 - 4 * a, 4 * b - 1, 1));
    std::size_t m = hermitian.state.size();
    std::size_t positive = 0;
    while (positive < m && hermitian.state[positive].value < half(3)) ++positive;
    for (std::size_t pos = m; pos-- > positive;) {
        hermitian.emit(MoveKind::ShortRootFlip, m - 1, m - 1, m);
        HalfInt read = hermitian.state[m - 1].value;
        std::size_t first = run_start(hermitian.state, m - 1, read);
        if (first < m - 1) hermitian.emit(MoveKind::PassLeft, first, m - 1, m);
    }
    out.push_back(std::move(hermitian.script));
    return out;
}

std::vector<ChainScript> padding_scripts_D(int s, int t, const SignedSeq& rest) {
    if (!(s - t == 0 || s - t == 1) || t < 0 || s < 1) throw ScriptError("padding needs s - t = 0 or 1");
    std::vector<ChainScript> out;
    for (int hermitianSide = 0; hermitianSide < 2; ++hermitianSide) {
        SignedSeq block = hermitianSide ? run(3 - 4 * s, 4 * t - 1, 1) : run(1 - 4 * t, 4 * s - 3, 1);
        SignedSeq tail = rest;
        if (hermitianSide)
            for (auto& e : tail) e.sign = -e.sign;
        Recorder rec(hermitianSide ? "omega^h" : "omega", concat({block, tail}));
        std::size_t k = block.size();
        std::size_t n = rec.state.size();
        if (!tail.empty()) rec.emit(MoveKind::PassLeft, 0, k, n);
        std::size_t base = tail.size();
        HalfInt threshold = hermitianSide ? half(3) : half(1);
        std::size_t firstFlip = base;
        while (firstFlip < n && rec.state[firstFlip].value < threshold) ++firstFlip;
        std::size_t flipped = 0;
        for (std::size_t pos = n; pos-- > firstFlip;) {
            rec.emit(MoveKind::BarGL, base + flipped, n - 1, n);
            ++flipped;
        }
        if (flipped > 0 && base > 0) rec.emit(MoveKind::SortDescending, 0, base, base + flipped);
        if (base + flipped < n) rec.emit(MoveKind::SortDescending, 0, base + flipped, n);
        out.push_back(std::move(rec.script));
    }
    return out;
}

namespace {

using Vec = RationalVec;

Rational dot(const Vec& l, const Vec& r) {
    Rational s(0);
    for (std::size_t i = 0; i < l.size(); ++i) s += l[i] * r[i];
    return s;
}

struct RootData {
    std::vector<Vec> roots;
    std::vector<Vec> coroots;
};

const RootData& root_data(RankTwo system) {
    static const RootData a2{{{1, -1, 0}, {0, 1, -1}}, {{1, -1, 0}, {0, 1, -1}}};
    static const RootData b2{{{1, -1}, {0, 1}}, {{1, -1}, {0, 2}}};
    return system == RankTwo::A2 ? a2 : b2;
}

Vec reflect(const Vec& v, const Vec& root, const Vec& coroot) {
    Rational p = dot(coroot, v);
    Vec out = v;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] -= p * root[i];
    return out;
}

}  // namespace

std::optional<Rational> word_scalar(RankTwo system, const std::vector<int>& word, RationalVec nu, RationalVec mu) {
    const auto& data = root_data(system);
    if (nu.size() != data.roots[0].size() || mu.size() != nu.size())
        throw DimensionError("word_scalar: vector length does not match the root system");
    Rational product(1);
    for (int k : word) {
        if (k < 0 || k > 1) throw ScriptError("word letters are 0 or 1");
        const auto& root = data.roots[static_cast<std::size_t>(k)];
        const auto& coroot = data.coroots[static_cast<std::size_t>(k)];
        Rational pairing = dot(coroot, nu);
        try {
            product *= dot(root, mu) == Rational(0) ? simple_scalar_case1(pairing) : simple_scalar_case2(pairing, true);
        } catch (const Pole&) {
            return std::nullopt;
        }
        nu = reflect(nu, root, coroot);
        mu = reflect(mu, root, coroot);
    }
    return product;
}

RationalVec word_action(RankTwo system, const std::vector<int>& word, RationalVec v) {
    const auto& data = root_data(system);
    for (int k : word) v = reflect(v, data.roots[static_cast<std::size_t>(k)], data.coroots[static_cast<std::size_t>(k)]);
    return v;
}

}  // namespace spinunitary

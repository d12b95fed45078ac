#include "spinunitary/spinclass.hpp"

#include "spinunitary/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace spinunitary {

Rational residue_class(const Rational& v) {
    // k = ceil((v - 1) / 2), t = v - 2k lands in (-1, 1].
    Rational shifted = (v - 1) / 2;
    std::int64_t k = -floor_of(-shifted);
    return v - 2 * k;
}

std::map<Rational, RationalVec> partition_nt(const RationalVec& nu) {
    std::map<Rational, RationalVec> out;
    for (const auto& v : nu) out[residue_class(v)].push_back(v);
    return out;
}

namespace {

const Rational kHalf(1, 2);

void require_half_class(const RationalVec& values) {
    for (const auto& v : values)
        if (residue_class(v) != kHalf)
            throw MalformedParameter("value " + format(v) + " is not congruent to 1/2 mod 2");
}

void require_gap_two(const RationalVec& desc) {
    for (std::size_t i = 0; i + 1 < desc.size(); ++i)
        if (desc[i] - desc[i + 1] != Rational(2))
            throw MalformedParameter("chain " + format(desc) + " has a gap other than 2");
}

int x_of_top(const Rational& top) { return static_cast<int>(((top - kHalf) / 2).numerator()) + 1; }
int y_of_bottom(const Rational& bottom) { return static_cast<int>(((kHalf - bottom) / 2).numerator()); }

StringPairs sorted_checked(Family f, std::vector<Column> cols) {
    std::sort(cols.begin(), cols.end(), [](const Column& a, const Column& b) {
        return a.x != b.x ? a.x > b.x : a.y > b.y;
    });
    StringPairs p{f, std::move(cols)};
    if (!is_valid(p))
        throw MalformedParameter("columns " + format(p) + " are not doubly descending");
    return p;
}

HalfIntVec mu_prefix(const GenuineParam& dom, std::size_t count) {
    return HalfIntVec(dom.mu.begin(), dom.mu.begin() + static_cast<std::ptrdiff_t>(count));
}

}  // namespace

StringPairs extract_pairs_D(const RationalVec& halfClass) {
    require_half_class(halfClass);
    std::vector<Column> cols;
    for (const Chain& c : decompose_chains(halfClass).chains) {
        require_gap_two(c.values);
        const Rational& top = c.values.front();
        const Rational& bottom = c.values.back();
        if (top < kHalf || bottom > kHalf)
            throw MalformedParameter("chain " + format(c.values) + " does not pass through 1/2");
        cols.push_back({x_of_top(top), y_of_bottom(bottom)});
    }
    return sorted_checked(Family::D, std::move(cols));
}

AlphaBeta decompose_alpha_beta(const RationalVec& halfClass) {
    std::multiset<Rational> pool(halfClass.begin(), halfClass.end());
    const Rational anchor(-3, 2);
    AlphaBeta out;
    while (pool.count(anchor) > 0) {
        RationalVec beta;
        Rational low = anchor;
        while (pool.count(low - 2) > 0) low -= 2;
        for (Rational v = low; pool.count(v) > 0; v += 2) {
            beta.push_back(v);
            pool.erase(pool.find(v));
        }
        out.betas.push_back(std::move(beta));
    }
    out.alpha.assign(pool.begin(), pool.end());
    return out;
}

StringPairs extract_pairs_B(const RationalVec& halfClass) {
    require_half_class(halfClass);
    AlphaBeta ab = decompose_alpha_beta(halfClass);
    std::vector<Column> cols;
    for (const auto& beta : ab.betas) {
        const Rational& top = beta.back();
        cols.push_back({top < kHalf ? 0 : x_of_top(top), y_of_bottom(beta.front())});
    }
    for (const Chain& c : decompose_chains(ab.alpha).chains) {
        require_gap_two(c.values);
        if (c.values.back() != kHalf)
            throw MalformedParameter("chain " + format(c.values) + " does not end at 1/2");
        cols.push_back({x_of_top(c.values.front()), 0});
    }
    return sorted_checked(Family::B, std::move(cols));
}

SpinRelevantKType eta(Family f, int rank, int q) {
    SpinRelevantKType k;
    k.q = q;
    for (int i = 0; i < rank; ++i) k.weight.push_back(i < q ? half(3) : half(1));
    if (f == Family::D && rank > 0 && q % 2 == 1) k.weight.back() = -k.weight.back();
    return k;
}

UnitaryCertificate build_certificate(const StringPairs& p) {
    UnitaryCertificate cert;
    Peeling pl = peel(p);
    cert.steinColumns = pl.stein;
    for (const auto& s : pl.stein) cert.steinFactors.push_back({s.size(), kHalf, half(1)});
    cert.strict = pl.stein.empty();
    if (!pl.core.cols.empty()) {
        cert.core = pl.core;
        cert.orbit = attach_orbit(pl.core);
    }
    return cert;
}

std::optional<SpinRelevantKType> witness(const StringPairs&, const NormalizedBase& nb) {
    int rank = 2 * nb.normalized.size();
    bool d = nb.normalized.family == Family::D;
    switch (nb.kind) {
        case BaseKind::CaseI: return eta(nb.normalized.family, rank, d ? 2 * nb.a + 1 : 2 * nb.b + 2);
        case BaseKind::CaseII: return eta(nb.normalized.family, rank, d ? 2 * nb.e + 2 : 2 * nb.c + 1);
        default: return std::nullopt;
    }
}

std::string to_string(Status s) {
    switch (s) {
        case Status::NotGenuine: return "NotGenuine";
        case Status::NotHermitian: return "NotHermitian";
        case Status::Unitary: return "Unitary";
        case Status::NonUnitary: return "NonUnitary";
    }
    return "?";
}

Verdict classify(const GenuineParam& input) {
    check_dimensions(input);
    Verdict v;
    if (!is_genuine(input)) {
        v.status = Status::NotGenuine;
        return v;
    }
    Dominantized dom = dominantize(input);
    const GenuineParam& p = dom.param;
    v.outer = dom.outer;
    if (!hermitian_witness(p)) {
        v.status = Status::NotHermitian;
        return v;
    }

    ReductionTranscript transcript;
    std::vector<GLFactor> classFactors;
    auto fail = [&](SpinRelevantKType w, std::string note) {
        transcript.notes.push_back(std::move(note));
        v.status = Status::NonUnitary;
        v.witness = std::move(w);
        v.chain = std::move(transcript);
        return v;
    };

    // mu-blocks, largest |mu| first.
    std::size_t start = 0;
    std::size_t n = p.mu.size();
    while (start < n && p.mu[start] != half(1)) {
        std::size_t end = start;
        while (end < n && p.mu[end] == p.mu[start]) ++end;
        int r = static_cast<int>((p.mu[start].doubled() + 1) / 2);
        RationalVec nu(p.nu.begin() + start, p.nu.begin() + end);
        GLVerdict gl;
        try {
            gl = classify_gl(nu);
        } catch (const NotHermitianError&) {
            v.status = Status::NotHermitian;
            return v;
        }
        if (gl.status != GLStatus::UnitaryFactors) {
            int q = std::max(gl.witnessOnes, 1);
            SpinRelevantKType w;
            w.q = q;
            w.block = r;
            w.weight = p.mu;
            std::size_t m = end - start;
            for (std::size_t i = 0; i < m; ++i) {
                std::int64_t d = 2 * r + 1;
                if (i < static_cast<std::size_t>(q)) d = 2 * r + 3;
                else if (i >= m - static_cast<std::size_t>(q)) d = 2 * r - 1;
                w.weight[start + i] = HalfInt::from_doubled(d);
            }
            return fail(std::move(w), "block |mu|=" + format(p.mu[start]) + ": " + gl.reason);
        }
        for (auto f : gl.factors) {
            f.twist = r;
            classFactors.push_back(f);
        }
        start = end;
    }

    // The |mu| = 1/2 block.
    HalfIntVec prefix = mu_prefix(p, start);
    int m1 = static_cast<int>(n - start);
    auto lifted_eta = [&](int q) {
        SpinRelevantKType k = eta(p.group.family, m1, q);
        k.weight.insert(k.weight.begin(), prefix.begin(), prefix.end());
        return k;
    };
    RationalVec nu1(p.nu.begin() + start, p.nu.end());
    auto classes = partition_nt(nu1);

    auto run_block = [&](const std::vector<SignedValue>& block, const std::string& label) -> bool {
        if (block.empty()) return true;
        GLVerdict gl = classify_gl_genuine_block(block);
        if (gl.status == GLStatus::UnitaryFactors) {
            classFactors.insert(classFactors.end(), gl.factors.begin(), gl.factors.end());
            return true;
        }
        fail(lifted_eta(std::max(gl.witnessOnes, 1)), label + ": " + gl.reason);
        return false;
    };

    try {
        std::vector<SignedValue> integral;
        for (const auto& x : classes[Rational(0)]) integral.push_back({x, 1});
        for (const auto& x : classes[Rational(1)]) integral.push_back({x, -1});
        if (!run_block(integral, "classes t=0,1")) return v;

        std::map<Rational, std::vector<SignedValue>> generic;
        for (const auto& [t, values] : classes) {
            Rational at = abs_of(t);
            if (at == Rational(0) || at == Rational(1) || at == kHalf) continue;
            Rational rep = std::min(at, 1 - at);
            int sign = at == rep ? 1 : -1;
            for (const auto& x : values) generic[rep].push_back({x, sign});
        }
        for (const auto& [rep, block] : generic)
            if (!run_block(block, "classes t=+-" + format(rep) + ", +-" + format(1 - rep))) return v;
    } catch (const NotHermitianError&) {
        v.status = Status::NotHermitian;
        return v;
    }

    const RationalVec& halfClass = classes[kHalf];
    StringPairs pairs{p.group.family, {}};
    if (!halfClass.empty()) {
        try {
            pairs = p.group.family == Family::D ? extract_pairs_D(halfClass) : extract_pairs_B(halfClass);
        } catch (const MalformedParameter& e) {
            return fail(lifted_eta(1), std::string("class t=1/2: ") + e.what());
        }
    }
    v.pairs = pairs;

    UnitarityResult test = unitarity_test(pairs);
    if (!test.satisfied) {
        NormalizedBase nb = normalize_to_base(pairs);
        transcript.notes.push_back("class t=1/2 pairs " + format(pairs) + " violate " + test.inequality);
        transcript.notes.push_back("normalized base " + describe(nb) + " after " +
                                   std::to_string(nb.steps.size()) + " induction steps");
        std::optional<SpinRelevantKType> w = witness(pairs, nb);
        if (w) {
            // Bottom layer from the class-1/2 factor into the |mu|=1/2 block and then into G.
            int grown = 2 * (nb.normalized.size() - pairs.size());
            SpinRelevantKType lifted = eta(p.group.family, m1 + grown, w->q);
            lifted.weight.insert(lifted.weight.begin(), prefix.begin(), prefix.end());
            w = lifted;
        }
        transcript.base = nb;
        v.status = Status::NonUnitary;
        v.witness = w;
        v.chain = std::move(transcript);
        return v;
    }

    UnitaryCertificate cert = pairs.cols.empty() ? UnitaryCertificate{} : build_certificate(pairs);
    if (pairs.cols.empty()) cert.strict = false;
    cert.classFactors = std::move(classFactors);
    v.status = Status::Unitary;
    v.certificate = std::move(cert);
    return v;
}

}  // namespace spinunitary

#include "spinunitary/glclass.hpp"

#include "spinunitary/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace spinunitary {

namespace {

bool even_positive_gap(const Rational& hi, const Rational& lo) {
    Rational d = hi - lo;
    return d > 0 && is_integer(d) && d.numerator() % 2 == 0;
}

bool lex_greater(const RationalVec& a, const RationalVec& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// Longest chain through the remaining values, using the documented tie-break.
std::vector<std::size_t> best_chain(const RationalVec& sorted, const std::vector<bool>& alive) {
    std::size_t n = sorted.size();
    std::vector<std::vector<std::size_t>> best(n);
    std::vector<RationalVec> vals(n);
    for (std::size_t i = n; i-- > 0;) {
        if (!alive[i]) continue;
        std::size_t pick = n;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!alive[j] || !even_positive_gap(sorted[i], sorted[j])) continue;
            if (pick == n || best[j].size() > best[pick].size() ||
                (best[j].size() == best[pick].size() && lex_greater(vals[j], vals[pick])))
                pick = j;
        }
        best[i] = {i};
        vals[i] = {sorted[i]};
        if (pick != n) {
            best[i].insert(best[i].end(), best[pick].begin(), best[pick].end());
            vals[i].insert(vals[i].end(), vals[pick].begin(), vals[pick].end());
        }
    }
    std::size_t top = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        if (top == n || best[i].size() > best[top].size() ||
            (best[i].size() == best[top].size() && lex_greater(vals[i], vals[top])))
            top = i;
    }
    return top == n ? std::vector<std::size_t>{} : best[top];
}

RationalVec negated_reversed(const RationalVec& v) {
    RationalVec out(v.rbegin(), v.rend());
    for (auto& x : out) x = -x;
    return out;
}

bool symmetric_multiset(RationalVec v) {
    RationalVec neg = v;
    for (auto& x : neg) x = -x;
    std::sort(v.begin(), v.end());
    std::sort(neg.begin(), neg.end());
    return v == neg;
}

int max_gap_index(const RationalVec& values) {
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i] - values[i + 1] != Rational(2)) return static_cast<int>(i);
    return -1;
}

void merge_into(GLVerdict& total, GLVerdict part) {
    total.factors.insert(total.factors.end(), part.factors.begin(), part.factors.end());
    auto rank = [](GLStatus s) {
        return s == GLStatus::NonUnitary ? 2 : s == GLStatus::Reducible ? 1 : 0;
    };
    if (rank(part.status) > rank(total.status)) {
        total.status = part.status;
        total.witness = std::move(part.witness);
        total.witnessOnes = part.witnessOnes;
        total.reason = std::move(part.reason);
    }
}

}  // namespace

ChainDecomposition decompose_chains(const RationalVec& nu) {
    RationalVec sorted = nu;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<bool> alive(sorted.size(), true);
    ChainDecomposition out;
    std::size_t left = sorted.size();
    while (left > 0) {
        Chain c;
        for (std::size_t idx : best_chain(sorted, alive)) {
            c.values.push_back(sorted[idx]);
            alive[idx] = false;
            --left;
        }
        out.chains.push_back(std::move(c));
    }
    return out;
}

RationalVec comp_nu(int a, const Rational& t) {
    RationalVec out;
    for (int k = 0; k < a; ++k) out.push_back(Rational(a - 1 - 2 * k) + t);
    return out;
}

std::vector<int> witness_shift(int size, int ones) {
    std::vector<int> shift(std::max(size, 2 * ones), 0);
    for (int i = 0; i < ones; ++i) {
        shift[i] = 1;
        shift[shift.size() - 1 - i] = -1;
    }
    return shift;
}

GLVerdict stein_verdict(int a, const Rational& t, int blockSize) {
    if (blockSize == 0) blockSize = 2 * a;
    GLVerdict v;
    Rational at = abs_of(t);
    if (at < 1) {
        v.factors.push_back({GLFactor::Kind::SteinPair, a, t, 1});
        return v;
    }
    if (is_integer(at)) {
        v.status = GLStatus::Reducible;
        v.reason = "integral shift " + format(t) + " does not give an irreducible complementary series";
        return v;
    }
    std::int64_t q = floor_of(at);
    int ones = q >= a ? 1 : static_cast<int>(a - q + 1);
    v.status = GLStatus::NonUnitary;
    v.witnessOnes = ones;
    v.witness = witness_shift(blockSize, ones);
    v.reason = "Stein pair a=" + std::to_string(a) + " with |t|=" + format(at) + " >= 1";
    return v;
}

GLVerdict classify_gl(const RationalVec& nu) {
    if (!symmetric_multiset(nu))
        throw NotHermitianError("GL parameter " + format(nu) + " is not equal to its negative");
    int size = static_cast<int>(nu.size());
    ChainDecomposition dec = decompose_chains(nu);
    GLVerdict total;
    for (const Chain& c : dec.chains) {
        int gap = max_gap_index(c.values);
        if (gap >= 0) {
            total.status = GLStatus::NonUnitary;
            total.witnessOnes = 1;
            total.witness = witness_shift(size, 1);
            total.reason = "chain " + format(c.values) + " has gap " +
                           format(c.values[gap] - c.values[gap + 1]) + " > 2";
            return total;
        }
    }
    std::vector<bool> used(dec.chains.size(), false);
    for (std::size_t i = 0; i < dec.chains.size(); ++i) {
        if (used[i]) continue;
        const RationalVec& ci = dec.chains[i].values;
        int a = static_cast<int>(ci.size());
        used[i] = true;
        if (negated_reversed(ci) == ci) {
            total.factors.push_back({GLFactor::Kind::TrivialString, a, Rational(0), 1});
            continue;
        }
        std::size_t partner = dec.chains.size();
        for (std::size_t j = i + 1; j < dec.chains.size(); ++j)
            if (!used[j] && dec.chains[j].values == negated_reversed(ci)) { partner = j; break; }
        if (partner == dec.chains.size())
            throw NotHermitianError("chain " + format(ci) + " has no dual partner");
        used[partner] = true;
        Rational top = std::max(ci.front(), -ci.back());
        merge_into(total, stein_verdict(a, top - (a - 1), size));
    }
    return total;
}

GLVerdict classify_gl_genuine_block(const std::vector<SignedValue>& block) {
    std::map<int, RationalVec> groups;
    for (const auto& sv : block) groups[sv.muSign].push_back(sv.value);
    int size = static_cast<int>(block.size());
    GLVerdict total;
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        GLVerdict part = classify_gl(it->second);
        for (auto& f : part.factors) f.twist = it->first;
        if (part.status == GLStatus::Reducible) {
            // Greedy chains already merge every integral-shift pair; report as a failure.
            part.status = GLStatus::NonUnitary;
            part.witnessOnes = 1;
        }
        if (part.witnessOnes > 0) part.witness = witness_shift(size, part.witnessOnes);
        merge_into(total, std::move(part));
    }
    return total;
}

std::string to_string(GLStatus s) {
    switch (s) {
        case GLStatus::UnitaryFactors: return "UnitaryFactors";
        case GLStatus::NonUnitary: return "NonUnitary";
        case GLStatus::Reducible: return "Reducible";
    }
    return "?";
}

std::string describe(const GLFactor& f) {
    std::string twist = f.twist > 0 ? "+" : "-";
    if (f.kind == GLFactor::Kind::TrivialString)
        return "TrivialString(a=" + std::to_string(f.a) + ", twist " + twist + ")";
    return "SteinPair(a=" + std::to_string(f.a) + ", t=" + format(f.t) + ", twist " + twist + ")";
}

}  // namespace spinunitary

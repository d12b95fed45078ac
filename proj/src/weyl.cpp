#include "spinunitary/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spinunitary {

std::string to_string(Family f) { return f == Family::D ? "D" : "B"; }
std::string to_string(const GroupTag& g) { return to_string(g.family) + std::to_string(g.rank); }

WeylElement::WeylElement(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
    if (perm_.size() != signs_.size()) throw DimensionError("permutation and sign lengths differ");
    std::vector<bool> seen(perm_.size(), false);
    for (int p : perm_) {
        if (p < 0 || p >= size() || seen[p]) throw std::invalid_argument("not a permutation");
        seen[p] = true;
    }
    for (int s : signs_)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
}

WeylElement WeylElement::identity(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    return WeylElement(std::move(perm), std::vector<int>(n, 1));
}

int WeylElement::negative_count() const {
    return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1));
}

WeylElement WeylElement::inverse() const {
    // w: e_j -> s_{p(j)} e_{p(j)}, so w^{-1}: e_i -> s_i e_{p^{-1}(i)}.
    std::vector<int> inv(perm_.size()), sg(perm_.size());
    for (int j = 0; j < size(); ++j) inv[perm_[j]] = j;
    for (int i = 0; i < size(); ++i) sg[inv[i]] = signs_[i];
    return WeylElement(std::move(inv), std::move(sg));
}

WeylElement operator*(const WeylElement& lhs, const WeylElement& rhs) {
    if (lhs.size() != rhs.size()) throw DimensionError("composing Weyl elements of different size");
    int n = lhs.size();
    std::vector<int> perm(n), signs(n);
    for (int j = 0; j < n; ++j) {
        int mid = rhs.perm()[j];
        int target = lhs.perm()[mid];
        perm[j] = target;
        signs[target] = rhs.signs()[mid] * lhs.signs()[target];
    }
    return WeylElement(std::move(perm), std::move(signs));
}

GenuineParam apply(const WeylElement& w, const GenuineParam& p) {
    return {p.group, apply(w, p.mu), apply(w, p.nu)};
}

void check_dimensions(const GenuineParam& p) {
    if (p.group.rank < 0 || static_cast<int>(p.mu.size()) != p.group.rank ||
        static_cast<int>(p.nu.size()) != p.group.rank)
        throw DimensionError("parameter for " + to_string(p.group) + " has mu of length " +
                             std::to_string(p.mu.size()) + " and nu of length " +
                             std::to_string(p.nu.size()));
}

bool is_genuine(const GenuineParam& p) {
    return std::all_of(p.mu.begin(), p.mu.end(), [](HalfInt h) { return h.is_strict_half(); });
}

Dominantized dominantize(const GenuineParam& p) {
    check_dimensions(p);
    int n = p.group.rank;
    std::vector<int> flip(n, 1);
    HalfIntVec mu = p.mu;
    RationalVec nu = p.nu;
    for (int i = 0; i < n; ++i) {
        if (mu[i] < HalfInt(0)) {
            flip[i] = -1;
            mu[i] = -mu[i];
            nu[i] = -nu[i];
        }
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return mu[a] > mu[b]; });

    std::vector<int> perm(n), signs(n);
    GenuineParam out{p.group, HalfIntVec(n), RationalVec(n)};
    for (int pos = 0; pos < n; ++pos) {
        int src = order[pos];
        perm[src] = pos;
        signs[pos] = flip[src];
        out.mu[pos] = mu[src];
        out.nu[pos] = nu[src];
    }
    WeylElement w(std::move(perm), std::move(signs));
    bool outer = p.group.family == Family::D && !w.is_even();
    if (outer) {
        // Undo one flip on the last coordinate inside the group element; the
        // outer automorphism accounts for the remaining odd flip.
        std::vector<int> sg = w.signs();
        sg[n - 1] = -sg[n - 1];
        w = WeylElement(w.perm(), std::move(sg));
    }
    return {std::move(out), std::move(w), outer};
}

GenuineParam apply_outer(const GenuineParam& p) {
    GenuineParam out = p;
    if (!out.mu.empty()) {
        out.mu.back() = -out.mu.back();
        out.nu.back() = -out.nu.back();
    }
    return out;
}

LanglandsPair to_langlands(const GenuineParam& p) {
    check_dimensions(p);
    LanglandsPair lp;
    for (std::size_t i = 0; i < p.mu.size(); ++i) {
        Rational m = p.mu[i].to_rational();
        lp.lambdaL.push_back((m + p.nu[i]) / 2);
        lp.lambdaR.push_back((p.nu[i] - m) / 2);
    }
    return lp;
}

GenuineParam from_langlands(GroupTag group, const LanglandsPair& lp) {
    if (lp.lambdaL.size() != lp.lambdaR.size())
        throw DimensionError("lambdaL and lambdaR have different lengths");
    GenuineParam p{group, {}, {}};
    for (std::size_t i = 0; i < lp.lambdaL.size(); ++i) {
        Rational m = lp.lambdaL[i] - lp.lambdaR[i];
        if (m.denominator() > 2)
            throw std::invalid_argument("lambdaL - lambdaR is not half-integral at coordinate " +
                                        std::to_string(i));
        p.mu.push_back(HalfInt::from_rational(m));
        p.nu.push_back(lp.lambdaL[i] + lp.lambdaR[i]);
    }
    check_dimensions(p);
    return p;
}

GenuineParam hermitian_dual(const GenuineParam& p) {
    GenuineParam out = p;
    for (auto& v : out.nu) v = -v;
    return out;
}

std::optional<WeylElement> hermitian_witness(const GenuineParam& p) {
    check_dimensions(p);
    int n = p.group.rank;
    // Coordinate j goes to position i with sign s when s * (mu_j, nu_j) = (mu_i, -nu_i).
    // Within a class {v, -v} every such match is allowed and its sign is forced, so the
    // number of flips only depends on the classes unless some (0, 0) pair can absorb one.
    std::vector<int> perm(n, -1), signs(n, 1);
    std::vector<bool> used(n, false);
    int flips = 0;
    int zeroPair = -1;
    for (int i = 0; i < n; ++i) {
        int chosen = -1, sign = 1;
        for (int j = 0; j < n && chosen < 0; ++j) {
            if (used[j]) continue;
            if (p.mu[j] == p.mu[i] && p.nu[j] == -p.nu[i]) chosen = j;
            else if (p.mu[j] == -p.mu[i] && p.nu[j] == p.nu[i]) chosen = j, sign = -1;
        }
        if (chosen < 0) return std::nullopt;
        used[chosen] = true;
        perm[chosen] = i;
        signs[i] = sign;
        flips += sign < 0;
        if (p.mu[i] == HalfInt(0) && p.nu[i] == Rational(0)) zeroPair = i;
    }
    if (p.group.family == Family::D && flips % 2 == 1) {
        if (zeroPair < 0) return std::nullopt;
        signs[zeroPair] = -signs[zeroPair];
    }
    return WeylElement(std::move(perm), std::move(signs));
}

namespace {
struct Canonical {
    std::multiset<std::pair<HalfInt, Rational>> pairs;
    int flips = 0;
    bool has_zero_pair = false;
};

Canonical canonical_pairs(const GenuineParam& p) {
    Canonical c;
    for (std::size_t i = 0; i < p.mu.size(); ++i) {
        HalfInt m = p.mu[i];
        Rational v = p.nu[i];
        if (m < HalfInt(0) || (m == HalfInt(0) && v < 0)) {
            m = -m;
            v = -v;
            ++c.flips;
        }
        if (m == HalfInt(0) && v == Rational(0)) c.has_zero_pair = true;
        c.pairs.insert({m, v});
    }
    return c;
}
}  // namespace

bool is_conjugate(const GenuineParam& a, const GenuineParam& b) {
    check_dimensions(a);
    check_dimensions(b);
    if (!(a.group == b.group)) return false;
    Canonical ca = canonical_pairs(a), cb = canonical_pairs(b);
    if (ca.pairs != cb.pairs) return false;
    if (a.group.family == Family::B || ca.has_zero_pair) return true;
    // Each coordinate needs a flip iff its orientation differs from its target's,
    // so the total parity is fixed by the two flip counts alone.
    return (ca.flips - cb.flips) % 2 == 0;
}

HalfIntVec rho(GroupTag group) {
    HalfIntVec out;
    for (int i = 0; i < group.rank; ++i) {
        if (group.family == Family::D)
            out.push_back(HalfInt(group.rank - 1 - i));
        else
            out.push_back(HalfInt::from_doubled(2 * (group.rank - i) - 1));
    }
    return out;
}

}  // namespace spinunitary

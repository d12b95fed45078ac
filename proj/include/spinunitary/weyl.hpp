#pragma once

#include "spinunitary/errors.hpp"
#include "spinunitary/numbers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinunitary {

enum class Family { D, B };

struct GroupTag {
    Family family = Family::D;
    int rank = 0;
    bool operator==(const GroupTag&) const = default;
};

std::string to_string(Family f);
std::string to_string(const GroupTag& g);

// mu is half-integral; nu may be any real rational (classes like t = 1/4 need it).
struct GenuineParam {
    GroupTag group;
    HalfIntVec mu;
    RationalVec nu;
    bool operator==(const GenuineParam&) const = default;
};

struct LanglandsPair {
    RationalVec lambdaL;
    RationalVec lambdaR;
    bool operator==(const LanglandsPair&) const = default;
};

// Signed permutation: coordinate j is carried to position perm[j] and multiplied by signs[perm[j]].
class WeylElement {
public:
    WeylElement() = default;
    WeylElement(std::vector<int> perm, std::vector<int> signs);
    static WeylElement identity(int n);

    int size() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& signs() const { return signs_; }
    int negative_count() const;
    bool is_even() const { return negative_count() % 2 == 0; }

    WeylElement inverse() const;
    bool operator==(const WeylElement&) const = default;

private:
    std::vector<int> perm_;
    std::vector<int> signs_;
};

// (lhs * rhs)(v) = lhs(rhs(v)).
WeylElement operator*(const WeylElement& lhs, const WeylElement& rhs);

template <class T>
std::vector<T> apply(const WeylElement& w, const std::vector<T>& v) {
    if (static_cast<int>(v.size()) != w.size())
        throw DimensionError("Weyl element of size " + std::to_string(w.size()) +
                             " applied to vector of length " + std::to_string(v.size()));
    std::vector<T> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        int target = w.perm()[j];
        out[target] = w.signs()[target] < 0 ? -v[j] : v[j];
    }
    return out;
}

GenuineParam apply(const WeylElement& w, const GenuineParam& p);

void check_dimensions(const GenuineParam& p);
bool is_genuine(const GenuineParam& p);

struct Dominantized {
    GenuineParam param;
    WeylElement element;
    // Family D only: an odd number of sign changes was needed, so the last
    // coordinate was additionally flipped by the outer automorphism.
    bool outer = false;
};

// Makes every mu entry positive and sorts mu non-increasing (stable on ties).
// param == apply(element, p), followed by apply_outer when outer is set.
Dominantized dominantize(const GenuineParam& p);

// Negates the last (mu, nu) coordinate pair: the diagram automorphism of D.
GenuineParam apply_outer(const GenuineParam& p);

LanglandsPair to_langlands(const GenuineParam& p);
GenuineParam from_langlands(GroupTag group, const LanglandsPair& lp);

GenuineParam hermitian_dual(const GenuineParam& p);

// Some w with w.mu = mu and w.nu = -nu, if any.
std::optional<WeylElement> hermitian_witness(const GenuineParam& p);

bool is_conjugate(const GenuineParam& a, const GenuineParam& b);

HalfIntVec rho(GroupTag group);

}  // namespace spinunitary

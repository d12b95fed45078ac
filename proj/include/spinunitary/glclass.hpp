#pragma once

#include "spinunitary/numbers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinunitary {

struct Chain {
    RationalVec values;  // strictly decreasing, gaps in 2N \ {0}
    int muSign = 1;
};

struct ChainDecomposition {
    std::vector<Chain> chains;
};

// Repeatedly removes a longest descending subsequence with even positive gaps.
// Ties go to the largest top value, then to the lexicographically largest chain.
ChainDecomposition decompose_chains(const RationalVec& nu);

// (a-1+t, a-3+t, ..., -a+1+t)
RationalVec comp_nu(int a, const Rational& t);

// comp_r(a, t): Stein's t-complementary series of GL(2a), twisted by det^r.
struct CompParams {
    int a = 1;
    Rational t;
    HalfInt r;
    bool operator==(const CompParams&) const = default;
};

struct GLFactor {
    enum class Kind { TrivialString, SteinPair };
    Kind kind = Kind::TrivialString;
    int a = 1;
    Rational t;  // zero for trivial strings
    int twist = 1;
    bool operator==(const GLFactor&) const = default;
};

enum class GLStatus { UnitaryFactors, NonUnitary, Reducible };

struct GLVerdict {
    GLStatus status = GLStatus::UnitaryFactors;
    std::vector<GLFactor> factors;
    // Shift (1^k, 0, ..., 0, (-1)^k) off the block's lowest K-type; k = witnessOnes.
    std::optional<std::vector<int>> witness;
    int witnessOnes = 0;
    std::string reason;
};

std::vector<int> witness_shift(int size, int ones);

// Verdict for the pair comp_nu(a,t) and its negative inside a block of size blockSize.
GLVerdict stein_verdict(int a, const Rational& t, int blockSize = 0);

// Spherical (or pseudo-spherical) GL(n) parameter. Throws NotHermitianError.
GLVerdict classify_gl(const RationalVec& nu);

struct SignedValue {
    Rational value;
    int muSign = 1;
};

// A genuine block assembled from the N_t classes; chains never mix twists.
GLVerdict classify_gl_genuine_block(const std::vector<SignedValue>& block);

std::string to_string(GLStatus s);
std::string describe(const GLFactor& f);

}  // namespace spinunitary

#pragma once

#include "spinunitary/glclass.hpp"
#include "spinunitary/orbits.hpp"
#include "spinunitary/rewriter.hpp"
#include "spinunitary/string_pairs.hpp"
#include "spinunitary/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spinunitary {

// t in (-1, 1] with v - t in 2Z.
Rational residue_class(const Rational& v);
std::map<Rational, RationalVec> partition_nt(const RationalVec& nu);

// Throws MalformedParameter.
StringPairs extract_pairs_D(const RationalVec& halfClass);

struct AlphaBeta {
    RationalVec alpha;               // ascending
    std::vector<RationalVec> betas;  // each ascending, each through -3/2
};

AlphaBeta decompose_alpha_beta(const RationalVec& halfClass);
StringPairs extract_pairs_B(const RationalVec& halfClass);

// A spin-relevant K-type eta(q). For failures inside a block with |mu| = (2r-1)/2, r >= 2,
// `block` is r and `weight` is the lifted highest weight of the whole parameter instead.
struct SpinRelevantKType {
    int q = 0;
    HalfIntVec weight;
    int block = 1;
};

SpinRelevantKType eta(Family f, int rank, int q);

struct UnitaryCertificate {
    std::vector<SteinColumn> steinColumns;
    std::vector<CompParams> steinFactors;  // comp_{1/2}(l, 1/2) with l = column size
    std::vector<GLFactor> classFactors;    // from the mu-blocks r >= 2 and the t != +-1/2 classes
    std::optional<StringPairs> core;
    std::optional<OrbitColumns> orbit;
    bool strict = false;  // Brega (D) / unipotent (B): no peeling needed
};

UnitaryCertificate build_certificate(const StringPairs& p);

std::optional<SpinRelevantKType> witness(const StringPairs& p, const NormalizedBase& nb);

enum class Status { NotGenuine, NotHermitian, Unitary, NonUnitary };
std::string to_string(Status s);

struct ReductionTranscript {
    std::vector<std::string> notes;
    std::optional<NormalizedBase> base;
};

struct Verdict {
    Status status = Status::NotGenuine;
    std::optional<UnitaryCertificate> certificate;
    std::optional<SpinRelevantKType> witness;
    std::optional<ReductionTranscript> chain;
    std::optional<StringPairs> pairs;  // the t = 1/2 class, when it could be read
    bool outer = false;
};

// Throws DimensionError on malformed vectors.
Verdict classify(const GenuineParam& p);

}  // namespace spinunitary

#pragma once

#include "spinunitary/numbers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinunitary {

// nu^eps: nu-coordinate with the sign of its mu-coordinate (mu = eps/2).
struct SignedEntry {
    HalfInt value;
    int sign = 1;
    bool operator==(const SignedEntry&) const = default;
};

using SignedSeq = std::vector<SignedEntry>;
std::string format(const SignedEntry& e);
std::string format(const SignedSeq& s);

// (2 - p) / (2 + p); throws Pole at p = -2.
Rational simple_scalar_case1(const Rational& pairing);
// dim4: (-3 + p) / (3 + p), throws Pole at p = -3; otherwise 1.
Rational simple_scalar_case2(const Rational& pairing, bool dim4);

// Chain nu_1 < ... < nu_{n-1} (gap 2) passing a single x: (-c + nu_1 - x) / (c + nu_{n-1} - x),
// c = 2 for equal signs and 3 for opposite ones. Throws Pole.
Rational gl_move_scalar(const HalfIntVec& chain, HalfInt x, bool oppositeSign);

// Every xi differs from nu_1 - c and nu_p + c.
bool pass_left_ok(const SignedSeq& chain, const SignedEntry& xi);
// Every xi in prefix differs from nu_p + c.
bool sort_ok(const SignedSeq& prefix, const SignedSeq& chain);
// False exactly at +-3/2.
bool short_root_ok(HalfInt a);

enum class MoveKind { PassLeft, SortDescending, BarGL, ShortRootFlip };
std::string to_string(MoveKind k);

// PassLeft, BarGL: chain [first, middle), xi [middle, last); the xi block moves in front of the chain.
// BarGL reads each xi^eps as (-xi)^(-eps) first.
// SortDescending: prefix [first, middle), chain [middle, last); the range is re-sorted by value
// into the anti-dominant (ascending) arrangement.
// ShortRootFlip: entry `first` (the last coordinate) becomes (-a)^(-eps).
struct BlockMove {
    MoveKind kind = MoveKind::PassLeft;
    std::size_t first = 0;
    std::size_t middle = 0;
    std::size_t last = 0;
};

struct StepReport {
    BlockMove move;
    bool wellDefined = true;
    bool injective = true;
    std::optional<Rational> scalar;
    std::string reason;
    SignedSeq after;
};

// Throws ScriptError on malformed ranges.
std::vector<StepReport> verify_chain(const std::vector<BlockMove>& script, SignedSeq start);

struct ChainScript {
    std::string name;
    SignedSeq start;
    std::vector<BlockMove> moves;
};

// omega and omega^h for the column (a ; b) of type D; certified by the predicates when a <= b + 1.
std::vector<ChainScript> case_one_scripts_D(int a, int b);
// First reduction steps for (c d ; e f) of type D, up to the (2 2 ; 0 0) and (2 1 ; 1 0) cells.
std::vector<ChainScript> case_two_scripts_D(int c, int d, int e, int f);
// omega and omega^h for (a ; b) of type B, ending in the (2 ; 0) and (1 ; 1) cells.
std::vector<ChainScript> case_one_scripts_B(int a, int b);
// Complementary-series padding: the comp block ((1/2 - 2t) ... (2s - 3/2)) in front of the
// anti-dominant arrangement `rest` of the remaining parameter (s - t = 0 or 1).
std::vector<ChainScript> padding_scripts_D(int s, int t, const SignedSeq& rest);

enum class RankTwo { A2, B2 };

// Product of the rank-one scalars along s_{word.back()} ... s_{word.front()} acting on nu;
// case2 (dim 4) is used when the current mu pairs nontrivially with the root. Empty on a pole.
std::optional<Rational> word_scalar(RankTwo system, const std::vector<int>& word, RationalVec nu,
                                    RationalVec mu);
// The Weyl element of the word as its action on a fixed generic vector.
RationalVec word_action(RankTwo system, const std::vector<int>& word, RationalVec v);

}  // namespace spinunitary

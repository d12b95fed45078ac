// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include "spinunitary/errors.hpp"
#include "spinunitary/glclass.hpp"
#include "spinunitary/intertwine.hpp"
#include "spinunitary/orbits.hpp"
#include "spinunitary/rewriter.hpp"
#include "spinunitary/spinclass.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

using namespace spinunitary;

namespace {

struct Check {
    std::ostringstream why;
    bool ok = true;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) why << what;
        ok = ok && cond;
    }
};

RationalVec sorted_abs(const RationalVec& v) {
    RationalVec out;
    for (const auto& x : v) out.push_back(abs_of(x));
    std::sort(out.begin(), out.end());
    return out;
}

std::string table_cell(const Verdict& v) {
    if (v.status == Status::Unitary) return v.certificate->strict ? "Brega" : "Yes";
    if (v.status == Status::NonUnitary && v.witness) return "eta(" + std::to_string(v.witness->q) + ")";
    return to_string(v.status);
}

void table_d4(Check& c) {
    auto rows = enumerate_pairs(Family::D, 4);
    c.expect(rows.size() == 12, "expected 12 rows");
    std::vector<std::pair<std::string, std::string>> expected{
        {"(4 ; 0)", "Brega"},        {"(3 1 ; 0 0)", "Yes"},        {"(3 ; 1)", "Brega"},
        {"(2 2 ; 0 0)", "eta(2)"},   {"(2 1 1 ; 0 0 0)", "Yes"},    {"(2 1 ; 1 0)", "Brega"},
        {"(2 ; 2)", "Yes"},          {"(1 1 1 1 ; 0 0 0 0)", "Yes"}, {"(1 1 1 ; 1 0 0)", "Yes"},
        {"(1 1 ; 1 1)", "Yes"},      {"(1 1 ; 2 0)", "eta(3)"},     {"(1 ; 3)", "eta(3)"}};
    int unitary = 0, brega = 0;
    for (std::size_t i = 0; i < rows.size() && i < expected.size(); ++i) {
        Verdict v = classify(combined_param(rows[i]));
        std::string cell = table_cell(v);
        unitary += v.status == Status::Unitary;
        brega += cell == "Brega";
        c.expect(format(rows[i]) == expected[i].first, "row " + std::to_string(i) + " is " + format(rows[i]));
        c.expect(cell == expected[i].second, format(rows[i]) + " gave " + cell);
    }
    c.expect(unitary == 9, "unitary count " + std::to_string(unitary));
    c.expect(brega == 3, "Brega count " + std::to_string(brega));
    auto four = to_langlands(combined_param({Family::D, {{4, 0}}}));
    c.expect(format(four.lambdaL) == "(7/2, 5/2, 3/2, 1/2, 0, -1, -2, -3)", "(4;0) lambdaL");
    c.expect(format(four.lambdaR) == "(3, 2, 1, 0, -1/2, -3/2, -5/2, -7/2)", "(4;0) lambdaR");
    auto three = to_langlands(combined_param({Family::D, {{3, 1}}}));
    c.expect(format(three.lambdaL) == "(5/2, 3/2, 1/2, -1/2, 1, 0, -1, -2)", "(3;1) lambdaL");
    c.expect(format(three.lambdaR) == "(2, 1, 0, -1, 1/2, -1/2, -3/2, -5/2)", "(3;1) lambdaR");
}

void model_orbits(Check& c) {
    for (int n = 1; n <= 6; ++n) {
        StringPairs p{Family::D, {{n, 0}}};
        OrbitColumns o = attach_orbit(p);
        std::vector<int> want{2 * n, 2 * n - 1, 1};
        c.expect(o.cols == want, "orbit for n=" + std::to_string(n));
        c.expect(orbit_dim(o) == 4LL * n * n, "dimension for n=" + std::to_string(n));
        RationalVec halfRho;
        for (HalfInt r : rho({Family::D, 2 * n})) halfRho.push_back(to_rational({r})[0] / 2);
        c.expect(sorted_abs(to_langlands(combined_param(p)).lambdaL) == sorted_abs(halfRho),
                 "lambdaL vs rho/2 for n=" + std::to_string(n));
    }
}

// Every non-increasing row of length k with entries in [lo, 5].
void rows_of(int k, int lo, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
    if (static_cast<int>(cur.size()) == k) {
        f(cur);
        return;
    }
    int top = cur.empty() ? 5 : cur.back();
    for (int v = lo; v <= top; ++v) {
        cur.push_back(v);
        rows_of(k, lo, cur, f);
        cur.pop_back();
    }
}

void codim_sweep(Check& c) {
    // the identity compares so(4n) with so(2n): type D cores only
    int cores = 0;
    for (int k = 1; k <= 4; ++k) {
        std::vector<int> xs, ys;
        rows_of(k, 1, xs, [&](const std::vector<int>& top) {
            rows_of(k, 0, ys, [&](const std::vector<int>& bottom) {
                StringPairs p{Family::D, {}};
                for (int i = 0; i < k; ++i) p.cols.push_back({top[i], bottom[i]});
                if (!is_valid(p)) return;
                UnitarityResult r = unitarity_test(p);
                if (!r.satisfied || !r.strict) return;
                ++cores;
                c.expect(codim_identity_holds(p), "identity fails at " + format(p));
            });
        });
    }
    c.expect(cores > 50, "too few strict cores: " + std::to_string(cores));
}

void rewrite_golden(Check& c) {
    PadResult r = pad_case_b({Family::D, {{5, 2}, {4, 2}, {4, 0}}});
    std::vector<int> labels;
    for (const auto& s : r.steps) labels.push_back(s.label);
    c.expect(labels == std::vector<int>{3, 4, 3, 3, 2, 1}, "labels");
    c.expect(format(r.result) == "(5 4 4 4 3 3 3 2 1 ; 4 3 3 3 2 2 2 1 0)", "final pairs " + format(r.result));
}

void typeb_golden(Check& c) {
    RationalVec in;
    for (int d : {13, 5, 1, -3, -7, -7, -11}) in.emplace_back(d, 2);
    AlphaBeta ab = decompose_alpha_beta(in);
    c.expect(ab.betas.size() == 1 && format(ab.betas[0]) == "(-11/2, -7/2, -3/2, 1/2, 5/2)", "beta");
    c.expect(format(ab.alpha) == "(-7/2, 13/2)", "alpha");
}

void properties(Check& c) {
    std::mt19937 rng(2024);

    // (a) conjugation invariance
    std::vector<StringPairs> pool;
    for (Family f : {Family::D, Family::B})
        for (int n = 1; n <= 3; ++n)
            for (auto& p : enumerate_pairs(f, n)) pool.push_back(p);
    for (int trial = 0; trial < 1000; ++trial) {
        GenuineParam base = combined_param(pool[rng() % pool.size()]);
        if (trial % 3 == 0) base.nu[0] += Rational(1, 3);
        Verdict v = classify(base);
        Verdict w = classify(spinunitary::apply(oracle::random_element(base.group.family, base.group.rank, rng), base));
        bool same = v.status == w.status && bool(v.witness) == bool(w.witness) &&
                    (!v.witness || v.witness->q == w.witness->q);
        c.expect(same, "(a) invariance");
    }

    // (b) dual involution
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        GenuineParam p{{trial % 2 ? Family::B : Family::D, n}, {}, {}};
        for (int i = 0; i < n; ++i) {
            p.mu.push_back(oracle::random_half(rng, 2));
            p.nu.push_back(Rational(static_cast<int>(rng() % 9) - 4, 2));
        }
        c.expect(hermitian_dual(hermitian_dual(p)) == p, "(b) involution");
        c.expect(classify(hermitian_dual(p)).status == classify(p).status, "(b) status");
    }

    // (c) hermitian witness against every Weyl element
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        Family f = trial % 2 ? Family::B : Family::D;
        GenuineParam p{{f, n}, {}, {}};
        for (int i = 0; i < n; ++i) {
            p.mu.push_back(oracle::random_halfint(rng, 1));
            p.nu.push_back(Rational(static_cast<int>(rng() % 5) - 2));
        }
        RationalVec neg;
        for (const auto& v : p.nu) neg.push_back(-v);
        bool brute = false;
        for (const auto& w : oracle::weyl_group(f, n)) brute |= spinunitary::apply(w, p.mu) == p.mu && spinunitary::apply(w, p.nu) == neg;
        auto w = hermitian_witness(p);
        c.expect(bool(w) == brute, "(c) existence");
        if (w) c.expect(spinunitary::apply(*w, p.mu) == p.mu && spinunitary::apply(*w, p.nu) == neg, "(c) witness");
    }

    // (d) zero and pole loci
    for (int start = -15; start <= 15; start += 2)
        for (int length = 1; length <= 5; ++length)
            for (int sign : {1, -1})
                for (int x = -41; x <= 41; x += 2) {
                    HalfIntVec chain;
                    SignedSeq signedChain;
                    for (int i = 0; i < length; ++i) {
                        chain.push_back(half(start + 4 * i));
                        signedChain.push_back({chain.back(), 1});
                    }
                    bool degenerate;
                    try {
                        degenerate = gl_move_scalar(chain, half(x), sign < 0) == Rational(0);
                    } catch (const Pole&) {
                        degenerate = true;
                    }
                    c.expect(degenerate != pass_left_ok(signedChain, {half(x), sign}), "(d) loci");
                }

    // (e) Stein boundary
    for (int a = 1; a <= 5; ++a)
        for (int den = 1; den <= 12; ++den)
            for (int num = -3 * den; num <= 3 * den; ++num) {
                Rational t(num, den);
                bool accepted = stein_verdict(a, t).status == GLStatus::UnitaryFactors;
                c.expect(accepted == (abs_of(t) < 1), "(e) boundary at " + format(t));
            }

    // (f) witness parity, (g) certificate sizes
    int violated = 0;
    for (Family f : {Family::D, Family::B})
        for (int n = 1; n <= 6; ++n)
            for (const auto& p : enumerate_pairs(f, n)) {
                UnitarityResult r = unitarity_test(p);
                Verdict v = classify(combined_param(p));
                if (r.satisfied) {
                    c.expect(v.status == Status::Unitary, "(g) status of " + format(p));
                    if (!v.certificate) continue;
                    int total = 0;
                    for (const auto& s : v.certificate->steinColumns) total += 2 * s.size();
                    if (v.certificate->core) total += 2 * v.certificate->core->size();
                    c.expect(total == 2 * n, "(g) size of " + format(p));
                    continue;
                }
                ++violated;
                c.expect(v.status == Status::NonUnitary && v.witness, "(f) status of " + format(p));
                if (!v.witness) continue;
                bool odd = v.witness->q % 2 == 1;
                bool wantOdd = (f == Family::D) == (r.kind == ViolationKind::CaseI);
                c.expect(odd == wantOdd, "(f) parity of " + format(p));
            }
    c.expect(violated > 50, "(f) too few violated parameters: " + std::to_string(violated));
}

std::vector<std::vector<int>> words_up_to(int maxLength) {
    std::vector<std::vector<int>> out{{}};
    for (std::size_t i = 0; i < out.size(); ++i)
        if (static_cast<int>(out[i].size()) < maxLength)
            for (int letter : {0, 1}) {
                auto w = out[i];
                w.push_back(letter);
                out.push_back(w);
            }
    return out;
}

void nonreduced_words(Check& c) {
    std::mt19937 rng(77);
    auto words = words_up_to(8);
    for (RankTwo system : {RankTwo::A2, RankTwo::B2}) {
        bool a2 = system == RankTwo::A2;
        RationalVec generic = a2 ? RationalVec{11, Rational(2, 7), -3} : RationalVec{11, Rational(2, 7)};
        for (int trial = 0; trial < 100; ++trial) {
            RationalVec nu, mu;
            const int primes[] = {7, 11, 13};
            for (std::size_t i = 0; i < (a2 ? 3u : 2u); ++i) {
                int k = static_cast<int>(rng() % 201) - 100;
                if (k % primes[i] == 0) ++k;
                nu.emplace_back(k, primes[i]);
                mu.emplace_back(trial % 2 && i == 0 ? 1 : 0, 2);
            }
            std::map<RationalVec, Rational> seen;
            for (const auto& w : words) {
                auto value = word_scalar(system, w, nu, mu);
                if (!value) continue;
                auto [it, fresh] = seen.emplace(word_action(system, w, generic), *value);
                c.expect(fresh || it->second == *value, "word scalars differ");
            }
            c.expect(seen.size() == (a2 ? 6u : 8u), "missing Weyl elements");
        }
    }
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"1 Spin(16) table", table_d4},
        {"2 model orbits", model_orbits},
        {"3 codimension identity", codim_sweep},
        {"4 rewriting golden", rewrite_golden},
        {"5 type B decomposition", typeb_golden},
        {"6 property suite", properties},
        {"7 non-reduced words", nonreduced_words},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Check c;
        auto start = std::chrono::steady_clock::now();
        try {
            run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::cout << (c.ok ? "PASS " : "FAIL ") << name << " (" << static_cast<int>(ms) << " ms)";
        if (!c.ok) std::cout << ": " << c.why.str();
        std::cout << "\n";
        failures += !c.ok;
    }
    return failures ? 1 : 0;
}

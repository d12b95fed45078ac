// spinunitary command line: classify, table, enumerate, rewrite, orbit, verify-chain.

#include "spinunitary/errors.hpp"
#include "spinunitary/intertwine.hpp"
#include "spinunitary/orbits.hpp"
#include "spinunitary/rewriter.hpp"
#include "spinunitary/spinclass.hpp"
#include "spinunitary/string_pairs.hpp"
#include "spinunitary/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace spinunitary;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitUnitary = 0;
constexpr int kExitParse = 2;
constexpr int kExitNonUnitary = 3;
constexpr int kExitNotHermitian = 4;

struct Options {
    bool json = false;
    std::string group = "D";
    int rank = 0;
    std::string pairs;
    std::string file;
    std::string chainCase = "one";
};

Family parse_family(const std::string& g) {
    if (g == "D" || g == "d") return Family::D;
    if (g == "B" || g == "b") return Family::B;
    throw ParseError("group must be D or B, got \"" + g + "\"");
}

Json rationals(const RationalVec& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(format(r));
    return out;
}

Json rationals(const HalfIntVec& v) { return rationals(to_rational(v)); }

std::string join(const RationalVec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + format(v[i]);
    return out;
}

Json pairs_json(const StringPairs& p) {
    Json x = Json::array(), y = Json::array();
    for (const auto& c : p.cols) {
        x.push_back(c.x);
        y.push_back(c.y);
    }
    return Json{{"x", x}, {"y", y}, {"text", format(p)}};
}

Json step_json(const InductionStep& s) {
    return Json{{"label", s.label}, {"added", s.added}, {"before", format(s.before)}, {"after", format(s.after)}};
}

Json base_json(const NormalizedBase& nb) {
    Json steps = Json::array();
    for (const auto& s : nb.steps) steps.push_back(step_json(s));
    Json stein = Json::array();
    for (const auto& s : nb.steinColumns) stein.push_back(Json::array({s.s, s.t}));
    return Json{{"kind", to_string(nb.kind)}, {"base", describe(nb)}, {"position", nb.position},
                {"steps", steps}, {"steinColumns", stein}, {"normalized", format(nb.normalized)}};
}

std::string witness_text(const SpinRelevantKType& w) {
    std::string text = "eta(" + std::to_string(w.q) + ")";
    if (w.block > 1) text += " in the |mu|=" + format(half(2 * w.block - 1)) + " block";
    return text;
}

Json verdict_json(const GenuineParam& p, const Verdict& v) {
    Json out;
    out["status"] = to_string(v.status);
    out["group"] = to_string(p.group);
    out["outer"] = v.outer;
    LanglandsPair lp = to_langlands(p);
    out["langlands"] = Json{{"lambdaL", rationals(lp.lambdaL)}, {"lambdaR", rationals(lp.lambdaR)}};
    out["pairs"] = v.pairs ? pairs_json(*v.pairs) : Json(nullptr);
    if (v.witness)
        out["witness"] = Json{{"index", v.witness->q}, {"block", v.witness->block},
                              {"weight", rationals(v.witness->weight)}, {"text", witness_text(*v.witness)}};
    else
        out["witness"] = nullptr;
    if (v.certificate) {
        const auto& c = *v.certificate;
        Json sizes = Json::array();
        for (const auto& s : c.steinColumns) sizes.push_back(s.size());
        Json factors = Json::array();
        for (const auto& f : c.steinFactors)
            factors.push_back(Json{{"a", f.a}, {"t", format(f.t)}, {"r", format(f.r)}});
        Json classFactors = Json::array();
        for (const auto& f : c.classFactors) classFactors.push_back(describe(f));
        Json cert{{"steinSizes", sizes}, {"steinFactors", factors}, {"classFactors", classFactors},
                  {"core", c.core ? Json(format(*c.core)) : Json(nullptr)}, {"strict", c.strict}};
        if (c.orbit)
            cert["orbit"] = Json{{"columns", c.orbit->cols}, {"ambient", c.orbit->ambient},
                                 {"dimension", orbit_dim(*c.orbit)}};
        else
            cert["orbit"] = nullptr;
        out["certificate"] = cert;
    } else {
        out["certificate"] = nullptr;
    }
    if (v.chain) {
        Json t{{"notes", v.chain->notes}};
        t["base"] = v.chain->base ? base_json(*v.chain->base) : Json(nullptr);
        out["transcript"] = t;
    } else {
        out["transcript"] = nullptr;
    }
    return out;
}

int exit_code(Status s) {
    switch (s) {
        case Status::Unitary: return kExitUnitary;
        case Status::NonUnitary: return kExitNonUnitary;
        default: return kExitNotHermitian;
    }
}

std::string read_input(const Options& o) {
    if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) throw ParseError("cannot open " + o.file);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

std::vector<int> int_array(const Json& j, const char* field) {
    if (!j.is_array()) throw ParseError(std::string("pairs.") + field + " must be an integer array");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer())
            throw ParseError(std::string("pairs.") + field + "[" + std::to_string(i) + "] is not an integer");
        out.push_back(j[i].get<int>());
    }
    return out;
}

RationalVec rational_array(const Json& j, const char* field) {
    if (!j.is_array()) throw ParseError(std::string(field) + " must be an array of rational strings");
    RationalVec out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string where = std::string(field) + "[" + std::to_string(i) + "]: ";
        if (j[i].is_number_integer()) {
            out.emplace_back(j[i].get<std::int64_t>());
        } else if (j[i].is_string()) {
            try {
                out.push_back(parse_rational(j[i].get<std::string>()));
            } catch (const ParseError& e) {
                throw ParseError(where + e.what());
            }
        } else {
            throw ParseError(where + "expected a string such as \"1/2\"");
        }
    }
    return out;
}

StringPairs pairs_from_columns(Family f, const std::vector<int>& x, const std::vector<int>& y) {
    if (x.size() != y.size()) throw ParseError("pairs rows have different lengths");
    StringPairs p{f, {}};
    for (std::size_t i = 0; i < x.size(); ++i) p.cols.push_back({x[i], y[i]});
    if (!is_valid(p)) throw ParseError("pairs " + format(p) + " are not a valid string array for " + to_string(f));
    return p;
}

// Either a pairs-derived parameter of the combined group, or an explicit (mu, nu).
GenuineParam read_param(const Options& o) {
    if (!o.pairs.empty()) {
        StringPairs p = parse_pairs(parse_family(o.group), o.pairs);
        if (!is_valid(p)) throw ParseError("pairs " + format(p) + " are not valid");
        return combined_param(p);
    }
    Json doc;
    try {
        doc = Json::parse(read_input(o));
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("parameter document must be a JSON object");
    if (!doc.contains("group") || !doc["group"].is_string()) throw ParseError("missing \"group\"");
    Family f = parse_family(doc["group"].get<std::string>());
    bool hasPairs = doc.contains("pairs");
    bool hasVectors = doc.contains("mu") || doc.contains("nu");
    if (hasPairs == hasVectors) throw ParseError("give exactly one of \"pairs\" or \"mu\"/\"nu\"");
    GenuineParam p;
    if (hasPairs) {
        const Json& pj = doc["pairs"];
        if (!pj.is_object() || !pj.contains("x") || !pj.contains("y"))
            throw ParseError("\"pairs\" needs integer arrays x and y");
        p = combined_param(pairs_from_columns(f, int_array(pj["x"], "x"), int_array(pj["y"], "y")));
    } else {
        if (!doc.contains("mu") || !doc.contains("nu")) throw ParseError("both \"mu\" and \"nu\" are required");
        RationalVec mu = rational_array(doc["mu"], "mu");
        p.nu = rational_array(doc["nu"], "nu");
        if (mu.size() != p.nu.size())
            throw ParseError("mu has " + std::to_string(mu.size()) + " entries but nu has " +
                             std::to_string(p.nu.size()));
        try {
            p.mu = to_half_ints(mu);
        } catch (const std::invalid_argument&) {
            throw ParseError("mu entries must be half-integers");
        }
        p.group = {f, static_cast<int>(mu.size())};
    }
    if (doc.contains("rank")) {
        if (!doc["rank"].is_number_integer()) throw ParseError("\"rank\" must be an integer");
        if (doc["rank"].get<int>() != p.group.rank)
            throw ParseError("rank " + std::to_string(doc["rank"].get<int>()) + " does not match the " +
                             std::to_string(p.group.rank) + " coordinates given");
    }
    return p;
}

StringPairs read_pairs(const Options& o) {
    if (!o.pairs.empty()) {
        StringPairs p = parse_pairs(parse_family(o.group), o.pairs);
        if (!is_valid(p)) throw ParseError("pairs " + format(p) + " are not valid");
        return p;
    }
    Json doc;
    try {
        doc = Json::parse(read_input(o));
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("JSON: ") + e.what());
    }
    if (!doc.contains("pairs")) throw ParseError("document has no \"pairs\"");
    Family f = doc.contains("group") ? parse_family(doc["group"].get<std::string>()) : parse_family(o.group);
    return pairs_from_columns(f, int_array(doc["pairs"]["x"], "x"), int_array(doc["pairs"]["y"], "y"));
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_classify(const Options& o) {
    GenuineParam p = read_param(o);
    Verdict v = classify(p);
    if (o.json) {
        print(verdict_json(p, v));
        return exit_code(v.status);
    }
    std::cout << "group: " << to_string(p.group) << "\n";
    std::cout << "status: " << to_string(v.status) << "\n";
    if (v.pairs) std::cout << "pairs: " << format(*v.pairs) << "\n";
    if (v.witness) std::cout << "witness: " << witness_text(*v.witness) << " " << format(v.witness->weight) << "\n";
    if (v.certificate) {
        const auto& c = *v.certificate;
        std::cout << "certificate:";
        for (const auto& s : c.steinColumns) std::cout << " comp(" << s.size() << ")";
        for (const auto& f : c.classFactors) std::cout << " " << describe(f);
        if (c.core) std::cout << " core " << format(*c.core) << (c.strict ? " (Brega)" : "");
        std::cout << "\n";
        if (c.orbit) {
            std::cout << "orbit of so(" << c.orbit->ambient << "): columns";
            for (int col : c.orbit->cols) std::cout << " " << col;
            std::cout << ", dim " << orbit_dim(*c.orbit) << "\n";
        }
    }
    if (v.chain)
        for (const auto& n : v.chain->notes) std::cout << "note: " << n << "\n";
    return exit_code(v.status);
}

std::string verdict_cell(const Verdict& v) {
    if (v.status == Status::Unitary)
        return v.certificate && v.certificate->strict ? "Yes - " + std::string(v.pairs && v.pairs->family == Family::B ? "unipotent" : "Brega") : "Yes";
    if (v.status == Status::NonUnitary) return v.witness ? "No - " + witness_text(*v.witness) : "No";
    return to_string(v.status);
}

int cmd_table(const Options& o, bool withLanglands) {
    Family f = parse_family(o.group);
    if (o.rank < 1) throw ParseError("--rank must be at least 1");
    Json rows = Json::array();
    for (const auto& p : enumerate_pairs(f, o.rank)) {
        GenuineParam param = combined_param(p);
        Verdict v = classify(param);
        LanglandsPair lp = to_langlands(param);
        if (o.json) {
            Json row = verdict_json(param, v);
            row["parameter"] = format(p);
            row["cell"] = verdict_cell(v);
            rows.push_back(row);
            continue;
        }
        std::cout << format(p);
        if (withLanglands) std::cout << "  J(" << join(lp.lambdaL) << " ; " << join(lp.lambdaR) << ")";
        std::cout << "  " << verdict_cell(v) << "\n";
    }
    if (o.json) print(rows);
    return 0;
}

// Padding transcript of the induction lemma (case a when some x < y, staircase case b otherwise),
// followed by the normalized base block.
int cmd_rewrite(const Options& o) {
    StringPairs p = read_pairs(o);
    bool caseA = std::any_of(p.cols.begin(), p.cols.end(), [](const Column& c) { return c.x < c.y; });
    PadResult pad = caseA ? pad_case_a(p) : pad_case_b(p);
    NormalizedBase nb = normalize_to_base(p);
    if (o.json) {
        Json steps = Json::array();
        Json labels = Json::array();
        for (const auto& s : pad.steps) {
            steps.push_back(step_json(s));
            labels.push_back(s.label);
        }
        print(Json{{"input", format(p)},
                   {"padding", caseA ? "a" : "b"},
                   {"steps", steps},
                   {"labels", labels},
                   {"final", format(pad.result)},
                   {"normalized", base_json(nb)}});
        return 0;
    }
    std::cout << format(p);
    for (const auto& s : pad.steps) std::cout << " --(" << s.label << ")--> " << format(s.after);
    std::cout << "\nlabels:";
    for (const auto& s : pad.steps) std::cout << " " << s.label;
    std::cout << "\nfinal: " << format(pad.result) << "\n";
    std::cout << "base: " << describe(nb);
    if (!nb.steps.empty()) std::cout << " after " << nb.steps.size() << " steps, at " << format(nb.normalized);
    std::cout << "\n";
    return 0;
}

int cmd_orbit(const Options& o) {
    StringPairs p = read_pairs(o);
    OrbitColumns orbit = attach_orbit(p);
    OrbitColumns special = special_orbit(p);
    bool identity = codim_identity_holds(p);
    if (o.json) {
        print(Json{{"pairs", format(p)},
                   {"columns", orbit.cols},
                   {"ambient", orbit.ambient},
                   {"dimension", orbit_dim(orbit)},
                   {"special", Json{{"columns", special.cols}, {"ambient", special.ambient},
                                    {"dimension", orbit_dim(special)}}},
                   {"codimIdentity", identity}});
        return 0;
    }
    std::cout << "orbit of so(" << orbit.ambient << "): columns";
    for (int c : orbit.cols) std::cout << " " << c;
    std::cout << ", dim " << orbit_dim(orbit) << "\n";
    std::cout << "special orbit of so(" << special.ambient << "): columns";
    for (int c : special.cols) std::cout << " " << c;
    std::cout << ", dim " << orbit_dim(special) << "\n";
    std::cout << "codimension identity: " << (identity ? "holds" : "fails") << "\n";
    return 0;
}

int cmd_verify_chain(const Options& o) {
    StringPairs p = read_pairs(o);
    std::vector<ChainScript> scripts;
    if (o.chainCase == "one") {
        if (p.cols.size() != 1) throw ParseError("case one takes a single column (a ; b)");
        scripts = p.family == Family::D ? case_one_scripts_D(p.cols[0].x, p.cols[0].y)
                                        : case_one_scripts_B(p.cols[0].x, p.cols[0].y);
    } else if (o.chainCase == "two") {
        if (p.family != Family::D || p.cols.size() != 2) throw ParseError("case two takes D columns (c d ; e f)");
        scripts = case_two_scripts_D(p.cols[0].x, p.cols[1].x, p.cols[0].y, p.cols[1].y);
    } else if (o.chainCase == "padding") {
        if (p.family != Family::D || p.cols.empty()) throw ParseError("padding takes D columns (s x.. ; t y..)");
        StringPairs rest{Family::D, {p.cols.begin() + 1, p.cols.end()}};
        RationalVec values = half_class_values(rest);
        std::sort(values.begin(), values.end());
        SignedSeq tail;
        for (const auto& v : values) tail.push_back({HalfInt::from_rational(v), 1});
        scripts = padding_scripts_D(p.cols[0].x, p.cols[0].y, tail);
    } else {
        throw ParseError("--case must be one, two or padding");
    }
    Json out = Json::array();
    bool allPass = true;
    for (const auto& s : scripts) {
        auto reports = verify_chain(s.moves, s.start);
        Json steps = Json::array();
        if (!o.json) std::cout << s.name << ": " << format(s.start) << "\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            bool ok = r.wellDefined && r.injective;
            allPass = allPass && ok;
            if (o.json) {
                steps.push_back(Json{{"kind", to_string(r.move.kind)},
                                     {"range", Json::array({r.move.first, r.move.middle, r.move.last})},
                                     {"wellDefined", r.wellDefined},
                                     {"injective", r.injective},
                                     {"scalar", r.scalar ? Json(format(*r.scalar)) : Json(nullptr)},
                                     {"reason", r.reason},
                                     {"after", format(r.after)}});
            } else {
                std::cout << "  " << i + 1 << ". " << to_string(r.move.kind) << " " << (ok ? "ok" : "FAILS") << " ("
                          << r.reason << ")";
                if (r.scalar) std::cout << " scalar " << format(*r.scalar);
                std::cout << " -> " << format(r.after) << "\n";
            }
        }
        if (o.json) out.push_back(Json{{"name", s.name}, {"start", format(s.start)}, {"steps", steps}});
    }
    if (o.json)
        print(Json{{"pairs", format(p)}, {"scripts", out}, {"allPass", allPass}});
    else
        std::cout << (allPass ? "all steps pass" : "some step has no certifying predicate") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unitarity of genuine Hermitian representations of complex Spin groups"};
    app.require_subcommand(1);
    Options o;
    std::string positionalGroup;
    int positionalRank = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "JSON output");
        sub->add_option("--group", o.group, "D or B");
        sub->add_option("--pairs", o.pairs, "string pairs \"x1,x2;y1,y2\"");
        sub->add_option("--file", o.file, "parameter document (default: stdin)");
    };
    auto* classifyCmd = app.add_subcommand("classify", "classify a parameter");
    add_common(classifyCmd);
    auto* tableCmd = app.add_subcommand("table", "all t=1/2 parameters of the combined group, with verdicts");
    auto* enumerateCmd = app.add_subcommand("enumerate", "list the string pairs with sum n and their verdicts");
    for (auto* sub : {tableCmd, enumerateCmd}) {
        add_common(sub);
        sub->add_option("--rank", o.rank, "n, the size of one half-block");
        sub->add_option("family", positionalGroup, "D or B");
        sub->add_option("n", positionalRank, "n, as a positional argument");
    }
    auto* rewriteCmd = app.add_subcommand("rewrite", "induction transcript down to a base case");
    add_common(rewriteCmd);
    auto* orbitCmd = app.add_subcommand("orbit", "attached nilpotent orbit of a strict core");
    add_common(orbitCmd);
    auto* chainCmd = app.add_subcommand("verify-chain", "replay an intertwining-operator chain");
    add_common(chainCmd);
    chainCmd->add_option("--case", o.chainCase, "one, two or padding");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }
    if (!positionalGroup.empty()) o.group = positionalGroup;
    if (positionalRank > 0) o.rank = positionalRank;

    try {
        if (classifyCmd->parsed()) return cmd_classify(o);
        if (tableCmd->parsed()) return cmd_table(o, true);
        if (enumerateCmd->parsed()) return cmd_table(o, false);
        if (rewriteCmd->parsed()) return cmd_rewrite(o);
        if (orbitCmd->parsed()) return cmd_orbit(o);
        if (chainCmd->parsed()) return cmd_verify_chain(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DimensionError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonUnitary;
    }
    return kExitParse;
}

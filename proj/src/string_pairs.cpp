#include "spinunitary/string_pairs.hpp"

#include "spinunitary/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace spinunitary {

int StringPairs::size() const {
    int s = 0;
    for (const auto& c : cols) s += c.x + c.y;
    return s;
}

bool is_valid(const StringPairs& p) {
    for (std::size_t i = 0; i < p.cols.size(); ++i) {
        const Column& c = p.cols[i];
        if (c.x < 0 || c.y < 0) return false;
        if (p.family == Family::D && c.x < 1) return false;
        if (p.family == Family::B && c.x == 0 && c.y == 0) return false;
        if (i > 0 && (p.cols[i - 1].x < c.x || p.cols[i - 1].y < c.y)) return false;
    }
    return true;
}

std::string format(const StringPairs& p) {
    std::string top, bottom;
    for (std::size_t i = 0; i < p.cols.size(); ++i) {
        if (i) { top += ' '; bottom += ' '; }
        top += std::to_string(p.cols[i].x);
        bottom += std::to_string(p.cols[i].y);
    }
    return "(" + top + " ; " + bottom + ")";
}

namespace {
std::vector<int> parse_row(const std::string& row, const std::string& whole) {
    std::vector<int> out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || v < 0)
            throw ParseError("bad entry \"" + token + "\" in pairs \"" + whole + "\"");
        out.push_back(v);
        token.clear();
    };
    for (char ch : row) {
        if (ch == ',' || ch == ' ' || ch == '\t') flush();
        else token += ch;
    }
    flush();
    return out;
}
}  // namespace

StringPairs parse_pairs(Family f, const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
        throw ParseError("pairs must look like \"x1,x2;y1,y2\", got \"" + text + "\"");
    std::vector<int> top = parse_row(text.substr(0, semi), text);
    std::vector<int> bottom = parse_row(text.substr(semi + 1), text);
    if (top.size() != bottom.size())
        throw ParseError("pairs \"" + text + "\" have rows of different length");
    StringPairs p{f, {}};
    for (std::size_t i = 0; i < top.size(); ++i) p.cols.push_back({top[i], bottom[i]});
    if (!is_valid(p)) throw ParseError("pairs \"" + text + "\" are not valid for family " + to_string(f));
    return p;
}

StringPairs resorted(Family f, std::vector<int> top, std::vector<int> bottom) {
    std::sort(top.begin(), top.end(), std::greater<>());
    std::sort(bottom.begin(), bottom.end(), std::greater<>());
    StringPairs p{f, {}};
    for (std::size_t i = 0; i < top.size(); ++i) p.cols.push_back({top[i], bottom[i]});
    return p;
}

RationalVec half_class_values(const StringPairs& p) {
    RationalVec out;
    for (const auto& c : p.cols) {
        Rational top = Rational(4 * c.x - 3, 2);
        if (c.x == 0) top = Rational(-3, 2);
        Rational bottom = Rational(1, 2) - 2 * c.y;
        for (Rational v = top; v >= bottom; v -= 2) out.push_back(v);
    }
    return out;
}

GenuineParam combined_param(const StringPairs& p) {
    RationalVec n = half_class_values(p);
    std::sort(n.begin(), n.end(), std::greater<>());
    RationalVec neg;
    for (const auto& v : n) neg.push_back(-v);
    std::sort(neg.begin(), neg.end(), std::greater<>());
    GenuineParam g;
    g.group = {p.family, 2 * static_cast<int>(n.size())};
    g.mu.assign(2 * n.size(), half(1));
    g.nu = n;
    g.nu.insert(g.nu.end(), neg.begin(), neg.end());
    return g;
}

UnitarityResult unitarity_test(const StringPairs& p) {
    UnitarityResult r;
    r.strict = true;
    const auto& c = p.cols;
    auto fail = [&](std::size_t i, ViolationKind k, std::string ineq) {
        r.satisfied = false;
        r.strict = false;
        r.position = static_cast<int>(i) + 1;
        r.kind = k;
        r.inequality = std::move(ineq);
        return r;
    };
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::string at = std::to_string(i + 1), next = std::to_string(i + 2);
        if (p.family == Family::D) {
            if (c[i].x < c[i].y) return fail(i, ViolationKind::CaseI, "x" + at + " < y" + at);
            if (c[i].x == c[i].y) r.strict = false;
            if (i + 1 < c.size()) {
                if (c[i].y + 1 < c[i + 1].x)
                    return fail(i, ViolationKind::CaseII, "y" + at + "+1 < x" + next);
                if (c[i].y + 1 == c[i + 1].x) r.strict = false;
            }
        } else {
            if (c[i].y + 1 < c[i].x) return fail(i, ViolationKind::CaseI, "y" + at + "+1 < x" + at);
            if (c[i].y + 1 == c[i].x) r.strict = false;
            if (i + 1 < c.size()) {
                if (c[i].x < c[i + 1].y)
                    return fail(i, ViolationKind::CaseII, "x" + at + " < y" + next);
                if (c[i].x == c[i + 1].y) r.strict = false;
            }
        }
    }
    return r;
}

namespace {
// Non-increasing sequences of the given length, entries in [lo, hi], with the given sum.
void rows(int length, int sum, int lo, int hi, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == length) {
        if (sum == 0) out.push_back(cur);
        return;
    }
    int remaining = length - static_cast<int>(cur.size());
    for (int v = std::min(hi, sum - lo * (remaining - 1)); v >= lo; --v) {
        if (v * remaining < sum) break;
        cur.push_back(v);
        rows(length, sum - v, lo, v, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<StringPairs> enumerate_pairs(Family f, int n) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> found;
    int xmin = f == Family::D ? 1 : 0;
    for (int k = 1; k <= n; ++k) {
        for (int sx = xmin * k; sx <= n; ++sx) {
            std::vector<std::vector<int>> xs, ys;
            std::vector<int> cur;
            rows(k, sx, xmin, sx, cur, xs);
            rows(k, n - sx, 0, n - sx, cur, ys);
            for (const auto& x : xs)
                for (const auto& y : ys) {
                    if (x.back() == 0 && y.back() == 0) continue;
                    found.emplace_back(x, y);
                }
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<StringPairs> out;
    for (const auto& [x, y] : found) {
        StringPairs p{f, {}};
        for (std::size_t i = 0; i < x.size(); ++i) p.cols.push_back({x[i], y[i]});
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace spinunitary

namespace spinunitary {

bool is_stein_shaped(const Column& c) { return c.x - c.y == 0 || c.x - c.y == 1; }

Peeling peel(const StringPairs& p) {
    Peeling out{{}, p};
    auto& c = out.core.cols;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < c.size() && !changed; ++i) {
            bool hasNext = i + 1 < c.size();
            if (p.family == Family::D) {
                if (c[i].x == c[i].y) {
                    out.stein.push_back({c[i].x, c[i].x});
                    c.erase(c.begin() + i);
                    changed = true;
                } else if (hasNext && c[i].y + 1 == c[i + 1].x) {
                    out.stein.push_back({c[i + 1].x, c[i].y});
                    c[i] = {c[i].x, c[i + 1].y};
                    c.erase(c.begin() + i + 1);
                    changed = true;
                }
            } else {
                if (c[i].y + 1 == c[i].x) {
                    out.stein.push_back({c[i].x, c[i].y});
                    c.erase(c.begin() + i);
                    changed = true;
                } else if (hasNext && c[i].x == c[i + 1].y) {
                    out.stein.push_back({c[i].x, c[i + 1].y});
                    c[i] = {c[i + 1].x, c[i].y};
                    c.erase(c.begin() + i + 1);
                    if (c[i].x == 0 && c[i].y == 0) c.erase(c.begin() + i);
                    changed = true;
                }
            }
        }
    }
    return out;
}

}  // namespace spinunitary

#include "spinunitary/rewriter.hpp"

#include <algorithm>

namespace spinunitary {

namespace {

constexpr int kStepLimit = 4096;

StringPairs insert_column(const StringPairs& p, int top, int bottom) {
    std::vector<int> xs, ys;
    for (const auto& c : p.cols) {
        xs.push_back(c.x);
        ys.push_back(c.y);
    }
    xs.push_back(top);
    ys.push_back(bottom);
    return resorted(p.family, std::move(xs), std::move(ys));
}

InductionStep case_a_step(const StringPairs& p, const Column& col) {
    StringPairs after = insert_column(p, col.x + 1, col.x);
    return {col.x + 1, 2 * col.x + 1, p, after};
}

InductionStep case_b_step(const StringPairs& p, const Column& col) {
    int a = col.y > 0 ? col.y + 1 : col.x - 1;
    StringPairs after = insert_column(p, a, a);
    return {a, 2 * a, p, after};
}

struct BaseMatch {
    bool found = false;
    NormalizedBase base;
};

// Exactly one base block at the leftmost violation, every other column Stein-shaped.
BaseMatch match_base(const StringPairs& p) {
    BaseMatch m;
    UnitarityResult r = unitarity_test(p);
    if (r.satisfied) return m;
    std::size_t first = static_cast<std::size_t>(r.position - 1);
    std::size_t last = r.kind == ViolationKind::CaseII ? first + 1 : first;
    NormalizedBase& nb = m.base;
    for (std::size_t i = 0; i < p.cols.size(); ++i) {
        if (i >= first && i <= last) continue;
        if (!is_stein_shaped(p.cols[i])) return m;
        nb.steinColumns.push_back({p.cols[i].x, p.cols[i].y});
    }
    nb.position = r.position;
    nb.normalized = p;
    if (r.kind == ViolationKind::CaseI) {
        nb.kind = BaseKind::CaseI;
        nb.a = p.cols[first].x;
        nb.b = p.cols[first].y;
    } else {
        nb.kind = BaseKind::CaseII;
        nb.c = p.cols[first].x;
        nb.d = p.cols[last].x;
        nb.e = p.cols[first].y;
        nb.f = p.cols[last].y;
    }
    m.found = true;
    return m;
}

}  // namespace

PadResult pad_case_a(const StringPairs& p) {
    PadResult out{{}, p};
    for (int guard = 0; guard < kStepLimit; ++guard) {
        auto it = std::find_if(out.result.cols.begin(), out.result.cols.end(),
                               [](const Column& c) { return c.x < c.y; });
        if (it == out.result.cols.end()) break;
        out.steps.push_back(case_a_step(out.result, *it));
        out.result = out.steps.back().after;
    }
    return out;
}

PadResult pad_case_b(const StringPairs& p) {
    PadResult out{{}, p};
    for (int guard = 0; guard < kStepLimit; ++guard) {
        auto it = std::find_if(out.result.cols.begin(), out.result.cols.end(),
                               [](const Column& c) { return c.y != c.x - 1; });
        if (it == out.result.cols.end()) break;
        InductionStep step = case_b_step(out.result, *it);
        if (step.label < 1) break;
        out.steps.push_back(std::move(step));
        out.result = out.steps.back().after;
    }
    return out;
}

NormalizedBase normalize_to_base(const StringPairs& p) {
    if (unitarity_test(p).satisfied) {
        NormalizedBase nb;
        nb.kind = BaseKind::None;
        nb.steinColumns = peel(p).stein;
        nb.normalized = p;
        return nb;
    }
    std::vector<InductionStep> steps;
    StringPairs state = p;
    for (int guard = 0; guard < kStepLimit; ++guard) {
        BaseMatch m = match_base(state);
        if (m.found) {
            m.base.steps = std::move(steps);
            return m.base;
        }
        UnitarityResult r = unitarity_test(state);
        if (r.satisfied) break;
        std::size_t first = static_cast<std::size_t>(r.position - 1);
        std::size_t last = r.kind == ViolationKind::CaseII ? first + 1 : first;
        std::size_t target = state.cols.size();
        for (std::size_t i = 0; i < state.cols.size(); ++i)
            if ((i < first || i > last) && !is_stein_shaped(state.cols[i])) { target = i; break; }
        if (target == state.cols.size()) break;
        const Column& col = state.cols[target];
        InductionStep step = col.x < col.y ? case_a_step(state, col) : case_b_step(state, col);
        if (step.label < 1) break;
        state = step.after;
        steps.push_back(std::move(step));
    }
    NormalizedBase nb;
    nb.kind = BaseKind::Unpinned;
    nb.steps = std::move(steps);
    nb.normalized = state;
    return nb;
}

std::string to_string(BaseKind k) {
    switch (k) {
        case BaseKind::None: return "None";
        case BaseKind::CaseI: return "CaseI";
        case BaseKind::CaseII: return "CaseII";
        case BaseKind::Unpinned: return "Unpinned";
    }
    return "?";
}

std::string describe(const NormalizedBase& nb) {
    switch (nb.kind) {
        case BaseKind::CaseI:
            return "CaseI(a=" + std::to_string(nb.a) + ", b=" + std::to_string(nb.b) + ")";
        case BaseKind::CaseII:
            return "CaseII(c=" + std::to_string(nb.c) + ", d=" + std::to_string(nb.d) +
                   ", e=" + std::to_string(nb.e) + ", f=" + std::to_string(nb.f) + ")";
        default:
            return to_string(nb.kind);
    }
}

}  // namespace spinunitary

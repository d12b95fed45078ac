#pragma once

#include "spinunitary/string_pairs.hpp"

#include <string>
#include <vector>

namespace spinunitary {

// One induction by a complementary series: `label` is the arrow annotation a of
// the induced comp_{1/2}(2a, 1/2)-style factor; `added` is the growth of sum(x + y).
struct InductionStep {
    int label = 0;
    int added = 0;
    StringPairs before;
    StringPairs after;
};

struct PadResult {
    std::vector<InductionStep> steps;
    StringPairs result;
};

// Columns with x < y are grown to x = y by inserting (x+1 ; x) at the first offender.
PadResult pad_case_a(const StringPairs& p);

// Staircase padding: at the first column with y != x-1 insert a into both rows, with
// a = y+1 when y > 0 and a = x-1 otherwise.
PadResult pad_case_b(const StringPairs& p);

enum class BaseKind { None, CaseI, CaseII, Unpinned };

struct NormalizedBase {
    std::vector<InductionStep> steps;
    std::vector<SteinColumn> steinColumns;
    BaseKind kind = BaseKind::None;
    int a = 0, b = 0;              // CaseI
    int c = 0, d = 0, e = 0, f = 0;  // CaseII
    int position = 0;              // 1-based first column of the base block
    StringPairs normalized;
};

NormalizedBase normalize_to_base(const StringPairs& p);

std::string to_string(BaseKind k);
std::string describe(const NormalizedBase& nb);

}  // namespace spinunitary

#pragma once

#include "spinunitary/numbers.hpp"
#include "spinunitary/weyl.hpp"

#include <string>
#include <vector>

namespace spinunitary {

struct Column {
    int x = 0;
    int y = 0;
    bool operator==(const Column&) const = default;
};

// Two-row array (x_1 ... x_k ; y_1 ... y_k) describing the t = 1/2 class.
struct StringPairs {
    Family family = Family::D;
    std::vector<Column> cols;

    int size() const;  // sum of x_i + y_i
    bool operator==(const StringPairs&) const = default;
};

// Rows non-increasing; D needs every x_i >= 1; B forbids (0,0) and x_i y_j mixing signs.
bool is_valid(const StringPairs& p);
std::string format(const StringPairs& p);  // "(4 3 ; 1 0)"
StringPairs parse_pairs(Family f, const std::string& text);  // "x1,x2;y1,y2" or "x1 x2 ; y1 y2"

// Sorts both rows non-increasing and re-pairs them column by column.
StringPairs resorted(Family f, std::vector<int> top, std::vector<int> bottom);

// The t = 1/2 class values: D column (x,y) is 2x-3/2, ..., 1/2-2y; B column is 2x-3/2, ..., 1/2-2y
// with the x = 0 convention that the chain starts at -3/2.
RationalVec half_class_values(const StringPairs& p);

// Parameter of the combined group D_{2n} or B_{2n}: mu = (1/2)^{2n}, nu = N sorted, then -N sorted.
GenuineParam combined_param(const StringPairs& p);

// Columns with x - y in {0, 1}, the shape of an induced Stein factor.
struct SteinColumn {
    int s = 0;
    int t = 0;
    int size() const { return s + t; }
    bool operator==(const SteinColumn&) const = default;
};

enum class ViolationKind { None, CaseI, CaseII };

struct UnitarityResult {
    bool satisfied = true;
    bool strict = false;
    int position = 0;  // 1-based column of the first failing inequality
    ViolationKind kind = ViolationKind::None;
    std::string inequality;
};

UnitarityResult unitarity_test(const StringPairs& p);

std::vector<StringPairs> enumerate_pairs(Family f, int n);

struct Peeling {
    std::vector<SteinColumn> stein;
    StringPairs core;
};

// Peels equalities leftmost first until only strict inequalities remain.
// D: x_i = y_i gives (x_i, x_i); y_i + 1 = x_{i+1} gives (x_{i+1}, y_i) and merges the
// neighbours into (x_i, y_{i+1}). B: y_i + 1 = x_i gives (x_i, y_i); x_i = y_{i+1} gives
// (x_i, y_{i+1}) and merges into (x_{i+1}, y_i).
Peeling peel(const StringPairs& p);

bool is_stein_shaped(const Column& c);

}  // namespace spinunitary

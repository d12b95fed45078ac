#include "spinunitary/orbits.hpp"

#include "spinunitary/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace spinunitary {

namespace {
OrbitColumns finish(std::vector<int> cols, int ambient) {
    cols.erase(std::remove(cols.begin(), cols.end(), 0), cols.end());
    int sum = std::accumulate(cols.begin(), cols.end(), 0);
    if (sum + 1 == ambient) cols.push_back(1);
    std::sort(cols.begin(), cols.end(), std::greater<>());
    return {std::move(cols), ambient};
}
}  // namespace

OrbitColumns attach_orbit(const StringPairs& p) {
    UnitarityResult r = unitarity_test(p);
    if (!r.satisfied || !r.strict)
        throw NotStrictCore("pairs " + format(p) + " do not satisfy the strict inequalities");
    std::vector<int> cols;
    for (const auto& c : p.cols) {
        // A B column with x = 0 contributes (0, 0) in place of (2x, 2x-1).
        int below = c.x == 0 ? 0 : 2 * c.x - 1;
        cols.insert(cols.end(), {2 * c.x, below, 2 * c.y + 1, 2 * c.y});
    }
    int n = p.size();
    return finish(std::move(cols), p.family == Family::D ? 4 * n : 4 * n + 1);
}

std::vector<int> transpose(std::vector<int> cols) {
    std::sort(cols.begin(), cols.end(), std::greater<>());
    std::vector<int> rows;
    if (cols.empty()) return rows;
    for (int level = 1; level <= cols.front(); ++level)
        rows.push_back(static_cast<int>(std::count_if(cols.begin(), cols.end(), [&](int c) { return c >= level; })));
    return rows;
}

std::int64_t nilcone_dim(int ambient) {
    std::int64_t n = ambient;
    return n * (n - 1) / 2 - n / 2;
}

std::int64_t orbit_dim(const OrbitColumns& o) {
    std::int64_t n = o.ambient;
    std::int64_t squares = 0;
    for (int c : o.cols) squares += static_cast<std::int64_t>(c) * c;
    std::vector<int> rows = transpose(o.cols);
    std::int64_t odd = std::count_if(rows.begin(), rows.end(), [](int r) { return r % 2 != 0; });
    return n * (n - 1) / 2 - (squares - odd) / 2;
}

OrbitColumns special_orbit(const StringPairs& p) {
    std::vector<int> cols;
    for (const auto& c : p.cols) cols.insert(cols.end(), {2 * c.x, 2 * c.y});
    int n = p.size();
    return finish(std::move(cols), p.family == Family::D ? 2 * n : 2 * n + 1);
}

bool codim_identity_holds(const StringPairs& p) {
    OrbitColumns big = attach_orbit(p);
    OrbitColumns small = special_orbit(p);
    return nilcone_dim(big.ambient) - orbit_dim(big) == 2 * (nilcone_dim(small.ambient) - orbit_dim(small));
}

}  // namespace spinunitary

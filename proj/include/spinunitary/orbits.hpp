#pragma once

#include "spinunitary/string_pairs.hpp"

#include <cstdint>
#include <vector>

namespace spinunitary {

struct OrbitColumns {
    std::vector<int> cols;  // non-increasing, no zeros
    int ambient = 0;        // N for so(N)
    bool operator==(const OrbitColumns&) const = default;
};

// Throws NotStrictCore unless the pairs satisfy the strict inequalities.
OrbitColumns attach_orbit(const StringPairs& p);

std::vector<int> transpose(std::vector<int> cols);
std::int64_t orbit_dim(const OrbitColumns& o);
std::int64_t nilcone_dim(int ambient);

// Orbit in so(2n) (resp. so(2n+1)) with columns 2x_i, 2y_i.
OrbitColumns special_orbit(const StringPairs& p);

bool codim_identity_holds(const StringPairs& p);

}  // namespace spinunitary

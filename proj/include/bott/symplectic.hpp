#pragma once

#include "bott/core.hpp"
#include "bott/rational.hpp"

#include <cstdint>
#include <vector>

namespace bott {

Int hirzebruch_compat_count(const Rat& k1, const Rat& k2);

// Halved parameters: the tower under test is M3(2a, 2b, 2c).
bool stage3_compatible(std::int64_t a, std::int64_t b, std::int64_t c, const std::vector<Rat>& k);

struct CompatCounts {
    Int n_b0, n_bne0, n_b;
};
CompatCounts count_compatible(const Rat& k1, const Rat& k2, const Rat& k3);

struct CompatibleClass {
    std::int64_t a, b, c;  // halved parameters after sign normalization
    BottMatrix tower;      // M3(2a, 2b, 2c)
    BottMatrix canonical;  // lexicographic minimum of its equivalence orbit
};
std::vector<CompatibleClass> enumerate_compatible(const Rat& k1, const Rat& k2, const Rat& k3);

struct GrowthBounds {
    Rat b0_lower, b0_upper, bne0_lower, bne0_upper;
};
// Bounds for k3 = 1; the log terms are the harmonic number H_{k2-1}.
GrowthBounds growth_bounds(const Int& k1, const Int& k2);

bool product_class_is_kahler(const BottMatrix& A, const std::vector<Rat>& k);
bool twist1_compatible(const std::vector<std::int64_t>& k, const std::vector<Rat>& r);

}  // namespace bott

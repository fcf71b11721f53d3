#pragma once

#include "bott/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bott {

enum class QTrivialType { Product3, M1xM2, M3partition };
const char* qtype_name(QTrivialType t);

struct Stage3Invariants {
    Int p;                      // p_1 = p * x1 x2
    int w2 = 0;                 // bit 0: x1 coefficient, bit 1: x2 coefficient
    bool q_trivial = false;
    std::optional<QTrivialType> q_trivial_type;
    std::string diffeo_key;     // equal keys <=> diffeomorphic
};

std::string w2_name(int w2);

Stage3Invariants stage3_invariants(std::int64_t a, std::int64_t b, std::int64_t c);

struct Triple {
    std::int64_t a, b, c;
};
bool stage3_diffeomorphic(const Triple& t1, const Triple& t2);

bool twist1_diffeomorphic(const std::vector<std::int64_t>& k, const std::vector<std::int64_t>& kp);

// Sign patterns of |k| modulo the global flip and permutations of equal entries.
std::int64_t twist1_class_count_bruteforce(const std::vector<std::int64_t>& k);
// 2^{N-1}; NonGeneric when some |k_i| coincide.
std::int64_t twist1_class_count(const std::vector<std::int64_t>& k);

}  // namespace bott

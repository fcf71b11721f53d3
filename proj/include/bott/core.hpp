#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bott {

// Lower-triangular unipotent integer matrix.  Entries are addressed 0-based as
// (row, column); stage indices in the public API (k in tau_k, x_k, ...) are
// 1-based.  For stage 3, M3(a,b,c) has (1,0)=a, (2,0)=b, (2,1)=c.
class BottMatrix {
public:
    explicit BottMatrix(int n = 1);
    static BottMatrix identity(int n) { return BottMatrix(n); }
    static BottMatrix stage3(std::int64_t a, std::int64_t b, std::int64_t c);
    // Throws InvalidArgument unless rows form a lower-triangular unipotent matrix.
    static BottMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    int n() const { return n_; }
    std::int64_t operator()(int i, int j) const { return e_[i * n_ + j]; }
    void set(int i, int j, std::int64_t v) { e_[i * n_ + j] = v; }
    std::vector<std::vector<std::int64_t>> rows() const;
    const std::vector<std::int64_t>& entries() const { return e_; }

    friend bool operator==(const BottMatrix& a, const BottMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator<(const BottMatrix& a, const BottMatrix& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.e_ < b.e_;
    }

    std::string str() const;

private:
    int n_;
    std::vector<std::int64_t> e_;
};

// Permutations are 0-based: sigma[j] is the image of j.
using Permutation = std::vector<int>;

struct EquivalenceMove {
    enum class Kind { FiberInversion, PermutationConjugation };
    Kind kind;
    int k = 0;          // 1-based, for FiberInversion
    Permutation sigma;  // for PermutationConjugation
};

struct OrbitEdge {
    int from, to;  // indices into representatives
    EquivalenceMove move;
};

struct OrbitReport {
    std::vector<BottMatrix> representatives;  // sorted
    BottMatrix canonical;
    std::vector<OrbitEdge> moves;
};

int twist(const BottMatrix& A);
int cotwist(const BottMatrix& A);
BottMatrix inverse(const BottMatrix& A);

// Block action of (sigma, flips) in Sym_n x Z_2^n: A' = (P - AQ)^{-1}(AP - Q),
// where column j of P (flips[j] false) or Q (flips[j] true) is e_{sigma(j)}.
// Empty when P - AQ is not unimodular or A' is not lower-triangular unipotent.
std::optional<BottMatrix> block_action(const BottMatrix& A, const Permutation& sigma,
                                       const std::vector<bool>& flips);

BottMatrix fiber_inversion(const BottMatrix& A, int k);
std::optional<BottMatrix> permutation_conjugate(const BottMatrix& A, const Permutation& sigma);

OrbitReport equivalence_orbit(const BottMatrix& A, int stage_bound = 8);
bool orbit_contains(const OrbitReport& orbit, const BottMatrix& B);

// Orbit member whose first n - twist rows of A' - I vanish.
BottMatrix normalize_twist(const BottMatrix& A);

}  // namespace bott

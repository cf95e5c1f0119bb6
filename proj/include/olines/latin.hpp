#pragma once

// Diagonal Latin squares and the triple systems built from them.
// Entries and indices are 1-based, as in the combinatorial literature.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace olines {

class LatinSquare {
public:
    LatinSquare(int r, std::vector<int> entries);
    int order() const { return r_; }
    /// L_ij for 1 <= i, j <= r.
    int operator()(int i, int j) const { return entries_.at(static_cast<std::size_t>((i - 1) * r_ + (j - 1))); }
    const std::vector<int>& entries() const { return entries_; }
    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
    int r_;
    std::vector<int> entries_;
};

bool is_latin(const LatinSquare& l);
/// L_ii = i for every i.
bool is_diagonal(const LatinSquare& l);
/// L_ij != L_ji whenever i != j.
bool is_skew(const LatinSquare& l);

/// Diagonal square: lexicographically first for r = 3, the skew square otherwise.
LatinSquare diagonal_square(int r);
/// Diagonal and skew; r >= 4. Memoized per r.
LatinSquare skew_diagonal_square(int r);

/// The 6x6 matrix with first row (1,4,5,3,6,2).
LatinSquare explicit_square_6();

/// Seeded randomized search (MRV, forward checking, restarts) for r <= 64.
LatinSquare search_square(int r, bool skew, std::uint64_t seed);

using Triple = std::array<int, 3>;

struct TripleSystem {
    int r = 0;
    std::vector<Triple> triples;  // (i, j, L_ij), i != j, row-major order
};

struct TripleSystemCheck {
    bool size_ok = false;        // r^2 - r triples
    bool distinct = false;       // property 1
    bool pairs_six = false;      // property 2
    bool distinct_third = false; // property 3 (vacuously true for r = 3)
    bool ok() const { return size_ok && distinct && pairs_six && distinct_third; }
};

TripleSystem triple_system_from(const LatinSquare& l);
/// From skew_diagonal_square(r) for r >= 4 and diagonal_square(3) for r = 3.
/// Properties are verified before returning.
TripleSystem triple_system(int r);
TripleSystemCheck check_triple_system(const TripleSystem& t);

std::string format_grid(const LatinSquare& l);

}  // namespace olines

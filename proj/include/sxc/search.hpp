#pragma once
// search.hpp - grid search over schedules and the infimum witness families
//
// All ranking happens on exact squared SX values; near the infimum the gaps
// are ~1e-4 and a double comparison could reorder them.  Candidate
// evaluation parallelizes over a thread pool, but results land in
// preassigned slots and are sorted by an exact total key, so output is
// independent of the thread count.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "sxc/sx.hpp"

namespace sxc {

struct SearchSpace {
    unsigned m1_lo = 2, m1_hi = 64;   // inclusive bounds, entries >= 2
    unsigned m2_lo = 2, m2_hi = 64;
    std::vector<unsigned> tail = {2};
};

struct SearchEntry {
    unsigned m1 = 0, m2 = 0;
    std::vector<unsigned> tail;
    mpq_class sx_squared;
};

struct SearchResult {
    // ascending by exact SX^2, ties by (m1, m2) lexicographic
    std::vector<SearchEntry> entries;
    // true iff some evaluated schedule had (SX^2)^2 < 4.5 exactly (the
    // infimum is not attained, so this is never expected)
    bool any_below_infimum = false;
};

// evaluates SX for every (m1, m2, tail) schedule in the space; schedules
// with infinite SX are not ranked.  threads = 0 means hardware concurrency.
SearchResult grid_search(const SearchSpace& space, unsigned threads = 0);

// one member of the witness family: the k-th sqrt(2) convergent pair padded
// with the all-2 tail
struct WitnessRow {
    unsigned k = 0;
    mpz_class m1, m2;      // continued-fraction denominator / numerator
    mpq_class sx_squared;
};

// rows k = 1..k_max over the pairs (5,7), (12,17), (29,41), (70,99), ...
std::vector<WitnessRow> witness_family(unsigned k_max);

struct SupWitness {
    unsigned s = 0;          // smallest record index with ratio > threshold
    mpq_class ratio_squared; // that record's squared ratio
};

// walks the B-side records of ";2,3*" (the divergent side) until the ratio
// exceeds M; exact comparison against the double M squared as a rational
SupWitness sup_witness(double m);

} // namespace sxc

#ifndef KTRIV_SPECTRAL_HPP
#define KTRIV_SPECTRAL_HPP

#include "ktriv/matrix.hpp"
#include "ktriv/poly.hpp"

#include <vector>

namespace ktriv {

// det(tI - A), exact, via Faddeev-LeVerrier. Every internal division is by
// a step index and is exact over Z.
IntPoly char_poly(const IntMatrix& a);

// Jordan block sizes at eigenvalue 1, largest first, recovered from the
// rank sequence of (A - I)^k. Empty partition if 1 is not an eigenvalue.
std::vector<int> jordan_at_one(const IntMatrix& a);

// Factorization p = prod Phi_m^mult * remainder with the cyclotomics pulled
// out greedily. all_roots_on_unit_circle holds iff the remainder is the
// constant 1, which for a monic p certifies that every root is a root of
// unity.
struct CyclotomicFactorization {
    std::vector<std::pair<int, int>> factors; // (m, multiplicity), m ascending
    IntPoly remainder;
    bool all_roots_on_unit_circle = false;
};

CyclotomicFactorization cyclotomic_factorization(const IntPoly& p);

// Growth report for an exact degree sequence a_0..a_N (N >= 30).
//
// unbounded: the running maximum keeps increasing across the range (at
// least two increases, the last one in the final quarter).
//
// The quadratic refinement looks for an eventually periodic third
// difference averaging 0 together with a positive second-difference
// average; it holds for sequences of the form (quadratic with positive
// leading term) + (periodic), and is reported alongside the measured
// averages rather than asserted.
struct GrowthReport {
    bool unbounded = false;
    long increase_count = 0;
    long last_increase_index = -1;

    bool third_diff_periodic = false;
    long third_diff_period = 0;
    Int third_diff_period_sum = 0;  // sum over one period (0 iff average 0)
    Int second_diff_period_sum = 0; // sign gives the average's sign
    bool quadratic = false;
};

GrowthReport growth_certificate(const std::vector<Int>& degrees);

} // namespace ktriv

#endif

#ifndef KTRIV_CREMONA_HPP
#define KTRIV_CREMONA_HPP

#include "ktriv/lattice.hpp"
#include "ktriv/matrix.hpp"

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ktriv {

// A paired action on N^1 and N_1 of a P3 blow-up lattice. Classes are
// column vectors and matrices act on the left. Construction validates
//
//   * div_action^T J curve_action = J   (the pairing is preserved),
//   * div_action K = K                  (the canonical class is fixed),
//   * det = +-1 on both sides.
//
// compose({A, B}) applies A first, i.e. multiplies B.curve * A.curve; the
// convention is pinned down by the bit-exact reproduction of the composite
// Cremona-then-shift matrix below.
struct LatticeMap {
    BlowupLattice lattice;
    IntMatrix div_action;
    IntMatrix curve_action;

    LatticeMap(BlowupLattice lat, IntMatrix div, IntMatrix curve);

    static LatticeMap identity(const BlowupLattice& lat);

    DivisorClass apply(const DivisorClass& d) const;
    CurveClass apply(const CurveClass& c) const;
};

// First entry (row, col) where div^T J curve differs from J, if any.
std::optional<std::pair<int, int>> intertwining_defect(const IntMatrix& div,
                                                       const IntMatrix& curve,
                                                       const BlowupLattice& lat);

bool fixes_canonical(const IntMatrix& div, const BlowupLattice& lat);

// Lattice action of the standard cubo-cubic Cremona transformation of P^3
// centered at the four given (distinct, 1-based) blown-up points. On the
// span of (H, E_c1..E_c4) the divisor action is
//
//       3  1  1  1  1
//      -2  0 -1 -1 -1
//      -2 -1  0 -1 -1
//      -2 -1 -1  0 -1
//      -2 -1 -1 -1  0
//
// and the curve action replaces the first row by (3 2 2 2 2) and the other
// -2 entries by -1; both are the identity on the remaining E's. The map is
// an involution.
LatticeMap standard_cremona(const BlowupLattice& lat, std::array<int, 4> centers);

// Relabeling of the blown-up points. slot_source[j] (1-based) is the old
// slot whose coordinate lands in slot j+1; e.g. for r = 8, moving the first
// point to the end of the list is slot_source = {2,3,4,5,6,7,8,1}.
LatticeMap point_permutation(const BlowupLattice& lat, const std::vector<int>& slot_source);

// Composite in application order: maps[0] first.
LatticeMap compose(std::span<const LatticeMap> maps);
LatticeMap compose(const LatticeMap& a, const LatticeMap& b);

// The step generating the K-trivial family on the 8-point blow-up:
// Cremona at points 1..4, then move the first point to the end. Its curve
// action is the 9x9 matrix
//
//       3  2  2  2  2  0  0  0  0
//      -1 -1  0 -1 -1  0  0  0  0
//      -1 -1 -1  0 -1  0  0  0  0
//      -1 -1 -1 -1  0  0  0  0  0
//       0  0  0  0  0  1  0  0  0
//       0  0  0  0  0  0  1  0  0
//       0  0  0  0  0  0  0  1  0
//       0  0  0  0  0  0  0  0  1
//      -1  0 -1 -1 -1  0  0  0  0
LatticeMap coxeter_step(const BlowupLattice& lat);

// [start, S(start), S^2(start), ..., S^{n_max}(start)] for the step above.
std::vector<CurveClass> iterate_family(const CurveClass& start, long n_max);

} // namespace ktriv

#endif

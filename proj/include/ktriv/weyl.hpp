#ifndef KTRIV_WEYL_HPP
#define KTRIV_WEYL_HPP

#include "ktriv/cremona.hpp"
#include "ktriv/lattice.hpp"
#include "ktriv/matrix.hpp"
#include "ktriv/poly.hpp"

#include <cstddef>
#include <vector>

namespace ktriv {

// Root system in K^perp of the 8-point blow-up of P^3.
//
// The invariant form on N^1 is diag(2, -1, ..., -1); the simple roots are
//
//   alpha_0 = H - E_1 - E_2 - E_3 - E_4,   alpha_i = E_i - E_{i+1}  (i=1..7),
//
// eight classes of norm -2 spanning K^perp (rank 8; K itself is isotropic
// and lies in K^perp). Their adjacency graph is the T-shaped tree with arm
// lengths {2,4,4} counted through the central node alpha_4 - the affine E_7
// diagram - which is what makes the Weyl group, and the K-trivial family,
// infinite.
struct RootSystem {
    BlowupLattice lattice;
    std::vector<DivisorClass> simple_roots;
    IntMatrix gram; // diag(2, -1, ..., -1)
};

RootSystem build_root_system(const BlowupLattice& lat);

// The invariant bilinear form on N^1 (any P3 lattice).
Int weyl_form(const DivisorClass& a, const DivisorClass& b);

// Arm lengths of the adjacency tree, each counted including the central
// node, sorted ascending ({2,4,4} here).
std::vector<int> arm_lengths(const RootSystem& rs);

// Reflection in a norm -2 root: D |-> D + q(D, root) root.
DivisorClass reflect(const DivisorClass& root, const DivisorClass& target);

// Matrix of reflect(root, .) on N^1.
IntMatrix reflection_matrix(const DivisorClass& root);

// Action on N_1 dual to reflect, i.e. the unique linear map with
// pair(reflect(root, D), dual_reflect(root, C)) = pair(D, C). Concretely
// C |-> C + pair(root, C) * root_check with root_check = (2a_0, a_1..a_r)
// in curve coordinates.
CurveClass dual_reflect(const DivisorClass& root, const CurveClass& target);

// The invariant quadratic form transferred to curve classes and scaled to
// be integral: q*(c, d) = c^2 - 2 sum d_i^2. Constant on Weyl orbits;
// equals -3 on the line orbit.
Int qstar(const CurveClass& c);

struct OrbitOptions {
    long degree_bound = 6;
    long slack = -1; // negative = default 2 * degree_bound
    std::size_t size_cap = 10'000'000;
    int threads = 1;
};

// Breadth-first closure of {start} under the eight dual reflections.
//
// Exploration is clamped to the degree window [1, bound + slack]: orbit
// degrees are odd, and a single reflection can only change the sign of the
// degree at |degree| = 1, so the positive half of the orbit is closed under
// descent and the window only cuts the mirror image -h + e_i + e_j of each
// line class. The slack absorbs paths that overshoot the bound before
// coming back down.
//
// Returns the classes of degree <= bound, sorted lexicographically. The
// reported set and its order do not depend on the thread count.
std::vector<CurveClass> orbit_enumerate(const CurveClass& start, const OrbitOptions& opts = {});

enum class Membership { Member, NotMember, Indeterminate };

// Decides membership in the line-class orbit (its effective half, degree
// >= 1) by greedy descent: while some dual reflection strictly reduces
// (degree, coeffs) lexicographically without leaving degree >= 1, apply the
// lowest-index one; accept iff the terminal class is some h - e_i - e_j.
// Indeterminate is returned only if the step cap is hit.
Membership orbit_membership(const CurveClass& c, long max_steps = 100000);

// Independent cross-check for orbit_enumerate: all integer vectors with
// h-coefficient deg satisfying the two orbit invariants (anticanonical
// degree 0 and q* = -3), found by direct Diophantine enumeration. Sorted
// lexicographically.
std::vector<CurveClass> diophantine_ktrivial(const BlowupLattice& lat, long deg);

// Coordinates of a K^perp vector in the simple-root basis (exact; throws
// if y is not in K^perp).
std::vector<Int> kperp_coordinates(const RootSystem& rs, const DivisorClass& y);

// Restriction of a K-fixing, form-preserving action on N^1 to K^perp,
// written in the simple-root basis.
IntMatrix restrict_to_kperp(const IntMatrix& div_action, const RootSystem& rs);

// Product of the simple reflections in index order, as a matrix on N^1.
IntMatrix coxeter_element(const RootSystem& rs);

// True iff the Coxeter element and step.div_action have the same
// characteristic polynomial on K^perp. All Coxeter elements of a tree
// diagram are conjugate, so the polynomial does not depend on the
// reflection order.
bool coxeter_charpoly_check(const LatticeMap& step, const RootSystem& rs);

IntPoly kperp_charpoly(const IntMatrix& div_action, const RootSystem& rs);

} // namespace ktriv

#endif

#ifndef KTRIV_SURFACE_HPP
#define KTRIV_SURFACE_HPP

#include "ktriv/lattice.hpp"
#include "ktriv/matrix.hpp"
#include "ktriv/poly.hpp"

#include <cstddef>
#include <vector>

namespace ktriv {

// Picard lattice of a fiber of the quadric pencil: the blow-up of
// P^1 x P^1 at the eight points. Basis (f_1, f_2, E_1..E_8) with
// f_1.f_2 = 1, f_i^2 = 0, E_i^2 = -1, mixed terms 0.
struct SurfaceClass {
    std::vector<Int> coeffs; // length exactly 10

    explicit SurfaceClass(std::vector<Int> c);
    SurfaceClass(std::initializer_list<long> c);

    friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

SurfaceClass operator+(const SurfaceClass&, const SurfaceClass&);
SurfaceClass operator-(const SurfaceClass&, const SurfaceClass&);
SurfaceClass operator*(const Int&, const SurfaceClass&);

Int surface_pair(const SurfaceClass& a, const SurfaceClass& b);

// K_S = -2f_1 - 2f_2 + E_1 + ... + E_8; K_S^2 = 0.
SurfaceClass surface_canonical();

// Exact certificate that the form restricted to K_S^perp (rank 9) is
// negative semidefinite with kernel exactly Z.K_S. The Gram matrix is taken
// in the basis (f_1 - 2E_1, f_2 - 2E_1, E_2 - E_1, ..., E_8 - E_1); its
// characteristic polynomial splits as t * q(t) with q real-rooted (symmetric
// matrix), so "all coefficients of q positive" is exactly "all nonzero
// eigenvalues negative".
struct KperpCertificate {
    IntMatrix gram;                 // 9x9
    int rank = 0;                   // 8
    IntPoly charpoly;               // t * q(t)
    bool negative_semidefinite = false;
    std::vector<Int> canonical_coords; // K_S in the basis above
    bool kernel_is_canonical = false;  // kernel rank 1, spanned by K_S (primitive)
};

KperpCertificate kperp_semidefiniteness();

// All classes with max |coefficient| <= coeff_bound, self-intersection -2
// and zero pairing with K_S; sorted lexicographically.
std::vector<SurfaceClass> enumerate_minus2(long coeff_bound, std::size_t size_cap = 10'000'000);

// Pushforward to the threefold: each ruling of the quadric is a line in
// P^3, so (c_1, c_2, d) |-> (c_1 + c_2) h + sum d_i e_i on the P3/r=8
// lattice. Satisfies -K_X . push(C) = 2 (-K_S . C) for every C (the fiber
// is half-anticanonical).
CurveClass pushforward(const SurfaceClass& c);

} // namespace ktriv

#endif

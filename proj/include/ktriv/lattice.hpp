#ifndef KTRIV_LATTICE_HPP
#define KTRIV_LATTICE_HPP

#include "ktriv/matrix.hpp"
#include "ktriv/numeric.hpp"

#include <vector>

namespace ktriv {

// Numerical divisor/curve class lattices of point blow-ups.
//
//   P3            blow-up of P^3 at r points.
//                 N^1 basis (H, E_1..E_r), N_1 basis (h, e_1..e_r).
//   P1Cubed       blow-up of P^1 x P^1 x P^1 at r points.
//                 N^1 basis (F_1,F_2,F_3, E_1..E_r), N_1 basis
//                 (l_1,l_2,l_3, e_1..e_r) with F_i . l_j = delta_ij.
//   QuadricSurface blow-up of P^1 x P^1 at r points; divisor and curve
//                 classes coincide. Pairing and canonical class for this
//                 case live in surface.hpp, not here.
//
// Basis order is fixed and global; every serialized coefficient vector uses
// it, so matrix entries are comparable entry-for-entry across runs.
enum class Ambient { P3, P1Cubed, QuadricSurface };

const char* ambient_name(Ambient a);

struct BlowupLattice {
    Ambient ambient = Ambient::P3;
    int num_points = 0;

    // count of "degree" coordinates preceding the exceptional block
    int degree_coords() const
    {
        switch (ambient) {
        case Ambient::P3: return 1;
        case Ambient::P1Cubed: return 3;
        case Ambient::QuadricSurface: return 2;
        }
        return 0;
    }
    int rank() const { return degree_coords() + num_points; }
    bool is_threefold() const { return ambient != Ambient::QuadricSurface; }

    friend bool operator==(const BlowupLattice&, const BlowupLattice&) = default;
};

struct DivisorClass {
    BlowupLattice lattice;
    std::vector<Int> coeffs;

    DivisorClass(BlowupLattice lat, std::vector<Int> c);
    DivisorClass(BlowupLattice lat, std::initializer_list<long> c);

    static DivisorClass zero(const BlowupLattice& lat);
    // k-th basis divisor (0 = H resp. F_1, then the exceptional block)
    static DivisorClass unit(const BlowupLattice& lat, int k);

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

struct CurveClass {
    BlowupLattice lattice;
    std::vector<Int> coeffs;

    CurveClass(BlowupLattice lat, std::vector<Int> c);
    CurveClass(BlowupLattice lat, std::initializer_list<long> c);

    static CurveClass zero(const BlowupLattice& lat);
    static CurveClass unit(const BlowupLattice& lat, int k);
    // h - e_i - e_j, the strict transform of the line through points i, j (P3)
    static CurveClass line_through(const BlowupLattice& lat, int i, int j);

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

DivisorClass operator+(const DivisorClass&, const DivisorClass&);
DivisorClass operator-(const DivisorClass&, const DivisorClass&);
DivisorClass operator-(const DivisorClass&);
DivisorClass operator*(const Int&, const DivisorClass&);
CurveClass operator+(const CurveClass&, const CurveClass&);
CurveClass operator-(const CurveClass&, const CurveClass&);
CurveClass operator-(const CurveClass&);
CurveClass operator*(const Int&, const CurveClass&);

// Intersection pairing N^1 x N_1 -> Z.
//
// P3:       (aH + sum b_i E_i) . (ch + sum d_i e_i) = a c - sum b_i d_i
// P1Cubed:  F_j . l_k = delta_jk, E_i . e_j = -delta_ij, mixed terms 0.
//
// In matrix form pair(D, C) = D^T J C with J = diag(1,..,1,-1,..,-1)
// (+1 on the degree block, -1 on the exceptional block).
Int pairing(const DivisorClass& d, const CurveClass& c);

// J as a matrix, for intertwining checks.
IntMatrix pairing_matrix(const BlowupLattice& lat);

// Canonical class.
//   P3:      K = -4H + 2(E_1 + ... + E_r)
//   P1Cubed: K = -2(F_1 + F_2 + F_3) + 2(E_1 + ... + E_r)
// The sign convention is fixed so that -K is the nef class in the r = 8
// resp. r = 6 examples.
DivisorClass canonical_class(const BlowupLattice& lat);

// -K . C; zero exactly on the K-trivial curve classes.
Int anticanonical_degree(const CurveClass& c);

// H . C, the h-coefficient (P3 lattices only).
Int degree(const CurveClass& c);

// Triple self-intersection D^3 of a divisor class on the threefold.
//
// In the P3 case the cubic form is a^3 + sum b_i^3: H^3 = 1 and all mixed
// monomials vanish, while E_i^3 = +1 because E_i = P^2 with normal bundle
// O(-1), so E_i^3 = ((E_i)|_{E_i})^2 = (O_{P^2}(-1))^2 = +1. This sign is
// what makes (-K)^3 = 64 - 8r, i.e. 56 for one blown-up point and 0 for
// eight.
//
// In the P1Cubed case F_1 F_2 F_3 = 1 and F_j^2 = 0, giving
// 6 a_1 a_2 a_3 + sum b_i^3.
Int triple_self_intersection(const DivisorClass& d);

} // namespace ktriv

#endif

#include "ktriv/lattice.hpp"

#include <doctest.h>

#include <random>

using namespace ktriv;

namespace {

const BlowupLattice p3_8{Ambient::P3, 8};
const BlowupLattice p1c_6{Ambient::P1Cubed, 6};

// independent cubic-form oracle: expand sum t_ijk a_i a_j a_k over the full
// product table of the basis divisors
Int triple_oracle(const DivisorClass& d)
{
    const auto& lat = d.lattice;
    const int n = lat.rank();
    const int dc = lat.degree_coords();
    auto product = [&](int i, int j, int k) -> long {
        if (lat.ambient == Ambient::P3) {
            if (i == j && j == k)
                return 1; // H^3 = 1 and E_i^3 = 1
            return 0;
        }
        // P1Cubed: F_1 F_2 F_3 = 1 in any order, E_i^3 = 1
        if (i < dc && j < dc && k < dc)
            return (i != j && j != k && i != k) ? 1 : 0;
        if (i == j && j == k)
            return 1;
        return 0;
    };
    Int acc = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                acc += product(i, j, k) * d.coeffs[i] * d.coeffs[j] * d.coeffs[k];
    return acc;
}

std::vector<Int> random_coeffs(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<long> dist(-9, 9);
    std::vector<Int> v(n);
    for (auto& x : v)
        x = dist(rng);
    return v;
}

} // namespace

TEST_CASE("pairing on the classical intersection numbers")
{
    const DivisorClass l = -canonical_class(p3_8); // 4H - 2E_1 - ... - 2E_8
    CHECK(pairing(l, CurveClass::line_through(p3_8, 1, 2)) == 0);
    CHECK(pairing(DivisorClass::unit(p3_8, 0), CurveClass::unit(p3_8, 0)) == 1);
    // degree-4 base curve through all eight points: 4*4 - 8*2 = 0
    CHECK(pairing(l, CurveClass(p3_8, {4, -1, -1, -1, -1, -1, -1, -1, -1})) == 0);
}

TEST_CASE("pairing matrix is diag(1, -1, ..., -1)")
{
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            const Int got = pairing(DivisorClass::unit(p3_8, i), CurveClass::unit(p3_8, j));
            CHECK(got == (i == j ? (i == 0 ? 1 : -1) : 0));
        }
}

TEST_CASE("pairing is bilinear")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        DivisorClass d1(p3_8, random_coeffs(rng, 9)), d2(p3_8, random_coeffs(rng, 9));
        CurveClass c1(p3_8, random_coeffs(rng, 9)), c2(p3_8, random_coeffs(rng, 9));
        CHECK(pairing(d1 + d2, c1) == pairing(d1, c1) + pairing(d2, c1));
        CHECK(pairing(d1, c1 + c2) == pairing(d1, c1) + pairing(d1, c2));
    }
}

TEST_CASE("pairing on the triple product lattice")
{
    // F_j meets the line in its own factor once, others not at all
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            CHECK(pairing(DivisorClass::unit(p1c_6, j), CurveClass::unit(p1c_6, k)) ==
                  (j == k ? 1 : 0));
    CHECK(pairing(DivisorClass::unit(p1c_6, 3), CurveClass::unit(p1c_6, 3)) == -1);
}

TEST_CASE("pairing rejects mismatched and surface lattices")
{
    CHECK_THROWS_AS(pairing(DivisorClass::unit(p3_8, 0), CurveClass::unit(p1c_6, 0)),
                    std::invalid_argument);
    const BlowupLattice quadric{Ambient::QuadricSurface, 8};
    CHECK_THROWS_AS(pairing(DivisorClass::unit(quadric, 0), CurveClass::unit(quadric, 0)),
                    std::invalid_argument);
}

TEST_CASE("canonical classes")
{
    CHECK(canonical_class(p3_8) == DivisorClass(p3_8, {-4, 2, 2, 2, 2, 2, 2, 2, 2}));
    CHECK(canonical_class({Ambient::P3, 0}) == DivisorClass({Ambient::P3, 0}, {-4}));
    CHECK(canonical_class(p1c_6) == DivisorClass(p1c_6, {-2, -2, -2, 2, 2, 2, 2, 2, 2}));
    CHECK_THROWS_AS(canonical_class({Ambient::QuadricSurface, 8}), std::invalid_argument);
}

TEST_CASE("anticanonical degrees of the named classes")
{
    CHECK(anticanonical_degree(CurveClass(p3_8, {3, -1, -1, -1, -1, -1, -1, 0, 0})) == 0);
    CHECK(anticanonical_degree(CurveClass::unit(p3_8, 0)) == 4);
    CHECK(anticanonical_degree(CurveClass::unit(p3_8, 1)) == 2);
}

TEST_CASE("every line through two points and every six-point cubic is K-trivial")
{
    int lines = 0, cubics = 0;
    for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j) {
            CHECK(anticanonical_degree(CurveClass::line_through(p3_8, i, j)) == 0);
            ++lines;
            auto c = CurveClass::zero(p3_8);
            c.coeffs[0] = 3;
            for (int k = 1; k <= 8; ++k)
                if (k != i && k != j)
                    c.coeffs[k] = -1;
            CHECK(anticanonical_degree(c) == 0);
            ++cubics;
        }
    CHECK(lines == 28);
    CHECK(cubics == 28);
}

TEST_CASE("degree reads the h-coefficient")
{
    CHECK(degree(CurveClass::line_through(p3_8, 7, 8)) == 1);
    CHECK(degree(CurveClass(p3_8, {3, -1, -1, -1, -1, -1, -1, 0, 0})) == 3);
    CHECK(degree(CurveClass(p3_8, {4, -1, -1, -1, -1, -1, -1, -1, -1})) == 4);
    CHECK_THROWS_AS(degree(CurveClass::unit(p1c_6, 0)), std::invalid_argument);
}

TEST_CASE("triple self-intersections")
{
    CHECK(triple_self_intersection(-canonical_class(p3_8)) == 0);
    CHECK(triple_self_intersection(DivisorClass::unit(p3_8, 0)) == 1);
    CHECK(triple_self_intersection(-canonical_class(p1c_6)) == 0);
    // (-K)^3 = 64 - 8r across the P3 family
    for (int r = 0; r <= 8; ++r)
        CHECK(triple_self_intersection(-canonical_class({Ambient::P3, r})) == 64 - 8 * r);
    CHECK_THROWS_AS(triple_self_intersection(DivisorClass::unit({Ambient::QuadricSurface, 8}, 0)),
                    std::invalid_argument);
}

TEST_CASE("cubic form agrees with the expanded trilinear oracle")
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        DivisorClass d3(p3_8, random_coeffs(rng, 9));
        CHECK(triple_self_intersection(d3) == triple_oracle(d3));
        DivisorClass dc(p1c_6, random_coeffs(rng, 9));
        CHECK(triple_self_intersection(dc) == triple_oracle(dc));
    }
    // the worked (P1)^3 example: 6*8 + 6*(-8) = 0
    CHECK(triple_self_intersection(DivisorClass(p1c_6, {2, 2, 2, -2, -2, -2, -2, -2, -2})) == 0);
}

TEST_CASE("cubic form scales with lambda^3")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        DivisorClass d(p3_8, random_coeffs(rng, 9));
        const Int lam = trial - 12;
        CHECK(triple_self_intersection(lam * d) ==
              lam * lam * lam * triple_self_intersection(d));
    }
}

TEST_CASE("coefficient vectors must match the lattice rank")
{
    CHECK_THROWS_AS(DivisorClass(p3_8, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(CurveClass(p1c_6, {1}), std::invalid_argument);
    CHECK(BlowupLattice{Ambient::P3, 8}.rank() == 9);
    CHECK(BlowupLattice{Ambient::P1Cubed, 6}.rank() == 9);
    CHECK(BlowupLattice{Ambient::QuadricSurface, 8}.rank() == 10);
}

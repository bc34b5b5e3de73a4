#include "ktriv/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace ktriv {

const char* ambient_name(Ambient a)
{
    switch (a) {
    case Ambient::P3: return "P3";
    case Ambient::P1Cubed: return "P1xP1xP1";
    case Ambient::QuadricSurface: return "P1xP1";
    }
    return "?";
}

static std::vector<Int> check_len(const BlowupLattice& lat, std::vector<Int> c, const char* kind)
{
    if (lat.num_points < 0)
        throw std::invalid_argument("negative number of blown-up points");
    if (static_cast<int>(c.size()) != lat.rank())
        throw std::invalid_argument(std::string(kind) + " coefficient vector length does not match lattice rank");
    return c;
}

static std::vector<Int> from_longs(std::initializer_list<long> c)
{
    std::vector<Int> v;
    v.reserve(c.size());
    for (long x : c)
        v.emplace_back(x);
    return v;
}

DivisorClass::DivisorClass(BlowupLattice lat, std::vector<Int> c)
    : lattice(lat), coeffs(check_len(lat, std::move(c), "divisor"))
{
}

DivisorClass::DivisorClass(BlowupLattice lat, std::initializer_list<long> c)
    : DivisorClass(lat, from_longs(c))
{
}

DivisorClass DivisorClass::zero(const BlowupLattice& lat)
{
    return DivisorClass(lat, std::vector<Int>(lat.rank()));
}

DivisorClass DivisorClass::unit(const BlowupLattice& lat, int k)
{
    if (k < 0 || k >= lat.rank())
        throw std::invalid_argument("basis index out of range");
    auto d = zero(lat);
    d.coeffs[k] = 1;
    return d;
}

CurveClass::CurveClass(BlowupLattice lat, std::vector<Int> c)
    : lattice(lat), coeffs(check_len(lat, std::move(c), "curve"))
{
}

CurveClass::CurveClass(BlowupLattice lat, std::initializer_list<long> c)
    : CurveClass(lat, from_longs(c))
{
}

CurveClass CurveClass::zero(const BlowupLattice& lat)
{
    return CurveClass(lat, std::vector<Int>(lat.rank()));
}

CurveClass CurveClass::unit(const BlowupLattice& lat, int k)
{
    if (k < 0 || k >= lat.rank())
        throw std::invalid_argument("basis index out of range");
    auto c = zero(lat);
    c.coeffs[k] = 1;
    return c;
}

CurveClass CurveClass::line_through(const BlowupLattice& lat, int i, int j)
{
    if (lat.ambient != Ambient::P3)
        throw std::invalid_argument("line_through needs a P3 lattice");
    if (i < 1 || j < 1 || i > lat.num_points || j > lat.num_points || i == j)
        throw std::invalid_argument("line_through needs two distinct point indices in range");
    auto c = zero(lat);
    c.coeffs[0] = 1;
    c.coeffs[i] = -1;
    c.coeffs[j] = -1;
    return c;
}

template <class T>
static T combine(const T& a, const T& b, int sb)
{
    if (a.lattice != b.lattice)
        throw std::invalid_argument("classes on different lattices");
    T r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] += sb * b.coeffs[i];
    return r;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) { return combine(a, b, +1); }
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return combine(a, b, -1); }
CurveClass operator+(const CurveClass& a, const CurveClass& b) { return combine(a, b, +1); }
CurveClass operator-(const CurveClass& a, const CurveClass& b) { return combine(a, b, -1); }

DivisorClass operator-(const DivisorClass& a) { return Int(-1) * a; }
CurveClass operator-(const CurveClass& a) { return Int(-1) * a; }

DivisorClass operator*(const Int& s, const DivisorClass& a)
{
    DivisorClass r = a;
    for (auto& x : r.coeffs)
        x *= s;
    return r;
}

CurveClass operator*(const Int& s, const CurveClass& a)
{
    CurveClass r = a;
    for (auto& x : r.coeffs)
        x *= s;
    return r;
}

Int pairing(const DivisorClass& d, const CurveClass& c)
{
    if (d.lattice != c.lattice)
        throw std::invalid_argument("pairing across different lattices");
    const BlowupLattice& lat = d.lattice;
    if (!lat.is_threefold())
        throw std::invalid_argument("pairing is for threefold lattices; use surface_pair");
    Int acc = 0;
    const int k = lat.degree_coords();
    for (int j = 0; j < k; ++j)
        acc += d.coeffs[j] * c.coeffs[j];
    for (int i = k; i < lat.rank(); ++i)
        acc -= d.coeffs[i] * c.coeffs[i];
    return acc;
}

IntMatrix pairing_matrix(const BlowupLattice& lat)
{
    IntMatrix j(lat.rank(), lat.rank());
    const int k = lat.degree_coords();
    for (int i = 0; i < lat.rank(); ++i)
        j.at(i, i) = i < k ? 1 : -1;
    return j;
}

DivisorClass canonical_class(const BlowupLattice& lat)
{
    if (!lat.is_threefold())
        throw std::invalid_argument("canonical_class is for threefold lattices; the fiber surface canonical lives in surface.hpp");
    auto k = DivisorClass::zero(lat);
    const int dc = lat.degree_coords();
    const long deg = lat.ambient == Ambient::P3 ? -4 : -2;
    for (int j = 0; j < dc; ++j)
        k.coeffs[j] = deg;
    for (int i = dc; i < lat.rank(); ++i)
        k.coeffs[i] = 2;
    return k;
}

Int anticanonical_degree(const CurveClass& c)
{
    return pairing(-canonical_class(c.lattice), c);
}

Int degree(const CurveClass& c)
{
    if (c.lattice.ambient != Ambient::P3)
        throw std::invalid_argument("degree is defined on P3 lattices");
    return c.coeffs[0];
}

Int triple_self_intersection(const DivisorClass& d)
{
    const BlowupLattice& lat = d.lattice;
    if (!lat.is_threefold())
        throw std::invalid_argument("triple self-intersection is for threefold lattices");
    Int acc = 0;
    if (lat.ambient == Ambient::P3) {
        acc = d.coeffs[0] * d.coeffs[0] * d.coeffs[0];
    } else {
        acc = 6 * d.coeffs[0] * d.coeffs[1] * d.coeffs[2];
    }
    for (int i = lat.degree_coords(); i < lat.rank(); ++i)
        acc += d.coeffs[i] * d.coeffs[i] * d.coeffs[i];
    return acc;
}

} // namespace ktriv

#include "ktriv/cremona.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ktriv {

std::optional<std::pair<int, int>> intertwining_defect(const IntMatrix& div,
                                                       const IntMatrix& curve,
                                                       const BlowupLattice& lat)
{
    const IntMatrix j = pairing_matrix(lat);
    const IntMatrix lhs = div.transpose() * j * curve;
    for (int r = 0; r < lhs.rows(); ++r)
        for (int c = 0; c < lhs.cols(); ++c)
            if (lhs.at(r, c) != j.at(r, c))
                return std::make_pair(r, c);
    return std::nullopt;
}

bool fixes_canonical(const IntMatrix& div, const BlowupLattice& lat)
{
    const auto k = canonical_class(lat).coeffs;
    return div * k == k;
}

LatticeMap::LatticeMap(BlowupLattice lat, IntMatrix div, IntMatrix curve)
    : lattice(lat), div_action(std::move(div)), curve_action(std::move(curve))
{
    if (lattice.ambient != Ambient::P3)
        throw std::invalid_argument("lattice maps are defined on P3 lattices");
    const int n = lattice.rank();
    if (div_action.rows() != n || div_action.cols() != n || curve_action.rows() != n ||
        curve_action.cols() != n)
        throw std::invalid_argument("lattice map matrices must be rank x rank");
    if (auto bad = intertwining_defect(div_action, curve_action, lattice)) {
        std::ostringstream os;
        os << "lattice map does not intertwine the pairing (entry " << bad->first << "," << bad->second << ")";
        throw std::invalid_argument(os.str());
    }
    if (!fixes_canonical(div_action, lattice))
        throw std::invalid_argument("lattice map does not fix the canonical class");
    const Int dd = det(div_action), dc = det(curve_action);
    if ((dd != 1 && dd != -1) || (dc != 1 && dc != -1))
        throw std::invalid_argument("lattice map must have determinant +-1");
}

LatticeMap LatticeMap::identity(const BlowupLattice& lat)
{
    return LatticeMap(lat, IntMatrix::identity(lat.rank()), IntMatrix::identity(lat.rank()));
}

DivisorClass LatticeMap::apply(const DivisorClass& d) const
{
    if (d.lattice != lattice)
        throw std::invalid_argument("divisor class on a different lattice");
    return DivisorClass(lattice, div_action * d.coeffs);
}

CurveClass LatticeMap::apply(const CurveClass& c) const
{
    if (c.lattice != lattice)
        throw std::invalid_argument("curve class on a different lattice");
    return CurveClass(lattice, curve_action * c.coeffs);
}

LatticeMap standard_cremona(const BlowupLattice& lat, std::array<int, 4> centers)
{
    if (lat.ambient != Ambient::P3)
        throw std::invalid_argument("standard_cremona needs a P3 lattice");
    if (lat.num_points < 4)
        throw std::invalid_argument("standard_cremona needs at least 4 blown-up points");
    std::set<int> cs(centers.begin(), centers.end());
    if (cs.size() != 4)
        throw std::invalid_argument("Cremona centers must be distinct");
    for (int c : centers)
        if (c < 1 || c > lat.num_points)
            throw std::invalid_argument("Cremona center index out of range");

    const int n = lat.rank();
    // slot 0 = H/h, slot centers[k] = E/e of the k-th center
    std::array<int, 5> slot{0, centers[0], centers[1], centers[2], centers[3]};

    IntMatrix div = IntMatrix::identity(n);
    IntMatrix curve = IntMatrix::identity(n);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            // block acting on (H, E_c1..E_c4): diagonal 3 / 0, first row 1,
            // first column -2, off-diagonal -1; curve side has first row 2
            // and first column -1.
            long dv, cv;
            if (i == 0 && j == 0)
                dv = cv = 3;
            else if (i == 0)
                dv = 1, cv = 2;
            else if (j == 0)
                dv = -2, cv = -1;
            else
                dv = cv = (i == j ? 0 : -1);
            div.at(slot[i], slot[j]) = dv;
            curve.at(slot[i], slot[j]) = cv;
        }
    return LatticeMap(lat, std::move(div), std::move(curve));
}

LatticeMap point_permutation(const BlowupLattice& lat, const std::vector<int>& slot_source)
{
    if (lat.ambient != Ambient::P3)
        throw std::invalid_argument("point_permutation needs a P3 lattice");
    const int r = lat.num_points;
    if (static_cast<int>(slot_source.size()) != r)
        throw std::invalid_argument("permutation length must equal the number of points");
    std::vector<bool> hit(r, false);
    for (int s : slot_source) {
        if (s < 1 || s > r || hit[s - 1])
            throw std::invalid_argument("slot sources must be a bijection on 1..r");
        hit[s - 1] = true;
    }
    IntMatrix m(lat.rank(), lat.rank());
    m.at(0, 0) = 1;
    for (int j = 0; j < r; ++j)
        m.at(1 + j, slot_source[j]) = 1;
    IntMatrix copy = m;
    return LatticeMap(lat, std::move(m), std::move(copy));
}

LatticeMap compose(const LatticeMap& a, const LatticeMap& b)
{
    if (a.lattice != b.lattice)
        throw std::invalid_argument("composing maps on different lattices");
    return LatticeMap(a.lattice, b.div_action * a.div_action, b.curve_action * a.curve_action);
}

LatticeMap compose(std::span<const LatticeMap> maps)
{
    if (maps.empty())
        throw std::invalid_argument("compose needs at least one map");
    LatticeMap acc = maps[0];
    for (std::size_t i = 1; i < maps.size(); ++i)
        acc = compose(acc, maps[i]);
    return acc;
}

LatticeMap coxeter_step(const BlowupLattice& lat)
{
    if (lat.ambient != Ambient::P3 || lat.num_points != 8)
        throw std::invalid_argument("coxeter_step is defined on the 8-point P3 lattice");
    std::vector<int> shift{2, 3, 4, 5, 6, 7, 8, 1}; // move the first point to the end
    return compose(standard_cremona(lat, {1, 2, 3, 4}), point_permutation(lat, shift));
}

std::vector<CurveClass> iterate_family(const CurveClass& start, long n_max)
{
    if (n_max < 0)
        throw std::invalid_argument("n_max must be nonnegative");
    const LatticeMap step = coxeter_step(start.lattice);
    std::vector<CurveClass> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    out.push_back(start);
    for (long n = 0; n < n_max; ++n)
        out.push_back(step.apply(out.back()));
    return out;
}

} // namespace ktriv

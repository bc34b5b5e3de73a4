#include "ktriv/surface.hpp"

#include "ktriv/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace ktriv {

static constexpr int surface_rank = 10;

SurfaceClass::SurfaceClass(std::vector<Int> c) : coeffs(std::move(c))
{
    if (coeffs.size() != surface_rank)
        throw std::invalid_argument("surface class needs exactly 10 coefficients (f_1, f_2, E_1..E_8)");
}

SurfaceClass::SurfaceClass(std::initializer_list<long> c) : SurfaceClass([&] {
        std::vector<Int> v;
        v.reserve(c.size());
        for (long x : c)
            v.emplace_back(x);
        return v;
    }())
{
}

SurfaceClass operator+(const SurfaceClass& a, const SurfaceClass& b)
{
    SurfaceClass r = a;
    for (int i = 0; i < surface_rank; ++i)
        r.coeffs[i] += b.coeffs[i];
    return r;
}

SurfaceClass operator-(const SurfaceClass& a, const SurfaceClass& b)
{
    SurfaceClass r = a;
    for (int i = 0; i < surface_rank; ++i)
        r.coeffs[i] -= b.coeffs[i];
    return r;
}

SurfaceClass operator*(const Int& s, const SurfaceClass& a)
{
    SurfaceClass r = a;
    for (auto& x : r.coeffs)
        x *= s;
    return r;
}

Int surface_pair(const SurfaceClass& a, const SurfaceClass& b)
{
    Int acc = a.coeffs[0] * b.coeffs[1] + a.coeffs[1] * b.coeffs[0];
    for (int i = 2; i < surface_rank; ++i)
        acc -= a.coeffs[i] * b.coeffs[i];
    return acc;
}

SurfaceClass surface_canonical()
{
    return SurfaceClass{-2, -2, 1, 1, 1, 1, 1, 1, 1, 1};
}

KperpCertificate kperp_semidefiniteness()
{
    // K_S^perp = { c : 2 c_f1 + 2 c_f2 + sum c_Ei = 0 }; solve for the E_1
    // coordinate to get the basis (f_1 - 2E_1, f_2 - 2E_1, E_k - E_1).
    std::vector<SurfaceClass> basis;
    basis.push_back(SurfaceClass{1, 0, -2, 0, 0, 0, 0, 0, 0, 0});
    basis.push_back(SurfaceClass{0, 1, -2, 0, 0, 0, 0, 0, 0, 0});
    for (int k = 3; k < surface_rank; ++k) {
        std::vector<Int> v(surface_rank);
        v[2] = -1;
        v[k] = 1;
        basis.emplace_back(std::move(v));
    }

    KperpCertificate cert;
    const int n = static_cast<int>(basis.size());
    cert.gram = IntMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            cert.gram.at(i, j) = surface_pair(basis[i], basis[j]);
    cert.rank = rank(cert.gram);
    cert.charpoly = char_poly(cert.gram);

    // negative semidefinite <=> charpoly = t^k q(t) with k = n - rank and
    // all coefficients of the (real-rooted) q positive
    int k = 0;
    while (k <= cert.charpoly.degree() && cert.charpoly.coeff(k) == 0)
        ++k;
    bool positive = (k == n - cert.rank);
    for (int i = k; i <= cert.charpoly.degree() && positive; ++i)
        positive = cert.charpoly.coeff(i) > 0;
    cert.negative_semidefinite = positive;

    // K_S itself spans the kernel: it lies in the sublattice, is primitive,
    // and the form kills it
    const SurfaceClass ks = surface_canonical();
    cert.canonical_coords = {-2, -2, 1, 1, 1, 1, 1, 1, 1};
    SurfaceClass recon{std::vector<Int>(surface_rank)};
    for (int i = 0; i < n; ++i)
        recon = recon + cert.canonical_coords[i] * basis[i];
    bool in_kernel = recon == ks;
    auto gk = cert.gram * cert.canonical_coords;
    for (const Int& x : gk)
        in_kernel = in_kernel && x == 0;
    Int g = 0;
    for (const Int& x : cert.canonical_coords)
        g = gcd(g, x);
    cert.kernel_is_canonical = in_kernel && cert.rank == n - 1 && g == 1;
    return cert;
}

std::vector<SurfaceClass> enumerate_minus2(long coeff_bound, std::size_t size_cap)
{
    if (coeff_bound < 1)
        throw std::invalid_argument("coefficient bound must be at least 1");
    const Int bound = coeff_bound;
    std::vector<std::vector<Int>> found;
    std::vector<Int> c(surface_rank);

    // C.C = 2 c_f1 c_f2 - sum d_i^2 = -2 and C.K_S = 0, i.e.
    // sum d_i = -2(c_f1 + c_f2); recurse over the E block with square and
    // sum budgets once the two f coordinates are fixed.
    for (Int f1 = -bound; f1 <= bound; ++f1)
        for (Int f2 = -bound; f2 <= bound; ++f2) {
            const Int want_sq = 2 * f1 * f2 + 2; // sum d_i^2
            if (want_sq < 0 || want_sq > 8 * bound * bound)
                continue;
            const Int want_sum = -2 * (f1 + f2);
            c[0] = f1;
            c[1] = f2;
            auto rec = [&](auto&& self, int i, Int sum, Int sq) -> void {
                if (i == surface_rank) {
                    if (sum == want_sum && sq == want_sq) {
                        found.push_back(c);
                        if (found.size() > size_cap)
                            throw cap_exceeded("(-2)-class size cap exceeded");
                    }
                    return;
                }
                const int left = surface_rank - i - 1;
                for (Int x = -bound; x <= bound; ++x) {
                    const Int nsq = sq + x * x;
                    if (nsq > want_sq)
                        continue;
                    const Int rest = want_sum - sum - x;
                    if (rest * rest > left * (want_sq - nsq))
                        continue;
                    if (abs(rest) > left * bound)
                        continue;
                    c[i] = x;
                    self(self, i + 1, sum + x, nsq);
                }
            };
            rec(rec, 2, Int(0), Int(0));
        }

    std::sort(found.begin(), found.end(), lex_less);
    std::vector<SurfaceClass> out;
    out.reserve(found.size());
    for (auto& v : found)
        out.emplace_back(std::move(v));
    return out;
}

CurveClass pushforward(const SurfaceClass& c)
{
    const BlowupLattice lat{Ambient::P3, 8};
    std::vector<Int> v(9);
    v[0] = c.coeffs[0] + c.coeffs[1];
    for (int i = 1; i <= 8; ++i)
        v[i] = c.coeffs[i + 1];
    return CurveClass(lat, std::move(v));
}

} // namespace ktriv

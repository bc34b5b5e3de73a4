#include "ktriv/spectral.hpp"

#include <stdexcept>

namespace ktriv {

IntPoly char_poly(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("characteristic polynomial of non-square matrix");
    const int n = a.rows();
    // Faddeev-LeVerrier: p(t) = t^n + c_1 t^{n-1} + ... + c_n with
    // M_1 = A, c_k = -tr(M_k)/k, M_{k+1} = A (M_k + c_k I).
    std::vector<Int> coeffs(n + 1);
    coeffs[n] = 1;
    IntMatrix m = a;
    for (int k = 1; k <= n; ++k) {
        Int tr = 0;
        for (int i = 0; i < n; ++i)
            tr += m.at(i, i);
        Int ck = exact_div(-tr, Int(k));
        coeffs[n - k] = ck;
        if (k == n)
            break;
        for (int i = 0; i < n; ++i)
            m.at(i, i) += ck;
        m = a * m;
    }
    return IntPoly(std::move(coeffs));
}

std::vector<int> jordan_at_one(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("jordan_at_one of non-square matrix");
    const int n = a.rows();
    const IntMatrix b = a - IntMatrix::identity(n);
    // nullity of (A-I)^k, k = 0, 1, ... until it stabilizes
    std::vector<int> nullity{0};
    IntMatrix pw = IntMatrix::identity(n);
    for (;;) {
        pw = pw * b;
        nullity.push_back(n - rank(pw));
        const std::size_t k = nullity.size() - 1;
        if (nullity[k] == nullity[k - 1])
            break;
    }
    // blocks of size >= k  =  nullity[k] - nullity[k-1]
    std::vector<int> ge;
    for (std::size_t k = 1; k < nullity.size(); ++k)
        ge.push_back(nullity[k] - nullity[k - 1]);
    std::vector<int> partition;
    for (int k = static_cast<int>(ge.size()); k >= 1; --k) {
        const int count = ge[k - 1] - (k < static_cast<int>(ge.size()) ? ge[k] : 0);
        for (int c = 0; c < count; ++c)
            partition.push_back(k);
    }
    return partition;
}

CyclotomicFactorization cyclotomic_factorization(const IntPoly& p)
{
    CyclotomicFactorization out;
    out.remainder = p;
    if (p.is_zero())
        return out;
    const int deg = p.degree();
    // phi(m) >= sqrt(m/2), so phi(m) <= deg forces m <= 2 deg^2 (+ slack
    // for the tiny cases); scanning that far is cheap at these degrees.
    const int m_max = 2 * deg * deg + 6;
    for (int m = 1; m <= m_max; ++m) {
        const IntPoly phi = cyclotomic(m);
        if (phi.degree() > out.remainder.degree())
            continue;
        int mult = 0;
        for (;;) {
            auto qr = divide(out.remainder, phi);
            if (!qr || !qr->second.is_zero())
                break;
            out.remainder = qr->first;
            ++mult;
        }
        if (mult > 0)
            out.factors.emplace_back(m, mult);
    }
    out.all_roots_on_unit_circle =
        out.remainder.degree() == 0 && out.remainder.coeff(0) == 1;
    return out;
}

static std::vector<Int> differences(const std::vector<Int>& v)
{
    std::vector<Int> d;
    d.reserve(v.size() - 1);
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        d.push_back(v[i + 1] - v[i]);
    return d;
}

GrowthReport growth_certificate(const std::vector<Int>& degrees)
{
    if (degrees.size() < 31)
        throw std::invalid_argument("growth_certificate needs at least 31 terms");
    const long n = static_cast<long>(degrees.size()) - 1;

    GrowthReport rep;
    Int max_so_far = degrees[0];
    for (long i = 1; i <= n; ++i)
        if (degrees[i] > max_so_far) {
            max_so_far = degrees[i];
            ++rep.increase_count;
            rep.last_increase_index = i;
        }
    rep.unbounded = rep.increase_count >= 2 && rep.last_increase_index > (3 * n) / 4;

    const auto d1 = differences(degrees);
    const auto d2 = differences(d1);
    const auto d3 = differences(d2);

    // smallest period of the tail of d3 (the last two thirds), if any
    const std::size_t tail_start = d3.size() / 3;
    const std::size_t max_period = (d3.size() - tail_start) / 2;
    for (std::size_t p = 1; p <= max_period; ++p) {
        bool ok = true;
        for (std::size_t i = tail_start; i + p < d3.size(); ++i)
            if (d3[i] != d3[i + p]) {
                ok = false;
                break;
            }
        if (ok) {
            rep.third_diff_periodic = true;
            rep.third_diff_period = static_cast<long>(p);
            for (std::size_t i = tail_start; i < tail_start + p; ++i)
                rep.third_diff_period_sum += d3[i];
            // average second difference over the same window, one period
            for (std::size_t i = tail_start; i < tail_start + p && i < d2.size(); ++i)
                rep.second_diff_period_sum += d2[i];
            break;
        }
    }
    rep.quadratic = rep.third_diff_periodic && rep.third_diff_period_sum == 0 &&
                    rep.second_diff_period_sum > 0;
    return rep;
}

} // namespace ktriv

#include "ktriv/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace ktriv {

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    c_.reserve(coeffs.size());
    for (long v : coeffs)
        c_.emplace_back(v);
    normalize();
}

void IntPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

IntPoly IntPoly::constant(Int v)
{
    IntPoly p;
    if (v != 0)
        p.c_.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::monomial(int k, Int coeff)
{
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(k + 1, Int(0));
        p.c_.back() = std::move(coeff);
    }
    return p;
}

Int IntPoly::eval(const Int& t) const
{
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

std::string IntPoly::str(const std::string& var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& a = c_[k];
        if (a == 0)
            continue;
        Int mag = abs(a);
        if (first) {
            if (sgn(a) < 0)
                os << "-";
            first = false;
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0)
            os << mag.get_str();
        if (k > 0) {
            if (mag != 1)
                os << "*";
            os << var;
            if (k > 1)
                os << "^" << k;
        }
    }
    return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b)
{
    std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b)
{
    std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return IntPoly::zero();
    std::vector<Int> c(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return IntPoly(std::move(c));
}

std::optional<std::pair<IntPoly, IntPoly>> divide(const IntPoly& num, const IntPoly& den)
{
    if (den.is_zero())
        throw std::invalid_argument("polynomial division by zero");
    std::vector<Int> rem(num.coeffs());
    const int dn = den.degree();
    const Int& lead = den.leading();
    if (num.degree() < dn)
        return std::make_pair(IntPoly::zero(), num);
    std::vector<Int> quo(num.degree() - dn + 1);
    for (int k = num.degree(); k >= dn; --k) {
        Int& top = rem[k];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            return std::nullopt; // quotient would leave Z[t]
        Int q = exact_div(top, lead);
        quo[k - dn] = q;
        for (int j = 0; j <= dn; ++j)
            rem[k - dn + j] -= q * den.coeff(j);
    }
    return std::make_pair(IntPoly(std::move(quo)), IntPoly(std::move(rem)));
}

IntPoly exact_div(const IntPoly& num, const IntPoly& den)
{
    auto qr = divide(num, den);
    if (!qr || !qr->second.is_zero())
        throw std::logic_error("polynomial division not exact");
    return qr->first;
}

IntPoly cyclotomic(int m)
{
    if (m < 1)
        throw std::invalid_argument("cyclotomic index must be positive");
    // Phi_m = (t^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<Int> tm(m + 1);
    tm[0] = -1;
    tm[m] = 1;
    IntPoly p{std::vector<Int>(tm)};
    for (int d = 1; d < m; ++d)
        if (m % d == 0)
            p = exact_div(p, cyclotomic(d));
    return p;
}

} // namespace ktriv

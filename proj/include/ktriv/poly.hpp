#ifndef KTRIV_POLY_HPP
#define KTRIV_POLY_HPP

#include "ktriv/numeric.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ktriv {

// Integer-coefficient polynomial, coefficients in ascending degree order.
// Invariant: leading coefficient nonzero unless the polynomial is zero
// (empty coefficient vector).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int v);
    // t^k
    static IntPoly monomial(int k, Int coeff = 1);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Int(0); }
    Int leading() const { return c_.empty() ? Int(0) : c_.back(); }

    Int eval(const Int& t) const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    // human-readable form, e.g. "t^3 - 2*t + 1"
    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<Int> c_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

// Division over Z: returns (quotient, remainder) when every elimination step
// divides exactly (always the case for monic divisors), nullopt otherwise.
std::optional<std::pair<IntPoly, IntPoly>> divide(const IntPoly& num, const IntPoly& den);

// Exact division; throws std::logic_error if the remainder is nonzero.
IntPoly exact_div(const IntPoly& num, const IntPoly& den);

// m-th cyclotomic polynomial, computed by exact division of t^m - 1.
IntPoly cyclotomic(int m);

} // namespace ktriv

#endif

#ifndef KTRIV_NUMERIC_HPP
#define KTRIV_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ktriv {

// All lattice arithmetic is exact. Int is arbitrary precision so no
// computation can silently wrap, whatever n_max or bound a caller picks.
using Int = mpz_class;

// Thrown when an enumeration grows past its configured size cap.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

inline std::string to_decimal(const Int& x) { return x.get_str(10); }

inline Int int_from_decimal(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty integer literal");
    Int x;
    if (x.set_str(s, 10) != 0)
        throw std::invalid_argument("bad integer literal: " + s);
    return x;
}

inline std::vector<std::string> to_decimal(const std::vector<Int>& v)
{
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const Int& x : v)
        out.push_back(to_decimal(x));
    return out;
}

// Exact quotient; aborts the computation if y does not divide x.
inline Int exact_div(const Int& x, const Int& y)
{
    if (y == 0 || !mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t()))
        throw std::logic_error("exact_div: inexact division");
    Int q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return q;
}

// Deterministic hash for coefficient vectors (FNV over residues mod 2^61-1;
// floor division keeps the residue of a negative entry distinct from its
// absolute value).
struct IntVecHash {
    std::size_t operator()(const std::vector<Int>& v) const
    {
        std::uint64_t h = 1469598103934665603ull;
        for (const Int& x : v) {
            const std::uint64_t r = mpz_fdiv_ui(x.get_mpz_t(), 2305843009213693951ull);
            h = (h ^ r) * 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

inline bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b)
{
    const std::size_t n = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0)
            return c < 0;
    }
    return a.size() < b.size();
}

} // namespace ktriv

#endif

#include "ktriv/verify.hpp"

#include "ktriv/cremona.hpp"
#include "ktriv/lattice.hpp"
#include "ktriv/orbit_cache.hpp"
#include "ktriv/spectral.hpp"
#include "ktriv/surface.hpp"
#include "ktriv/weyl.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace ktriv {

namespace {

const BlowupLattice p3_8{Ambient::P3, 8};

// Ground-truth copies of the classical Cremona action matrices; the library
// must reproduce them entry-for-entry.
const IntMatrix cremona_div_block{
    {3, 1, 1, 1, 1},
    {-2, 0, -1, -1, -1},
    {-2, -1, 0, -1, -1},
    {-2, -1, -1, 0, -1},
    {-2, -1, -1, -1, 0}};

const IntMatrix cremona_curve_block{
    {3, 2, 2, 2, 2},
    {-1, 0, -1, -1, -1},
    {-1, -1, 0, -1, -1},
    {-1, -1, -1, 0, -1},
    {-1, -1, -1, -1, 0}};

const IntMatrix step_curve_matrix{
    {3, 2, 2, 2, 2, 0, 0, 0, 0},
    {-1, -1, 0, -1, -1, 0, 0, 0, 0},
    {-1, -1, -1, 0, -1, 0, 0, 0, 0},
    {-1, -1, -1, -1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1},
    {-1, 0, -1, -1, -1, 0, 0, 0, 0}};

DivisorClass minus_k(const BlowupLattice& lat) { return -canonical_class(lat); }

std::vector<Int> random_coeffs(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<long> dist(-9, 9);
    std::vector<Int> v(n);
    for (auto& x : v)
        x = dist(rng);
    return v;
}

struct Suite {
    std::vector<CheckResult> results;

    void check(const std::string& name, const std::function<bool(std::string&)>& body)
    {
        CheckResult r;
        r.name = name;
        try {
            r.pass = body(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

bool matrices_equal(const IntMatrix& a, const IntMatrix& b, std::string& detail)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        detail = "shape mismatch";
        return false;
    }
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) {
                std::ostringstream os;
                os << "entry (" << i << "," << j << "): " << a.at(i, j).get_str() << " vs "
                   << b.at(i, j).get_str();
                detail = os.str();
                return false;
            }
    return true;
}

IntMatrix eval_poly_at_matrix(const IntPoly& p, const IntMatrix& a)
{
    IntMatrix acc(a.rows(), a.cols());
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * a;
        for (int i = 0; i < a.rows(); ++i)
            acc.at(i, i) += p.coeff(k);
    }
    return acc;
}

} // namespace

std::vector<CheckResult> run_verification_suite(unsigned seed)
{
    Suite s;
    std::mt19937_64 rng(seed);

    // ---- intersection lattice ----

    s.check("lattice/pairing-unit-matrix", [&](std::string& detail) {
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) {
                const Int want = i == j ? (i == 0 ? 1 : -1) : 0;
                const Int got = pairing(DivisorClass::unit(p3_8, i), CurveClass::unit(p3_8, j));
                if (got != want) {
                    detail = "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    return false;
                }
            }
        return true;
    });

    s.check("lattice/pairing-bilinear", [&](std::string&) {
        for (int trial = 0; trial < 50; ++trial) {
            DivisorClass d1(p3_8, random_coeffs(rng, 9)), d2(p3_8, random_coeffs(rng, 9));
            CurveClass c1(p3_8, random_coeffs(rng, 9)), c2(p3_8, random_coeffs(rng, 9));
            if (pairing(d1 + d2, c1) != pairing(d1, c1) + pairing(d2, c1))
                return false;
            if (pairing(d1, c1 + c2) != pairing(d1, c1) + pairing(d1, c2))
                return false;
        }
        return true;
    });

    s.check("lattice/worked-intersections", [&](std::string&) {
        const DivisorClass l = minus_k(p3_8);
        const CurveClass line = CurveClass::line_through(p3_8, 1, 2);
        const CurveClass quartic(p3_8, {4, -1, -1, -1, -1, -1, -1, -1, -1});
        return pairing(l, line) == 0 && pairing(l, quartic) == 0 &&
               pairing(DivisorClass::unit(p3_8, 0), CurveClass::unit(p3_8, 0)) == 1;
    });

    s.check("lattice/k-trivial-lines-and-cubics", [&](std::string& detail) {
        for (int i = 1; i <= 8; ++i)
            for (int j = i + 1; j <= 8; ++j)
                if (anticanonical_degree(CurveClass::line_through(p3_8, i, j)) != 0) {
                    detail = "line " + std::to_string(i) + "," + std::to_string(j);
                    return false;
                }
        // all 28 six-point subsets carry a K-trivial cubic class
        for (int a = 1; a <= 8; ++a)
            for (int b = a + 1; b <= 8; ++b) {
                auto c = CurveClass::zero(p3_8);
                c.coeffs[0] = 3;
                for (int i = 1; i <= 8; ++i)
                    if (i != a && i != b)
                        c.coeffs[i] = -1;
                if (anticanonical_degree(c) != 0) {
                    detail = "cubic omitting " + std::to_string(a) + "," + std::to_string(b);
                    return false;
                }
            }
        return true;
    });

    s.check("lattice/triple-products", [&](std::string&) {
        if (triple_self_intersection(minus_k(p3_8)) != 0)
            return false;
        if (triple_self_intersection(minus_k({Ambient::P3, 1})) != 56)
            return false;
        if (triple_self_intersection(minus_k({Ambient::P1Cubed, 6})) != 0)
            return false;
        for (int trial = 0; trial < 20; ++trial) {
            DivisorClass d(p3_8, random_coeffs(rng, 9));
            const Int lam = trial - 10;
            if (triple_self_intersection(lam * d) != lam * lam * lam * triple_self_intersection(d))
                return false;
        }
        return true;
    });

    // ---- Cremona action ----

    s.check("cremona/divisor-block", [&](std::string& detail) {
        const auto m = standard_cremona(p3_8, {1, 2, 3, 4});
        IntMatrix want = IntMatrix::identity(9);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                want.at(i, j) = cremona_div_block.at(i, j);
        return matrices_equal(m.div_action, want, detail);
    });

    s.check("cremona/curve-block", [&](std::string& detail) {
        const auto m = standard_cremona(p3_8, {1, 2, 3, 4});
        IntMatrix want = IntMatrix::identity(9);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                want.at(i, j) = cremona_curve_block.at(i, j);
        return matrices_equal(m.curve_action, want, detail);
    });

    s.check("cremona/involution", [&](std::string&) {
        const auto m = standard_cremona(p3_8, {1, 2, 3, 4});
        const auto sq = compose(m, m);
        return sq.div_action == IntMatrix::identity(9) && sq.curve_action == IntMatrix::identity(9);
    });

    s.check("cremona/intertwining", [&](std::string& detail) {
        std::vector<LatticeMap> maps;
        maps.push_back(standard_cremona(p3_8, {1, 2, 3, 4}));
        maps.push_back(standard_cremona(p3_8, {2, 5, 7, 8}));
        maps.push_back(coxeter_step(p3_8));
        std::vector<int> perm{1, 2, 3, 4, 5, 6, 7, 8};
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            maps.push_back(point_permutation(p3_8, perm));
        }
        for (const auto& m : maps)
            if (auto bad = intertwining_defect(m.div_action, m.curve_action, p3_8)) {
                detail = "entry (" + std::to_string(bad->first) + "," + std::to_string(bad->second) + ")";
                return false;
            }
        return true;
    });

    s.check("cremona/fixes-canonical", [&](std::string&) {
        return fixes_canonical(standard_cremona(p3_8, {1, 2, 3, 4}).div_action, p3_8) &&
               fixes_canonical(coxeter_step(p3_8).div_action, p3_8);
    });

    s.check("cremona/step-matrix", [&](std::string& detail) {
        return matrices_equal(coxeter_step(p3_8).curve_action, step_curve_matrix, detail);
    });

    s.check("cremona/compose-associative", [&](std::string&) {
        std::vector<int> perm{1, 2, 3, 4, 5, 6, 7, 8};
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto a = point_permutation(p3_8, perm);
            const auto b = standard_cremona(p3_8, {1, 3, 5, 7});
            const auto c = coxeter_step(p3_8);
            const auto left = compose(compose(a, b), c);
            const auto right = compose(a, compose(b, c));
            if (left.curve_action != right.curve_action || left.div_action != right.div_action)
                return false;
        }
        return true;
    });

    // ---- the K-trivial family ----

    const CurveClass family_start = CurveClass::line_through(p3_8, 7, 8);
    const auto family = iterate_family(family_start, 200);

    s.check("family/anticanonical-trivial", [&](std::string& detail) {
        for (std::size_t n = 0; n < family.size(); ++n)
            if (anticanonical_degree(family[n]) != 0) {
                detail = "n = " + std::to_string(n);
                return false;
            }
        return true;
    });

    s.check("family/qstar-constant", [&](std::string& detail) {
        for (std::size_t n = 0; n < family.size(); ++n)
            if (qstar(family[n]) != -3) {
                detail = "n = " + std::to_string(n);
                return false;
            }
        return true;
    });

    s.check("family/degree-growth", [&](std::string& detail) {
        std::vector<Int> degs;
        for (const auto& c : family)
            degs.push_back(degree(c));
        const auto rep = growth_certificate(degs);
        std::ostringstream os;
        os << "increases=" << rep.increase_count << " last=" << rep.last_increase_index
           << " quadratic_refinement=" << (rep.quadratic ? "yes" : "no");
        detail = os.str();
        return rep.unbounded;
    });

    // ---- root system and orbits ----

    const auto rs = build_root_system(p3_8);

    s.check("roots/norms-and-k-orthogonality", [&](std::string& detail) {
        const auto k = canonical_class(p3_8);
        for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) {
            if (weyl_form(rs.simple_roots[i], rs.simple_roots[i]) != -2) {
                detail = "norm of root " + std::to_string(i);
                return false;
            }
            if (weyl_form(rs.simple_roots[i], k) != 0) {
                detail = "root " + std::to_string(i) + " not orthogonal to K";
                return false;
            }
        }
        return rs.simple_roots.size() == 8;
    });

    s.check("roots/tree-arms-2-4-4", [&](std::string& detail) {
        const auto arms = arm_lengths(rs);
        if (arms != std::vector<int>{2, 4, 4}) {
            std::ostringstream os;
            os << "arms:";
            for (int a : arms)
                os << " " << a;
            detail = os.str();
            return false;
        }
        return true;
    });

    s.check("roots/form-invariance", [&](std::string&) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto& a = rs.simple_roots[trial % 8];
            DivisorClass x(p3_8, random_coeffs(rng, 9)), y(p3_8, random_coeffs(rng, 9));
            if (weyl_form(reflect(a, x), reflect(a, y)) != weyl_form(x, y))
                return false;
        }
        return true;
    });

    s.check("roots/dual-reflect-involution-and-pairing", [&](std::string&) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto& a = rs.simple_roots[trial % 8];
            DivisorClass d(p3_8, random_coeffs(rng, 9));
            CurveClass c(p3_8, random_coeffs(rng, 9));
            if (dual_reflect(a, dual_reflect(a, c)) != c)
                return false;
            if (pairing(reflect(a, d), dual_reflect(a, c)) != pairing(d, c))
                return false;
            if (anticanonical_degree(dual_reflect(a, c)) != anticanonical_degree(c))
                return false;
        }
        return true;
    });

    s.check("orbit/bound-1-is-the-28-lines", [&](std::string& detail) {
        OrbitOptions opts;
        opts.degree_bound = 1;
        opts.slack = 2;
        const auto orbit = orbit_enumerate(family_start, opts);
        const auto want = diophantine_ktrivial(p3_8, 1);
        if (orbit.size() != 28 || want.size() != 28) {
            detail = "sizes " + std::to_string(orbit.size()) + " / " + std::to_string(want.size());
            return false;
        }
        return std::equal(orbit.begin(), orbit.end(), want.begin());
    });

    s.check("orbit/bound-3-against-diophantine", [&](std::string& detail) {
        OrbitOptions opts;
        opts.degree_bound = 3;
        const auto orbit = orbit_enumerate(family_start, opts);
        // candidates of degree 1 and 3 that descend to a line
        std::vector<CurveClass> members;
        for (long deg : {1, 3})
            for (const auto& c : diophantine_ktrivial(p3_8, deg))
                if (orbit_membership(c) == Membership::Member)
                    members.push_back(c);
        std::sort(members.begin(), members.end(),
                  [](const CurveClass& a, const CurveClass& b) { return lex_less(a.coeffs, b.coeffs); });
        if (orbit.size() != members.size()) {
            detail = "sizes " + std::to_string(orbit.size()) + " / " + std::to_string(members.size());
            return false;
        }
        return std::equal(orbit.begin(), orbit.end(), members.begin());
    });

    s.check("orbit/closed-under-point-swaps", [&](std::string&) {
        OrbitOptions opts;
        opts.degree_bound = 3;
        const auto orbit = orbit_enumerate(family_start, opts);
        std::set<std::vector<Int>> in_orbit;
        for (const auto& c : orbit)
            in_orbit.insert(c.coeffs);
        for (const auto& c : orbit)
            for (std::size_t i = 1; i < 8; ++i) {
                const auto img = dual_reflect(rs.simple_roots[i], c);
                if (!in_orbit.count(img.coeffs))
                    return false;
            }
        return true;
    });

    s.check("orbit/family-classes-enumerated", [&](std::string& detail) {
        OrbitOptions opts;
        opts.degree_bound = 5;
        const auto orbit = orbit_enumerate(family_start, opts);
        std::set<std::vector<Int>> in_orbit;
        for (const auto& c : orbit)
            in_orbit.insert(c.coeffs);
        for (std::size_t n = 0; n < family.size(); ++n)
            if (degree(family[n]) <= 5 && !in_orbit.count(family[n].coeffs)) {
                detail = "n = " + std::to_string(n);
                return false;
            }
        return true;
    });

    s.check("orbit/membership-examples", [&](std::string&) {
        return orbit_membership(family[1]) == Membership::Member &&
               orbit_membership(CurveClass(p3_8, {4, -1, -1, -1, -1, -1, -1, -1, -1})) ==
                   Membership::NotMember &&
               orbit_membership(CurveClass::line_through(p3_8, 1, 2)) == Membership::Member;
    });

    // ---- spectral certificates ----

    const auto step = coxeter_step(p3_8);
    const auto cp = char_poly(step.curve_action);

    s.check("spectral/cayley-hamilton", [&](std::string&) {
        const auto z = eval_poly_at_matrix(cp, step.curve_action);
        return z == IntMatrix(9, 9);
    });

    s.check("spectral/constant-term-unit", [&](std::string&) {
        const Int c0 = cp.coeff(0);
        return c0 == 1 || c0 == -1;
    });

    s.check("spectral/jordan-block-3", [&](std::string& detail) {
        const auto part = jordan_at_one(step.curve_action);
        if (part.empty() || part[0] != 3) {
            detail = "partition size " + std::to_string(part.size());
            return false;
        }
        int total = 0;
        for (int p : part)
            total += p;
        const auto fac = cyclotomic_factorization(cp);
        int mult1 = 0;
        for (auto [m, mult] : fac.factors)
            if (m == 1)
                mult1 = mult;
        return total == mult1;
    });

    s.check("spectral/unit-circle", [&](std::string& detail) {
        const auto fac = cyclotomic_factorization(cp);
        if (!fac.all_roots_on_unit_circle) {
            detail = "remainder " + fac.remainder.str();
            return false;
        }
        return true;
    });

    s.check("spectral/coxeter-element-match", [&](std::string&) {
        return coxeter_charpoly_check(step, rs);
    });

    // ---- fiber surface ----

    s.check("surface/ks-squared-zero", [&](std::string&) {
        const auto ks = surface_canonical();
        return surface_pair(ks, ks) == 0;
    });

    s.check("surface/kperp-negative-semidefinite", [&](std::string& detail) {
        const auto cert = kperp_semidefiniteness();
        if (cert.rank != 8) {
            detail = "rank " + std::to_string(cert.rank);
            return false;
        }
        return cert.negative_semidefinite && cert.kernel_is_canonical;
    });

    s.check("surface/minus2-at-bound-1", [&](std::string& detail) {
        const auto classes = enumerate_minus2(1);
        if (classes.size() != 310) {
            detail = "count " + std::to_string(classes.size());
            return false;
        }
        const auto ks = surface_canonical();
        std::set<std::vector<Int>> seen;
        for (const auto& c : classes) {
            if (surface_pair(c, c) != -2 || surface_pair(c, ks) != 0)
                return false;
            seen.insert(c.coeffs);
        }
        if (!seen.count(SurfaceClass{0, 1, -1, -1, 0, 0, 0, 0, 0, 0}.coeffs)) {
            detail = "missing the ruling class through points 1,2";
            return false;
        }
        // closed under swapping the rulings
        for (const auto& c : classes) {
            auto sw = c.coeffs;
            swap(sw[0], sw[1]);
            if (!seen.count(sw))
                return false;
        }
        return true;
    });

    s.check("surface/pushforward-adjunction", [&](std::string&) {
        const auto ks = surface_canonical();
        if (pushforward(SurfaceClass{0, 1, -1, -1, 0, 0, 0, 0, 0, 0}) !=
            CurveClass::line_through(p3_8, 1, 2))
            return false;
        for (int trial = 0; trial < 100; ++trial) {
            const SurfaceClass c{random_coeffs(rng, 10)};
            if (anticanonical_degree(pushforward(c)) != -2 * surface_pair(ks, c))
                return false;
        }
        return true;
    });

    return s.results;
}

} // namespace ktriv

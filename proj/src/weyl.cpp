#include "ktriv/weyl.hpp"

#include "ktriv/spectral.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace ktriv {

static void require_p3(const BlowupLattice& lat, const char* who)
{
    if (lat.ambient != Ambient::P3)
        throw std::invalid_argument(std::string(who) + " needs a P3 lattice");
}

Int weyl_form(const DivisorClass& a, const DivisorClass& b)
{
    if (a.lattice != b.lattice)
        throw std::invalid_argument("weyl_form across different lattices");
    require_p3(a.lattice, "weyl_form");
    Int acc = 2 * a.coeffs[0] * b.coeffs[0];
    for (int i = 1; i < a.lattice.rank(); ++i)
        acc -= a.coeffs[i] * b.coeffs[i];
    return acc;
}

RootSystem build_root_system(const BlowupLattice& lat)
{
    require_p3(lat, "build_root_system");
    if (lat.num_points != 8)
        throw std::invalid_argument("the T-shaped root system is built for r = 8");
    RootSystem rs;
    rs.lattice = lat;
    auto alpha0 = DivisorClass::zero(lat);
    alpha0.coeffs[0] = 1;
    for (int i = 1; i <= 4; ++i)
        alpha0.coeffs[i] = -1;
    rs.simple_roots.push_back(std::move(alpha0));
    for (int i = 1; i <= 7; ++i) {
        auto a = DivisorClass::zero(lat);
        a.coeffs[i] = 1;
        a.coeffs[i + 1] = -1;
        rs.simple_roots.push_back(std::move(a));
    }
    rs.gram = IntMatrix(lat.rank(), lat.rank());
    rs.gram.at(0, 0) = 2;
    for (int i = 1; i < lat.rank(); ++i)
        rs.gram.at(i, i) = -1;
    return rs;
}

std::vector<int> arm_lengths(const RootSystem& rs)
{
    const int n = static_cast<int>(rs.simple_roots.size());
    std::vector<std::vector<int>> adj(n);
    int edges = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Int b = weyl_form(rs.simple_roots[i], rs.simple_roots[j]);
            if (b == 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
                ++edges;
            } else if (b != 0) {
                throw std::logic_error("simple roots pair outside {0, 1}");
            }
        }
    if (edges != n - 1)
        throw std::logic_error("root adjacency graph is not a tree");
    int center = -1;
    for (int i = 0; i < n; ++i)
        if (adj[i].size() > 2) {
            if (center >= 0)
                throw std::logic_error("more than one branch node");
            center = i;
        }
    if (center < 0)
        throw std::logic_error("no branch node in the root tree");
    std::vector<int> arms;
    for (int next : adj[center]) {
        int len = 2; // center plus first arm node
        int prev = center, cur = next;
        for (;;) {
            int cont = -1;
            for (int nb : adj[cur])
                if (nb != prev)
                    cont = nb;
            if (cont < 0)
                break;
            prev = cur;
            cur = cont;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    return arms;
}

DivisorClass reflect(const DivisorClass& root, const DivisorClass& target)
{
    if (weyl_form(root, root) != -2)
        throw std::invalid_argument("reflection root must have norm -2");
    return target + weyl_form(target, root) * root;
}

IntMatrix reflection_matrix(const DivisorClass& root)
{
    if (weyl_form(root, root) != -2)
        throw std::invalid_argument("reflection root must have norm -2");
    const int n = root.lattice.rank();
    IntMatrix r = IntMatrix::identity(n);
    // R = I + alpha (G alpha)^T
    for (int i = 0; i < n; ++i) {
        if (root.coeffs[i] == 0)
            continue;
        for (int j = 0; j < n; ++j) {
            const Int g = (j == 0 ? 2 : -1) * root.coeffs[j];
            r.at(i, j) += root.coeffs[i] * g;
        }
    }
    return r;
}

CurveClass dual_reflect(const DivisorClass& root, const CurveClass& target)
{
    if (root.lattice != target.lattice)
        throw std::invalid_argument("dual_reflect across different lattices");
    if (weyl_form(root, root) != -2)
        throw std::invalid_argument("reflection root must have norm -2");
    // C + pair(root, C) * root_check, root_check = J^{-1} G root
    const Int t = pairing(root, target);
    CurveClass out = target;
    if (t != 0) {
        out.coeffs[0] += t * 2 * root.coeffs[0];
        for (int i = 1; i < root.lattice.rank(); ++i)
            out.coeffs[i] += t * root.coeffs[i];
    }
    return out;
}

Int qstar(const CurveClass& c)
{
    require_p3(c.lattice, "qstar");
    Int acc = c.coeffs[0] * c.coeffs[0];
    for (int i = 1; i < c.lattice.rank(); ++i)
        acc -= 2 * c.coeffs[i] * c.coeffs[i];
    return acc;
}

// ---------------------------------------------------------------------------
// orbit enumeration

namespace {

using Coeffs = std::vector<Int>;

// the eight dual reflections on raw coefficient vectors (r = 8)
void neighbors(const Coeffs& c, std::vector<Coeffs>& out)
{
    out.clear();
    // alpha_0: C + t * (2h - e_1 - e_2 - e_3 - e_4) with
    // t = pair(alpha_0, C) = c_0 + d_1 + d_2 + d_3 + d_4
    Int t = c[0] + c[1] + c[2] + c[3] + c[4];
    Coeffs img = c;
    img[0] += 2 * t;
    for (int i = 1; i <= 4; ++i)
        img[i] -= t;
    out.push_back(std::move(img));
    // alpha_i: swap d_i, d_{i+1}
    for (int i = 1; i <= 7; ++i) {
        Coeffs s = c;
        swap(s[i], s[i + 1]);
        out.push_back(std::move(s));
    }
}

using Seen = std::unordered_set<Coeffs, IntVecHash>;

} // namespace

std::vector<CurveClass> orbit_enumerate(const CurveClass& start, const OrbitOptions& opts)
{
    require_p3(start.lattice, "orbit_enumerate");
    if (start.lattice.num_points != 8)
        throw std::invalid_argument("orbit_enumerate runs on the 8-point P3 lattice");
    if (anticanonical_degree(start) != 0)
        throw std::invalid_argument("orbit start must be a K-trivial class");
    if (opts.degree_bound < 1)
        throw std::invalid_argument("degree bound must be at least 1");
    const long slack = opts.slack < 0 ? 2 * opts.degree_bound : opts.slack;
    const Int hi = opts.degree_bound + slack;
    const int threads = std::max(1, opts.threads);

    Seen seen;
    seen.insert(start.coeffs);
    std::vector<Coeffs> frontier{start.coeffs};

    while (!frontier.empty()) {
        std::vector<std::vector<Coeffs>> produced(threads);
        auto expand = [&](int tid) {
            std::vector<Coeffs> nbr;
            for (std::size_t k = tid; k < frontier.size(); k += threads) {
                neighbors(frontier[k], nbr);
                for (Coeffs& w : nbr)
                    if (w[0] >= 1 && w[0] <= hi)
                        produced[tid].push_back(std::move(w));
            }
        };
        if (threads == 1) {
            expand(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(threads);
            for (int tid = 0; tid < threads; ++tid)
                pool.emplace_back(expand, tid);
            for (auto& th : pool)
                th.join();
        }
        // merge single-threaded: the closure set is scheduling-independent
        std::vector<Coeffs> next;
        for (auto& chunk : produced)
            for (Coeffs& w : chunk)
                if (seen.insert(w).second) {
                    if (seen.size() > opts.size_cap)
                        throw cap_exceeded("orbit size cap exceeded; partial results discarded");
                    next.push_back(std::move(w));
                }
        frontier = std::move(next);
    }

    std::vector<Coeffs> report;
    for (const Coeffs& c : seen)
        if (c[0] <= opts.degree_bound)
            report.push_back(c);
    std::sort(report.begin(), report.end(), lex_less);
    std::vector<CurveClass> out;
    out.reserve(report.size());
    for (Coeffs& c : report)
        out.emplace_back(start.lattice, std::move(c));
    return out;
}

Membership orbit_membership(const CurveClass& c, long max_steps)
{
    require_p3(c.lattice, "orbit_membership");
    if (c.lattice.num_points != 8)
        throw std::invalid_argument("orbit_membership runs on the 8-point P3 lattice");
    Coeffs cur = c.coeffs;
    std::vector<Coeffs> nbr;
    for (long step = 0; step < max_steps; ++step) {
        neighbors(cur, nbr);
        const Coeffs* best = nullptr;
        for (const Coeffs& w : nbr)
            if (w[0] >= 1 && (w[0] < cur[0] || (w[0] == cur[0] && lex_less(w, cur)))) {
                best = &w; // lowest root index first: keep the first hit
                break;
            }
        if (!best) {
            // terminal: accept exactly the line classes h - e_i - e_j
            if (cur[0] != 1)
                return Membership::NotMember;
            int minus = 0;
            for (int i = 1; i <= 8; ++i) {
                if (cur[i] == -1)
                    ++minus;
                else if (cur[i] != 0)
                    return Membership::NotMember;
            }
            return minus == 2 ? Membership::Member : Membership::NotMember;
        }
        cur = *best;
    }
    return Membership::Indeterminate;
}

std::vector<CurveClass> diophantine_ktrivial(const BlowupLattice& lat, long deg)
{
    require_p3(lat, "diophantine_ktrivial");
    const int r = lat.num_points;
    // -K.C = 0 forces sum d_i = -2c; q* = -3 forces sum d_i^2 = (c^2+3)/2.
    std::vector<CurveClass> out;
    const Int c0 = deg;
    const Int twice_sq = c0 * c0 + 3;
    if (twice_sq % 2 != 0)
        return out; // even degree: the two invariants are incompatible
    const Int want_sum = -2 * c0;
    const Int want_sq = twice_sq / 2;

    std::vector<Int> d(r);
    Int lim;
    mpz_sqrt(lim.get_mpz_t(), want_sq.get_mpz_t());

    // depth-first over d_i in [-lim, lim], pruning by the remaining square
    // budget: (sum of the open coordinates)^2 <= left * (square budget)
    auto rec = [&](auto&& self, int i, Int sum, Int sq) -> void {
        if (i == r) {
            if (sum == want_sum && sq == want_sq) {
                std::vector<Int> v;
                v.reserve(r + 1);
                v.push_back(c0);
                v.insert(v.end(), d.begin(), d.end());
                out.emplace_back(lat, std::move(v));
            }
            return;
        }
        const int left = r - i - 1;
        for (Int x = -lim; x <= lim; ++x) {
            const Int nsq = sq + x * x;
            if (nsq > want_sq)
                continue;
            const Int rest = want_sum - sum - x;
            if (rest * rest > left * (want_sq - nsq))
                continue;
            d[i] = x;
            self(self, i + 1, sum + x, nsq);
        }
    };
    rec(rec, 0, Int(0), Int(0));
    std::sort(out.begin(), out.end(),
              [](const CurveClass& a, const CurveClass& b) { return lex_less(a.coeffs, b.coeffs); });
    return out;
}

// ---------------------------------------------------------------------------
// Coxeter element vs the composite step

std::vector<Int> kperp_coordinates(const RootSystem& rs, const DivisorClass& y)
{
    // alpha_0 carries the only H component, so its coefficient is y_H; what
    // remains lies in the A_7 block where the partial sums invert the
    // E_i - E_{i+1} chain.
    if (weyl_form(y, canonical_class(rs.lattice)) != 0)
        throw std::invalid_argument("vector is not in K^perp");
    std::vector<Int> coords(8);
    coords[0] = y.coeffs[0];
    std::vector<Int> z(8);
    for (int i = 0; i < 8; ++i)
        z[i] = y.coeffs[i + 1] - coords[0] * rs.simple_roots[0].coeffs[i + 1];
    Int run = 0;
    for (int i = 0; i < 7; ++i) {
        run += z[i];
        coords[i + 1] = run;
    }
    if (run + z[7] != 0)
        throw std::logic_error("K^perp coordinate reconstruction failed");
    return coords;
}

IntMatrix restrict_to_kperp(const IntMatrix& div_action, const RootSystem& rs)
{
    IntMatrix m(8, 8);
    for (int j = 0; j < 8; ++j) {
        const DivisorClass img(rs.lattice, div_action * rs.simple_roots[j].coeffs);
        const auto col = kperp_coordinates(rs, img);
        for (int i = 0; i < 8; ++i)
            m.at(i, j) = col[i];
    }
    return m;
}

IntMatrix coxeter_element(const RootSystem& rs)
{
    IntMatrix w = IntMatrix::identity(rs.lattice.rank());
    for (const DivisorClass& a : rs.simple_roots)
        w = reflection_matrix(a) * w; // apply in index order
    return w;
}

IntPoly kperp_charpoly(const IntMatrix& div_action, const RootSystem& rs)
{
    return char_poly(restrict_to_kperp(div_action, rs));
}

bool coxeter_charpoly_check(const LatticeMap& step, const RootSystem& rs)
{
    if (step.lattice != rs.lattice)
        throw std::invalid_argument("step and root system on different lattices");
    return kperp_charpoly(coxeter_element(rs), rs) == kperp_charpoly(step.div_action, rs);
}

} // namespace ktriv

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyneigh/bounds_util.hpp"
#include "polyneigh/construct.hpp"
#include "polyneigh/errors.hpp"

namespace polyneigh {

/// The (floor(d/2)+1) x (d+1) matrix M_d with entries
/// m_{i,j} = C(d+1-i, d+1-j) - C(i, d+1-j). Its left square submatrix is
/// upper triangular with unit diagonal, which makes g recoverable from f
/// by forward substitution.
struct GTheoremContext {
    int d = 0;
    std::vector<std::vector<long long>> m;

    long long at(int i, int j) const {
        return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
};

inline GTheoremContext m_matrix(int d) {
    if (d < 2)
        raise(ErrorKind::bad_range, "m_matrix needs d >= 2");
    GTheoremContext ctx;
    ctx.d = d;
    const int rows = d / 2 + 1;
    ctx.m.assign(static_cast<std::size_t>(rows), std::vector<long long>(static_cast<std::size_t>(d + 1)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j <= d; ++j)
            ctx.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                to_count(binomial(d + 1 - i, d + 1 - j) - binomial(i, d + 1 - j), "M_d entry");
    return ctx;
}

namespace detail {

// Greedy i-binomial representation of x; returns the upper indices a_i >
// a_{i-1} > ... paired with their lower indices.
inline std::vector<std::pair<long long, long long>> macaulay_representation(long long x, long long i) {
    std::vector<std::pair<long long, long long>> rep;
    while (x > 0 && i >= 1) {
        long long a = i;
        while (binomial(a + 1, i) <= Integer(x))
            ++a;
        rep.emplace_back(a, i);
        x -= to_count(binomial(a, i), "binomial term");
        --i;
    }
    return rep;
}

// Macaulay pseudopower x^<i>: shift every term of the i-binomial
// representation up by one in both indices.
inline Integer macaulay_pseudopower(long long x, long long i) {
    Integer total = 0;
    for (const auto& [a, j] : macaulay_representation(x, i))
        total += binomial(a + 1, j + 1);
    return total;
}

} // namespace detail

/// Macaulay growth test: g_0 = 1, entries nonnegative, and each g_{i+1}
/// bounded by the i-th pseudopower of g_i.
inline bool is_m_sequence(const std::vector<long long>& g) {
    if (g.empty())
        raise(ErrorKind::empty_input, "empty sequence");
    if (g.front() != 1)
        return false;
    for (long long x : g)
        if (x < 0)
            return false;
    for (std::size_t i = 1; i + 1 < g.size(); ++i)
        if (Integer(g[i + 1]) > detail::macaulay_pseudopower(g[i], static_cast<long long>(i)))
            return false;
    return true;
}

/// The g-vector entries g_0..g_{floor(d/2)}.
struct GVector {
    std::vector<long long> g;

    friend bool operator==(const GVector&, const GVector&) = default;
};

/// Solves f = g M_d for g given the f-vector (f_{-1}=1, f_0, ..., f_{d-1})
/// of a simplicial d-polytope, then validates the full reconstruction and
/// the Macaulay condition.
inline GVector g_from_f(const std::vector<long long>& f, int d) {
    if (d < 2)
        raise(ErrorKind::bad_range, "g_from_f needs d >= 2");
    if (static_cast<int>(f.size()) != d + 1)
        raise(ErrorKind::bad_range, "f-vector must have d+1 entries including the leading 1");
    const GTheoremContext ctx = m_matrix(d);
    const int rows = d / 2 + 1;
    GVector gv;
    gv.g.resize(static_cast<std::size_t>(rows));
    for (int k = 0; k < rows; ++k) {
        long long acc = f[static_cast<std::size_t>(k)];
        for (int i = 0; i < k; ++i)
            acc -= gv.g[static_cast<std::size_t>(i)] * ctx.at(i, k);
        gv.g[static_cast<std::size_t>(k)] = acc; // m_{k,k} = 1
    }
    for (int j = 0; j <= d; ++j) {
        Integer acc = 0;
        for (int i = 0; i < rows; ++i)
            acc += Integer(gv.g[static_cast<std::size_t>(i)]) * Integer(ctx.at(i, j));
        if (acc != Integer(f[static_cast<std::size_t>(j)]))
            raise(ErrorKind::fvector_inconsistent,
                  "g M_d does not reproduce f at column " + std::to_string(j));
    }
    if (!is_m_sequence(gv.g))
        raise(ErrorKind::not_m_sequence, "recovered g-vector fails the Macaulay condition");
    return gv;
}

/// Lower bound for the number of j-faces of a simplicial k-neighborly
/// d-polytope with n vertices:
/// sum_{i=0..k} (C(d+1-i, d-j) - C(i, d-j)) C(n-d-2+i, i).
inline long long g_theorem_face_bound(int d, int n, int k, int j) {
    if (k < 1 || 2 * k > d || n < d + 2 || j < 0 || j > d - 1)
        raise(ErrorKind::bad_range, "need 2 <= 2k <= d, n >= d+2, 0 <= j <= d-1");
    Integer total = 0;
    for (int i = 0; i <= k; ++i)
        total += (binomial(d + 1 - i, d - j) - binomial(i, d - j)) * binomial(n - d - 2 + i, i);
    return to_count(total, "g-theorem face bound");
}

/// Minimal facet count of a simplicial 2-neighborly d-polytope with v
/// vertices: Delta (Delta(d-3) + 3d - 5)/2 + d + 1 with Delta = v - d - 1.
inline long long msn(int d, int v) {
    if (d < 4 || v < d + 1)
        raise(ErrorKind::bad_range, "msn needs v >= d+1 >= 5");
    const long long delta = v - d - 1;
    const Integer value = Integer(delta) * (Integer(delta) * (d - 3) + 3 * d - 5) / 2 + d + 1;
    return to_count(value, "msn");
}

/// Lower bound theorem for simplicial polytopes: (d-1)(v-d) + 2.
inline long long barnette(int d, int v) {
    if (d < 2 || v < d + 1)
        raise(ErrorKind::bad_range, "barnette needs v >= d+1 >= 3");
    return static_cast<long long>(d - 1) * (v - d) + 2;
}

/// Maximal facet count of a neighborly 2k-polytope with n vertices:
/// n/(n-k) C(n-k, k).
inline long long neighborly_max_facets(int k, int n) {
    if (k < 2 || n < 2 * k + 1)
        raise(ErrorKind::bad_range, "neighborly_max_facets needs n >= 2k+1 >= 5");
    const Integer numerator = Integer(n) * binomial(n - k, k);
    if (numerator % Integer(n - k) != 0)
        raise(ErrorKind::non_integer, "facet count formula must be an integer");
    return to_count(numerator / Integer(n - k), "neighborly facet count");
}

/// Facet lower bound for 2-neighborly 5-polytopes with v vertices:
/// min over n in 5..v of max(ceil(v(v-1)/n), n(n-3)/2 + 1).
inline long long dim5_lower_bound(long long v) {
    if (v < 6)
        raise(ErrorKind::bad_range, "dim5_lower_bound needs v >= 6");
    long long best = std::numeric_limits<long long>::max();
    for (long long n = 5; n <= v; ++n) {
        const long long pigeonhole = (v * (v - 1) + n - 1) / n;
        const long long recursion = n * (n - 3) / 2 + 1;
        best = std::min(best, std::max(pigeonhole, recursion));
    }
    return best;
}

/// What is known about mn(d, v), the minimal facet count of a 2-neighborly
/// d-polytope with v vertices: an exact value where one is published, else
/// the best published bracket. `source` names the winning evidence.
struct KnownBound {
    int d = 0;
    int v = 0;
    long long lower = 0;
    std::optional<long long> upper;
    bool exact = false;
    std::string source;
};

inline KnownBound mn_known(int d, int v) {
    if (d < 4 || v < d + 1)
        raise(ErrorKind::bad_range, "mn_known needs v >= d+1, d >= 4");
    KnownBound out;
    out.d = d;
    out.v = v;
    auto exact = [&](long long value, const char* source) {
        out.lower = value;
        out.upper = value;
        out.exact = true;
        out.source = source;
        return out;
    };
    if (v == d + 1)
        return exact(d + 1, "simplex");
    if (d == 4)
        return exact(static_cast<long long>(v) * (v - 3) / 2, "neighborly-4-polytopes");
    if (v == d + 2)
        return exact(d + 5, "pyramid-over-cyclic");
    if (v == d + 3)
        return exact(d + 7, "gale-diagram-enumeration");
    if (d == 5 && v == 9)
        return exact(16, "fig1-witness");

    // Lower bound: d+7 holds for v >= d+4; dimensions 5 and 6 have their
    // own stronger counting bounds.
    out.lower = d + 7;
    out.source = "vertex-excess-bound";
    if (d == 5 && dim5_lower_bound(v) > out.lower) {
        out.lower = dim5_lower_bound(v);
        out.source = "dim5-incidence-bound";
    }
    if (d == 6 && v > out.lower) {
        out.lower = v;
        out.source = "dim6-facet-bound";
    }

    // Upper bound: cheapest known construction that realizes (d, v).
    struct Witness {
        int d;
        int v;
        long long facets;
        const char* source;
    };
    // Enumerated 0/1-polytope minima usable as pyramid bases.
    const Witness bases[] = {
        {5, 9, 16, "fig1-witness"},         {5, 10, 22, "aichholzer-enumeration"},
        {6, 10, 14, "fig1-witness"},        {6, 11, 17, "aichholzer-enumeration"},
        {6, 12, 21, "aichholzer-enumeration"}, {6, 13, 26, "aichholzer-enumeration"},
    };
    std::optional<long long> upper;
    const char* upper_source = nullptr;
    auto offer = [&](long long facets, const char* source) {
        if (!upper || facets < *upper) {
            upper = facets;
            upper_source = source;
        }
    };
    offer(pyramid_over_cyclic_counts(d, v), "pyramid-over-cyclic");
    for (const auto& base : bases)
        if (d >= base.d && v - base.v == d - base.d)
            offer(base.facets + (d - base.d), d == base.d ? base.source : "pyramid-construction");
    // r-fold pyramids over the join family P_n^m (d = 5*2^m - 1, f0 = 2^m n).
    for (int m = 1;; ++m) {
        const long long jd = 5LL * (1LL << m) - 1;
        if (jd > d)
            break;
        const long long r = d - jd;
        const long long scale = 1LL << m;
        if ((v - r) % scale != 0)
            continue;
        const long long n = (v - r) / scale;
        if (n < 5)
            continue;
        offer((scale / 2) * n * (n - 3) + r, "join-construction");
    }
    out.upper = upper;
    if (upper_source != nullptr && out.upper && out.lower == *out.upper) {
        // Bracket collapsed; report it as exact with the witness as source.
        out.exact = true;
        out.source = upper_source;
    }
    return out;
}

} // namespace polyneigh

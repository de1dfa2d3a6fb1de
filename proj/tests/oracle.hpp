// Test-only brute-force oracles. Nothing here calls into the Weyl engine,
// the weight-set routes or the series code; it works directly with integer
// matrices acting on root-lattice coordinates.
#pragma once

#include "kmw/cartan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using kmw::GeneralizedCartanMatrix;
using kmw::IndexSet;
using kmw::QVec;
using kmw::Rational;
using kmw::ZVec;
using Matrix = std::vector<std::vector<std::int64_t>>;

inline Matrix identity(std::size_t n)
{
    Matrix m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// s_j on root coordinates: v -> v - (sum_i a_ji v_i) e_j
inline Matrix reflection_matrix(const GeneralizedCartanMatrix& a, int j)
{
    Matrix m = identity(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) m[j][i] -= a(j, i);
    return m;
}

inline Matrix multiply(const Matrix& x, const Matrix& y)
{
    const std::size_t n = x.size();
    Matrix z(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
}

inline ZVec mat_apply(const Matrix& m, const ZVec& v)
{
    ZVec out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

/// W_J as a set of matrices, by closure under the generators. Finite J only.
inline std::set<Matrix> weyl_group(const GeneralizedCartanMatrix& a, const IndexSet& J, std::size_t limit = 100000)
{
    std::set<Matrix> group{identity(a.rank())};
    std::vector<Matrix> frontier{identity(a.rank())};
    while (!frontier.empty()) {
        std::vector<Matrix> next;
        for (const auto& g : frontier)
            for (int j : J) {
                Matrix h = multiply(reflection_matrix(a, j), g);
                if (group.insert(h).second) next.push_back(h);
            }
        if (group.size() > limit) throw std::runtime_error("oracle: group too large");
        frontier = std::move(next);
    }
    return group;
}

inline bool nonneg(const ZVec& v)
{
    return std::all_of(v.begin(), v.end(), [](auto x) { return x >= 0; });
}

/// Positive roots of a finite-type Levi J: W_J images of simple roots in J.
inline std::set<ZVec> positive_roots(const GeneralizedCartanMatrix& a, const IndexSet& J)
{
    std::set<ZVec> out;
    for (const auto& w : weyl_group(a, J))
        for (int j : J) {
            ZVec r = mat_apply(w, kmw::unit_vector(a.rank(), j));
            if (nonneg(r)) out.insert(r);
        }
    return out;
}

/// W_J acting on offsets below lambda as affine maps m -> S m + t, so that
/// w(lambda - m) = lambda - (S m + t). Needs integral c on J.
inline std::vector<std::pair<Matrix, ZVec>> affine_action(const GeneralizedCartanMatrix& a, const QVec& c,
                                                          const IndexSet& J)
{
    // generators as affine maps m -> S m + t with t = c_j e_j
    std::vector<std::pair<Matrix, ZVec>> gens;
    for (int j : J) {
        ZVec t(a.rank(), 0);
        t[j] = kmw::to_int64(c[j]);
        gens.emplace_back(reflection_matrix(a, j), t);
    }
    std::map<Matrix, ZVec> seen{{identity(a.rank()), ZVec(a.rank(), 0)}};
    std::vector<std::pair<Matrix, ZVec>> frontier{{identity(a.rank()), ZVec(a.rank(), 0)}};
    while (!frontier.empty()) {
        std::vector<std::pair<Matrix, ZVec>> next;
        for (const auto& [m, t] : frontier)
            for (const auto& [s, u] : gens) {
                // (s, u) o (m, t): x -> s (m x + t) + u
                Matrix sm = multiply(s, m);
                ZVec st = mat_apply(s, t);
                for (std::size_t i = 0; i < st.size(); ++i) st[i] += u[i];
                if (seen.emplace(sm, st).second) next.emplace_back(sm, st);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

/// Weights of the integrable finite-type Levi module: lambda - m is a
/// weight iff every W_J-image stays below lambda.
inline std::set<ZVec> levi_weights(const GeneralizedCartanMatrix& a, const QVec& c, const IndexSet& J,
                                   std::int64_t cutoff)
{
    auto maps = affine_action(a, c, J);
    std::set<ZVec> out;
    for (const auto& m : kmw::nonneg_vectors(a.rank(), J, cutoff)) {
        bool ok = true;
        for (const auto& [s, t] : maps) {
            ZVec img = mat_apply(s, m);
            for (std::size_t i = 0; i < img.size(); ++i) img[i] += t[i];
            if (!nonneg(img)) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(m);
    }
    return out;
}

/// wt L_J(lambda) - Z>=0 (Delta+ \ Delta+_J), whole algebra of finite type.
inline std::set<ZVec> parabolic_verma_weights(const GeneralizedCartanMatrix& a, const QVec& c, const IndexSet& J,
                                              std::int64_t cutoff)
{
    std::set<ZVec> gens;
    for (const auto& r : positive_roots(a, kmw::full_index_set(a.rank()))) {
        bool in_j = true;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] != 0 && !J.count(static_cast<int>(i))) in_j = false;
        if (!in_j) gens.insert(r);
    }
    std::set<ZVec> out = levi_weights(a, c, J, cutoff);
    std::vector<ZVec> frontier(out.begin(), out.end());
    while (!frontier.empty()) {
        std::vector<ZVec> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                ZVec s = m;
                for (std::size_t i = 0; i < s.size(); ++i) s[i] += g[i];
                if (kmw::height(s) <= cutoff && out.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    return out;
}

/// Kostant partition function: ways to write m as an unordered sum of
/// entries of `roots`. A root of multiplicity d appears d times.
inline std::int64_t partitions(const std::vector<ZVec>& roots, const ZVec& m, std::size_t start = 0)
{
    if (std::all_of(m.begin(), m.end(), [](auto x) { return x == 0; })) return 1;
    std::int64_t total = 0;
    for (std::size_t k = start; k < roots.size(); ++k) {
        ZVec rest = m;
        bool fits = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            rest[i] -= roots[k][i];
            if (rest[i] < 0) fits = false;
        }
        if (!fits) continue;
        total += partitions(roots, rest, k);
    }
    return total;
}

/// Weyl dimension formula prod_{alpha>0} (lambda+rho, alpha) / (rho, alpha).
inline Rational weyl_dimension(const GeneralizedCartanMatrix& a, const QVec& c)
{
    auto sym = kmw::symmetrize(a);
    Rational num = 1, den = 1;
    for (const auto& r : positive_roots(a, kmw::full_index_set(a.rank()))) {
        Rational lr = 0, rr = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            lr += sym.d[i] * (c[i] + 1) * static_cast<long>(r[i]);
            rr += sym.d[i] * static_cast<long>(r[i]);
        }
        num *= lr;
        den *= rr;
    }
    return num / den;
}

}  // namespace oracle

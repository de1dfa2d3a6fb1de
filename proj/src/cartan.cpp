#include "kmw/cartan.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace kmw {

GeneralizedCartanMatrix validate_gcm(const std::vector<std::vector<std::int64_t>>& matrix, std::string name)
{
    const std::size_t n = matrix.size();
    for (std::size_t i = 0; i < n; ++i)
        if (matrix[i].size() != n)
            throw Error(ErrorKind::NotSquare, "row " + std::to_string(i) + " has " + std::to_string(matrix[i].size()) +
                                                  " entries, expected " + std::to_string(n));
    auto at = [](std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i][i] != 2) throw Error(ErrorKind::DiagonalNotTwo, "a" + at(i, i) + " must equal 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (matrix[i][j] > 0) throw Error(ErrorKind::PositiveOffDiagonal, "a" + at(i, j) + " must be <= 0");
            if ((matrix[i][j] == 0) != (matrix[j][i] == 0))
                throw Error(ErrorKind::AsymmetricZero, "a" + at(std::min(i, j), std::max(i, j)) + " and a" +
                                                           at(std::max(i, j), std::min(i, j)) +
                                                           " must vanish together");
        }
    }
    GeneralizedCartanMatrix gcm;
    gcm.entries_ = matrix;
    gcm.name_ = std::move(name);
    return gcm;
}

ZVec GeneralizedCartanMatrix::reflect_root(int j, const ZVec& v) const
{
    ZVec out = v;
    out[j] -= coroot_pairing(j, v);
    return out;
}

QVec GeneralizedCartanMatrix::reflect_root(int j, const QVec& v) const
{
    QVec out = v;
    out[j] -= coroot_pairing(j, v);
    return out;
}

std::vector<IndexSet> connected_components(const GeneralizedCartanMatrix& gcm, const IndexSet& J)
{
    std::vector<IndexSet> comps;
    IndexSet seen;
    for (int start : J) {
        if (seen.count(start)) continue;
        IndexSet comp{start};
        std::deque<int> queue{start};
        seen.insert(start);
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            for (int j : J) {
                if (!seen.count(j) && gcm(i, j) != 0) {
                    seen.insert(j);
                    comp.insert(j);
                    queue.push_back(j);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected_support(const GeneralizedCartanMatrix& gcm, const ZVec& v)
{
    IndexSet supp;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) supp.insert(static_cast<int>(i));
    return connected_components(gcm, supp).size() == 1;
}

std::optional<Symmetrizer> try_symmetrize(const GeneralizedCartanMatrix& gcm)
{
    const std::size_t n = gcm.rank();
    std::vector<Rational> d(n, 0);
    for (const auto& comp : connected_components(gcm, full_index_set(n))) {
        int root = *comp.begin();
        d[root] = 1;
        std::deque<int> queue{root};
        IndexSet assigned{root};
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            for (int j : comp) {
                if (j == i || gcm(i, j) == 0) continue;
                // d_i a_ij = d_j a_ji
                Rational ratio(static_cast<long>(gcm(i, j)), static_cast<long>(gcm(j, i)));
                ratio.canonicalize();
                Rational want = d[i] * ratio;
                if (!assigned.count(j)) {
                    d[j] = want;
                    assigned.insert(j);
                    queue.push_back(j);
                } else if (d[j] != want) {
                    return std::nullopt;
                }
            }
        }
        Rational lo = d[root];
        for (int i : comp) lo = std::min(lo, d[i]);
        for (int i : comp) d[i] /= lo;
    }
    return Symmetrizer{std::move(d)};
}

Symmetrizer symmetrize(const GeneralizedCartanMatrix& gcm)
{
    auto sym = try_symmetrize(gcm);
    if (!sym) throw Error(ErrorKind::NotSymmetrizable, "a cycle of the Dynkin diagram has inconsistent ratios");
    return *sym;
}

BilinearForm::BilinearForm(const GeneralizedCartanMatrix& gcm, const Symmetrizer& sym) : d_(sym.d)
{
    const std::size_t n = gcm.rank();
    gram_.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram_[i][j] = d_[i] * static_cast<long>(gcm(i, j));
}

Rational BilinearForm::operator()(const ZVec& a, const ZVec& b) const
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) s += gram_[i][j] * static_cast<long>(a[i] * b[j]);
    }
    return s;
}

std::string_view to_string(DiagramType t)
{
    switch (t) {
    case DiagramType::Finite: return "finite";
    case DiagramType::Affine: return "affine";
    case DiagramType::Indefinite: return "indefinite";
    }
    return "?";
}

namespace {

// Inertia of a symmetric rational matrix restricted to positive
// semidefiniteness: returns the corank if PSD, nullopt otherwise.
std::optional<std::size_t> psd_corank(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    std::vector<bool> done(n, false);
    std::size_t rank = 0;
    while (true) {
        int pivot = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            if (m[i][i] < 0) return std::nullopt;
            if (m[i][i] > 0 && pivot < 0) pivot = static_cast<int>(i);
        }
        if (pivot < 0) break;
        done[pivot] = true;
        ++rank;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            Rational f = m[i][pivot] / m[pivot][pivot];
            for (std::size_t j = 0; j < n; ++j)
                if (!done[j]) m[i][j] -= f * m[pivot][j];
        }
    }
    // remaining block has zero diagonal; PSD forces it to vanish
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!done[i] && !done[j] && m[i][j] != 0) return std::nullopt;
    return n - rank;
}

}  // namespace

DiagramType classify_subdiagram(const GeneralizedCartanMatrix& gcm, const IndexSet& J)
{
    bool any_affine = false;
    for (const auto& comp : connected_components(gcm, J)) {
        std::vector<int> idx(comp.begin(), comp.end());
        std::vector<std::vector<std::int64_t>> sub(idx.size(), std::vector<std::int64_t>(idx.size()));
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = gcm(idx[a], idx[b]);
        auto subgcm = validate_gcm(sub);
        auto sym = try_symmetrize(subgcm);
        if (!sym) return DiagramType::Indefinite;
        BilinearForm form(subgcm, *sym);
        std::vector<std::vector<Rational>> gram(idx.size(), std::vector<Rational>(idx.size()));
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) gram[a][b] = form.gram(a, b);
        auto corank = psd_corank(std::move(gram));
        if (!corank || *corank > 1) return DiagramType::Indefinite;
        if (*corank == 1) any_affine = true;
    }
    return any_affine ? DiagramType::Affine : DiagramType::Finite;
}

RootDatum::RootDatum(std::int64_t cutoff, std::vector<RootEntry> entries) : cutoff_(cutoff), entries_(std::move(entries))
{
    std::sort(entries_.begin(), entries_.end(),
              [](const RootEntry& a, const RootEntry& b) { return HeightLexLess{}(a.root, b.root); });
    for (std::size_t k = 0; k < entries_.size(); ++k) index_.emplace(entries_[k].root, k);
}

std::int64_t RootDatum::multiplicity(const ZVec& beta) const
{
    auto it = index_.find(beta);
    return it == index_.end() ? 0 : entries_[it->second].mult;
}

ZVecSet real_positive_roots(const GeneralizedCartanMatrix& gcm, std::int64_t cutoff)
{
    const std::size_t n = gcm.rank();
    ZVecSet found;
    std::deque<ZVec> queue;
    if (cutoff < 1) return found;
    for (std::size_t i = 0; i < n; ++i) {
        found.insert(unit_vector(n, static_cast<int>(i)));
        queue.push_back(unit_vector(n, static_cast<int>(i)));
    }
    // every non-simple positive real root is reached from a lower one by a
    // single reflection that raises its height
    while (!queue.empty()) {
        ZVec beta = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < n; ++j) {
            ZVec image = gcm.reflect_root(static_cast<int>(j), beta);
            auto h = height(image);
            if (h <= height(beta) || h > cutoff) continue;
            if (found.insert(image).second) queue.push_back(std::move(image));
        }
    }
    return found;
}

std::map<ZVec, std::int64_t> peterson_multiplicities(const GeneralizedCartanMatrix& gcm, const Symmetrizer& sym,
                                                     std::int64_t cutoff)
{
    const std::size_t n = gcm.rank();
    BilinearForm form(gcm, sym);
    std::map<ZVec, Rational> c;  // c_beta = sum_k mult(beta/k)/k
    std::map<ZVec, std::int64_t> mult;
    const auto reals = real_positive_roots(gcm, cutoff);
    auto vectors = nonneg_vectors(n, full_index_set(n), cutoff);
    for (const auto& beta : vectors) {
        auto h = height(beta);
        if (h == 0) continue;
        if (h == 1) {
            c[beta] = 1;
            mult[beta] = 1;
            continue;
        }
        Rational rho_term = 0;  // (beta, 2 rho) = sum_i beta_i (alpha_i, alpha_i)
        for (std::size_t i = 0; i < n; ++i) rho_term += sym.d[i] * 2 * static_cast<long>(beta[i]);
        Rational lhs = form(beta, beta) - rho_term;
        Rational rhs = 0;
        // ordered splittings beta = beta' + beta'' into nonzero parts
        ZVec part(n, 0);
        auto rec = [&](auto&& self, std::size_t pos) -> void {
            if (pos == n) {
                auto hp = height(part);
                if (hp == 0 || hp == h) return;
                ZVec rest(n);
                for (std::size_t i = 0; i < n; ++i) rest[i] = beta[i] - part[i];
                const Rational& c1 = c[part];
                if (c1 == 0) return;
                const Rational& c2 = c[rest];
                if (c2 == 0) return;
                rhs += form(part, rest) * c1 * c2;
                return;
            }
            for (std::int64_t k = 0; k <= beta[pos]; ++k) {
                part[pos] = k;
                self(self, pos + 1);
            }
            part[pos] = 0;
        };
        rec(rec, 0);
        std::int64_t g = 0;
        for (auto x : beta) g = std::gcd(g, x);
        // sum_{k | beta, k > 1} mult(beta/k)/k
        Rational lower = 0;
        for (std::int64_t k = 2; k <= g; ++k) {
            if (g % k) continue;
            ZVec sub(n);
            for (std::size_t i = 0; i < n; ++i) sub[i] = beta[i] / k;
            Rational share(static_cast<long>(mult[sub]), static_cast<long>(k));
            share.canonicalize();
            lower += share;
        }
        if (lhs == 0) {
            // Imaginary roots have (beta, beta) <= 0 < (beta, 2 rho), so a
            // vanishing coefficient leaves only real roots or non-roots.
            if (rhs != 0) throw std::logic_error("Peterson recurrence: inconsistent degenerate equation");
            mult[beta] = reals.count(beta) ? 1 : 0;
            c[beta] = lower + mult[beta];
            continue;
        }
        Rational cb = rhs / lhs;
        c[beta] = cb;
        Rational m = cb - lower;
        if (!is_nonneg_integer(m))
            throw std::logic_error("Peterson recurrence produced a non-integral multiplicity at " + format_zvec(beta) +
                                   ": " + m.get_str());
        mult[beta] = to_int64(m);
    }
    return mult;
}

RootDatum positive_roots(const GeneralizedCartanMatrix& gcm, const std::optional<Symmetrizer>& sym,
                         std::int64_t cutoff)
{
    if (!sym) throw Error(ErrorKind::RequiresSymmetrizable, "root multiplicities need a symmetrizable matrix");
    auto mult = peterson_multiplicities(gcm, *sym, cutoff);
    auto reals = real_positive_roots(gcm, cutoff);
    std::vector<RootEntry> entries;
    for (const auto& [beta, m] : mult) {
        if (m == 0) continue;
        bool real = reals.count(beta) > 0;
        if (real && m != 1) throw std::logic_error("real root with multiplicity != 1");
        entries.push_back({beta, m, real});
    }
    for (const auto& beta : reals)
        if (mult[beta] == 0) throw std::logic_error("reflection BFS found a root the recurrence missed");
    return RootDatum(cutoff, std::move(entries));
}

}  // namespace kmw

#include "kmw/hull.hpp"

#include "kmw/lp.hpp"

#include <algorithm>
#include <limits>

namespace kmw {

namespace {

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int32_t>::max();

// exists s >= 0 with sum_r s_r r = target, and optionally t >= 0 with
// sum t = 1 and the vertex combination added in
bool in_polyhedron(const std::vector<ZVec>& verts, const std::vector<ZVec>& rays, const QVec& target,
                   bool with_vertices)
{
    const std::size_t n = target.size();
    const std::size_t nv = with_vertices ? verts.size() : 0;
    std::vector<QVec> rows(n + (with_vertices ? 1 : 0), QVec(nv + rays.size(), Rational(0)));
    QVec rhs = target;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < nv; ++k) rows[i][k] = static_cast<long>(verts[k][i]);
        for (std::size_t k = 0; k < rays.size(); ++k) rows[i][nv + k] = static_cast<long>(rays[k][i]);
    }
    if (with_vertices) {
        for (std::size_t k = 0; k < nv; ++k) rows[n][k] = 1;
        rhs.push_back(1);
    }
    return exact_feasible(rows, rhs);
}

}  // namespace

HullPresentation ray_decomposition(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J,
                                   std::int64_t cutoff)
{
    if (!is_subset(J, integrability_of_simple(c)))
        throw Error(ErrorKind::IntegrabilityTooLarge, "J = " + format_index_set(J) + " exceeds I_L");
    const std::size_t n = gcm.rank();
    const Weight lambda = Weight::at_basepoint(c);
    HullPresentation h{c, {}, {}, classify_subdiagram(gcm, J) != DiagramType::Finite};
    const std::int64_t bound = h.truncated ? cutoff : kUnbounded;
    for (const auto& q : orbit(gcm, lambda, J, bound).offsets) h.vertices.insert(to_zvec(q));

    const auto outside = set_difference(full_index_set(n), J);
    QVec aux(n, Rational(0));
    for (int j : J) aux[j] = 1;
    EnumerationMode mode = HeightPruned{};
    if (!h.truncated) mode = LengthBounded{std::numeric_limits<std::size_t>::max()};
    for (const auto& e : group_elements_bounded(gcm, aux, J, bound, mode))
        for (int i : outside) h.rays.insert(e.simple_root_images[i]);
    return h;
}

bool hull_contains(const HullPresentation& h, const QVec& m)
{
    if (h.truncated)
        throw Error(ErrorKind::TruncationUncertain, "membership cannot be decided from a truncated presentation");
    std::vector<ZVec> verts(h.vertices.begin(), h.vertices.end());
    std::vector<ZVec> rays(h.rays.begin(), h.rays.end());
    return in_polyhedron(verts, rays, m, true);
}

bool hull_contains(const HullPresentation& h, const ZVec& m)
{
    return hull_contains(h, to_qvec(m));
}

WeightSet wt_via_hull(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J, std::int64_t cutoff)
{
    auto h = ray_decomposition(gcm, c, J, cutoff);
    if (h.truncated)
        throw Error(ErrorKind::TruncationUncertain, "the hull route needs W_J of finite type");
    WeightSet out{c, cutoff, {}};
    for (const auto& m : nonneg_vectors(gcm.rank(), full_index_set(gcm.rank()), cutoff))
        if (hull_contains(h, m)) out.offsets.insert(m);
    return out;
}

HullStabilizer hull_stabilizer(const GeneralizedCartanMatrix& gcm, const HullPresentation& h)
{
    const auto I = full_index_set(gcm.rank());
    if (classify_subdiagram(gcm, I) != DiagramType::Finite)
        throw Error(ErrorKind::RequiresFiniteType, "hull stabilizers are enumerated over a finite Weyl group");
    std::vector<ZVec> verts(h.vertices.begin(), h.vertices.end());
    std::vector<ZVec> rays(h.rays.begin(), h.rays.end());

    auto maps_into = [&](const WeylWord& w) {
        for (const auto& v : verts) {
            Weight image = apply_word(gcm, w, Weight{h.c, to_qvec(v)});
            if (!in_polyhedron(verts, rays, image.m, true)) return false;
        }
        for (const auto& r : rays) {
            QVec image = apply_word(gcm, w, to_qvec(r));
            if (!in_polyhedron(verts, rays, image, false)) return false;
        }
        return true;
    };

    HullStabilizer out;
    for (const auto& w : finite_group_elements(gcm, I)) {
        if (!maps_into(w) || !maps_into(inverse(w))) continue;
        if (w.length() == 1) out.simple_generators.insert(w.letters().front());
        out.elements.push_back(w);
    }
    const auto& gens = out.simple_generators;
    bool inside = std::all_of(out.elements.begin(), out.elements.end(), [&](const WeylWord& w) {
        return std::all_of(w.letters().begin(), w.letters().end(), [&](int j) { return gens.count(j) > 0; });
    });
    out.equals_parabolic = inside && out.elements.size() == finite_group_elements(gcm, gens).size();
    return out;
}

}  // namespace kmw

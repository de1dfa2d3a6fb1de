#include "kmw/weight_sets.hpp"

#include <algorithm>
#include <optional>

namespace kmw {

IndexSet integrability_of_simple(const QVec& c)
{
    IndexSet out;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (is_nonneg_integer(c[i])) out.insert(static_cast<int>(i));
    return out;
}

namespace {

void require_within_integrability(const QVec& c, const IndexSet& J)
{
    auto ilam = integrability_of_simple(c);
    if (!is_subset(J, ilam))
        throw Error(ErrorKind::IntegrabilityTooLarge,
                    "J = " + format_index_set(J) + " is not contained in I_L = " + format_index_set(ilam));
}

// Pairings of lambda - mu for an integral shift mu.
QVec shifted_basepoint(const GeneralizedCartanMatrix& gcm, const QVec& c, const ZVec& mu)
{
    QVec out = c;
    for (std::size_t i = 0; i < c.size(); ++i) out[i] -= static_cast<long>(gcm.coroot_pairing(static_cast<int>(i), mu));
    return out;
}

// Raises lambda - m to its J-dominant representative. Each reflection
// strictly lowers the offset height, and once a coordinate turns negative
// the weight cannot be <= lambda, so the walk is finite.
std::optional<ZVec> dominant_below(const GeneralizedCartanMatrix& gcm, const std::vector<std::int64_t>& cj,
                                   const IndexSet& J, ZVec m)
{
    while (true) {
        int neg = -1;
        std::int64_t p = 0;
        for (int j : J) {
            p = cj[j] - gcm.coroot_pairing(j, m);
            if (p < 0) {
                neg = j;
                break;
            }
        }
        if (neg < 0) return m;
        m[neg] += p;
        if (m[neg] < 0) return std::nullopt;
    }
}

// Offsets of the integrable Levi simple module at `c` (J-dominant integral).
ZVecSet levi_simple_offsets(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J,
                            std::int64_t cutoff)
{
    const std::size_t n = gcm.rank();
    std::vector<std::int64_t> cj(n, 0);
    for (int j : J) {
        if (!is_nonneg_integer(c[j]))
            throw Error(ErrorKind::NotDominantIntegral, "pairing at index " + std::to_string(j) + " is " + c[j].get_str());
        cj[j] = to_int64(c[j]);
    }
    ZVecSet out;
    for (const auto& m : nonneg_vectors(n, J, cutoff)) {
        auto top = dominant_below(gcm, cj, J, m);
        if (!top) continue;
        // lambda must not be perpendicular to any component of supp(lambda - mu)
        IndexSet supp;
        for (int j : J)
            if ((*top)[j] != 0) supp.insert(j);
        bool nondegenerate = true;
        for (const auto& comp : connected_components(gcm, supp))
            if (std::all_of(comp.begin(), comp.end(), [&](int i) { return c[i] == 0; })) nondegenerate = false;
        if (nondegenerate) out.insert(m);
    }
    return out;
}

// wt M_{l_{Jp}}(lambda, J): slices over Z>=0^{Jp \ J}.
ZVecSet levi_parabolic_verma_offsets(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J,
                                     const IndexSet& Jp, std::int64_t cutoff)
{
    ZVecSet out;
    for (const auto& mu : nonneg_vectors(gcm.rank(), set_difference(Jp, J), cutoff)) {
        auto slice = levi_simple_offsets(gcm, shifted_basepoint(gcm, c, mu), J, cutoff - height(mu));
        for (auto m : slice) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mu[i];
            out.insert(std::move(m));
        }
    }
    return out;
}

}  // namespace

IndexSet potential_integrability(const ModuleSpec& spec)
{
    require_within_integrability(spec.c, spec.integrability);
    return set_difference(integrability_of_simple(spec.c), spec.integrability);
}

WeightSet wt_integrable_simple_levi(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J,
                                    std::int64_t cutoff)
{
    return WeightSet{c, cutoff, levi_simple_offsets(gcm, c, J, cutoff)};
}

WeightSet wt_parabolic_verma(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J,
                             std::int64_t cutoff)
{
    require_within_integrability(c, J);
    return WeightSet{c, cutoff, levi_parabolic_verma_offsets(gcm, c, J, full_index_set(gcm.rank()), cutoff)};
}

std::map<ZVec, WeightSet, HeightLexLess> wt_slice_decomposition(const GeneralizedCartanMatrix& gcm, const QVec& c,
                                                                const IndexSet& J, const IndexSet& Jprime,
                                                                std::int64_t cutoff)
{
    require_within_integrability(c, J);
    if (!is_subset(J, Jprime)) throw Error(ErrorKind::InvalidArgument, "J must be a subset of J'");
    std::map<ZVec, WeightSet, HeightLexLess> pieces;
    auto outside = set_difference(full_index_set(gcm.rank()), Jprime);
    for (const auto& mu : nonneg_vectors(gcm.rank(), outside, cutoff)) {
        WeightSet piece{c, cutoff, {}};
        for (auto m : levi_parabolic_verma_offsets(gcm, shifted_basepoint(gcm, c, mu), J, Jprime, cutoff - height(mu))) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mu[i];
            piece.offsets.insert(std::move(m));
        }
        pieces.emplace(mu, std::move(piece));
    }
    return pieces;
}

WeightSet wt_simple(const GeneralizedCartanMatrix& gcm, const QVec& c, std::int64_t cutoff)
{
    return wt_parabolic_verma(gcm, c, integrability_of_simple(c), cutoff);
}

bool lepowsky_complete(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J)
{
    auto jp = potential_integrability(ModuleSpec{c, J});
    for (int a : jp)
        for (int b : jp)
            if (a != b && gcm(a, b) == 0) return false;
    return true;
}

std::variant<WeightSet, Undetermined> wt_highest_weight_module(const GeneralizedCartanMatrix& gcm,
                                                               const ModuleSpec& spec, std::int64_t cutoff)
{
    auto jp = potential_integrability(spec);
    if (lepowsky_complete(gcm, spec.c, spec.integrability))
        return wt_parabolic_verma(gcm, spec.c, spec.integrability, cutoff);
    return Undetermined{jp, false};
}

WeightSet wt_simple_via_orbit(const GeneralizedCartanMatrix& gcm, const QVec& c, std::int64_t cutoff)
{
    const auto J = integrability_of_simple(c);
    const Weight lambda = Weight::at_basepoint(c);
    if (!isotropy_is_finite(gcm, lambda, J))
        throw Error(ErrorKind::InfiniteStabilizer, "lambda has infinite isotropy in W_{I_L}");
    WeightSet out{c, cutoff, {}};
    for (const auto& m : nonneg_vectors(gcm.rank(), full_index_set(gcm.rank()), cutoff)) {
        Weight nu{c, to_qvec(m)};
        bool dominant = std::all_of(J.begin(), J.end(), [&](int j) { return nu.pairing(gcm, j) >= 0; });
        if (!dominant) continue;
        for (const auto& q : orbit(gcm, nu, J, cutoff).offsets) out.offsets.insert(to_zvec(q));
    }
    return out;
}

namespace {

bool is_positive_vector(const ZVec& v)
{
    return std::all_of(v.begin(), v.end(), [](auto x) { return x >= 0; });
}

ZVec negated(ZVec v)
{
    for (auto& x : v) x = -x;
    return v;
}

}  // namespace

FormalSeries weyl_kac_summand(const QVec& c, std::int64_t cutoff, const GroupElement& e)
{
    FormalSeries term = FormalSeries::monomial(c, cutoff, e.image_offset);
    for (const auto& v : e.simple_root_images) {
        if (term.is_zero()) break;
        if (is_positive_vector(v)) {
            term.divide_by_one_minus(v);
        } else {
            ZVec up = negated(v);
            term = term.shifted(up);
            term *= -1;
            term.divide_by_one_minus(up);
        }
    }
    return term;
}

namespace {

WeylKacResult weyl_kac_sum(const QVec& c, std::int64_t cutoff, const std::vector<GroupElement>& elements)
{
    WeylKacResult out{FormalSeries(c, cutoff), elements.size(), cutoff};
    for (const auto& e : elements) out.series += weyl_kac_summand(c, cutoff, e);
    return out;
}

}  // namespace

WeylKacResult weyl_kac_weight_series(const GeneralizedCartanMatrix& gcm, const QVec& c, std::int64_t cutoff)
{
    auto elements = group_elements_bounded(gcm, c, integrability_of_simple(c), cutoff, HeightPruned{});
    return weyl_kac_sum(c, cutoff, elements);
}

WeylKacResult weyl_kac_partial_sums(const GeneralizedCartanMatrix& gcm, const QVec& c, std::int64_t cutoff,
                                    std::size_t max_length)
{
    auto elements = group_elements_bounded(gcm, c, integrability_of_simple(c), cutoff, LengthBounded{max_length});
    return weyl_kac_sum(c, cutoff, elements);
}

WeightSet support(const FormalSeries& s)
{
    WeightSet out{s.basepoint(), s.cutoff(), {}};
    for (const auto& [m, k] : s.coefficients())
        if (k != 0) out.offsets.insert(m);
    return out;
}

}  // namespace kmw

// Weight sets of simple, parabolic Verma and general highest weight
// modules, integrability bookkeeping, the completeness criterion and the
// signed multiplicity-free Weyl-Kac expansion.
#pragma once

#include "kmw/series.hpp"
#include "kmw/weyl.hpp"

#include <map>
#include <variant>

namespace kmw {

/// Offsets m in Z>=0^I (weight lambda - m) of height <= cutoff.
struct WeightSet {
    QVec basepoint;
    std::int64_t cutoff = 0;
    ZVecSet offsets;

    bool contains(const ZVec& m) const { return offsets.count(m) > 0; }
    friend bool operator==(const WeightSet& a, const WeightSet& b)
    {
        return a.basepoint == b.basepoint && a.cutoff == b.cutoff && a.offsets == b.offsets;
    }
};

/// A highest weight module's data: highest weight pairings and integrability.
struct ModuleSpec {
    QVec c;
    IndexSet integrability;
};

/// I_{L(lambda)} = { i : c[i] in Z>=0 }
IndexSet integrability_of_simple(const QVec& c);

/// I_{L(lambda)} \ J; throws IntegrabilityTooLarge when J is not contained in it.
IndexSet potential_integrability(const ModuleSpec& spec);

/// Weights of the integrable simple l_J-module of highest weight lambda.
WeightSet wt_integrable_simple_levi(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J,
                                    std::int64_t cutoff);

/// Weights of M(lambda, J) assembled from integrable Levi slices.
WeightSet wt_parabolic_verma(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J,
                             std::int64_t cutoff);

/// Pieces wt M_{l_J'}(lambda - mu, J) for mu in Z>=0^{I\J'}, keyed by mu,
/// with offsets measured from lambda.
std::map<ZVec, WeightSet, HeightLexLess> wt_slice_decomposition(const GeneralizedCartanMatrix& gcm, const QVec& c,
                                                                const IndexSet& J, const IndexSet& Jprime,
                                                                std::int64_t cutoff);

WeightSet wt_simple(const GeneralizedCartanMatrix& gcm, const QVec& c, std::int64_t cutoff);

bool lepowsky_complete(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J);

struct Undetermined {
    IndexSet potential_integrability;
    bool complete = false;
};

/// wt M(lambda, J) when every module with this spec shares it; otherwise
/// Undetermined.
std::variant<WeightSet, Undetermined> wt_highest_weight_module(const GeneralizedCartanMatrix& gcm,
                                                               const ModuleSpec& spec, std::int64_t cutoff);

/// Union of truncated W_{I_L}-orbits of the I_L-dominant weights below
/// lambda. Requires finite isotropy of lambda.
WeightSet wt_simple_via_orbit(const GeneralizedCartanMatrix& gcm, const QVec& c, std::int64_t cutoff);

struct WeylKacResult {
    FormalSeries series;
    std::size_t group_elements = 0;  // summands enumerated
    std::int64_t trusted_height = 0;
};

/// e^{w lambda} prod_i w (1 - e^{-alpha_i})^{-1} in the highest weight
/// expansion: geometric in w(alpha_i) when positive, and
/// -sum_{k>=1} e^{k w(alpha_i)} when negative.
FormalSeries weyl_kac_summand(const QVec& c, std::int64_t cutoff, const GroupElement& e);

WeylKacResult weyl_kac_weight_series(const GeneralizedCartanMatrix& gcm, const QVec& c, std::int64_t cutoff);

/// The same signed sum over all w in W_{I_L} of length <= max_length, with
/// no finiteness requirement. An experimental probe only.
WeylKacResult weyl_kac_partial_sums(const GeneralizedCartanMatrix& gcm, const QVec& c, std::int64_t cutoff,
                                    std::size_t max_length);

/// Offsets with nonzero coefficient.
WeightSet support(const FormalSeries& s);

}  // namespace kmw

// Truncated characters: the Freudenthal oracle, three constructions of
// parabolic Verma characters, the BGGL Euler characteristic, the
// denominator identity over all simple systems and the rank 2 imaginary
// root identity for the trivial module.
#pragma once

#include "kmw/series.hpp"
#include "kmw/weyl.hpp"

#include <optional>

namespace kmw {

using BilinearFormCache = BilinearForm;

/// Multiplicities of the integrable simple l_J-module of highest weight
/// lambda on all offsets in Z>=0^J of height <= cutoff.
class FreudenthalTable {
public:
    FreudenthalTable(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J, std::int64_t cutoff);

    std::int64_t multiplicity(const ZVec& m) const;
    /// The multiplicities as a series below lambda.
    FormalSeries character() const;

private:
    QVec c_;
    std::int64_t cutoff_;
    std::map<ZVec, std::int64_t> mult_;
};

std::int64_t freudenthal_mult(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J, const ZVec& m);

/// Levi character times prod over alpha in Delta+ \ Delta+_J of (1 - e^{-alpha})^{-mult}.
FormalSeries ch_parabolic_verma_induction(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J,
                                          std::int64_t cutoff);

struct CharacterRoute {
    FormalSeries series;
    std::size_t group_elements = 0;  // w in W_J with height(lambda - w.lambda) <= cutoff
};

/// sum_{w in W_J} (-1)^{l(w)} e^{w.lambda} / prod_{alpha > 0} (1 - e^{-alpha})^{mult}
CharacterRoute ch_parabolic_verma_alternating(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J,
                                              std::int64_t cutoff);

/// sum_{w in W_J} w( e^lambda / prod_{alpha > 0} (1 - e^{-alpha})^{mult} ), each
/// transported factor expanded in the highest weight direction.
CharacterRoute ch_parabolic_verma_atiyahbott(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J,
                                             std::int64_t cutoff);

/// sum over minimal coset representatives w of W_{J'} \ W_J of
/// (-1)^{l(w)} ch M(w.lambda, J').
FormalSeries bggl_euler_character(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& Jprime,
                                  const IndexSet& J, std::int64_t cutoff, std::optional<std::size_t> max_length);

struct DenominatorReport {
    LaurentPolynomial lhs;
    LaurentPolynomial rhs;
    std::size_t roots = 0;
    std::size_t simple_systems = 0;
    bool holds = false;
};

DenominatorReport denominator_identity_report(const GeneralizedCartanMatrix& gcm);
bool denominator_identity_check(const GeneralizedCartanMatrix& gcm);

struct OffsetStabilization {
    ZVec offset;
    std::int64_t expected = 0;
    std::int64_t observed = 0;
    std::size_t stabilized_at = 0;  // smallest length from which the coefficient stays fixed
};

struct Rank2IdentityReport {
    std::int64_t cutoff = 0;
    std::size_t max_length = 0;
    std::vector<OffsetStabilization> offsets;
    ZVecSet imaginary_roots;
    bool agreement = false;
};

/// Compares the length-bounded Weyl-Kac sum for the trivial module with
/// 1 + sum over positive imaginary roots beta of e^{-beta}.
Rank2IdentityReport rank2_trivial_identity(const GeneralizedCartanMatrix& gcm, std::int64_t cutoff,
                                           std::size_t max_length);

}  // namespace kmw

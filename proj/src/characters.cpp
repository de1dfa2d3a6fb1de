#include "kmw/characters.hpp"

#include "kmw/weight_sets.hpp"

#include <algorithm>
#include <limits>

namespace kmw {

namespace {

Symmetrizer require_symmetrizer(const GeneralizedCartanMatrix& gcm)
{
    auto sym = try_symmetrize(gcm);
    if (!sym) throw Error(ErrorKind::RequiresSymmetrizable, "characters need a symmetrizable matrix");
    return *sym;
}

bool supported_in(const ZVec& v, const IndexSet& J)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0 && !J.count(static_cast<int>(i))) return false;
    return true;
}

bool is_positive_vector(const ZVec& v)
{
    return std::all_of(v.begin(), v.end(), [](auto x) { return x >= 0; });
}

void require_within_integrability(const QVec& c, const IndexSet& J)
{
    if (!is_subset(J, integrability_of_simple(c)))
        throw Error(ErrorKind::IntegrabilityTooLarge, "J = " + format_index_set(J) + " exceeds I_L");
}

QVec plus_rho(QVec c)
{
    for (auto& x : c) x += 1;
    return c;
}

}  // namespace

FreudenthalTable::FreudenthalTable(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J,
                                   std::int64_t cutoff)
    : c_(c), cutoff_(cutoff)
{
    auto sym = require_symmetrizer(gcm);
    for (int j : J)
        if (!is_nonneg_integer(c[j]))
            throw Error(ErrorKind::NotDominantIntegral, "pairing at index " + std::to_string(j) + " is " + c[j].get_str());
    const std::size_t n = gcm.rank();
    BilinearFormCache form(gcm, sym);
    std::vector<RootEntry> roots;
    const auto datum = positive_roots(gcm, sym, cutoff);
    for (const auto& r : datum.entries())
        if (supported_in(r.root, J)) roots.push_back(r);

    // (lambda, x) = sum_i x_i d_i c_i
    auto lambda_pair = [&](const ZVec& x) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (x[i] != 0) s += form.d(static_cast<int>(i)) * c[i] * static_cast<long>(x[i]);
        return s;
    };

    for (const auto& m : nonneg_vectors(n, J, cutoff)) {
        if (height(m) == 0) {
            mult_[m] = 1;
            continue;
        }
        Rational num = 0;
        for (const auto& r : roots) {
            const Rational lambda_alpha = lambda_pair(r.root);
            ZVec above = m;
            for (std::int64_t k = 1;; ++k) {
                bool below_lambda = true;
                for (std::size_t i = 0; i < n; ++i) {
                    above[i] -= r.root[i];
                    if (above[i] < 0) below_lambda = false;
                }
                if (!below_lambda) break;
                auto it = mult_.find(above);
                if (it == mult_.end() || it->second == 0) continue;
                // (lambda - above, alpha) * mult(lambda - above)
                num += (lambda_alpha - form(above, r.root)) * static_cast<long>(r.mult * it->second);
            }
        }
        num *= 2;
        // |lambda + rho|^2 - |lambda - m + rho|^2 = 2 (lambda + rho, m) - (m, m)
        Rational den = -form(m, m);
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] != 0) den += 2 * form.d(static_cast<int>(i)) * (c[i] + 1) * static_cast<long>(m[i]);
        if (den == 0) {
            if (num != 0) throw Error(ErrorKind::ZeroDenominator, "Freudenthal recursion hit a zero norm difference");
            mult_[m] = 0;
            continue;
        }
        Rational value = num / den;
        if (!is_nonneg_integer(value)) throw std::logic_error("Freudenthal recursion produced " + value.get_str());
        mult_[m] = to_int64(value);
    }
}

std::int64_t FreudenthalTable::multiplicity(const ZVec& m) const
{
    if (!is_positive_vector(m)) return 0;
    auto it = mult_.find(m);
    if (it != mult_.end()) return it->second;
    if (height(m) > cutoff_) throw Error(ErrorKind::InvalidArgument, "offset beyond the table cutoff");
    return 0;  // outside the Levi directions
}

FormalSeries FreudenthalTable::character() const
{
    FormalSeries s(c_, cutoff_);
    for (const auto& [m, k] : mult_) s.add_term(m, k);
    return s;
}

std::int64_t freudenthal_mult(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J, const ZVec& m)
{
    if (!is_positive_vector(m)) {
        require_symmetrizer(gcm);
        return 0;
    }
    return FreudenthalTable(gcm, c, J, height(m)).multiplicity(m);
}

namespace {

// Divides by prod (1 - e^{-alpha})^{mult} over positive roots, optionally
// skipping those supported in J.
void divide_by_denominator(FormalSeries& s, const RootDatum& roots, const IndexSet* skip)
{
    for (const auto& r : roots.entries()) {
        if (skip && supported_in(r.root, *skip)) continue;
        s.divide_by_one_minus(r.root, r.mult);
    }
}

}  // namespace

FormalSeries ch_parabolic_verma_induction(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J,
                                          std::int64_t cutoff)
{
    auto sym = require_symmetrizer(gcm);
    require_within_integrability(c, J);
    FormalSeries s = FreudenthalTable(gcm, c, J, cutoff).character();
    divide_by_denominator(s, positive_roots(gcm, sym, cutoff), &J);
    return s;
}

CharacterRoute ch_parabolic_verma_alternating(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J,
                                              std::int64_t cutoff)
{
    auto sym = require_symmetrizer(gcm);
    require_within_integrability(c, J);
    // lambda + rho is strictly J-dominant, so its orbit is height-prunable
    auto elements = group_elements_bounded(gcm, plus_rho(c), J, cutoff, HeightPruned{});
    FormalSeries s(c, cutoff);
    for (const auto& e : elements) s.add_term(e.image_offset, e.word.length() % 2 ? -1 : 1);
    divide_by_denominator(s, positive_roots(gcm, sym, cutoff), nullptr);
    return {std::move(s), elements.size()};
}

CharacterRoute ch_parabolic_verma_atiyahbott(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J,
                                             std::int64_t cutoff)
{
    auto sym = require_symmetrizer(gcm);
    require_within_integrability(c, J);
    auto roots = positive_roots(gcm, sym, cutoff);
    // summand offsets start at height(lambda + rho - w(lambda + rho)), so the
    // same height-pruned enumeration covers the band
    auto elements = group_elements_bounded(gcm, plus_rho(c), J, cutoff, HeightPruned{});
    const Weight lambda = Weight::at_basepoint(c);
    FormalSeries total(c, cutoff);
    for (const auto& e : elements) {
        auto winv = inverse(e.word);
        ZVec top = to_zvec(apply_word(gcm, e.word, lambda).m);
        FormalSeries term = FormalSeries::monomial(c, cutoff, top);
        std::size_t flipped = 0;
        // w prod_{alpha>0} f(alpha) = prod_{beta in w Delta+} f(beta)
        for (const auto& r : roots.entries()) {
            if (is_positive_vector(apply_word(gcm, winv, r.root))) {
                term.divide_by_one_minus(r.root, r.mult);
            } else {
                // beta = -gamma: (1 - e^{gamma'})^{-d} with gamma' = -gamma expands as
                // (-1)^d e^{-d gamma} (1 - e^{-gamma})^{-d}
                ++flipped;
                ZVec shift = r.root;
                for (auto& x : shift) x *= r.mult;
                term = term.shifted(shift);
                if (r.mult % 2) term *= -1;
                term.divide_by_one_minus(r.root, r.mult);
            }
        }
        // an inversion above the root cutoff pushes the whole summand out of the band
        if (flipped != e.word.length()) continue;
        total += term;
    }
    return {std::move(total), elements.size()};
}

FormalSeries bggl_euler_character(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& Jprime,
                                  const IndexSet& J, std::int64_t cutoff, std::optional<std::size_t> max_length)
{
    require_symmetrizer(gcm);
    require_within_integrability(c, J);
    if (!is_subset(Jprime, J)) throw Error(ErrorKind::InvalidArgument, "J' must be a subset of J");
    const Weight lambda = Weight::at_basepoint(c);
    FormalSeries total(c, cutoff);
    for (const auto& w : minimal_coset_reps(gcm, Jprime, J, max_length)) {
        Weight moved = dot_action(gcm, w, lambda);
        ZVec shift = to_zvec(moved.m);
        auto h = height(shift);
        if (h > cutoff) continue;
        QVec cw(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) cw[i] = moved.pairing(gcm, static_cast<int>(i));
        auto piece = ch_parabolic_verma_induction(gcm, cw, Jprime, cutoff - h);
        const std::int64_t sign = w.length() % 2 ? -1 : 1;
        for (const auto& [m, k] : piece.coefficients()) {
            ZVec at = m;
            for (std::size_t i = 0; i < at.size(); ++i) at[i] += shift[i];
            total.add_term(at, sign * k);
        }
    }
    return total;
}

DenominatorReport denominator_identity_report(const GeneralizedCartanMatrix& gcm)
{
    const auto I = full_index_set(gcm.rank());
    if (classify_subdiagram(gcm, I) != DiagramType::Finite)
        throw Error(ErrorKind::RequiresFiniteType, "the denominator identity check needs a finite root system");
    std::vector<ZVec> all_roots;
    for (const auto& r : real_positive_roots(gcm, std::numeric_limits<std::int32_t>::max())) {
        all_roots.push_back(r);
        ZVec neg = r;
        for (auto& x : neg) x = -x;
        all_roots.push_back(neg);
    }
    DenominatorReport report;
    report.roots = all_roots.size();
    report.lhs = LaurentPolynomial::constant(gcm.rank(), 1);
    for (const auto& a : all_roots) report.lhs = report.lhs * LaurentPolynomial::one_minus_exp(a);
    // simple systems are exactly the images w(pi), one per chamber
    for (const auto& w : finite_group_elements(gcm, I)) {
        std::set<ZVec> simple;
        for (int i : I) simple.insert(apply_word(gcm, w, unit_vector(gcm.rank(), i)));
        LaurentPolynomial term = LaurentPolynomial::constant(gcm.rank(), 1);
        for (const auto& b : all_roots)
            if (!simple.count(b)) term = term * LaurentPolynomial::one_minus_exp(b);
        report.rhs += term;
        ++report.simple_systems;
    }
    report.holds = report.lhs == report.rhs;
    return report;
}

bool denominator_identity_check(const GeneralizedCartanMatrix& gcm)
{
    return denominator_identity_report(gcm).holds;
}

Rank2IdentityReport rank2_trivial_identity(const GeneralizedCartanMatrix& gcm, std::int64_t cutoff,
                                           std::size_t max_length)
{
    if (gcm.rank() != 2) throw Error(ErrorKind::InvalidArgument, "the imaginary root identity is stated in rank 2");
    auto sym = require_symmetrizer(gcm);
    const QVec zero(2, Rational(0));
    const auto I = full_index_set(2);

    Rank2IdentityReport report;
    report.cutoff = cutoff;
    report.max_length = max_length;
    const auto datum = positive_roots(gcm, sym, cutoff);
    for (const auto& r : datum.entries())
        if (!r.real) report.imaginary_roots.insert(r.root);

    FormalSeries expected = FormalSeries::one(zero, cutoff);
    for (const auto& beta : report.imaginary_roots) expected.add_term(beta, 1);

    // partial sums by length; elements arrive ordered by length
    auto elements = group_elements_bounded(gcm, zero, I, cutoff, LengthBounded{max_length});
    std::vector<FormalSeries> by_length(max_length + 1, FormalSeries(zero, cutoff));
    {
        std::vector<FormalSeries> level(max_length + 1, FormalSeries(zero, cutoff));
        for (const auto& e : elements) {
            FormalSeries term = weyl_kac_summand(zero, cutoff, e);
            level[e.word.length()] += term;
        }
        FormalSeries running(zero, cutoff);
        for (std::size_t l = 0; l <= max_length; ++l) {
            running += level[l];
            by_length[l] = running;
        }
    }
    const FormalSeries& final_sum = by_length[max_length];

    ZVecSet offsets;
    for (const auto& s : by_length)
        for (const auto& [m, k] : s.coefficients()) offsets.insert(m);
    for (const auto& [m, k] : expected.coefficients()) offsets.insert(m);

    report.agreement = true;
    for (const auto& m : offsets) {
        OffsetStabilization row{m, expected.coefficient(m), final_sum.coefficient(m), 0};
        std::size_t l = max_length;
        while (l > 0 && by_length[l - 1].coefficient(m) == row.observed) --l;
        row.stabilized_at = l;
        if (row.expected != row.observed) report.agreement = false;
        report.offsets.push_back(std::move(row));
    }
    return report;
}

}  // namespace kmw

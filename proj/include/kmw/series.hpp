// Truncated formal series below a highest weight, and Laurent polynomials
// on the full root lattice.
#pragma once

#include "kmw/core.hpp"

#include <map>

namespace kmw {

/// sum_m coeff(m) e^{lambda - m}, keeping only offsets of height <= cutoff.
/// Every operation multiplies by terms of non-negative offset height, so
/// coefficients inside the band are exact.
class FormalSeries {
public:
    using Coeffs = std::map<ZVec, std::int64_t, HeightLexLess>;

    FormalSeries() = default;
    FormalSeries(QVec basepoint, std::int64_t cutoff);

    static FormalSeries one(QVec basepoint, std::int64_t cutoff);
    static FormalSeries monomial(QVec basepoint, std::int64_t cutoff, const ZVec& offset, std::int64_t coeff = 1);

    const QVec& basepoint() const noexcept { return basepoint_; }
    std::int64_t cutoff() const noexcept { return cutoff_; }
    std::size_t rank() const noexcept { return basepoint_.size(); }
    const Coeffs& coefficients() const noexcept { return coeffs_; }
    std::int64_t coefficient(const ZVec& offset) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Adds coeff * e^{lambda - offset}; offsets above the cutoff are dropped.
    void add_term(const ZVec& offset, std::int64_t coeff);

    FormalSeries& operator+=(const FormalSeries& other);
    FormalSeries& operator-=(const FormalSeries& other);
    FormalSeries& operator*=(std::int64_t k);

    /// Multiplies by e^{-shift}.
    FormalSeries shifted(const ZVec& shift) const;

    /// Multiplies by (1 - e^{-v})^{-power}, i.e. the geometric series
    /// sum_k e^{-k v} raised to `power`. v must have positive height.
    void divide_by_one_minus(const ZVec& v, std::int64_t power = 1);
    /// Multiplies by (1 - e^{-v})^{power}.
    void multiply_by_one_minus(const ZVec& v, std::int64_t power = 1);

    /// Copy restricted to offsets of height <= h.
    FormalSeries truncated(std::int64_t h) const;

    friend bool operator==(const FormalSeries& a, const FormalSeries& b)
    {
        return a.basepoint_ == b.basepoint_ && a.cutoff_ == b.cutoff_ && a.coeffs_ == b.coeffs_;
    }

private:
    void check_compatible(const FormalSeries& other) const;

    QVec basepoint_;
    std::int64_t cutoff_ = 0;
    Coeffs coeffs_;
};

/// Truncated convolution; throws BasepointMismatch on differing basepoint or cutoff.
FormalSeries series_product(const FormalSeries& a, const FormalSeries& b);

/// Finitely supported sum_v coeff(v) e^{v} over the root lattice.
class LaurentPolynomial {
public:
    using Terms = std::map<ZVec, std::int64_t>;

    LaurentPolynomial() = default;
    static LaurentPolynomial constant(std::size_t rank, std::int64_t k);
    /// 1 - e^{v}
    static LaurentPolynomial one_minus_exp(const ZVec& v);

    const Terms& terms() const noexcept { return terms_; }
    void add_term(const ZVec& v, std::int64_t coeff);

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    Terms terms_;
};

}  // namespace kmw

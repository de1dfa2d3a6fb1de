#include "kmw/series.hpp"

namespace kmw {

FormalSeries::FormalSeries(QVec basepoint, std::int64_t cutoff) : basepoint_(std::move(basepoint)), cutoff_(cutoff) {}

FormalSeries FormalSeries::one(QVec basepoint, std::int64_t cutoff)
{
    ZVec zero(basepoint.size(), 0);
    return monomial(std::move(basepoint), cutoff, zero, 1);
}

FormalSeries FormalSeries::monomial(QVec basepoint, std::int64_t cutoff, const ZVec& offset, std::int64_t coeff)
{
    FormalSeries s(std::move(basepoint), cutoff);
    s.add_term(offset, coeff);
    return s;
}

std::int64_t FormalSeries::coefficient(const ZVec& offset) const
{
    auto it = coeffs_.find(offset);
    return it == coeffs_.end() ? 0 : it->second;
}

void FormalSeries::add_term(const ZVec& offset, std::int64_t coeff)
{
    if (coeff == 0 || height(offset) > cutoff_) return;
    auto [it, inserted] = coeffs_.emplace(offset, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

void FormalSeries::check_compatible(const FormalSeries& other) const
{
    if (basepoint_ != other.basepoint_ || cutoff_ != other.cutoff_)
        throw Error(ErrorKind::BasepointMismatch, "series have different basepoints or cutoffs");
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& other)
{
    check_compatible(other);
    for (const auto& [m, k] : other.coeffs_) add_term(m, k);
    return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& other)
{
    check_compatible(other);
    for (const auto& [m, k] : other.coeffs_) add_term(m, -k);
    return *this;
}

FormalSeries& FormalSeries::operator*=(std::int64_t k)
{
    if (k == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [m, coeff] : coeffs_) coeff *= k;
    return *this;
}

FormalSeries FormalSeries::shifted(const ZVec& shift) const
{
    FormalSeries out(basepoint_, cutoff_);
    for (const auto& [m, k] : coeffs_) {
        ZVec moved = m;
        for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += shift[i];
        out.add_term(moved, k);
    }
    return out;
}

void FormalSeries::divide_by_one_minus(const ZVec& v, std::int64_t power)
{
    if (height(v) <= 0) throw Error(ErrorKind::InvalidArgument, "geometric series direction must have positive height");
    for (std::int64_t p = 0; p < power; ++p) {
        // new(m) = old(m) + new(m - v). Keys inserted during the walk sit
        // strictly higher in the (height, lex) order, so the walk reaches
        // them after their predecessor is final.
        for (auto it = coeffs_.begin(); it != coeffs_.end(); ++it) {
            ZVec next = it->first;
            for (std::size_t i = 0; i < next.size(); ++i) next[i] += v[i];
            if (height(next) > cutoff_) continue;
            coeffs_[next] += it->second;
        }
        std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
    }
}

void FormalSeries::multiply_by_one_minus(const ZVec& v, std::int64_t power)
{
    for (std::int64_t p = 0; p < power; ++p) {
        FormalSeries moved = shifted(v);
        *this -= moved;
    }
}

FormalSeries FormalSeries::truncated(std::int64_t h) const
{
    FormalSeries out(basepoint_, cutoff_);
    for (const auto& [m, k] : coeffs_)
        if (height(m) <= h) out.coeffs_.emplace(m, k);
    return out;
}

FormalSeries series_product(const FormalSeries& a, const FormalSeries& b)
{
    if (a.basepoint() != b.basepoint() || a.cutoff() != b.cutoff())
        throw Error(ErrorKind::BasepointMismatch, "series have different basepoints or cutoffs");
    FormalSeries out(a.basepoint(), a.cutoff());
    for (const auto& [ma, ka] : a.coefficients()) {
        auto ha = height(ma);
        for (const auto& [mb, kb] : b.coefficients()) {
            if (ha + height(mb) > a.cutoff()) break;  // b is sorted by height
            ZVec sum = ma;
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += mb[i];
            out.add_term(sum, ka * kb);
        }
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t rank, std::int64_t k)
{
    LaurentPolynomial p;
    p.add_term(ZVec(rank, 0), k);
    return p;
}

LaurentPolynomial LaurentPolynomial::one_minus_exp(const ZVec& v)
{
    LaurentPolynomial p = constant(v.size(), 1);
    p.add_term(v, -1);
    return p;
}

void LaurentPolynomial::add_term(const ZVec& v, std::int64_t coeff)
{
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(v, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other)
{
    for (const auto& [v, k] : other.terms_) add_term(v, k);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    LaurentPolynomial out;
    for (const auto& [va, ka] : a.terms_)
        for (const auto& [vb, kb] : b.terms_) {
            ZVec sum = va;
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += vb[i];
            out.add_term(sum, ka * kb);
        }
    return out;
}

}  // namespace kmw

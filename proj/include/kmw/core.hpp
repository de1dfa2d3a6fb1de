// Basic value types shared by every kmw module: exact rationals, lattice
// vectors, index sets and the library error type.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kmw {

using Rational = mpq_class;

/// Integer vector in the root lattice, coordinates w.r.t. the simple roots.
using ZVec = std::vector<std::int64_t>;
/// Rational vector in the root lattice.
using QVec = std::vector<Rational>;

using IndexSet = std::set<int>;

enum class ErrorKind {
    DiagonalNotTwo,
    PositiveOffDiagonal,
    AsymmetricZero,
    NotSquare,
    NotSymmetrizable,
    RequiresSymmetrizable,
    RequiresFiniteType,
    NotInTitsCone,
    NonIntegralPairing,
    NotDominant,
    NotDominantIntegral,
    InfiniteStabilizer,
    IntegrabilityTooLarge,
    BasepointMismatch,
    ZeroDenominator,
    TruncationUncertain,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parses "p/q" or an integer literal.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

/// Parses a comma separated list of rationals, e.g. "2,-1/2".
QVec parse_rational_list(std::string_view text);
/// Parses a comma separated list of indices; the empty string is the empty set.
IndexSet parse_index_list(std::string_view text);

bool is_integer(const Rational& q);
bool is_nonneg_integer(const Rational& q);
std::int64_t to_int64(const Rational& q);

template <typename T>
T height(const std::vector<T>& v)
{
    T h = 0;
    for (const auto& x : v) h += x;
    return h;
}

/// Orders vectors by (height, lexicographic); the canonical output order.
struct HeightLexLess {
    bool operator()(const ZVec& a, const ZVec& b) const
    {
        auto ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    }
    bool operator()(const QVec& a, const QVec& b) const
    {
        Rational ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

using ZVecSet = std::set<ZVec, HeightLexLess>;

ZVec unit_vector(std::size_t n, int i);
QVec to_qvec(const ZVec& v);
/// Throws InvalidArgument if some coordinate is not an integer.
ZVec to_zvec(const QVec& v);

/// Enumerates every ZVec in Z>=0^I supported on `support` with height <= n,
/// in (height, lex) order.
std::vector<ZVec> nonneg_vectors(std::size_t rank, const IndexSet& support, std::int64_t n);

IndexSet full_index_set(std::size_t rank);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);
bool is_subset(const IndexSet& a, const IndexSet& b);
/// All subsets of `s`, smallest first.
std::vector<IndexSet> subsets(const IndexSet& s);

std::string format_index_set(const IndexSet& s);
/// "(a,b,...)"
std::string format_zvec(const ZVec& v);

}  // namespace kmw

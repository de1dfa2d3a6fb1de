#include "kmw/core.hpp"

#include <algorithm>
#include <charconv>

namespace kmw {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DiagonalNotTwo: return "DiagonalNotTwo";
    case ErrorKind::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorKind::AsymmetricZero: return "AsymmetricZero";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::RequiresSymmetrizable: return "RequiresSymmetrizable";
    case ErrorKind::RequiresFiniteType: return "RequiresFiniteType";
    case ErrorKind::NotInTitsCone: return "NotInTitsCone";
    case ErrorKind::NonIntegralPairing: return "NonIntegralPairing";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::NotDominantIntegral: return "NotDominantIntegral";
    case ErrorKind::InfiniteStabilizer: return "InfiniteStabilizer";
    case ErrorKind::IntegrabilityTooLarge: return "IntegrabilityTooLarge";
    case ErrorKind::BasepointMismatch: return "BasepointMismatch";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::TruncationUncertain: return "TruncationUncertain";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind)
{
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

template <typename Fn>
void split_commas(std::string_view text, Fn&& fn)
{
    text = trim(text);
    if (text.empty()) return;
    while (true) {
        auto pos = text.find(',');
        fn(trim(text.substr(0, pos)));
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + 1);
    }
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    text = trim(text);
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (num.front() == '+') num.remove_prefix(1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw Error(ErrorKind::InvalidArgument, "not a rational: '" + std::string(text) + "'");
    mpz_class p{std::string(num)}, q{std::string(den)};
    if (q == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& q)
{
    return q.get_str();
}

QVec parse_rational_list(std::string_view text)
{
    QVec out;
    split_commas(text, [&](std::string_view item) { out.push_back(parse_rational(item)); });
    return out;
}

IndexSet parse_index_list(std::string_view text)
{
    IndexSet out;
    split_commas(text, [&](std::string_view item) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc() || ptr != item.data() + item.size() || value < 0)
            throw Error(ErrorKind::InvalidArgument, "not an index: '" + std::string(item) + "'");
        out.insert(value);
    });
    return out;
}

bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

bool is_nonneg_integer(const Rational& q)
{
    return is_integer(q) && q >= 0;
}

std::int64_t to_int64(const Rational& q)
{
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw Error(ErrorKind::InvalidArgument, "expected a machine integer, got " + q.get_str());
    return q.get_num().get_si();
}

ZVec unit_vector(std::size_t n, int i)
{
    ZVec v(n, 0);
    v.at(static_cast<std::size_t>(i)) = 1;
    return v;
}

QVec to_qvec(const ZVec& v)
{
    QVec out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

ZVec to_zvec(const QVec& v)
{
    ZVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_int64(x));
    return out;
}

std::vector<ZVec> nonneg_vectors(std::size_t rank, const IndexSet& support, std::int64_t n)
{
    std::vector<ZVec> out;
    if (n < 0) return out;
    std::vector<int> idx(support.begin(), support.end());
    ZVec cur(rank, 0);
    // depth-first over the support coordinates, bounded by the remaining height
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t left) -> void {
        if (pos == idx.size()) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t k = 0; k <= left; ++k) {
            cur[idx[pos]] = k;
            self(self, pos + 1, left - k);
        }
        cur[idx[pos]] = 0;
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end(), HeightLexLess{});
    return out;
}

IndexSet full_index_set(std::size_t rank)
{
    IndexSet s;
    for (std::size_t i = 0; i < rank; ++i) s.insert(static_cast<int>(i));
    return s;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b)
{
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

bool is_subset(const IndexSet& a, const IndexSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<IndexSet> subsets(const IndexSet& s)
{
    std::vector<int> items(s.begin(), s.end());
    std::vector<IndexSet> out;
    for (unsigned mask = 0; mask < (1u << items.size()); ++mask) {
        IndexSet sub;
        for (std::size_t k = 0; k < items.size(); ++k)
            if (mask & (1u << k)) sub.insert(items[k]);
        out.push_back(std::move(sub));
    }
    std::stable_sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) { return a.size() < b.size(); });
    return out;
}

std::string format_index_set(const IndexSet& s)
{
    std::string out = "{";
    bool first = true;
    for (int i : s) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

std::string format_zvec(const ZVec& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

}  // namespace kmw

// Generalized Cartan matrices, symmetrizers, finite/affine/indefinite
// classification of subdiagrams, and positive roots with multiplicities.
#pragma once

#include "kmw/core.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kmw {

/// A validated generalized Cartan matrix. Construct through validate_gcm().
class GeneralizedCartanMatrix {
public:
    std::size_t rank() const noexcept { return entries_.size(); }
    std::int64_t operator()(int i, int j) const { return entries_[i][j]; }
    const std::vector<std::vector<std::int64_t>>& entries() const noexcept { return entries_; }
    const std::string& name() const noexcept { return name_; }

    /// Pairing (alpha_j-check, v) for a root-lattice vector v.
    template <typename T>
    T coroot_pairing(int j, const std::vector<T>& v) const
    {
        T s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += T(entries_[j][i]) * v[i];
        return s;
    }

    /// s_j applied to a root-lattice vector: v - (alpha_j-check, v) alpha_j.
    ZVec reflect_root(int j, const ZVec& v) const;
    QVec reflect_root(int j, const QVec& v) const;

    friend bool operator==(const GeneralizedCartanMatrix& a, const GeneralizedCartanMatrix& b)
    {
        return a.entries_ == b.entries_;
    }

private:
    friend GeneralizedCartanMatrix validate_gcm(const std::vector<std::vector<std::int64_t>>&, std::string);
    std::vector<std::vector<std::int64_t>> entries_;
    std::string name_;
};

GeneralizedCartanMatrix validate_gcm(const std::vector<std::vector<std::int64_t>>& matrix, std::string name = {});

struct Symmetrizer {
    std::vector<Rational> d;
};

/// d[i] a[i][j] = d[j] a[j][i], min d = 1 on each connected component.
/// Throws NotSymmetrizable.
Symmetrizer symmetrize(const GeneralizedCartanMatrix& gcm);
std::optional<Symmetrizer> try_symmetrize(const GeneralizedCartanMatrix& gcm);

/// The invariant form on the root lattice, (alpha_i, alpha_j) = d_i a_ij.
class BilinearForm {
public:
    BilinearForm(const GeneralizedCartanMatrix& gcm, const Symmetrizer& sym);

    const Rational& gram(int i, int j) const { return gram_[i][j]; }
    const Rational& d(int i) const { return d_[i]; }
    std::size_t rank() const noexcept { return d_.size(); }

    Rational operator()(const ZVec& a, const ZVec& b) const;

private:
    std::vector<Rational> d_;
    std::vector<std::vector<Rational>> gram_;
};

/// Connected components of the Dynkin diagram restricted to J.
std::vector<IndexSet> connected_components(const GeneralizedCartanMatrix& gcm, const IndexSet& J);
bool is_connected_support(const GeneralizedCartanMatrix& gcm, const ZVec& v);

enum class DiagramType { Finite, Affine, Indefinite };
std::string_view to_string(DiagramType t);

/// Finite: every component positive definite. Affine: no indefinite
/// component and at least one positive semidefinite component of corank 1.
/// Non-symmetrizable submatrices are Indefinite.
DiagramType classify_subdiagram(const GeneralizedCartanMatrix& gcm, const IndexSet& J);

struct RootEntry {
    ZVec root;
    std::int64_t mult = 0;
    bool real = false;
};

/// Positive roots of height <= cutoff, in (height, lex) order.
class RootDatum {
public:
    RootDatum(std::int64_t cutoff, std::vector<RootEntry> entries);

    std::int64_t cutoff() const noexcept { return cutoff_; }
    const std::vector<RootEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    /// 0 when `beta` is not a positive root of height <= cutoff.
    std::int64_t multiplicity(const ZVec& beta) const;
    bool contains(const ZVec& beta) const { return multiplicity(beta) > 0; }

private:
    std::int64_t cutoff_;
    std::vector<RootEntry> entries_;
    std::map<ZVec, std::size_t> index_;
};

/// Positive real roots of height <= cutoff by reflection BFS from the
/// simple roots. Works for every GCM.
ZVecSet real_positive_roots(const GeneralizedCartanMatrix& gcm, std::int64_t cutoff);

/// Multiplicities dim g_beta for all beta in Z>=0^I of height <= cutoff, by
/// the Peterson recurrence; vectors that are not roots map to 0.
std::map<ZVec, std::int64_t> peterson_multiplicities(const GeneralizedCartanMatrix& gcm, const Symmetrizer& sym,
                                                     std::int64_t cutoff);

/// Throws RequiresSymmetrizable when `sym` is empty.
RootDatum positive_roots(const GeneralizedCartanMatrix& gcm, const std::optional<Symmetrizer>& sym,
                         std::int64_t cutoff);

}  // namespace kmw

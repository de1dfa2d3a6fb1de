// Weights in basepoint-plus-offset coordinates and the Weyl group actions
// on them: reflections, dominance raising, orbits, isotropy, bounded group
// enumeration and minimal coset representatives.
#pragma once

#include "kmw/cartan.hpp"

#include <optional>
#include <variant>

namespace kmw {

/// The weight lambda - sum_i m[i] alpha_i, where c[i] = (alpha_i-check, lambda).
struct Weight {
    QVec c;
    QVec m;

    static Weight at_basepoint(QVec c);

    /// (alpha_j-check, weight) = c[j] - sum_i a[j][i] m[i].
    Rational pairing(const GeneralizedCartanMatrix& gcm, int j) const;

    friend bool operator==(const Weight&, const Weight&) = default;
};

/// w = s_{letters[0]} s_{letters[1]} ... ; acts right-to-left.
class WeylWord {
public:
    WeylWord() = default;
    explicit WeylWord(std::vector<int> letters) : letters_(std::move(letters)) {}

    const std::vector<int>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    /// s_j * this
    WeylWord prepend(int j) const;

    friend bool operator==(const WeylWord&, const WeylWord&) = default;

private:
    std::vector<int> letters_;
};

Weight reflect(const GeneralizedCartanMatrix& gcm, int j, const Weight& w);
Weight apply_word(const GeneralizedCartanMatrix& gcm, const WeylWord& word, const Weight& w);
/// w(v) for a root-lattice vector v.
ZVec apply_word(const GeneralizedCartanMatrix& gcm, const WeylWord& word, const ZVec& v);
QVec apply_word(const GeneralizedCartanMatrix& gcm, const WeylWord& word, const QVec& v);
WeylWord inverse(const WeylWord& word);

struct DominantResult {
    Weight weight;
    WeylWord word;  // word(input) == weight
};

/// Raises `w` into the J-dominant chamber, always reflecting at the smallest
/// index with negative pairing. Throws NotInTitsCone after max_steps
/// reflections; that verdict is bound-limited, not a proof.
DominantResult to_dominant(const GeneralizedCartanMatrix& gcm, const Weight& w, const IndexSet& J,
                           std::size_t max_steps);

struct OrbitSlice {
    QVec c;
    std::set<QVec, HeightLexLess> offsets;
    std::int64_t cutoff = 0;
    IndexSet J;
};

/// W_J-orbit of `w`, truncated to offsets of height <= cutoff.
OrbitSlice orbit(const GeneralizedCartanMatrix& gcm, const Weight& w, const IndexSet& J, std::int64_t cutoff);

IndexSet stabilizer_simple_generators(const GeneralizedCartanMatrix& gcm, const Weight& w, const IndexSet& J);
bool isotropy_is_finite(const GeneralizedCartanMatrix& gcm, const Weight& w, const IndexSet& J);

struct HeightPruned {};
struct LengthBounded {
    std::size_t max_length = 0;
};
using EnumerationMode = std::variant<HeightPruned, LengthBounded>;

struct GroupElement {
    WeylWord word;
    ZVec image_offset;                  // lambda - w(lambda)
    std::vector<ZVec> simple_root_images;  // w(alpha_i), i in I
    ZVec key;                           // rho_J - w(rho_J), injective on W_J
};

/// Elements w of W_J acting on the J-dominant basepoint `c` (offset zero).
/// HeightPruned: one entry per w with height(lambda - w lambda) <= cutoff;
/// requires finite isotropy. LengthBounded: every w with length <= bound.
/// Entries are ordered by length, then by discovery.
std::vector<GroupElement> group_elements_bounded(const GeneralizedCartanMatrix& gcm, const QVec& c,
                                                 const IndexSet& J, std::int64_t cutoff, EnumerationMode mode);

/// One minimal-length representative of every coset W_{Jp} w in W_J with
/// length <= max_length. Without a bound, W_J must be finite.
std::vector<WeylWord> minimal_coset_reps(const GeneralizedCartanMatrix& gcm, const IndexSet& Jp, const IndexSet& J,
                                         std::optional<std::size_t> max_length);

/// All of W_J as words; W_J must be finite.
std::vector<WeylWord> finite_group_elements(const GeneralizedCartanMatrix& gcm, const IndexSet& J);

/// word . w = word(w + rho) - rho
Weight dot_action(const GeneralizedCartanMatrix& gcm, const WeylWord& word, const Weight& w);

}  // namespace kmw

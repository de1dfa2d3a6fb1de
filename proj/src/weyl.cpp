#include "kmw/weyl.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace kmw {

Weight Weight::at_basepoint(QVec c)
{
    QVec m(c.size(), Rational(0));
    return Weight{std::move(c), std::move(m)};
}

Rational Weight::pairing(const GeneralizedCartanMatrix& gcm, int j) const
{
    return c[j] - gcm.coroot_pairing(j, m);
}

WeylWord WeylWord::prepend(int j) const
{
    std::vector<int> out;
    out.reserve(letters_.size() + 1);
    out.push_back(j);
    out.insert(out.end(), letters_.begin(), letters_.end());
    return WeylWord(std::move(out));
}

Weight reflect(const GeneralizedCartanMatrix& gcm, int j, const Weight& w)
{
    Weight out = w;
    out.m[j] += w.pairing(gcm, j);
    return out;
}

Weight apply_word(const GeneralizedCartanMatrix& gcm, const WeylWord& word, const Weight& w)
{
    Weight out = w;
    for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) out = reflect(gcm, *it, out);
    return out;
}

ZVec apply_word(const GeneralizedCartanMatrix& gcm, const WeylWord& word, const ZVec& v)
{
    ZVec out = v;
    for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) out = gcm.reflect_root(*it, out);
    return out;
}

QVec apply_word(const GeneralizedCartanMatrix& gcm, const WeylWord& word, const QVec& v)
{
    QVec out = v;
    for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) out = gcm.reflect_root(*it, out);
    return out;
}

WeylWord inverse(const WeylWord& word)
{
    std::vector<int> letters(word.letters().rbegin(), word.letters().rend());
    return WeylWord(std::move(letters));
}

DominantResult to_dominant(const GeneralizedCartanMatrix& gcm, const Weight& w, const IndexSet& J,
                           std::size_t max_steps)
{
    if (max_steps < 1) throw Error(ErrorKind::InvalidArgument, "max_steps must be at least 1");
    Weight cur = w;
    std::vector<int> applied;
    for (std::size_t step = 0;; ++step) {
        int neg = -1;
        for (int j : J) {
            if (cur.pairing(gcm, j) < 0) {
                neg = j;
                break;
            }
        }
        if (neg < 0) break;
        if (step == max_steps)
            throw Error(ErrorKind::NotInTitsCone,
                        "no J-dominant representative within " + std::to_string(max_steps) + " reflections");
        cur = reflect(gcm, neg, cur);
        applied.push_back(neg);
    }
    std::reverse(applied.begin(), applied.end());
    return {std::move(cur), WeylWord(std::move(applied))};
}

namespace {

void require_integral_pairings(const GeneralizedCartanMatrix& gcm, const Weight& w, const IndexSet& J)
{
    for (int j : J)
        if (!is_integer(w.pairing(gcm, j)))
            throw Error(ErrorKind::NonIntegralPairing, "pairing at index " + std::to_string(j) + " is " +
                                                           w.pairing(gcm, j).get_str());
}

void require_dominant(const GeneralizedCartanMatrix& gcm, const Weight& w, const IndexSet& J)
{
    for (int j : J)
        if (w.pairing(gcm, j) < 0)
            throw Error(ErrorKind::NotDominant, "pairing at index " + std::to_string(j) + " is negative");
}

constexpr std::size_t kOrbitRaiseSteps = 10000;

}  // namespace

OrbitSlice orbit(const GeneralizedCartanMatrix& gcm, const Weight& w, const IndexSet& J, std::int64_t cutoff)
{
    require_integral_pairings(gcm, w, J);
    // start from the dominant representative: downward moves from it are
    // monotone in height, so the truncated BFS is exhaustive
    auto top = to_dominant(gcm, w, J, kOrbitRaiseSteps).weight;
    OrbitSlice out{w.c, {}, cutoff, J};
    if (height(top.m) > cutoff) return out;
    std::deque<QVec> queue{top.m};
    out.offsets.insert(top.m);
    while (!queue.empty()) {
        Weight cur{w.c, queue.front()};
        queue.pop_front();
        for (int j : J) {
            Rational p = cur.pairing(gcm, j);
            if (p == 0) continue;
            QVec next = cur.m;
            next[j] += p;
            if (height(next) > cutoff) continue;
            if (out.offsets.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return out;
}

IndexSet stabilizer_simple_generators(const GeneralizedCartanMatrix& gcm, const Weight& w, const IndexSet& J)
{
    require_dominant(gcm, w, J);
    IndexSet out;
    for (int j : J)
        if (w.pairing(gcm, j) == 0) out.insert(j);
    return out;
}

bool isotropy_is_finite(const GeneralizedCartanMatrix& gcm, const Weight& w, const IndexSet& J)
{
    return classify_subdiagram(gcm, stabilizer_simple_generators(gcm, w, J)) == DiagramType::Finite;
}

std::vector<GroupElement> group_elements_bounded(const GeneralizedCartanMatrix& gcm, const QVec& c,
                                                 const IndexSet& J, std::int64_t cutoff, EnumerationMode mode)
{
    const std::size_t n = gcm.rank();
    Weight lambda = Weight::at_basepoint(c);
    require_integral_pairings(gcm, lambda, J);
    require_dominant(gcm, lambda, J);
    const bool pruned = std::holds_alternative<HeightPruned>(mode);
    std::size_t max_length = std::numeric_limits<std::size_t>::max();
    if (pruned) {
        if (!isotropy_is_finite(gcm, lambda, J))
            throw Error(ErrorKind::InfiniteStabilizer, "height-pruned enumeration needs finite isotropy");
    } else {
        max_length = std::get<LengthBounded>(mode).max_length;
    }
    std::vector<std::int64_t> base(n, 0);
    for (int j : J) base[j] = to_int64(c[j]);

    GroupElement identity;
    identity.image_offset = ZVec(n, 0);
    identity.key = ZVec(n, 0);
    for (std::size_t i = 0; i < n; ++i) identity.simple_root_images.push_back(unit_vector(n, static_cast<int>(i)));

    std::vector<GroupElement> out{identity};
    std::set<ZVec> seen{identity.key};
    std::size_t level_begin = 0;
    for (std::size_t length = 0; length < max_length; ++length) {
        std::size_t level_end = out.size();
        if (level_begin == level_end) break;
        for (std::size_t k = level_begin; k < level_end; ++k) {
            for (int j : J) {
                // length goes up iff (alpha_j-check, w rho_J) > 0
                std::int64_t aux = 1 - gcm.coroot_pairing(j, out[k].key);
                if (aux <= 0) continue;
                std::int64_t p = base[j] - gcm.coroot_pairing(j, out[k].image_offset);
                ZVec image = out[k].image_offset;
                image[j] += p;
                if (pruned && height(image) > cutoff) continue;
                ZVec key = out[k].key;
                key[j] += aux;
                if (!seen.insert(key).second) continue;
                GroupElement next;
                next.word = out[k].word.prepend(j);
                next.image_offset = std::move(image);
                next.key = std::move(key);
                for (const auto& v : out[k].simple_root_images) next.simple_root_images.push_back(gcm.reflect_root(j, v));
                out.push_back(std::move(next));
            }
        }
        level_begin = level_end;
    }
    return out;
}

std::vector<WeylWord> finite_group_elements(const GeneralizedCartanMatrix& gcm, const IndexSet& J)
{
    if (classify_subdiagram(gcm, J) != DiagramType::Finite)
        throw Error(ErrorKind::RequiresFiniteType, "W_J is infinite for J = " + format_index_set(J));
    QVec zero(gcm.rank(), Rational(0));
    std::vector<WeylWord> out;
    for (auto& e : group_elements_bounded(gcm, zero, J, 0, LengthBounded{std::numeric_limits<std::size_t>::max()}))
        out.push_back(std::move(e.word));
    return out;
}

std::vector<WeylWord> minimal_coset_reps(const GeneralizedCartanMatrix& gcm, const IndexSet& Jp, const IndexSet& J,
                                         std::optional<std::size_t> max_length)
{
    if (!is_subset(Jp, J)) throw Error(ErrorKind::InvalidArgument, "J' must be a subset of J");
    if (!max_length && classify_subdiagram(gcm, J) != DiagramType::Finite)
        throw Error(ErrorKind::RequiresFiniteType, "unbounded coset enumeration needs finite W_J");
    QVec zero(gcm.rank(), Rational(0));
    auto bound = max_length.value_or(std::numeric_limits<std::size_t>::max());
    std::vector<WeylWord> out;
    for (auto& e : group_elements_bounded(gcm, zero, J, 0, LengthBounded{bound})) {
        // minimal in W_{J'} w iff w rho_J is strictly J'-dominant
        bool minimal = std::all_of(Jp.begin(), Jp.end(),
                                   [&](int j) { return 1 - gcm.coroot_pairing(j, e.key) > 0; });
        if (minimal) out.push_back(std::move(e.word));
    }
    return out;
}

Weight dot_action(const GeneralizedCartanMatrix& gcm, const WeylWord& word, const Weight& w)
{
    Weight shifted = w;
    for (auto& x : shifted.c) x += 1;
    for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) {
        if (!is_integer(shifted.pairing(gcm, *it)))
            throw Error(ErrorKind::NonIntegralPairing, "dot action at index " + std::to_string(*it));
        shifted = reflect(gcm, *it, shifted);
    }
    return Weight{w.c, std::move(shifted.m)};
}

}  // namespace kmw

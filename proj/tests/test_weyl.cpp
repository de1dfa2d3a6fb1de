#include "kmw/fixtures.hpp"
#include "kmw/weyl.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace kmw;

namespace {

QVec q(std::initializer_list<long> xs)
{
    QVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

std::set<QVec, HeightLexLess> offsets(std::initializer_list<std::initializer_list<long>> xs)
{
    std::set<QVec, HeightLexLess> out;
    for (auto x : xs) out.insert(q(x));
    return out;
}

// pairing computed from scratch: (alpha_j-check, lambda - sum m_i alpha_i)
Rational direct_pairing(const GeneralizedCartanMatrix& a, const Weight& w, int j)
{
    Rational p = w.c[j];
    for (std::size_t i = 0; i < a.rank(); ++i) p -= w.m[i] * static_cast<long>(a(j, i));
    return p;
}

Weight random_weight(std::mt19937& rng, std::size_t rank)
{
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3), off(0, 4);
    Weight w;
    for (std::size_t i = 0; i < rank; ++i) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        w.c.push_back(x);
        w.m.emplace_back(off(rng));
    }
    return w;
}

}  // namespace

TEST_CASE("reflect")
{
    auto a1 = fixture("A1");
    CHECK(reflect(a1, 0, Weight::at_basepoint(q({2}))).m == q({2}));

    auto a2 = fixture("A2");
    auto w = reflect(a2, 1, reflect(a2, 0, Weight::at_basepoint(q({1, 1}))));
    CHECK(w.m == q({1, 2}));

    Weight fixed{q({0, 3}), q({0, 0})};
    CHECK(reflect(a2, 0, fixed) == fixed);
}

TEST_CASE("reflections are involutions and pairings match direct arithmetic")
{
    std::mt19937 rng(11);
    for (const auto& name : fixture_names()) {
        auto a = fixture(name);
        for (int trial = 0; trial < 20; ++trial) {
            auto w = random_weight(rng, a.rank());
            for (std::size_t j = 0; j < a.rank(); ++j) {
                CHECK(w.pairing(a, j) == direct_pairing(a, w, j));
                CHECK(reflect(a, j, reflect(a, j, w)) == w);
                auto r = reflect(a, j, w);
                CHECK(r.pairing(a, j) == -w.pairing(a, j));
            }
        }
    }
}

TEST_CASE("to_dominant")
{
    auto a2 = fixture("A2");
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto w = random_weight(rng, 2);
        auto res = to_dominant(a2, w, {0, 1}, 10000);
        for (int j : {0, 1}) CHECK(res.weight.pairing(a2, j) >= 0);
        CHECK(apply_word(a2, res.word, w) == res.weight);
    }

    auto aff = fixture("affineA1");
    CHECK_THROWS_AS(to_dominant(aff, Weight::at_basepoint(q({1, -2})), {0, 1}, 200), Error);
    try {
        to_dominant(aff, Weight::at_basepoint(q({1, -2})), {0, 1}, 200);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInTitsCone);
    }
    auto dom = to_dominant(aff, Weight::at_basepoint(q({0, 1})), {0, 1}, 10);
    CHECK(dom.word.empty());

    // positive level in affine A1 always terminates
    for (int trial = 0; trial < 30; ++trial) {
        auto w = random_weight(rng, 2);
        if (w.pairing(aff, 0) + w.pairing(aff, 1) <= 0) continue;
        auto res = to_dominant(aff, w, {0, 1}, 10000);
        CHECK(apply_word(aff, res.word, w) == res.weight);
    }
}

TEST_CASE("orbit")
{
    auto a2 = fixture("A2");
    auto slice = orbit(a2, Weight::at_basepoint(q({1, 1})), {0, 1}, 10);
    CHECK(slice.offsets == offsets({{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}, {2, 2}}));

    auto trivial = orbit(a2, Weight{q({1, 1}), q({1, 0})}, {}, 10);
    CHECK(trivial.offsets == offsets({{1, 0}}));

    // affine A1, lambda = Lambda_0: orbit points below height 3 by hand:
    // s0 -> (1,0); s1 s0 -> (1,2)? pairing of s0 lambda with alpha_1 is 0 + 2 = 2.
    auto aff = fixture("affineA1");
    auto affine = orbit(aff, Weight::at_basepoint(q({1, 0})), {0, 1}, 3);
    CHECK(affine.offsets == offsets({{0, 0}, {1, 0}, {1, 2}}));

    CHECK_THROWS_AS(orbit(a2, Weight::at_basepoint({Rational(1, 2), 1}), {0, 1}, 3), Error);
}

TEST_CASE("orbit agrees with the matrix-group oracle in finite type")
{
    std::mt19937 rng(5);
    for (const auto& name : {"A2", "B2", "G2", "A1xA1", "A3", "B3"}) {
        auto a = fixture(name);
        auto J = full_index_set(a.rank());
        for (int trial = 0; trial < 5; ++trial) {
            std::uniform_int_distribution<int> dist(-2, 2);
            QVec c;
            for (std::size_t i = 0; i < a.rank(); ++i) c.emplace_back(dist(rng));
            auto slice = orbit(a, Weight::at_basepoint(c), J, 60);
            std::set<QVec, HeightLexLess> expected;
            for (const auto& [s, t] : oracle::affine_action(a, c, J)) {
                QVec m;
                for (auto x : t) m.emplace_back(x);
                expected.insert(m);
            }
            CHECK(slice.offsets.size() == expected.size());
            // oracle offsets are relative to lambda, the slice basepoint is lambda too
            CHECK(slice.offsets == expected);
        }
    }
}

TEST_CASE("stabilizer and isotropy")
{
    auto a2 = fixture("A2");
    CHECK(stabilizer_simple_generators(a2, Weight::at_basepoint(q({1, 1})), {0, 1}).empty());
    CHECK(stabilizer_simple_generators(a2, Weight::at_basepoint(q({0, 1})), {0, 1}) == IndexSet{0});
    CHECK(isotropy_is_finite(a2, Weight::at_basepoint(q({0, 1})), {0, 1}));

    auto aff = fixture("affineA1");
    CHECK(stabilizer_simple_generators(aff, Weight::at_basepoint(q({0, 0})), {0, 1}) == IndexSet{0, 1});
    CHECK_FALSE(isotropy_is_finite(aff, Weight::at_basepoint(q({0, 0})), {0, 1}));
    CHECK(isotropy_is_finite(aff, Weight::at_basepoint(q({1, 0})), {0, 1}));

    CHECK_THROWS_AS(stabilizer_simple_generators(a2, Weight::at_basepoint(q({-1, 1})), {0, 1}), Error);
}

TEST_CASE("group_elements_bounded")
{
    auto a1 = fixture("A1");
    auto els = group_elements_bounded(a1, q({2}), {0}, 10, HeightPruned{});
    REQUIRE(els.size() == 2);
    CHECK(els[0].image_offset == ZVec{0});
    CHECK(els[1].image_offset == ZVec{2});

    auto a2 = fixture("A2");
    auto s3 = group_elements_bounded(a2, q({1, 1}), {0, 1}, 10, HeightPruned{});
    CHECK(s3.size() == 6);
    std::set<QVec, HeightLexLess> images;
    for (const auto& g : s3) images.insert(to_qvec(g.image_offset));
    CHECK(images == orbit(a2, Weight::at_basepoint(q({1, 1})), {0, 1}, 10).offsets);

    auto aff = fixture("affineA1");
    auto dihedral = group_elements_bounded(aff, q({0, 0}), {0, 1}, 100, LengthBounded{4});
    CHECK(dihedral.size() == 9);
    std::map<std::size_t, int> per_length;
    for (const auto& g : dihedral) ++per_length[g.word.length()];
    CHECK(per_length[0] == 1);
    for (std::size_t l = 1; l <= 4; ++l) CHECK(per_length[l] == 2);

    CHECK_THROWS_AS(group_elements_bounded(aff, q({0, 0}), {0, 1}, 5, HeightPruned{}), Error);
}

TEST_CASE("finite Weyl group orders")
{
    for (auto [name, order] : std::vector<std::pair<const char*, std::size_t>>{
             {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A1xA1", 4}, {"A3", 24}, {"B3", 48}, {"C3", 48}}) {
        auto a = fixture(name);
        auto J = full_index_set(a.rank());
        QVec c(a.rank(), Rational(0));
        auto els = group_elements_bounded(a, c, J, 1000, HeightPruned{});
        CHECK(els.size() == order);
        CHECK(finite_group_elements(a, J).size() == order);
        CHECK(oracle::weyl_group(a, J).size() == order);
        // simple root images agree with the oracle matrices
        std::set<std::vector<ZVec>> ours, theirs;
        for (const auto& g : els) ours.insert(g.simple_root_images);
        for (const auto& m : oracle::weyl_group(a, J)) {
            std::vector<ZVec> cols;
            for (std::size_t i = 0; i < a.rank(); ++i) cols.push_back(oracle::mat_apply(m, unit_vector(a.rank(), i)));
            theirs.insert(cols);
        }
        CHECK(ours == theirs);
    }
    CHECK_THROWS_AS(finite_group_elements(fixture("affineA1"), {0, 1}), Error);
}

TEST_CASE("minimal_coset_reps")
{
    auto a2 = fixture("A2");
    auto reps = minimal_coset_reps(a2, {0}, {0, 1}, std::nullopt);
    REQUIRE(reps.size() == 3);
    std::multiset<std::size_t> lengths;
    for (const auto& r : reps) lengths.insert(r.length());
    CHECK(lengths == std::multiset<std::size_t>{0, 1, 2});

    CHECK(minimal_coset_reps(a2, {0, 1}, {0, 1}, std::nullopt).size() == 1);
    CHECK(minimal_coset_reps(fixture("B2"), {}, {0, 1}, std::nullopt).size() == 8);

    // J'-reduced: prepending s_j' lengthens, checked through rho_J images
    for (const auto& name : {"A2", "B2", "G2", "A3", "B3"}) {
        auto a = fixture(name);
        auto J = full_index_set(a.rank());
        auto order = finite_group_elements(a, J).size();
        for (const auto& Jp : subsets(J)) {
            auto cosets = minimal_coset_reps(a, Jp, J, std::nullopt);
            CHECK(cosets.size() * finite_group_elements(a, Jp).size() == order);
            QVec ones(a.rank(), Rational(1));
            for (const auto& w : cosets) {
                // w^{-1} sends each alpha_j', j' in J', to a positive root
                for (int j : Jp) {
                    auto img = apply_word(a, inverse(w), unit_vector(a.rank(), j));
                    CHECK(std::all_of(img.begin(), img.end(), [](auto x) { return x >= 0; }));
                }
            }
        }
    }
}

TEST_CASE("dot_action")
{
    auto a2 = fixture("A2");
    Weight lam = Weight::at_basepoint(q({3, -1}));
    for (int i : {0, 1}) {
        auto r = dot_action(a2, WeylWord({i}), lam);
        QVec expected = q({0, 0});
        expected[i] = lam.c[i] + 1;
        CHECK(r.m == expected);
    }

    auto a1a1 = fixture("A1xA1");
    CHECK(dot_action(a1a1, WeylWord({0, 1}), Weight::at_basepoint(q({0, 0}))).m == q({1, 1}));

    Weight minus_rho = Weight::at_basepoint(q({-1, -1}));
    for (int i : {0, 1}) CHECK(dot_action(a2, WeylWord({i}), minus_rho) == minus_rho);

    // composition of letters
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> letter(0, 1), len(0, 6);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> letters(len(rng));
        for (auto& l : letters) l = letter(rng);
        Weight step = lam;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) step = dot_action(a2, WeylWord({*it}), step);
        CHECK(dot_action(a2, WeylWord(letters), lam) == step);
    }

    CHECK_THROWS_AS(dot_action(a2, WeylWord({0}), Weight::at_basepoint({Rational(1, 2), 0})), Error);
}

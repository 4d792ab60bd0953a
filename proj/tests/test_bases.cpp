#include "lawrence/bases.hpp"
#include "lawrence/complexity.hpp"
#include "lawrence/model_matrix.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace lawrence;

namespace {

IntMatrix model(const std::string& s, const TableDims& d) { return build_model_matrix(parse_complex(s), d).matrix; }

IntVector iv(std::initializer_list<std::int64_t> xs) { return oracle::vec(oracle::Ints(xs)); }

std::vector<oracle::Ints> as_ints(const std::vector<IntVector>& vs) {
    std::vector<oracle::Ints> out;
    for (const auto& v : vs) out.push_back(oracle::ints(v));
    return out;
}

// Degrees m·v⁺ of the Graver elements: a set of moves is Markov exactly when
// it connects these fibers.
std::vector<oracle::Ints> graver_degrees(const IntMatrix& m, const std::vector<IntVector>& g) {
    std::set<oracle::Ints> out;
    for (const auto& v : g) out.insert(oracle::ints(m * positive_part(v)));
    return {out.begin(), out.end()};
}

bool is_two_by_two_minor(const IntVector& v) { return norm1(v) == Integer(4); }

}  // namespace

TEST(IsMarkovBasis, TwoByTwoIndependence) {
    const auto m = model("[1][2]", {2, 2});
    const auto g = graver_basis(m);
    EXPECT_TRUE(is_markov_basis(g, m, g));
    EXPECT_FALSE(is_markov_basis(make_basis(BasisKind::markov_minimal, m, {}), m, g));
}

TEST(IsMarkovBasis, MinorsOfThreeByThree) {
    const auto m = model("[1][2]", {3, 3});
    const auto g = graver_basis(m);
    std::vector<IntVector> minors;
    for (const auto& v : g.vectors)
        if (is_two_by_two_minor(v)) minors.push_back(v);
    ASSERT_EQ(minors.size(), 9u);
    EXPECT_TRUE(is_markov_basis(make_basis(BasisKind::markov_minimal, m, minors), m, g));
    EXPECT_TRUE(oracle::connects_degrees(m, as_ints(minors), graver_degrees(m, g.vectors)));
}

TEST(IsMarkovBasis, RejectsNonKernelCandidate) {
    const auto m = model("[1][2]", {2, 2});
    EXPECT_THROW(is_markov_basis(make_basis(BasisKind::graver, m, {iv({1, 0, 0, 0})}), m, graver_basis(m)),
                 precondition_error);
}

TEST(MinimalMarkov, TwoByTwo) {
    EXPECT_EQ(minimal_markov_basis(model("[1][2]", {2, 2})).vectors, (std::vector<IntVector>{iv({1, -1, -1, 1})}));
}

TEST(MinimalMarkov, ThreeByThreeKeepsOnlyMinors) {
    const auto mb = minimal_markov_basis(model("[1][2]", {3, 3}));
    EXPECT_EQ(mb.size(), 9u);
    for (const auto& v : mb.vectors) EXPECT_TRUE(is_two_by_two_minor(v));
}

TEST(MinimalMarkov, NoThreeWayBinaryIsSingleMove) {
    const auto mb = minimal_markov_basis(model("[12][13][23]", {2, 2, 2}));
    EXPECT_EQ(mb.vectors, (std::vector<IntVector>{iv({1, -1, -1, 1, -1, 1, 1, -1})}));
}

TEST(MinimalMarkov, RemovingAnyElementBreaksMarkovProperty) {
    for (const auto& m : {model("[1][2]", {3, 3}), model("[1][2][3]", {2, 2, 2}), model("[1][2]", {2, 4})}) {
        const auto g = graver_basis(m);
        const auto mb = minimal_markov_basis(m);
        const auto degrees = graver_degrees(m, g.vectors);
        EXPECT_TRUE(oracle::connects_degrees(m, as_ints(mb.vectors), degrees));
        for (std::size_t i = 0; i < mb.size(); ++i) {
            auto fewer = mb.vectors;
            fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
            EXPECT_FALSE(is_markov_basis(make_basis(BasisKind::markov_minimal, m, fewer), m, g));
            EXPECT_FALSE(oracle::connects_degrees(m, as_ints(fewer), degrees));
        }
    }
}

TEST(MinimalMarkov, RejectsMatricesWithNegativeEntries) {
    EXPECT_THROW(minimal_markov_basis(IntMatrix{{1, -1, 0}}), precondition_error);
}

TEST(UniversalMarkov, TwoByTwo) {
    EXPECT_EQ(universal_markov_basis(model("[1][2]", {2, 2})).vectors, (std::vector<IntVector>{iv({1, -1, -1, 1})}));
}

// Six-cycle fibers are overlap-connected, so only the minors survive.
TEST(UniversalMarkov, ThreeByThreeIsMinors) {
    const auto u = universal_markov_basis(model("[1][2]", {3, 3}));
    EXPECT_EQ(u.size(), 9u);
    for (const auto& v : u.vectors) EXPECT_TRUE(is_two_by_two_minor(v));
}

TEST(UniversalMarkov, ContainmentChain) {
    for (const auto& m : {model("[1][2]", {3, 4}), model("[12][13][23]", {2, 2, 3}), model("[12][34]", {2, 2, 2, 2}),
                          model("[12][14][23]", {2, 2, 2, 2})}) {
        const auto g = graver_basis(m);
        const auto u = universal_markov_basis(m);
        const auto mb = minimal_markov_basis(m);
        const auto s = semiconformal_free_set(m);
        EXPECT_TRUE(s.subset_of(mb));
        EXPECT_TRUE(mb.subset_of(u));
        EXPECT_TRUE(u.subset_of(g));
        EXPECT_TRUE(is_markov_basis(u, m, g));
    }
}

// Reference: u belongs exactly when no fiber point joins the supports of u⁺
// and u⁻ through a chain of overlapping supports.
TEST(UniversalMarkov, MembershipMatchesOverlapOracle) {
    const auto m = model("[1][2]", {3, 3});
    const auto u = universal_markov_basis(m);
    for (const auto& v : graver_vectors(m)) {
        const auto fiber = oracle::fiber_by_scan(m, oracle::ints(m * positive_part(v)));
        std::vector<std::size_t> comp(fiber.size());
        std::iota(comp.begin(), comp.end(), std::size_t{0});
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < fiber.size(); ++i)
                for (std::size_t j = 0; j < fiber.size(); ++j) {
                    bool meet = false;
                    for (std::size_t c = 0; c < fiber[i].size(); ++c) meet = meet || (fiber[i][c] > 0 && fiber[j][c] > 0);
                    if (meet && comp[j] < comp[i]) {
                        comp[i] = comp[j];
                        changed = true;
                    }
                }
        }
        const auto pos = std::find(fiber.begin(), fiber.end(), oracle::ints(positive_part(v))) - fiber.begin();
        const auto neg = std::find(fiber.begin(), fiber.end(), oracle::ints(negative_part(v))) - fiber.begin();
        EXPECT_EQ(u.contains(v), comp[static_cast<std::size_t>(pos)] != comp[static_cast<std::size_t>(neg)]);
    }
}

TEST(UniversalMarkov, LiftedTriangleAtTwoSlices) {
    const auto ld = link_deletion_matrices(parse_complex("[12][13][23]"), {2, 2});
    const auto lam = lawrence_lift(ld.a.matrix, ld.b, 2).matrix;
    const auto u = universal_markov_basis(lam);
    std::size_t best = 0;
    for (const auto& v : u.vectors) best = std::max(best, type_of(v, 2, ld.a.matrix.cols()));
    std::size_t best_min = 0;
    for (const auto& v : minimal_markov_basis(lam).vectors) best_min = std::max(best_min, type_of(v, 2, ld.a.matrix.cols()));
    EXPECT_EQ(best, 2u);
    EXPECT_EQ(best, best_min);
}

TEST(SemiconformalFree, TwoByTwo) {
    EXPECT_EQ(semiconformal_free_set(model("[1][2]", {2, 2})).vectors, (std::vector<IntVector>{iv({1, -1, -1, 1})}));
}

TEST(SemiconformalFree, ThreeByThreeContainsMinors) {
    const auto m = model("[1][2]", {3, 3});
    const auto s = semiconformal_free_set(m);
    std::size_t minors = 0;
    for (const auto& v : s.vectors) minors += is_two_by_two_minor(v);
    EXPECT_EQ(minors, 9u);
    // Each six-cycle has a semi-conformal split through a minor.
    const auto kernel = oracle::kernel_in_box(m, 2);
    for (const auto& v : graver_vectors(m)) {
        const bool free = !oracle::semiconformally_decomposable(oracle::ints(v), kernel) &&
                          !oracle::semiconformally_decomposable(oracle::ints(-v), kernel);
        EXPECT_EQ(s.contains(v), free);
    }
}

TEST(SemiconformalFree, OneSidedContainsStrict) {
    const auto link_matrix = link_deletion_matrices(parse_complex("[12][13][23]"), {3, 3}).a.matrix;
    for (const auto& m : {link_matrix, model("[12][13][23]", {2, 2, 3})}) {
        const auto strict = semiconformal_free_set(m);
        const auto one_sided = semiconformal_free_set(m, SemiconformalMode::one_sided);
        EXPECT_TRUE(strict.subset_of(one_sided));
        EXPECT_TRUE(one_sided.subset_of(universal_markov_basis(m)));
    }
}

TEST(BigMove, TwoIsParityMove) {
    const auto u = big_move_generator(2);
    EXPECT_EQ(u, iv({1, -1, -1, 1, -1, 1, 1, -1}));
    EXPECT_TRUE(model("[12][13][23]", {2, 2, 2}).annihilates(u));
}

TEST(BigMove, ThreeIsInUniversalBasis) {
    const auto u = big_move_generator(3);
    EXPECT_EQ(std::count_if(u.begin(), u.end(), [](const Integer& x) { return !x.is_zero(); }), 12);
    const auto m = model("[12][13][23]", {3, 3, 2});
    EXPECT_TRUE(m.annihilates(u));
    EXPECT_TRUE(universal_markov_basis(m).contains(u));
}

TEST(BigMove, InKernelForLargerSizes) {
    for (int k = 2; k <= 6; ++k) {
        const auto u = big_move_generator(k);
        EXPECT_TRUE(model("[12][13][23]", {k, k, 2}).annihilates(u)) << k;
        EXPECT_EQ(norm1(u), Integer(std::int64_t{4 * k}));
    }
    EXPECT_THROW(big_move_generator(1), precondition_error);
}

TEST(MatrixId, StableAndContentSensitive) {
    const auto a = model("[1][2]", {2, 2});
    EXPECT_EQ(matrix_id(a), matrix_id(model("[1][2]", {2, 2})));
    EXPECT_NE(matrix_id(a), matrix_id(model("[1][2]", {2, 3})));
    EXPECT_EQ(matrix_id(a).substr(0, 4), "4x4-");
}

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qglab/errors.hpp"
#include "qglab/idempotent.hpp"

using namespace qglab;

namespace {

constexpr double tol = 1e-9;

struct S3Fixture : ::testing::Test {
    oracle::Group s3 = oracle::s3();
    QuantumGroupPtr c = QuantumGroup::create(builtin("c_s3"));
    QuantumGroupPtr cg = QuantumGroup::create(builtin("cg_s3"));
    std::vector<std::size_t> cmap = oracle::basis_map(*c, s3, "d_");
    std::vector<std::size_t> gmap = oracle::basis_map(*cg, s3, "l_");

    Functional uniform(const oracle::Subset& h) const { return {c, oracle::to_basis(cmap, oracle::uniform(s3, h))}; }
    Functional indicator(const oracle::Subset& h) const { return {cg, oracle::to_basis(gmap, oracle::indicator(s3, h))}; }
    Vec c_indicator(const oracle::Subset& h) const { return oracle::to_basis(cmap, oracle::indicator(s3, h)); }
};

Functional random_functional(const QuantumGroupPtr& g, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    Vec v(static_cast<Eigen::Index>(g->dim()));
    for (auto& x : v) x = Complex(nd(rng), nd(rng));
    return {g, v};
}

}  // namespace

TEST(Harmonic, ConvolutionIsAssociativeWithCounitUnit) {
    std::mt19937_64 rng(11);
    for (const auto& name : builtin_names()) {
        const auto g = QuantumGroup::create(builtin(name));
        const Functional eps = Functional::counit(g);
        for (int t = 0; t < 5; ++t) {
            const Functional a = random_functional(g, rng), b = random_functional(g, rng), r = random_functional(g, rng);
            const double scale = a.coeffs().norm() * b.coeffs().norm() * r.coeffs().norm();
            EXPECT_LT(convolve(convolve(a, b), r).distance(convolve(a, convolve(b, r))) / scale, 1e-10) << name;
            EXPECT_LT(convolve(eps, a).distance(a), 1e-12) << name;
            EXPECT_LT(convolve(a, eps).distance(a), 1e-12) << name;
        }
    }
}

TEST(Harmonic, ConvolutionMatchesMeasureConvolution) {
    const oracle::Group s3 = oracle::s3();
    const auto g = QuantumGroup::create(builtin("c_s3"));
    const auto map = oracle::basis_map(*g, s3, "d_");
    const oracle::Measure mu = {0.1, 0.2, 0.05, 0.3, 0.15, 0.2}, nu = {0.3, 0.1, 0.1, 0.2, 0.2, 0.1};
    const Functional got = convolve({g, oracle::to_basis(map, mu)}, {g, oracle::to_basis(map, nu)});
    EXPECT_LT(sup_dist(got.coeffs(), oracle::to_basis(map, oracle::convolve(s3, mu, nu))), 1e-14);
}

TEST(Harmonic, ConvolutionHomeMismatch) {
    const auto a = QuantumGroup::create(builtin("c_z2"));
    const auto b = QuantumGroup::create(builtin("c_z2"));
    try {
        convolve(Functional::counit(a), Functional::counit(b));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::HomeMismatch);
    }
}

TEST(Harmonic, CZ2IdempotencyQuadratic) {
    const auto g = QuantumGroup::create(builtin("c_z2"));
    // p^2 + (1-p)^2 = p has roots 1/2 and 1.
    for (double p : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
        Vec v(2);
        v << p, 1 - p;
        const bool expected = std::abs(p * p + (1 - p) * (1 - p) - p) < 1e-12;
        EXPECT_EQ(is_idempotent_state({g, v}, tol), expected) << p;
    }
    const Functional u = Functional::haar(g);
    EXPECT_LT(convolve(u, u).distance(u), 1e-15);
}

TEST(Harmonic, CounitIsIdempotentEverywhere) {
    for (const auto& name : builtin_names()) {
        const auto g = QuantumGroup::create(builtin(name));
        EXPECT_TRUE(is_idempotent_state(Functional::counit(g), tol)) << name;
        EXPECT_TRUE(is_idempotent_state(Functional::haar(g), tol)) << name;
    }
}

TEST_F(S3Fixture, GroupAlgebraConvolutionIsPointwise) {
    const Functional a = indicator(s3.set({"e", "(12)"})), b = indicator(s3.set({"e", "(123)", "(132)"}));
    const Functional ab = convolve(a, b);
    for (Eigen::Index i = 0; i < 6; ++i) EXPECT_EQ(ab.coeffs()(i), a.coeffs()(i) * b.coeffs()(i));
}

TEST_F(S3Fixture, OrderFollowsSubgroupInclusion) {
    const auto h12 = make_idempotent(uniform(s3.set({"e", "(12)"})), tol);
    const auto all = make_idempotent(Functional::haar(c), tol);
    const auto a3 = make_idempotent(uniform(s3.set({"e", "(123)", "(132)"})), tol);
    EXPECT_TRUE(preceq(h12, all, tol));
    EXPECT_FALSE(preceq(h12, a3, tol));
    EXPECT_FALSE(preceq(all, h12, tol));
    const auto eps = make_idempotent(Functional::counit(c), tol);
    for (const auto* s : {&h12, &all, &a3}) EXPECT_TRUE(preceq(eps, *s, tol));
}

TEST_F(S3Fixture, OrderCriteriaAgreeOnAllSubgroupPairs) {
    for (const auto& h : oracle::subgroups(s3))
        for (const auto& k : oracle::subgroups(s3)) {
            const auto a = make_idempotent(uniform(h), tol), b = make_idempotent(uniform(k), tol);
            const OrderCriteria oc = order_criteria(a, b);
            EXPECT_TRUE(oc.agree(tol));
            EXPECT_EQ(oc.holds(tol), oracle::subset_of(h, k));
        }
}

TEST_F(S3Fixture, SupportOfUniformIsIndicator) {
    const oracle::Subset h = s3.set({"e", "(12)"});
    const Vec q = support_projection(uniform(h), tol);
    EXPECT_LT(sup_dist(q, c_indicator(h)), 1e-12);
    EXPECT_LT(sup_dist(support_projection(Functional::haar(c), tol), c->one()), 1e-12);
}

TEST_F(S3Fixture, SupportOfSubgroupIndicatorOnGroupAlgebra) {
    for (const auto& h : oracle::subgroups(s3)) {
        const Vec q = support_projection(indicator(h), tol);
        Vec expected = Vec::Zero(6);
        for (std::size_t x : h) expected(static_cast<Eigen::Index>(gmap[x])) = 1.0 / static_cast<double>(h.size());
        EXPECT_LT(sup_dist(q, expected), 1e-12);
        // brute-force projection check in the group basis
        EXPECT_LT(sup_dist(cg->multiply(expected, expected), expected), 1e-12);
    }
}

TEST_F(S3Fixture, SupportReportIdentities) {
    for (const auto& h : oracle::subgroups(s3)) {
        const Functional w = uniform(h);
        const SupportReport r = support_report(w, support_projection(w, tol), tol);
        EXPECT_LT(r.projection, tol);
        EXPECT_LT(r.kills_complement, tol);
        EXPECT_LT(r.compression, tol);
        EXPECT_LT(r.null_positive, std::sqrt(tol));
    }
}

TEST_F(S3Fixture, StateFromSupport) {
    EXPECT_LT(state_from_qperp(c, c->one(), tol).distance(Functional::haar(c)), 1e-12);
    const oracle::Subset h = s3.set({"e", "(12)"});
    EXPECT_LT(state_from_qperp(c, c_indicator(h), tol).distance(uniform(h)), 1e-12);
}

TEST(Harmonic, StateFromSupportErrors) {
    const auto g = QuantumGroup::create(builtin("c_z2"));
    try {
        state_from_qperp(g, Vec::Zero(2), tol);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroMass);
    }
    Vec half(2);
    half << 0.5, 0.5;
    try {
        state_from_qperp(g, half, tol);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAProjection);
    }
}

TEST(Harmonic, SupportOfNonStateFails) {
    const auto g = QuantumGroup::create(builtin("c_z2"));
    Vec v(2);
    v << 1.5, -0.5;
    try {
        support_projection({g, v}, tol);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAState);
    }
}

TEST_F(S3Fixture, GroupLikeProjections) {
    for (const auto& h : oracle::subgroups(s3)) EXPECT_TRUE(group_like_check(*c, c_indicator(h), tol));
    EXPECT_FALSE(group_like_check(*c, c_indicator(s3.set({"(12)"})), tol));
    EXPECT_TRUE(group_like_check(*c, c->one(), tol));
    // non-subgroup two-element set
    EXPECT_FALSE(group_like_check(*c, c_indicator(s3.set({"e", "(123)"})), tol));
}

TEST_F(S3Fixture, HaarTypeDetection) {
    for (const auto& h : oracle::subgroups(s3)) {
        EXPECT_TRUE(haar_type_test(make_idempotent(uniform(h), tol), tol));
        // On C[S3] the left kernel is two-sided exactly for normal subgroups.
        bool normal = true;
        for (std::size_t g = 0; g < 6; ++g)
            for (std::size_t x : h)
                if (!h.count(s3.mul(s3.mul(g, x), s3.inv(g)))) normal = false;
        EXPECT_EQ(haar_type_test(make_idempotent(indicator(h), tol), tol), normal);
    }
    EXPECT_FALSE(haar_type_test(make_idempotent(indicator(s3.set({"e", "(12)"})), tol), tol));
    EXPECT_TRUE(haar_type_test(make_idempotent(indicator(s3.set({"e", "(123)", "(132)"})), tol), tol));
}

TEST_F(S3Fixture, SupportIdentitiesOnSubgroupStates) {
    for (const auto& h : oracle::subgroups(s3)) {
        for (const Functional& w : {uniform(h), indicator(h)}) {
            const SupportIdentities si = support_identities(make_idempotent(w, tol), tol);
            EXPECT_TRUE(si.pass(tol));
            EXPECT_EQ(si.corner_dim, 1u);
        }
    }
}

TEST(Harmonic, MakeIdempotentRejectsNonIdempotent) {
    const auto g = QuantumGroup::create(builtin("c_z2"));
    Vec v(2);
    v << 0.25, 0.75;
    try {
        make_idempotent({g, v}, tol);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotIdempotent);
    }
}

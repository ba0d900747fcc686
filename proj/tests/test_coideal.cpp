#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qglab/errors.hpp"
#include "qglab/idempotent.hpp"

using namespace qglab;

namespace {

constexpr double tol = 1e-9;

struct Coideals : ::testing::Test {
    oracle::Group s3 = oracle::s3();
    QuantumGroupPtr c = QuantumGroup::create(builtin("c_s3"));
    QuantumGroupPtr cg = QuantumGroup::create(builtin("cg_s3"));
    std::vector<std::size_t> cmap = oracle::basis_map(*c, s3, "d_");
    std::vector<std::size_t> gmap = oracle::basis_map(*cg, s3, "l_");
    oracle::Subset h12 = s3.set({"e", "(12)"});
    oracle::Subset h13 = s3.set({"e", "(13)"});
    oracle::Subset a3 = s3.set({"e", "(123)", "(132)"});

    Functional uniform(const oracle::Subset& h) const { return {c, oracle::to_basis(cmap, oracle::uniform(s3, h))}; }
    Functional indicator(const oracle::Subset& h) const { return {cg, oracle::to_basis(gmap, oracle::indicator(s3, h))}; }

    // C(G/H): functions constant on left cosets gH.
    Coideal coset_algebra(const oracle::Subset& h) const {
        std::vector<Vec> vs;
        for (std::size_t g = 0; g < 6; ++g) {
            oracle::Measure f(6, 0.0);
            for (std::size_t x : h) f[s3.mul(g, x)] = 1.0;
            vs.push_back(oracle::to_basis(cmap, f));
        }
        return Coideal::span(c, vs, tol);
    }
    Coideal group_subalgebra(const oracle::Subset& h) const {
        std::vector<Vec> vs;
        for (std::size_t x : h) vs.push_back(cg->basis(gmap[x]));
        return Coideal::span(cg, vs, tol);
    }
};

}  // namespace

TEST_F(Coideals, ExpectationExtremes) {
    EXPECT_LT((expectation(Functional::counit(c), tol) - Mat::Identity(6, 6)).norm(), 1e-12);
    const Mat e = expectation(Functional::haar(c), tol);
    // E(x) = psi(x) 1
    EXPECT_LT((e - c->one() * c->haar().transpose()).norm(), 1e-12);
}

TEST_F(Coideals, ExpectationAveragesOverCosets) {
    const oracle::Measure f = {1.0, -2.0, 0.5, 3.0, 7.0, -1.0};
    for (const auto& h : oracle::subgroups(s3)) {
        const Mat e = expectation(uniform(h), tol);
        const Vec got = e * oracle::to_basis(cmap, f);
        EXPECT_LT(sup_dist(got, oracle::to_basis(cmap, oracle::coset_average(s3, f, h))), 1e-12);
    }
}

TEST_F(Coideals, ExpectationPropertiesAndEq1) {
    for (const auto& name : builtin_names()) {
        const auto g = QuantumGroup::create(builtin(name));
        for (const Functional& w : {Functional::counit(g), Functional::haar(g)}) {
            const ExpectationReport r = check_expectation(w, expectation(w, tol), tol);
            EXPECT_LT(r.idempotent, 1e-10) << name;
            EXPECT_LT(r.unital, 1e-10) << name;
            EXPECT_GT(r.min_choi_eigenvalue, -1e-10) << name;
            EXPECT_LT(r.bimodular, 1e-10) << name;
            EXPECT_LT(r.eq1, 1e-10) << name;
        }
    }
    for (const auto& h : oracle::subgroups(s3))
        for (const Functional& w : {uniform(h), indicator(h)}) {
            const ExpectationReport r = check_expectation(w, expectation(w, tol), tol);
            EXPECT_LT(std::max({r.idempotent, r.unital, r.bimodular, r.eq1}), 1e-10);
            EXPECT_GT(r.min_choi_eigenvalue, -1e-10);
        }
}

TEST_F(Coideals, ExpectationRejectsNonIdempotent) {
    Vec v = c->haar();
    v(0) += 0.1;
    v(1) -= 0.1;
    try {
        expectation({c, v}, tol);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotIdempotent);
    }
}

TEST_F(Coideals, RangeCoideals) {
    EXPECT_EQ(range_coideal(Functional::counit(c), tol).dim(), 6u);
    EXPECT_EQ(range_coideal(Functional::haar(c), tol).dim(), 1u);
    for (const auto& h : oracle::subgroups(s3)) {
        const Coideal n = range_coideal(indicator(h), tol);
        EXPECT_LT(n.distance(group_subalgebra(h)), 1e-10);
        EXPECT_TRUE(n.flags().is_coideal && n.flags().is_subalgebra && n.flags().is_star_closed && n.flags().contains_unit);
        const Coideal m = range_coideal(uniform(h), tol);
        EXPECT_LT(m.distance(coset_algebra(h)), 1e-10);
        EXPECT_EQ(m.dim(), 6 / h.size());
    }
}

TEST_F(Coideals, CoidealMembership) {
    EXPECT_TRUE(is_coideal(c, {c->one()}, tol));
    std::vector<Vec> all;
    for (std::size_t i = 0; i < 6; ++i) all.push_back(c->basis(i));
    EXPECT_TRUE(is_coideal(c, all, tol));
    EXPECT_FALSE(is_coideal(c, {c->basis(cmap[s3.identity])}, tol));
}

TEST_F(Coideals, GeneratedSubalgebra) {
    const Coideal sc = Coideal::scalars(c, tol);
    EXPECT_EQ(generated_subalgebra(sc, sc, tol).dim(), 1u);
    const Coideal gen = generated_subalgebra(coset_algebra(h12), coset_algebra(h13), tol);
    EXPECT_EQ(gen.dim(), 6u);
    EXPECT_TRUE(gen.flags().is_coideal);
    EXPECT_EQ(generated_subalgebra(group_subalgebra(h12), group_subalgebra(a3), tol).dim(), 6u);
    // Oracle: the subalgebra generated by C[H] and C[K] is C[<H, K>].
    for (const auto& h : oracle::subgroups(s3))
        for (const auto& k : oracle::subgroups(s3))
            EXPECT_LT(generated_subalgebra(group_subalgebra(h), group_subalgebra(k), tol)
                          .distance(group_subalgebra(oracle::generated(s3, h, k))),
                      1e-10);
}

TEST_F(Coideals, Intersections) {
    const Coideal n = coset_algebra(h12);
    EXPECT_LT(intersect(n, n, tol).distance(n), 1e-10);
    EXPECT_EQ(intersect(coset_algebra(h12), coset_algebra(h13), tol).dim(), 1u);
    EXPECT_EQ(intersect(group_subalgebra(h12), group_subalgebra(a3), tol).dim(), 1u);
    for (const auto& h : oracle::subgroups(s3))
        for (const auto& k : oracle::subgroups(s3))
            EXPECT_LT(intersect(group_subalgebra(h), group_subalgebra(k), tol)
                          .distance(group_subalgebra(oracle::intersection(h, k))),
                      1e-10);
}

TEST_F(Coideals, GnsProjections) {
    const Mat ps = gns_projection(Coideal::scalars(c, tol));
    const Vec one = c->eta(c->one()).normalized();
    EXPECT_LT((ps - one * one.adjoint()).norm(), 1e-12);
    EXPECT_LT((gns_projection(Coideal::whole(c, tol)) - Mat::Identity(6, 6)).norm(), 1e-12);
    for (const auto& h : oracle::subgroups(s3)) {
        const Mat p = gns_projection(coset_algebra(h));
        EXPECT_LT((p * p - p).norm(), 1e-12);
        EXPECT_LT((p.adjoint() - p).norm(), 1e-12);
        EXPECT_NEAR(p.trace().real(), 6.0 / static_cast<double>(h.size()), 1e-12);
    }
}

TEST_F(Coideals, TraceExpectation) {
    EXPECT_LT((trace_expectation(Coideal::scalars(c, tol)) - c->one() * c->haar().transpose()).norm(), 1e-12);
    EXPECT_LT((trace_expectation(Coideal::whole(c, tol)) - Mat::Identity(6, 6)).norm(), 1e-12);
    for (const auto& h : oracle::subgroups(s3))
        for (const Functional& w : {uniform(h), indicator(h)})
            EXPECT_LT((trace_expectation(range_coideal(w, tol)) - expectation(w, tol)).norm(), 1e-10);
}

TEST_F(Coideals, TraceExpectationNeedsSubalgebra) {
    oracle::Measure f(6, 0.0);
    f[s3.index("(12)")] = 1.0;
    try {
        trace_expectation(Coideal::span(c, std::vector<Vec>{oracle::to_basis(cmap, f)}, tol));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotASubalgebra);
    }
}

TEST_F(Coideals, StateFromCoideal) {
    EXPECT_LT(state_from_coideal(Coideal::scalars(c, tol), tol).omega.distance(Functional::haar(c)), 1e-12);
    EXPECT_LT(state_from_coideal(Coideal::whole(c, tol), tol).omega.distance(Functional::counit(c)), 1e-12);
    for (const auto& h : oracle::subgroups(s3)) {
        EXPECT_LT(state_from_coideal(coset_algebra(h), tol).omega.distance(uniform(h)), 1e-10);
        EXPECT_LT(state_from_coideal(group_subalgebra(h), tol).omega.distance(indicator(h)), 1e-10);
        EXPECT_LT(eq_pp_residual(coset_algebra(h)), 1e-10);
    }
}

TEST_F(Coideals, StateFromNonCoidealFails) {
    // C(H\G) for a non-normal H is a right coideal, not a left one.
    std::vector<Vec> vs;
    for (std::size_t g = 0; g < 6; ++g) {
        oracle::Measure f(6, 0.0);
        for (std::size_t x : h12) f[s3.mul(x, g)] = 1.0;
        vs.push_back(oracle::to_basis(cmap, f));
    }
    const Coideal right = Coideal::span(c, vs, tol);
    EXPECT_FALSE(right.flags().is_coideal);
    try {
        state_from_coideal(right, tol);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotACoideal);
    }
}

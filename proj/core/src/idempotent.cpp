#include "qglab/idempotent.hpp"

#include <algorithm>
#include <cmath>

#include "qglab/errors.hpp"

namespace qglab {

namespace {

using Index = Eigen::Index;

double l2_op_norm_diff(const QuantumGroup& g, const Mat& a) {
    return (g.gns().to_l2 * a * g.gns().from_l2).norm();
}

// ||Delta(x)(1 (x) q) - x (x) q|| in L2 (x) L2.
double membership_residual(const QuantumGroup& g, const Vec& x, const Vec& q) {
    const Mat lhs = g.tensor_mul(g.coproduct(x), QuantumGroup::simple_tensor(g.one(), q));
    return l2_tensor_norm(g, lhs - QuantumGroup::simple_tensor(x, q));
}

}  // namespace

IdempotentState make_idempotent(const Functional& omega, double tol, std::string name) {
    const Mat e = expectation(omega, tol);
    const QuantumGroupPtr& g = omega.home();
    Coideal n = Coideal::span(g, e, tol);
    const Vec q = support_projection(omega, tol);
    Mat p = n.l2_projection();
    return {omega, q, std::move(n), e, std::move(p), std::move(name)};
}

bool OrderCriteria::agree(double tol) const {
    const bool c = convolution < tol;
    return (expectations < tol) == c && (coideals < tol) == c && (projections < tol) == c;
}

OrderCriteria order_criteria(const IdempotentState& mu, const IdempotentState& nu) {
    if (mu.home() != nu.home()) throw Error(ErrorKind::HomeMismatch, "order between states on different groups");
    const QuantumGroup& g = *mu.home();
    OrderCriteria c;
    c.convolution = convolve(mu.omega, nu.omega).distance(nu.omega);
    c.expectations = l2_op_norm_diff(g, mu.e * nu.e - nu.e);
    c.coideals = nu.n.inclusion_residual(mu.n);
    c.projections = (mu.p * nu.p - nu.p).norm();
    return c;
}

bool preceq(const IdempotentState& mu, const IdempotentState& nu, double tol) {
    const OrderCriteria c = order_criteria(mu, nu);
    if (!c.agree(tol))
        throw Error(ErrorKind::CriteriaDisagree,
                    "order criteria disagree (convolution " + std::to_string(c.convolution) + ", expectations " +
                        std::to_string(c.expectations) + ", coideals " + std::to_string(c.coideals) + ", projections " +
                        std::to_string(c.projections) + ")");
    return c.holds(tol);
}

bool haar_type_test(const IdempotentState& omega, double tol) {
    const QuantumGroupPtr& g = omega.home();
    const Mat& f = g->gns().from_l2;
    const Mat m = omega.omega.positivity_matrix();
    const Mat w = f.adjoint() * m * f;
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (w + w.adjoint()));
    const RealVec& ev = es.eigenvalues();
    const double cut = tol * std::max(1.0, ev.maxCoeff());
    std::vector<Vec> kernel;
    for (Index k = 0; k < ev.size(); ++k)
        if (ev(k) <= cut) kernel.push_back(f * es.eigenvectors().col(k));
    if (kernel.empty()) return true;
    const Coideal j = Coideal::span(g, kernel, tol);
    const double scale_tol = std::sqrt(tol);
    for (Index a = 0; a < j.basis().cols(); ++a) {
        const Vec x = j.basis().col(a);
        if (!j.contains(g->star(x), scale_tol)) return false;
        for (std::size_t i = 0; i < g->dim(); ++i)
            if (!j.contains(g->multiply(x, g->basis(i)), scale_tol)) return false;
    }
    return true;
}

IdempotentState state_from_coideal(const Coideal& n, double tol) {
    const QuantumGroupPtr& g = n.home();
    const CoidealFlags& fl = n.flags();
    if (!fl.is_coideal) throw Error(ErrorKind::NotACoideal, "subspace is not a left coideal");
    const Mat e = trace_expectation(n);
    const Vec coeffs = (g->data().counit.transpose() * e).transpose();
    const Functional omega(g, coeffs);
    if (!is_idempotent_state(omega, tol))
        throw Error(ErrorKind::NotACoideal, "eps o E is not an idempotent state");
    IdempotentState s = make_idempotent(omega, tol);
    if (s.n.distance(n) > tol) throw Error(ErrorKind::NotACoideal, "recovered state has a different coideal");
    if (eq_pp_residual(n) > tol) throw Error(ErrorKind::NotACoideal, "L2 projection is not group-like on the dual side");
    return s;
}

bool SupportIdentities::pass(double tol) const {
    return membership_in < tol && membership_agrees && annihilation < tol && antipode < tol && group_like < tol &&
           in_coideal < tol && central < tol && corner_dim == 1 && reconstruction < tol;
}

SupportIdentities support_identities(const IdempotentState& omega, double tol) {
    const QuantumGroupPtr& gp = omega.home();
    const QuantumGroup& g = *gp;
    const auto n = static_cast<Index>(g.dim());
    const Vec& qp = omega.q_perp;
    const Vec q = g.one() - qp;
    SupportIdentities r;

    const Mat& nb = omega.n.basis();
    for (Index a = 0; a < nb.cols(); ++a) r.membership_in = std::max(r.membership_in, membership_residual(g, nb.col(a), qp));
    // Orthonormal complement of eta(N).
    const Mat comp = Mat::Identity(n, n) - omega.p;
    Eigen::JacobiSVD<Mat> svd(comp, Eigen::ComputeThinU);
    for (Index k = 0; k < svd.singularValues().size(); ++k) {
        if (svd.singularValues()(k) < 0.5) continue;
        if (membership_residual(g, g.eta_inv(svd.matrixU().col(k)), qp) < tol) r.membership_agrees = false;
    }
    for (std::size_t i = 0; i < g.dim(); ++i) {
        const Vec x = g.basis(i);
        const bool in = omega.n.distance_from(x) < tol * std::max(1.0, g.l2_norm(x));
        const bool identity = membership_residual(g, x, qp) < tol * std::max(1.0, g.l2_norm(x));
        if (in != identity) r.membership_agrees = false;
    }

    r.annihilation = l2_tensor_norm(g, g.tensor_mul(g.coproduct(q), QuantumGroup::simple_tensor(qp, qp)));
    r.antipode = g.l2_norm(g.antipode(q) - q);
    r.group_like = std::max(g.projection_residual(qp), group_like_residual(g, qp));
    r.in_coideal = omega.n.distance_from(qp);
    std::vector<Vec> corner;
    for (Index a = 0; a < nb.cols(); ++a) {
        const Vec x = nb.col(a);
        r.central = std::max(r.central, g.l2_norm(g.multiply(qp, x) - g.multiply(x, qp)));
        corner.push_back(g.multiply(g.multiply(qp, x), qp));
    }
    r.corner_dim = corner.empty() ? 0 : Coideal::span(gp, corner, tol).dim();
    const Functional rebuilt = state_from_qperp(gp, qp, tol);
    r.reconstruction = rebuilt.distance(omega.omega);
    return r;
}

}  // namespace qglab

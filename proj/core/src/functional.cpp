#include "qglab/functional.hpp"

#include <algorithm>
#include <cmath>

#include "qglab/errors.hpp"

namespace qglab {

Functional::Functional(QuantumGroupPtr home, Vec coeffs) : home_(std::move(home)), coeffs_(std::move(coeffs)) {
    if (!home_) throw Error(ErrorKind::HomeMismatch, "functional without a home quantum group");
    if (coeffs_.size() != static_cast<Eigen::Index>(home_->dim()))
        throw Error(ErrorKind::DimensionMismatch, "functional length differs from algebra dimension");
}

double Functional::hermitian_residual() const {
    double r = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) {
        const Vec e = home_->basis(i);
        r = std::max(r, std::abs((*this)(home_->star(e)) - std::conj((*this)(e))));
    }
    return r;
}

Mat Functional::positivity_matrix() const {
    const auto n = static_cast<Eigen::Index>(dim());
    Mat m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Vec si = home_->star(home_->basis(static_cast<std::size_t>(i)));
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = (*this)(home_->multiply(si, home_->basis(static_cast<std::size_t>(j))));
    }
    return m;
}

double Functional::min_positivity_eigenvalue() const {
    const Mat m = positivity_matrix();
    // The Gram-type matrix is relative to a non-orthonormal basis; congruence
    // by the GNS frame keeps the sign pattern and removes basis scaling.
    const Mat& f = home_->gns().from_l2;
    const Mat w = f.adjoint() * m * f;
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (w + w.adjoint()), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

Functional convolve(const Functional& phi, const Functional& chi) {
    if (phi.home() != chi.home()) throw Error(ErrorKind::HomeMismatch, "convolution of functionals on different groups");
    const QuantumGroup& g = *phi.home();
    const std::size_t n = g.dim();
    const Tensor3& d = g.data().comult;
    Vec out = Vec::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        Complex s{};
        for (std::size_t j = 0; j < n; ++j) {
            const Complex pj = phi.coeffs()(static_cast<Eigen::Index>(j));
            if (pj == Complex{}) continue;
            for (std::size_t k = 0; k < n; ++k) s += d(i, j, k) * pj * chi.coeffs()(static_cast<Eigen::Index>(k));
        }
        out(static_cast<Eigen::Index>(i)) = s;
    }
    return {phi.home(), out};
}

Vec slice_right(const QuantumGroup& g, const Vec& x, const Vec& phi) { return g.coproduct(x) * phi; }

Vec slice_left(const QuantumGroup& g, const Vec& x, const Vec& phi) { return g.coproduct(x).transpose() * phi; }

bool is_state(const Functional& phi, double tol) {
    const QuantumGroup& g = *phi.home();
    return phi.hermitian_residual() < tol && std::abs(phi(g.one()) - 1.0) < tol && phi.min_positivity_eigenvalue() > -tol;
}

bool is_idempotent_state(const Functional& phi, double tol) { return idempotent_state_residual(phi) < tol; }

double idempotent_state_residual(const Functional& phi) {
    const QuantumGroup& g = *phi.home();
    return std::max({phi.distance(convolve(phi, phi)), std::abs(phi(g.one()) - 1.0), phi.hermitian_residual(),
                     std::max(0.0, -phi.min_positivity_eigenvalue())});
}

Vec density(const Functional& phi) {
    const QuantumGroup& g = *phi.home();
    const auto n = static_cast<Eigen::Index>(g.dim());
    // phi(e_i) = sum_j rho_j psi(e_j e_i)
    Mat sys(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            sys(i, j) = g.psi(g.multiply(g.basis(static_cast<std::size_t>(j)), g.basis(static_cast<std::size_t>(i))));
    return sys.fullPivLu().solve(phi.coeffs());
}

Vec support_projection(const Functional& omega, double tol) {
    if (!is_state(omega, tol)) throw Error(ErrorKind::NotAState, "support projection needs a state");
    const QuantumGroup& g = *omega.home();
    const Vec rho = density(omega);
    const Mat l = g.l2_left(rho);
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (l + l.adjoint()));
    const RealVec& ev = es.eigenvalues();
    const double cut = tol * std::max(1.0, ev.maxCoeff());
    if (ev.minCoeff() < -cut) throw Error(ErrorKind::NotAState, "density has a negative eigenvalue");
    const auto n = static_cast<Eigen::Index>(g.dim());
    Mat proj = Mat::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        if (ev(k) > cut) proj += es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
    // L(p) eta(1) = eta(p)
    const Vec q = g.eta_inv(proj * g.eta(g.one()));
    if (g.projection_residual(q) > std::sqrt(tol)) throw Error(ErrorKind::NotAState, "support is not a projection");
    return q;
}

SupportReport support_report(const Functional& omega, const Vec& q_perp, double tol) {
    const QuantumGroup& g = *omega.home();
    SupportReport r;
    r.projection = g.projection_residual(q_perp);
    const Vec q = g.one() - q_perp;
    r.kills_complement = std::abs(omega(q));
    double scale = 1.0;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        const Vec y = g.basis(i);
        const Complex w = omega(y);
        const Complex c1 = omega(g.multiply(g.multiply(q_perp, y), q_perp));
        const Complex c2 = omega(g.multiply(y, q_perp));
        const Complex c3 = omega(g.multiply(q_perp, y));
        r.compression = std::max({r.compression, std::abs(w - c1), std::abs(w - c2), std::abs(w - c3)});
        scale = std::max(scale, g.l2_norm(y));
    }
    // Positive elements annihilated by omega: (e_i Q)*(e_i Q) always, and
    // e_i* e_i whenever omega happens to vanish on it.
    for (std::size_t i = 0; i < g.dim(); ++i) {
        const Vec y = g.multiply(g.basis(i), q);
        std::vector<Vec> candidates{g.multiply(g.star(y), y)};
        const Vec bb = g.multiply(g.star(g.basis(i)), g.basis(i));
        if (std::abs(omega(bb)) < tol) candidates.push_back(bb);
        for (const Vec& x : candidates) {
            if (std::abs(omega(x)) >= tol) continue;
            r.null_positive = std::max({r.null_positive, g.l2_norm(g.multiply(q_perp, x)), g.l2_norm(g.multiply(x, q_perp))});
        }
    }
    r.null_positive /= scale;
    return r;
}

Functional state_from_qperp(const QuantumGroupPtr& g, const Vec& q_perp, double tol) {
    if (g->projection_residual(q_perp) > tol) throw Error(ErrorKind::NotAProjection, "Q_perp is not a projection");
    const Complex mass = g->psi(q_perp);
    if (mass.real() <= tol) throw Error(ErrorKind::ZeroMass, "psi(Q_perp) vanishes");
    const auto n = static_cast<Eigen::Index>(g->dim());
    Vec out(n);
    for (Eigen::Index i = 0; i < n; ++i)
        out(i) = g->psi(g->multiply(g->multiply(q_perp, g->basis(static_cast<std::size_t>(i))), q_perp)) / mass;
    return {g, out};
}

double l2_tensor_norm(const QuantumGroup& g, const Mat& x) {
    const Mat& t = g.gns().to_l2;
    return (t * x * t.transpose()).norm();
}

double group_like_residual(const QuantumGroup& g, const Vec& p) {
    const Mat lhs = g.tensor_mul(g.coproduct(p), QuantumGroup::simple_tensor(g.one(), p));
    return l2_tensor_norm(g, lhs - QuantumGroup::simple_tensor(p, p));
}

bool group_like_check(const QuantumGroup& g, const Vec& p, double tol) {
    return g.projection_residual(p) < tol && group_like_residual(g, p) < tol;
}

}  // namespace qglab

#pragma once

#include "qglab/hopf.hpp"

namespace qglab {

// An element of the dual space A*, stored by its values on the basis.
class Functional {
public:
    Functional(QuantumGroupPtr home, Vec coeffs);

    static Functional counit(const QuantumGroupPtr& g) { return {g, g->data().counit}; }
    static Functional haar(const QuantumGroupPtr& g) { return {g, g->haar()}; }
    static Functional zero(const QuantumGroupPtr& g) { return {g, Vec::Zero(static_cast<Eigen::Index>(g->dim()))}; }

    const QuantumGroupPtr& home() const { return home_; }
    const Vec& coeffs() const { return coeffs_; }
    std::size_t dim() const { return static_cast<std::size_t>(coeffs_.size()); }

    Complex operator()(const Vec& x) const { return coeffs_.transpose() * x; }

    // |phi(x*) - conj(phi(x))| over the basis.
    double hermitian_residual() const;
    // [phi(e_i* e_j)]; positive semidefinite iff phi is positive.
    Mat positivity_matrix() const;
    double min_positivity_eigenvalue() const;

    double distance(const Functional& other) const { return sup_dist(coeffs_, other.coeffs_); }

private:
    QuantumGroupPtr home_;
    Vec coeffs_;
};

// (phi * chi)(x) = (phi (x) chi) Delta(x). Throws HomeMismatch.
Functional convolve(const Functional& phi, const Functional& chi);

// Slice maps of Delta(x) = sum X(j,k) e_j (x) e_k.
Vec slice_right(const QuantumGroup& g, const Vec& x, const Vec& phi);  // (id (x) phi) Delta(x)
Vec slice_left(const QuantumGroup& g, const Vec& x, const Vec& phi);   // (phi (x) id) Delta(x)

bool is_state(const Functional& phi, double tol);
bool is_idempotent_state(const Functional& phi, double tol);
// max(||phi*phi - phi||, |phi(1) - 1|, max(0, -lambda_min)).
double idempotent_state_residual(const Functional& phi);

// The density rho with phi(x) = psi(rho x).
Vec density(const Functional& phi);

// Support projection Q_perp = 1 - Q of a state: the spectral projection of
// its density onto eigenvalues above tol. Throws NotAState.
Vec support_projection(const Functional& omega, double tol);

// Residuals of the identities that tie a state to its support projection.
struct SupportReport {
    double projection = 0.0;      // Q_perp^2 = Q_perp = Q_perp*
    double kills_complement = 0.0;  // omega(1 - Q_perp)
    double compression = 0.0;     // omega(y) = omega(Q_perp y Q_perp) = omega(y Q_perp) = omega(Q_perp y)
    double null_positive = 0.0;   // ||Q_perp x|| for positive x with omega(x) ~ 0
};
SupportReport support_report(const Functional& omega, const Vec& q_perp, double tol);

// x -> psi(Q x Q) / psi(Q). Throws NotAProjection or ZeroMass.
Functional state_from_qperp(const QuantumGroupPtr& g, const Vec& q_perp, double tol);

// Delta(p)(1 (x) p) - p (x) p, measured in L2 (x) L2.
double group_like_residual(const QuantumGroup& g, const Vec& p);
bool group_like_check(const QuantumGroup& g, const Vec& p, double tol);

// Frobenius norm of (eta (x) eta)(X).
double l2_tensor_norm(const QuantumGroup& g, const Mat& x);

}  // namespace qglab

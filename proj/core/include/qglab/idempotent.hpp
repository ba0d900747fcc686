#pragma once

#include <string>

#include "qglab/coideal.hpp"

namespace qglab {

// An idempotent state together with the objects it determines.
struct IdempotentState {
    Functional omega;
    Vec q_perp;    // support projection
    Coideal n;     // range of E
    Mat e;         // E(x) = (id (x) omega) Delta(x), algebra coordinates
    Mat p;         // orthogonal projection onto L2(N) = lambda(omega)
    std::string name;

    const QuantumGroupPtr& home() const { return omega.home(); }
    const Vec& coeffs() const { return omega.coeffs(); }
};

// Throws NotIdempotent, or NotAState when the support cannot be formed.
IdempotentState make_idempotent(const Functional& omega, double tol, std::string name = {});

// The four characterizations of mu <= nu.
struct OrderCriteria {
    double convolution = 0.0;  // ||mu * nu - nu||
    double expectations = 0.0; // ||E_mu E_nu - E_nu|| on L2
    double coideals = 0.0;     // N_nu inside N_mu
    double projections = 0.0;  // ||P_mu P_nu - P_nu||

    bool agree(double tol) const;
    bool holds(double tol) const { return convolution < tol; }
};
OrderCriteria order_criteria(const IdempotentState& mu, const IdempotentState& nu);
// mu <= nu. Throws CriteriaDisagree when the criteria split.
bool preceq(const IdempotentState& mu, const IdempotentState& nu, double tol);

// The left kernel {x : omega(x*x) = 0} is two-sided and *-closed.
bool haar_type_test(const IdempotentState& omega, double tol);

// omega = eps o E_N for a coideal subalgebra N. Throws NotACoideal if the
// candidate fails to reproduce N or the projection identity on L2(N).
IdempotentState state_from_coideal(const Coideal& n, double tol);

// Residuals of the identities tying omega, Q_perp and N together.
struct SupportIdentities {
    double membership_in = 0.0;      // max over N of ||Delta(x)(1 (x) Q_perp) - x (x) Q_perp||
    bool membership_agrees = true;   // basis and complement vectors: x in N iff the identity holds
    double annihilation = 0.0;       // ||Delta(Q)(Q_perp (x) Q_perp)||
    double antipode = 0.0;           // ||S(Q) - Q||
    double group_like = 0.0;         // Q_perp projection and group-like
    double in_coideal = 0.0;         // dist(Q_perp, N)
    double central = 0.0;            // ||Q_perp x - x Q_perp|| over N
    std::size_t corner_dim = 0;      // dim Q_perp N Q_perp
    double reconstruction = 0.0;     // omega vs psi(Q_perp x Q_perp) / psi(Q_perp)

    bool pass(double tol) const;
};
SupportIdentities support_identities(const IdempotentState& omega, double tol);

}  // namespace qglab

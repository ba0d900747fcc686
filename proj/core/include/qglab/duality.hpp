#pragma once

#include <string>
#include <vector>

#include "qglab/lattice.hpp"
#include "qglab/unitary.hpp"

namespace qglab {

// Invariant residuals for one candidate convention.
struct ConventionReport {
    Convention convention;
    bool dual_valid = false;       // the dual passes the axioms
    std::string dual_failure;      // first failing axiom, if any
    double pentagon = 0.0;
    double unitarity = 0.0;
    double representation = 0.0;   // lambda(f_i f_j) = lambda(f_i) lambda(f_j), lambda(f*) = lambda(f)*
    double projections = 0.0;      // (id (x) omega)(W) = P_omega for the counit and the Haar state
    double coproduct = 0.0;        // W*(1 (x) y)W = flipped dual coproduct of y
    double biduality = 0.0;        // the dual of the dual is G, or G^{op,cop} identified with G by S
    bool bidual_via_antipode = false;
    bool pass(double tol) const;
};

// Structure constants of the dual in the dual basis f_i.
HopfData dual_data(const QuantumGroup& g, bool flip_coproduct);

struct DualPair {
    QuantumGroupPtr g;
    QuantumGroupPtr g_hat;
    Mat pairing;  // <e_i, f_j>
    Convention convention;
    bool bidual_via_antipode = false;
    std::vector<ConventionReport> candidates;  // every candidate, in search order
    std::shared_ptr<const RegularRep> rep;

    const Mat& w() const { return rep->w(); }
    const std::vector<Mat>& lambda_rep() const { return rep->lambda(); }
};

// Tries the candidates in fixed order and keeps the first passing all
// invariants. Throws ConventionFailure when none does.
DualPair dual(const QuantumGroupPtr& g, const Tolerances& tol = {});

// Commutant of L(N) intersected with lambda(A-hat), in coordinates of G-hat.
Coideal codual(const Coideal& n, const DualPair& pair, double tol);

// The idempotent state on G-hat paired with omega.
struct DualStateReport {
    double routes = 0.0;         // psi-hat formula vs coefficients of Q_perp
    double w_slice = 0.0;        // ||(check omega (x) id)(W) - L(Q_perp)||
    double coideal = 0.0;        // N of the dual state vs codual(N)
    double support = 0.0;        // support of the dual state vs omega as an element of A-hat
    double group_like = 0.0;     // omega is group-like in A-hat
};
IdempotentState dual_state(const IdempotentState& omega, const DualPair& pair, double tol,
                           DualStateReport* report = nullptr);

// check-check omega = omega. pair_hat = dual(pair.g_hat), whose dual is
// identified with G through the canonical pairing.
double double_dual_residual(const IdempotentState& omega, const DualPair& pair, const DualPair& pair_hat, double tol);

struct ExchangeReport {
    double meet_to_join = 0.0;  // (omega ^ mu)check vs omega-check v mu-check
    double join_to_meet = 0.0;  // (omega v mu)check vs omega-check ^ mu-check
    bool pass(double tol) const { return meet_to_join < tol && join_to_meet < tol; }
};
ExchangeReport duality_exchange_check(const IdempotentState& omega, const IdempotentState& mu, const DualPair& pair,
                                      const Tolerances& tol);

// state_from_coideal(codual(N_omega)) against the dual state.
double conv_thmcod_residual(const IdempotentState& omega, const DualPair& pair, double tol);

}  // namespace qglab

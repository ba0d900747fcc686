#pragma once

#include <vector>

#include "qglab/functional.hpp"

namespace qglab {

struct CoidealFlags {
    bool is_subalgebra = false;
    bool is_star_closed = false;
    bool is_coideal = false;
    bool contains_unit = false;
};

// A subspace of A, held as a GNS-orthonormal basis in algebra coordinates.
class Coideal {
public:
    // Orthonormalizes span(vectors) in L2 (rank threshold tol) and computes
    // the closure flags.
    static Coideal span(const QuantumGroupPtr& g, const std::vector<Vec>& vectors, double tol);
    static Coideal span(const QuantumGroupPtr& g, const Mat& columns, double tol);
    static Coideal scalars(const QuantumGroupPtr& g, double tol);
    static Coideal whole(const QuantumGroupPtr& g, double tol);

    const QuantumGroupPtr& home() const { return home_; }
    const Mat& basis() const { return basis_; }
    std::size_t dim() const { return static_cast<std::size_t>(basis_.cols()); }
    const CoidealFlags& flags() const { return flags_; }
    double coideal_residual() const { return coideal_residual_; }

    // Orthogonal projection onto eta(N) in L2.
    Mat l2_projection() const;
    // Same projection pulled back to algebra coordinates.
    Mat algebra_projection() const;

    // || eta(v) - P eta(v) ||
    double distance_from(const Vec& v) const;
    bool contains(const Vec& v, double tol) const { return distance_from(v) < tol * std::max(1.0, home_->l2_norm(v)); }
    // N subset of other, measured as ||(1 - P_other) P_this||.
    double inclusion_residual(const Coideal& other) const;
    // ||P_this - P_other||
    double distance(const Coideal& other) const;

private:
    Coideal(QuantumGroupPtr g, Mat basis, double tol);

    QuantumGroupPtr home_;
    Mat basis_;
    CoidealFlags flags_;
    double coideal_residual_ = 0.0;
};

// Residual of Delta(N) subset A (x) N over the basis of N.
double coideal_residual(const QuantumGroup& g, const Mat& basis);
bool is_coideal(const QuantumGroupPtr& g, const std::vector<Vec>& vectors, double tol);

// E(x) = (id (x) omega) Delta(x) as an n x n matrix in algebra coordinates.
// Throws NotIdempotent unless omega is an idempotent state.
Mat expectation(const Functional& omega, double tol);

struct ExpectationReport {
    double idempotent = 0.0;        // ||E^2 - E||
    double unital = 0.0;            // ||E(1) - 1||
    double min_choi_eigenvalue = 0.0;  // of [psi(e_l* E(e_j* e_k) e_m)]
    double bimodular = 0.0;         // E(a x b) = a E(x) b for a, b in N
    double eq1 = 0.0;               // ||eta(E x) - P eta(x)||
};
ExpectationReport check_expectation(const Functional& omega, const Mat& e, double tol);

// N_omega = range of E_omega.
Coideal range_coideal(const Functional& omega, double tol);

// Smallest unital *-subalgebra containing both.
Coideal generated_subalgebra(const Coideal& a, const Coideal& b, double tol);
Coideal intersect(const Coideal& a, const Coideal& b, double tol);
// span{x y : x in a, y in b}
Coideal product_span(const Coideal& a, const Coideal& b, double tol);

Mat gns_projection(const Coideal& n);

// The psi-preserving conditional expectation onto N. Throws NotASubalgebra.
Mat trace_expectation(const Coideal& n);

// W*(1 (x) P) W (P (x) 1) - P (x) P, for the L2 projection P onto N.
double eq_pp_residual(const Coideal& n);

}  // namespace qglab

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qglab/group.hpp"
#include "qglab/types.hpp"

namespace qglab {

// Structure constants of a finite-dimensional Hopf *-algebra A with basis
// e_0..e_{n-1}.
//
//   e_i e_j      = sum_k mult(i,j,k) e_k
//   1            = sum_i unit[i] e_i
//   Delta(e_i)   = sum_{j,k} comult(i,j,k) e_j (x) e_k
//   eps(e_i)     = counit[i]
//   S(e_i)       = sum_k antipode(k,i) e_k      (matrix acts on coefficient columns)
//   (sum a_i e_i)* = sum_k (star * conj(a))_k e_k
//   psi(e_i)     = haar[i]
struct HopfData {
    std::size_t dim = 0;
    Tensor3 mult;
    Vec unit;
    Tensor3 comult;
    Vec counit;
    Mat antipode;
    Mat star;
    std::optional<Vec> haar;
    std::vector<std::string> labels;
};

struct AxiomResidual {
    std::string name;
    double residual = 0.0;
    bool pass = true;
};

struct ValidationReport {
    double tol = 0.0;
    std::vector<AxiomResidual> axioms;

    bool pass() const;
    // Null when every axiom passes.
    const AxiomResidual* first_failure() const;
    double residual(const std::string& name) const;
};

// Checks every Hopf *-algebra, Kac and Haar axiom. When the input has no
// Haar covector one is computed; failure to find one is reported as a
// failing "haar" entry. Throws DimensionMismatch on inconsistent shapes.
ValidationReport validate(const HopfData& data, double tol = 1e-12);

// Solves {(id (x) h) Delta(e_i) = h(e_i) 1, h(1) = 1}. Throws NoHaarState or
// NonUniqueHaar.
Vec compute_haar(const HopfData& data, double tol = 1e-9);

// Throws DimensionMismatch when tensor shapes disagree with dim.
void check_shapes(const HopfData& data);

// GNS space of the Haar state. eta(a) = to_l2 * a, and
// <eta(a), eta(b)> = psi(a* b).
struct GnsSpace {
    Mat gram;
    Mat to_l2;
    Mat from_l2;
    std::vector<Mat> left_mult;  // L(e_i) on L2(G)
};

// Hermitian eigendecomposition of the Gram matrix with eigenvalue floor
// tol; throws NotPositive when psi is not faithful.
GnsSpace gns(const HopfData& data, double tol = 1e-9);

// C(G): indicator basis, Delta d_g = sum_{st=g} d_s (x) d_t.
HopfData function_algebra(const FiniteGroup& group);
HopfData function_algebra(const FiniteGroup::Table& table);
// C[G]: basis l_g, Delta l_g = l_g (x) l_g.
HopfData group_algebra(const FiniteGroup& group);
HopfData group_algebra(const FiniteGroup::Table& table);
// The eight-dimensional Kac-Paljutkin quantum group C^4 (+) M_2, basis
// e1..e4, a11, a12, a21, a22.
HopfData kac_paljutkin();

// Names accepted by builtin(): c_z2, c_z3, c_z4, c_s3, cg_s3, cg_z4, kp8.
const std::vector<std::string>& builtin_names();
HopfData builtin(const std::string& name);

// A validated finite quantum group with its Haar state and GNS space.
// Immutable; share through QuantumGroupPtr.
class QuantumGroup;
using QuantumGroupPtr = std::shared_ptr<const QuantumGroup>;

class QuantumGroup {
public:
    // Computes the Haar state when absent, validates at tol.axiom_tol and
    // builds the GNS space. Throws AxiomViolation carrying the first failing
    // axiom.
    static QuantumGroupPtr create(HopfData data, const Tolerances& tol = {});

    std::size_t dim() const { return data_.dim; }
    const HopfData& data() const { return data_; }
    const GnsSpace& gns() const { return gns_; }
    const ValidationReport& report() const { return report_; }
    const Tolerances& tolerances() const { return tol_; }
    const std::vector<std::string>& labels() const { return data_.labels; }

    Vec basis(std::size_t i) const;
    Vec one() const { return data_.unit; }
    const Vec& haar() const { return *data_.haar; }

    Vec multiply(const Vec& a, const Vec& b) const;
    Vec star(const Vec& a) const;
    Vec antipode(const Vec& a) const { return data_.antipode * a; }
    Complex counit(const Vec& a) const { return data_.counit.transpose() * a; }
    Complex psi(const Vec& a) const { return data_.haar->transpose() * a; }

    // Left multiplication by a in algebra coordinates.
    Mat mult_matrix(const Vec& a) const;
    // Delta(a) as an n x n coefficient matrix X, Delta(a) = sum X(j,k) e_j (x) e_k.
    Mat coproduct(const Vec& a) const;

    // Algebra A (x) A with elements as n x n coefficient matrices.
    Mat tensor_mul(const Mat& x, const Mat& y) const;
    Mat tensor_star(const Mat& x) const;
    static Mat simple_tensor(const Vec& a, const Vec& b) { return a * b.transpose(); }

    Vec eta(const Vec& a) const { return gns_.to_l2 * a; }
    Vec eta_inv(const Vec& xi) const { return gns_.from_l2 * xi; }
    // L(a) acting on L2(G).
    Mat l2_left(const Vec& a) const;
    // || eta(a) ||
    double l2_norm(const Vec& a) const { return eta(a).norm(); }

    // max(|a^2 - a|, |a* - a|) measured in L2.
    double projection_residual(const Vec& a) const;

private:
    QuantumGroup() = default;

    HopfData data_;
    GnsSpace gns_;
    ValidationReport report_;
    Tolerances tol_;
    std::vector<Mat> lmul_;  // algebra-coordinate left multiplication by e_i
};

}  // namespace qglab

#pragma once

#include <string>
#include <vector>

#include "qglab/hopf.hpp"

namespace qglab {

// Which leg of Delta a functional is sliced against when A* is represented
// on L2(G):  Right: eta(x) -> eta((id (x) phi) Delta x),  Left: eta((phi (x) id) Delta x).
enum class Slice { Right, Left };

// One candidate convention for the dual pair. The multiplicative unitary is
// W = sum_i lambda(f_i) (x) L(e_i) on L2 (x) L2, f_i the dual basis.
struct Convention {
    Slice slice = Slice::Right;
    bool flip_dual_coproduct = false;

    std::string name() const;
    bool operator==(const Convention&) const = default;
};

// Candidates in the fixed order used for deterministic selection.
std::vector<Convention> all_conventions();

// Slice map of phi as a matrix in algebra coordinates.
Mat slice_matrix(const QuantumGroup& g, const Vec& phi, Slice slice);
// lambda(phi) acting on L2(G).
Mat lambda_hat(const QuantumGroup& g, const Vec& phi, Slice slice = Slice::Right);
// lambda(f_i) for the dual basis.
std::vector<Mat> lambda_rep(const QuantumGroup& g, Slice slice = Slice::Right);

Mat kron(const Mat& a, const Mat& b);

Mat kac_takesaki(const QuantumGroup& g, Slice slice = Slice::Right);
// Frobenius norm of W12 W13 W23 - W23 W12 for W on C^n (x) C^n.
double pentagon_residual(const Mat& w, std::size_t n);
double unitarity_residual(const Mat& w);

// W together with its leg bases, for repeated slicing.
class RegularRep {
public:
    explicit RegularRep(const QuantumGroup& g, Slice slice = Slice::Right);

    std::size_t dim() const { return n_; }
    const Mat& w() const { return w_; }
    const std::vector<Mat>& lambda() const { return lambda_; }
    const std::vector<Mat>& left() const { return left_; }

    // (id (x) omega)(W), omega given by its values on the basis of A.
    Mat slice_second(const Vec& omega) const;
    // (theta (x) id)(W), theta given by its values on the dual basis.
    Mat slice_first(const Vec& theta) const;
    // Coefficients y with sum_i y_i lambda(f_i) closest to x.
    Vec lambda_coordinates(const Mat& x) const;

private:
    std::size_t n_;
    Mat w_;
    std::vector<Mat> lambda_;
    std::vector<Mat> left_;
    Mat lambda_pinv_;
    Mat left_pinv_;
};

}  // namespace qglab

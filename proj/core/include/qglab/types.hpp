#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qglab {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RealVec = Eigen::VectorXd;
using RealMat = Eigen::MatrixXd;

// Dense rank-3 tensor t(i, j, k), row-major in (i, j, k).
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n, Complex{}) {}

    std::size_t dim() const { return n_; }

    Complex& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
    const Complex& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * n_ + j) * n_ + k];
    }

    const std::vector<Complex>& raw() const { return data_; }

private:
    std::size_t n_ = 0;
    std::vector<Complex> data_;
};

// Numerical thresholds shared by every module. Defaults follow the
// axiom / derived-quantity split: exact structure constants are held to
// axiom_tol, anything computed through a decomposition to state_tol.
struct Tolerances {
    double axiom_tol = 1e-12;
    double state_tol = 1e-9;
    double dedup_tol = 1e-7;
    double conv_tol = 1e-12;
    int n_max = 10000;
    int restarts = 200;
};

// Max-abs distance between two coefficient vectors.
inline double sup_dist(const Vec& a, const Vec& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace qglab

#include "qglab/unitary.hpp"

#include "qglab/errors.hpp"

namespace qglab {

namespace {

using Index = Eigen::Index;

// Permutation swapping the last two factors of C^n (x) C^n (x) C^n.
Mat swap23(std::size_t n) {
    const auto m = static_cast<Index>(n);
    Mat p = Mat::Zero(m * m * m, m * m * m);
    for (Index a = 0; a < m; ++a)
        for (Index b = 0; b < m; ++b)
            for (Index c = 0; c < m; ++c) p(a * m * m + c * m + b, a * m * m + b * m + c) = 1.0;
    return p;
}

// Columns are the flattened basis operators.
Mat stacked(const std::vector<Mat>& basis) {
    if (basis.empty()) throw Error(ErrorKind::DimensionMismatch, "empty operator basis");
    const Index sz = basis.front().size();
    Mat out(sz, static_cast<Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) out.col(static_cast<Index>(i)) = basis[i].reshaped();
    return out;
}

}  // namespace

std::string Convention::name() const {
    std::string s = slice == Slice::Right ? "right-slice" : "left-slice";
    s += flip_dual_coproduct ? "/flipped" : "/plain";
    return s;
}

std::vector<Convention> all_conventions() {
    return {{Slice::Right, false}, {Slice::Right, true}, {Slice::Left, false}, {Slice::Left, true}};
}

Mat slice_matrix(const QuantumGroup& g, const Vec& phi, Slice slice) {
    const std::size_t n = g.dim();
    const Tensor3& d = g.data().comult;
    Mat e = Mat::Zero(static_cast<Index>(n), static_cast<Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Complex c = d(i, j, k);
                if (c == Complex{}) continue;
                if (slice == Slice::Right)
                    e(static_cast<Index>(j), static_cast<Index>(i)) += c * phi(static_cast<Index>(k));
                else
                    e(static_cast<Index>(k), static_cast<Index>(i)) += c * phi(static_cast<Index>(j));
            }
    return e;
}

Mat lambda_hat(const QuantumGroup& g, const Vec& phi, Slice slice) {
    return g.gns().to_l2 * slice_matrix(g, phi, slice) * g.gns().from_l2;
}

std::vector<Mat> lambda_rep(const QuantumGroup& g, Slice slice) {
    std::vector<Mat> out;
    for (std::size_t i = 0; i < g.dim(); ++i) out.push_back(lambda_hat(g, g.basis(i), slice));
    return out;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index r = 0; r < a.rows(); ++r)
        for (Index c = 0; c < a.cols(); ++c) out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

Mat kac_takesaki(const QuantumGroup& g, Slice slice) {
    const auto n = static_cast<Index>(g.dim());
    Mat w = Mat::Zero(n * n, n * n);
    const std::vector<Mat> lam = lambda_rep(g, slice);
    for (std::size_t i = 0; i < g.dim(); ++i) w += kron(lam[i], g.l2_left(g.basis(i)));
    return w;
}

double pentagon_residual(const Mat& w, std::size_t n) {
    const auto m = static_cast<Index>(n);
    const Mat id = Mat::Identity(m, m);
    const Mat w12 = kron(w, id);
    const Mat w23 = kron(id, w);
    const Mat p = swap23(n);
    const Mat w13 = p * w12 * p;
    return (w12 * w13 * w23 - w23 * w12).norm();
}

double unitarity_residual(const Mat& w) {
    return (w.adjoint() * w - Mat::Identity(w.rows(), w.cols())).norm();
}

RegularRep::RegularRep(const QuantumGroup& g, Slice slice) : n_(g.dim()) {
    lambda_ = lambda_rep(g, slice);
    for (std::size_t i = 0; i < n_; ++i) left_.push_back(g.l2_left(g.basis(i)));
    const auto m = static_cast<Index>(n_);
    w_ = Mat::Zero(m * m, m * m);
    for (std::size_t i = 0; i < n_; ++i) w_ += kron(lambda_[i], left_[i]);
    lambda_pinv_ = stacked(lambda_).completeOrthogonalDecomposition().pseudoInverse();
    left_pinv_ = stacked(left_).completeOrthogonalDecomposition().pseudoInverse();
}

Mat RegularRep::slice_second(const Vec& omega) const {
    const auto m = static_cast<Index>(n_);
    Mat out(m, m);
    for (Index a = 0; a < m; ++a)
        for (Index c = 0; c < m; ++c) {
            const Mat block = w_.block(a * m, c * m, m, m);
            out(a, c) = omega.transpose() * (left_pinv_ * Vec(block.reshaped()));
        }
    return out;
}

Mat RegularRep::slice_first(const Vec& theta) const {
    const auto m = static_cast<Index>(n_);
    Mat out(m, m);
    for (Index b = 0; b < m; ++b)
        for (Index d = 0; d < m; ++d) {
            Mat block(m, m);
            for (Index a = 0; a < m; ++a)
                for (Index c = 0; c < m; ++c) block(a, c) = w_(a * m + b, c * m + d);
            out(b, d) = theta.transpose() * (lambda_pinv_ * Vec(block.reshaped()));
        }
    return out;
}

Vec RegularRep::lambda_coordinates(const Mat& x) const { return lambda_pinv_ * Vec(x.reshaped()); }

}  // namespace qglab

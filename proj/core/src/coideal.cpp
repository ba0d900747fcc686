#include "qglab/coideal.hpp"

#include <algorithm>
#include <cmath>

#include "qglab/errors.hpp"
#include "qglab/unitary.hpp"

namespace qglab {

namespace {

using Index = Eigen::Index;

Mat columns_of(const std::vector<Vec>& vectors, std::size_t n) {
    Mat m(static_cast<Index>(n), static_cast<Index>(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != static_cast<Index>(n))
            throw Error(ErrorKind::DimensionMismatch, "vector length differs from algebra dimension");
        m.col(static_cast<Index>(i)) = vectors[i];
    }
    return m;
}

// Orthonormal basis of the column span of u (already in L2), rank cut at tol.
Mat orthonormal_range(const Mat& u, double tol) {
    if (u.cols() == 0) return Mat(u.rows(), 0);
    Eigen::JacobiSVD<Mat> svd(u, Eigen::ComputeThinU);
    const RealVec& s = svd.singularValues();
    const double cut = tol * std::max(1.0, s.size() ? s(0) : 0.0);
    Index r = 0;
    while (r < s.size() && s(r) > cut) ++r;
    return svd.matrixU().leftCols(r);
}

}  // namespace

Coideal::Coideal(QuantumGroupPtr g, Mat basis, double tol) : home_(std::move(g)), basis_(std::move(basis)) {
    const QuantumGroup& q = *home_;
    const Index k = basis_.cols();
    flags_.contains_unit = contains(q.one(), tol);
    flags_.is_star_closed = true;
    flags_.is_subalgebra = true;
    for (Index i = 0; i < k && flags_.is_star_closed; ++i)
        flags_.is_star_closed = contains(q.star(basis_.col(i)), tol);
    for (Index i = 0; i < k && flags_.is_subalgebra; ++i)
        for (Index j = 0; j < k && flags_.is_subalgebra; ++j)
            flags_.is_subalgebra = contains(q.multiply(basis_.col(i), basis_.col(j)), tol);
    coideal_residual_ = qglab::coideal_residual(q, basis_);
    flags_.is_coideal = coideal_residual_ < tol;
}

Coideal Coideal::span(const QuantumGroupPtr& g, const std::vector<Vec>& vectors, double tol) {
    return span(g, columns_of(vectors, g->dim()), tol);
}

Coideal Coideal::span(const QuantumGroupPtr& g, const Mat& columns, double tol) {
    if (columns.rows() != static_cast<Index>(g->dim()))
        throw Error(ErrorKind::DimensionMismatch, "vector length differs from algebra dimension");
    const Mat u = orthonormal_range(g->gns().to_l2 * columns, tol);
    return {g, g->gns().from_l2 * u, tol};
}

Coideal Coideal::scalars(const QuantumGroupPtr& g, double tol) { return span(g, std::vector<Vec>{g->one()}, tol); }

Coideal Coideal::whole(const QuantumGroupPtr& g, double tol) {
    const auto n = static_cast<Index>(g->dim());
    return span(g, Mat(Mat::Identity(n, n)), tol);
}

Mat Coideal::l2_projection() const {
    const Mat u = home_->gns().to_l2 * basis_;
    return u * u.adjoint();
}

Mat Coideal::algebra_projection() const { return home_->gns().from_l2 * l2_projection() * home_->gns().to_l2; }

double Coideal::distance_from(const Vec& v) const {
    const Vec x = home_->eta(v);
    const Mat u = home_->gns().to_l2 * basis_;
    return (x - u * (u.adjoint() * x)).norm();
}

double Coideal::inclusion_residual(const Coideal& other) const {
    const auto n = static_cast<Index>(home_->dim());
    return ((Mat::Identity(n, n) - other.l2_projection()) * l2_projection()).norm();
}

double Coideal::distance(const Coideal& other) const { return (l2_projection() - other.l2_projection()).norm(); }

double coideal_residual(const QuantumGroup& g, const Mat& basis) {
    const auto n = static_cast<Index>(g.dim());
    const Mat u = g.gns().to_l2 * basis;
    const Mat pi = g.gns().from_l2 * (u * u.adjoint()) * g.gns().to_l2;
    const Mat comp = Mat::Identity(n, n) - pi;
    double r = 0.0;
    for (Index i = 0; i < basis.cols(); ++i) {
        const Mat x = g.coproduct(basis.col(i));
        // Project the second leg away from N.
        r = std::max(r, l2_tensor_norm(g, x * comp.transpose()));
    }
    return r;
}

bool is_coideal(const QuantumGroupPtr& g, const std::vector<Vec>& vectors, double tol) {
    return Coideal::span(g, vectors, tol).flags().is_coideal;
}

Mat expectation(const Functional& omega, double tol) {
    if (!is_idempotent_state(omega, tol))
        throw Error(ErrorKind::NotIdempotent, "expectation needs an idempotent state");
    return slice_matrix(*omega.home(), omega.coeffs(), Slice::Right);
}

ExpectationReport check_expectation(const Functional& omega, const Mat& e, double tol) {
    const QuantumGroup& g = *omega.home();
    const auto n = static_cast<Index>(g.dim());
    ExpectationReport r;
    r.idempotent = (e * e - e).norm();
    r.unital = g.l2_norm(e * g.one() - g.one());

    // psi(e_l* E(e_j* e_k) e_m), indices (j,l) x (k,m).
    Mat psi_form(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            psi_form(i, j) = g.psi(g.multiply(g.basis(static_cast<std::size_t>(i)), g.basis(static_cast<std::size_t>(j))));
    std::vector<Mat> star_left;
    for (Index l = 0; l < n; ++l) star_left.push_back(g.mult_matrix(g.star(g.basis(static_cast<std::size_t>(l)))));
    Mat choi(n * n, n * n);
    for (Index j = 0; j < n; ++j) {
        const Vec sj = g.star(g.basis(static_cast<std::size_t>(j)));
        for (Index k = 0; k < n; ++k) {
            const Vec y = e * g.multiply(sj, g.basis(static_cast<std::size_t>(k)));
            Mat z(n, n);
            for (Index l = 0; l < n; ++l) z.col(l) = star_left[static_cast<std::size_t>(l)] * y;
            const Mat b = z.transpose() * psi_form;  // b(l, m)
            for (Index l = 0; l < n; ++l)
                for (Index m = 0; m < n; ++m) choi(j * n + l, k * n + m) = b(l, m);
        }
    }
    const Mat& f = g.gns().from_l2;
    const Mat ff = kron(f, f);
    const Mat w = ff.adjoint() * choi * ff;
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (w + w.adjoint()), Eigen::EigenvaluesOnly);
    r.min_choi_eigenvalue = es.eigenvalues().minCoeff();

    const Coideal range = Coideal::span(omega.home(), e, tol);
    const Mat& nb = range.basis();
    for (Index a = 0; a < nb.cols(); ++a)
        for (Index b = 0; b < nb.cols(); ++b)
            for (Index x = 0; x < n; ++x) {
                const Vec ex = g.basis(static_cast<std::size_t>(x));
                const Vec lhs = e * g.multiply(g.multiply(nb.col(a), ex), nb.col(b));
                const Vec rhs = g.multiply(g.multiply(nb.col(a), e * ex), nb.col(b));
                r.bimodular = std::max(r.bimodular, g.l2_norm(lhs - rhs));
            }
    const Mat& t = g.gns().to_l2;
    r.eq1 = (t * e - range.l2_projection() * t).norm();
    return r;
}

Coideal range_coideal(const Functional& omega, double tol) {
    return Coideal::span(omega.home(), expectation(omega, tol), tol);
}

Coideal generated_subalgebra(const Coideal& a, const Coideal& b, double tol) {
    if (a.home() != b.home()) throw Error(ErrorKind::HomeMismatch, "subalgebras of different groups");
    const QuantumGroupPtr& g = a.home();
    std::vector<Vec> gens{g->one()};
    for (Index i = 0; i < a.basis().cols(); ++i) gens.push_back(a.basis().col(i));
    for (Index i = 0; i < b.basis().cols(); ++i) gens.push_back(b.basis().col(i));
    Coideal cur = Coideal::span(g, gens, tol);
    for (std::size_t iter = 0; iter <= g->dim(); ++iter) {
        std::vector<Vec> next;
        const Mat& bs = cur.basis();
        for (Index i = 0; i < bs.cols(); ++i) {
            next.push_back(bs.col(i));
            next.push_back(g->star(bs.col(i)));
            for (Index j = 0; j < bs.cols(); ++j) next.push_back(g->multiply(bs.col(i), bs.col(j)));
        }
        Coideal grown = Coideal::span(g, next, tol);
        if (grown.dim() == cur.dim()) return grown;
        cur = std::move(grown);
    }
    return cur;
}

Coideal intersect(const Coideal& a, const Coideal& b, double tol) {
    if (a.home() != b.home()) throw Error(ErrorKind::HomeMismatch, "subspaces of different groups");
    const QuantumGroupPtr& g = a.home();
    const auto n = static_cast<Index>(g->dim());
    const Mat ua = g->gns().to_l2 * a.basis();
    if (ua.cols() == 0) return Coideal::span(g, Mat(n, 0), tol);
    const Mat m = (Mat::Identity(n, n) - b.l2_projection()) * ua;
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
    const RealVec& s = svd.singularValues();
    std::vector<Vec> keep;
    for (Index i = 0; i < ua.cols(); ++i) {
        const double si = i < s.size() ? s(i) : 0.0;
        if (si <= tol) keep.push_back(g->gns().from_l2 * (ua * svd.matrixV().col(i)));
    }
    if (keep.empty()) return Coideal::span(g, Mat(n, 0), tol);
    return Coideal::span(g, keep, tol);
}

Coideal product_span(const Coideal& a, const Coideal& b, double tol) {
    if (a.home() != b.home()) throw Error(ErrorKind::HomeMismatch, "subspaces of different groups");
    const QuantumGroupPtr& g = a.home();
    std::vector<Vec> prods;
    for (Index i = 0; i < a.basis().cols(); ++i)
        for (Index j = 0; j < b.basis().cols(); ++j) prods.push_back(g->multiply(a.basis().col(i), b.basis().col(j)));
    if (prods.empty()) return Coideal::span(g, Mat(static_cast<Index>(g->dim()), 0), tol);
    return Coideal::span(g, prods, tol);
}

Mat gns_projection(const Coideal& n) { return n.l2_projection(); }

Mat trace_expectation(const Coideal& n) {
    const CoidealFlags& f = n.flags();
    if (!f.is_subalgebra || !f.is_star_closed || !f.contains_unit)
        throw Error(ErrorKind::NotASubalgebra, "trace expectation needs a unital *-subalgebra");
    return n.algebra_projection();
}

double eq_pp_residual(const Coideal& n) {
    const QuantumGroup& g = *n.home();
    const auto m = static_cast<Index>(g.dim());
    const Mat w = kac_takesaki(g);
    const Mat p = n.l2_projection();
    const Mat id = Mat::Identity(m, m);
    return (w.adjoint() * kron(id, p) * w * kron(p, id) - kron(p, p)).norm();
}

}  // namespace qglab

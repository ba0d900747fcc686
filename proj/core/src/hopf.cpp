#include "qglab/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "qglab/errors.hpp"

namespace qglab {

namespace {

Vec unit_vector(std::size_t n, std::size_t i) {
    Vec v = Vec::Zero(static_cast<Eigen::Index>(n));
    v(static_cast<Eigen::Index>(i)) = 1.0;
    return v;
}

std::vector<Mat> left_mult_tables(const HopfData& d) {
    const auto n = static_cast<Eigen::Index>(d.dim);
    std::vector<Mat> lmul(d.dim, Mat::Zero(n, n));
    for (std::size_t i = 0; i < d.dim; ++i)
        for (std::size_t j = 0; j < d.dim; ++j)
            for (std::size_t k = 0; k < d.dim; ++k)
                lmul[i](static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = d.mult(i, j, k);
    return lmul;
}

Vec mul_with(const std::vector<Mat>& lmul, const Vec& a, const Vec& b) {
    Vec out = Vec::Zero(b.size());
    for (std::size_t i = 0; i < lmul.size(); ++i) {
        const Complex c = a(static_cast<Eigen::Index>(i));
        if (c != Complex{}) out += c * (lmul[i] * b);
    }
    return out;
}

Mat coproduct_of(const HopfData& d, const Vec& a) {
    const auto n = static_cast<Eigen::Index>(d.dim);
    Mat x = Mat::Zero(n, n);
    for (std::size_t i = 0; i < d.dim; ++i) {
        const Complex c = a(static_cast<Eigen::Index>(i));
        if (c == Complex{}) continue;
        for (std::size_t j = 0; j < d.dim; ++j)
            for (std::size_t k = 0; k < d.dim; ++k)
                x(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) += c * d.comult(i, j, k);
    }
    return x;
}

// (sum x_ab e_a (x) e_b)(sum y_cd e_c (x) e_d) = sum x_ab y_cd (e_a e_c) (x) (e_b e_d)
Mat tensor_mul_with(const std::vector<Mat>& lmul, const Mat& x, const Mat& y) {
    const auto n = static_cast<Eigen::Index>(lmul.size());
    Mat z = Mat::Zero(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        if (x.row(a).isZero(0.0)) continue;
        for (Eigen::Index c = 0; c < n; ++c) {
            const auto left = lmul[static_cast<std::size_t>(a)].col(c);
            if (left.isZero(0.0) || y.row(c).isZero(0.0)) continue;
            const Vec right = mul_with(lmul, x.row(a).transpose(), y.row(c).transpose());
            z += left * right.transpose();
        }
    }
    return z;
}

// Structure-level algebra helpers that do not need a Haar state.
class RawOps {
public:
    explicit RawOps(const HopfData& d) : d_(d), n_(d.dim), lmul_(left_mult_tables(d)) {}

    std::size_t n() const { return n_; }
    Vec e(std::size_t i) const { return unit_vector(n_, i); }
    Vec mul(const Vec& a, const Vec& b) const { return mul_with(lmul_, a, b); }
    Vec star(const Vec& a) const { return d_.star * a.conjugate(); }
    Mat coproduct(const Vec& a) const { return coproduct_of(d_, a); }
    Mat tensor_mul(const Mat& x, const Mat& y) const { return tensor_mul_with(lmul_, x, y); }
    Mat tensor_star(const Mat& x) const { return d_.star * x.conjugate() * d_.star.transpose(); }
    const std::vector<Mat>& lmul() const { return lmul_; }

private:
    const HopfData& d_;
    std::size_t n_;
    std::vector<Mat> lmul_;
};

double inf_norm(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

bool ValidationReport::pass() const { return first_failure() == nullptr; }

const AxiomResidual* ValidationReport::first_failure() const {
    for (const auto& a : axioms)
        if (!a.pass) return &a;
    return nullptr;
}

double ValidationReport::residual(const std::string& name) const {
    for (const auto& a : axioms)
        if (a.name == name) return a.residual;
    return std::nan("");
}

void check_shapes(const HopfData& d) {
    const std::size_t n = d.dim;
    const auto in = static_cast<Eigen::Index>(n);
    auto fail = [](const std::string& what) { throw Error(ErrorKind::DimensionMismatch, what); };
    if (n == 0) fail("dim must be positive");
    if (d.mult.dim() != n) fail("mult");
    if (d.comult.dim() != n) fail("comult");
    if (d.unit.size() != in) fail("unit");
    if (d.counit.size() != in) fail("counit");
    if (d.antipode.rows() != in || d.antipode.cols() != in) fail("antipode");
    if (d.star.rows() != in || d.star.cols() != in) fail("star");
    if (d.haar && d.haar->size() != in) fail("haar");
    if (!d.labels.empty() && d.labels.size() != n) fail("labels");
}

Vec compute_haar(const HopfData& d, double tol) {
    check_shapes(d);
    const std::size_t n = d.dim;
    const auto in = static_cast<Eigen::Index>(n);
    // rows (i,j): sum_k comult(i,j,k) h_k - unit_j h_i = 0
    Mat sys = Mat::Zero(in * in, in);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto row = static_cast<Eigen::Index>(i * n + j);
            for (std::size_t k = 0; k < n; ++k) sys(row, static_cast<Eigen::Index>(k)) += d.comult(i, j, k);
            sys(row, static_cast<Eigen::Index>(i)) -= d.unit(static_cast<Eigen::Index>(j));
        }
    Eigen::JacobiSVD<Mat> svd(sys, Eigen::ComputeFullV);
    const RealVec& sv = svd.singularValues();
    const double scale = std::max(1.0, sv.size() ? sv(0) : 0.0);
    std::vector<Eigen::Index> null_cols;
    for (Eigen::Index c = 0; c < in; ++c) {
        const double s = c < sv.size() ? sv(c) : 0.0;
        if (s <= tol * scale) null_cols.push_back(c);
    }
    if (null_cols.empty()) throw Error(ErrorKind::NoHaarState, "right-invariance system has only the zero solution");
    if (null_cols.size() > 1)
        throw Error(ErrorKind::NonUniqueHaar,
                    "right-invariant functionals form a space of dimension " + std::to_string(null_cols.size()));
    Vec h = svd.matrixV().col(null_cols.front());
    const Complex norm = d.unit.transpose() * h;
    if (std::abs(norm) <= tol) throw Error(ErrorKind::NoHaarState, "invariant functional vanishes on the unit");
    return h / norm;
}

ValidationReport validate(const HopfData& d, double tol) {
    check_shapes(d);
    const RawOps ops(d);
    const std::size_t n = d.dim;
    const auto in = static_cast<Eigen::Index>(n);
    ValidationReport report;
    report.tol = tol;
    auto add = [&](const std::string& name, double r) { report.axioms.push_back({name, r, r < tol}); };

    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(ops.e(i));
    std::vector<Vec> prod(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = ops.mul(e[i], e[j]);

    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                r = std::max(r, inf_norm(ops.mul(prod[i * n + j], e[k]) - ops.mul(e[i], prod[j * n + k])));
    add("associativity", r);

    r = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        r = std::max({r, inf_norm(ops.mul(d.unit, e[i]) - e[i]), inf_norm(ops.mul(e[i], d.unit) - e[i])});
    add("unit", r);

    std::vector<Mat> cop(n);
    for (std::size_t i = 0; i < n; ++i) cop[i] = ops.coproduct(e[i]);

    // (Delta (x) id) Delta vs (id (x) Delta) Delta, compared as n x n^2 slices.
    r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Mat lhs = Mat::Zero(in * in, in);  // rows (p,q), col k
        Mat rhs = Mat::Zero(in, in * in);  // row j, cols (p,q)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Complex c = d.comult(i, j, k);
                if (c == Complex{}) continue;
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        lhs(static_cast<Eigen::Index>(p * n + q), static_cast<Eigen::Index>(k)) += c * d.comult(j, p, q);
                        rhs(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(p * n + q)) += c * d.comult(k, p, q);
                    }
            }
        // lhs[(p,q),k] is the coefficient of e_p e_q e_k; rhs[j,(p,q)] of e_j e_p e_q.
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    r = std::max(r, std::abs(lhs(static_cast<Eigen::Index>(a * n + b), static_cast<Eigen::Index>(c)) -
                                             rhs(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b * n + c))));
    }
    add("coassociativity", r);

    r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        r = std::max(r, inf_norm(cop[i].transpose() * d.counit - e[i]));
        r = std::max(r, inf_norm(cop[i] * d.counit - e[i]));
    }
    add("counit", r);

    r = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r = std::max(r, std::abs(Complex(d.counit.transpose() * prod[i * n + j]) -
                                     d.counit(static_cast<Eigen::Index>(i)) * d.counit(static_cast<Eigen::Index>(j))));
    add("counit multiplicative", r);

    add("coproduct unital", inf_norm(ops.coproduct(d.unit) - d.unit * d.unit.transpose()));

    r = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r = std::max(r, inf_norm(ops.coproduct(prod[i * n + j]) - ops.tensor_mul(cop[i], cop[j])));
    add("coproduct multiplicative", r);

    r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r = std::max(r, inf_norm(ops.coproduct(ops.star(e[i])) - ops.tensor_star(cop[i])));
    add("coproduct star", r);

    r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Vec left = Vec::Zero(in), right = Vec::Zero(in);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Complex c = cop[i](static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
                if (c == Complex{}) continue;
                left += c * ops.mul(d.antipode * e[j], e[k]);
                right += c * ops.mul(e[j], d.antipode * e[k]);
            }
        const Vec target = d.counit(static_cast<Eigen::Index>(i)) * d.unit;
        r = std::max({r, inf_norm(left - target), inf_norm(right - target)});
    }
    add("antipode", r);

    r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r = std::max(r, inf_norm(ops.star(ops.star(e[i])) - e[i]));
    add("star involutive", r);

    r = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r = std::max(r, inf_norm(ops.star(prod[i * n + j]) - ops.mul(ops.star(e[j]), ops.star(e[i]))));
    add("star antimultiplicative", r);

    add("kac: S^2 = id", inf_norm(d.antipode * d.antipode - Mat::Identity(in, in)));
    add("kac: S commutes with star", inf_norm(d.antipode * d.star - d.star * d.antipode.conjugate()));

    std::optional<Vec> haar = d.haar;
    if (!haar) {
        try {
            haar = compute_haar(d);
        } catch (const Error& err) {
            report.axioms.push_back({std::string("haar: ") + err.what(), 1.0, false});
            return report;
        }
    }
    const Vec& psi = *haar;
    add("haar normalized", std::abs(Complex(psi.transpose() * d.unit) - 1.0));
    r = 0.0;
    double l = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Complex v = psi(static_cast<Eigen::Index>(i));
        r = std::max(r, inf_norm(cop[i] * psi - v * d.unit));
        l = std::max(l, inf_norm(cop[i].transpose() * psi - v * d.unit));
    }
    add("haar right invariance", r);
    add("haar left invariance", l);
    add("kac: psi o S = psi", inf_norm(d.antipode.transpose() * psi - psi));
    r = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r = std::max(r, std::abs(Complex(psi.transpose() * (prod[i * n + j] - prod[j * n + i]))));
    add("kac: psi tracial", r);

    Mat gram(in, in);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = psi.transpose() * ops.mul(ops.star(e[i]), e[j]);
    add("gram hermitian", inf_norm(gram - gram.adjoint()));
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (gram + gram.adjoint()));
    const double lmin = es.eigenvalues().minCoeff();
    report.axioms.push_back({"gram positive definite", std::max(0.0, -lmin), lmin > tol});
    return report;
}

GnsSpace gns(const HopfData& d, double tol) {
    check_shapes(d);
    if (!d.haar) throw Error(ErrorKind::NoHaarState, "gns requires a Haar state");
    const RawOps ops(d);
    const std::size_t n = d.dim;
    const auto in = static_cast<Eigen::Index>(n);
    const Vec& psi = *d.haar;
    GnsSpace g;
    g.gram.resize(in, in);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = psi.transpose() * ops.mul(ops.star(ops.e(i)), ops.e(j));
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (g.gram + g.gram.adjoint()));
    const RealVec& ev = es.eigenvalues();
    if (ev.minCoeff() < tol)
        throw Error(ErrorKind::NotPositive, "Gram matrix eigenvalue " + std::to_string(ev.minCoeff()) + " below floor");
    const Mat& v = es.eigenvectors();
    g.to_l2 = ev.cwiseSqrt().cast<Complex>().asDiagonal() * v.adjoint();
    g.from_l2 = v * ev.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal();
    for (const Mat& lm : ops.lmul()) g.left_mult.push_back(g.to_l2 * lm * g.from_l2);
    return g;
}

HopfData function_algebra(const FiniteGroup& g) {
    const std::size_t n = g.order();
    const auto in = static_cast<Eigen::Index>(n);
    HopfData d;
    d.dim = n;
    d.mult = Tensor3(n);
    d.comult = Tensor3(n);
    d.unit = Vec::Ones(in);
    d.counit = Vec::Zero(in);
    d.antipode = Mat::Zero(in, in);
    d.star = Mat::Identity(in, in);
    for (std::size_t a = 0; a < n; ++a) {
        d.mult(a, a, a) = 1.0;
        for (std::size_t b = 0; b < n; ++b) d.comult(g.mul(a, b), a, b) = 1.0;
        d.antipode(static_cast<Eigen::Index>(g.inverse(a)), static_cast<Eigen::Index>(a)) = 1.0;
        d.labels.push_back("d_" + g.labels()[a]);
    }
    d.counit(static_cast<Eigen::Index>(g.identity())) = 1.0;
    return d;
}

HopfData function_algebra(const FiniteGroup::Table& table) { return function_algebra(FiniteGroup(table)); }

HopfData group_algebra(const FiniteGroup& g) {
    const std::size_t n = g.order();
    const auto in = static_cast<Eigen::Index>(n);
    HopfData d;
    d.dim = n;
    d.mult = Tensor3(n);
    d.comult = Tensor3(n);
    d.unit = Vec::Zero(in);
    d.counit = Vec::Ones(in);
    d.antipode = Mat::Zero(in, in);
    d.star = Mat::Zero(in, in);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) d.mult(a, b, g.mul(a, b)) = 1.0;
        d.comult(a, a, a) = 1.0;
        const auto inv = static_cast<Eigen::Index>(g.inverse(a));
        d.antipode(inv, static_cast<Eigen::Index>(a)) = 1.0;
        d.star(inv, static_cast<Eigen::Index>(a)) = 1.0;
        d.labels.push_back("l_" + g.labels()[a]);
    }
    d.unit(static_cast<Eigen::Index>(g.identity())) = 1.0;
    return d;
}

HopfData group_algebra(const FiniteGroup::Table& table) { return group_algebra(FiniteGroup(table)); }

HopfData kac_paljutkin() {
    enum : std::size_t { E1, E2, E3, E4, A11, A12, A21, A22 };
    const std::size_t n = 8;
    const Complex I(0.0, 1.0);
    HopfData d;
    d.dim = n;
    d.mult = Tensor3(n);
    d.comult = Tensor3(n);
    d.labels = {"e1", "e2", "e3", "e4", "a11", "a12", "a21", "a22"};
    for (std::size_t k : {E1, E2, E3, E4}) d.mult(k, k, k) = 1.0;
    const std::size_t a[2][2] = {{A11, A12}, {A21, A22}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l) d.mult(a[i][j], a[j][l], a[i][l]) = 1.0;

    d.unit = Vec::Zero(8);
    for (std::size_t k : {E1, E2, E3, E4, A11, A22}) d.unit(static_cast<Eigen::Index>(k)) = 1.0;
    d.counit = Vec::Zero(8);
    d.counit(E1) = 1.0;
    d.antipode = Mat::Identity(8, 8);
    d.antipode(A12, A12) = d.antipode(A21, A21) = 0.0;
    d.antipode(A21, A12) = d.antipode(A12, A21) = 1.0;
    d.star = d.antipode;

    auto put = [&](std::size_t x, std::size_t l, std::size_t r, Complex c) { d.comult(x, l, r) += c; };
    put(E1, E1, E1, 1); put(E1, E2, E2, 1); put(E1, E3, E3, 1); put(E1, E4, E4, 1);
    put(E1, A11, A11, 0.5); put(E1, A12, A12, 0.5); put(E1, A21, A21, 0.5); put(E1, A22, A22, 0.5);

    put(E2, E1, E2, 1); put(E2, E2, E1, 1); put(E2, E3, E4, 1); put(E2, E4, E3, 1);
    put(E2, A11, A22, 0.5); put(E2, A22, A11, 0.5); put(E2, A21, A12, 0.5 * I); put(E2, A12, A21, -0.5 * I);

    put(E3, E1, E3, 1); put(E3, E3, E1, 1); put(E3, E2, E4, 1); put(E3, E4, E2, 1);
    put(E3, A11, A22, 0.5); put(E3, A22, A11, 0.5); put(E3, A21, A12, -0.5 * I); put(E3, A12, A21, 0.5 * I);

    put(E4, E1, E4, 1); put(E4, E4, E1, 1); put(E4, E2, E3, 1); put(E4, E3, E2, 1);
    put(E4, A11, A11, 0.5); put(E4, A22, A22, 0.5); put(E4, A12, A12, -0.5); put(E4, A21, A21, -0.5);

    put(A11, E1, A11, 1); put(A11, A11, E1, 1); put(A11, E2, A22, 1); put(A11, A22, E3, 1);
    put(A11, E3, A22, 1); put(A11, A22, E2, 1); put(A11, E4, A11, 1); put(A11, A11, E4, 1);

    put(A12, E1, A12, 1); put(A12, A12, E1, 1); put(A12, E2, A21, I); put(A12, A21, E3, I);
    put(A12, E3, A21, -I); put(A12, A21, E2, -I); put(A12, E4, A12, -1); put(A12, A12, E4, -1);

    put(A21, E1, A21, 1); put(A21, A21, E1, 1); put(A21, E2, A12, -I); put(A21, A12, E3, -I);
    put(A21, E3, A12, I); put(A21, A12, E2, I); put(A21, E4, A21, -1); put(A21, A21, E4, -1);

    put(A22, E1, A22, 1); put(A22, A22, E1, 1); put(A22, E2, A11, 1); put(A22, A11, E3, 1);
    put(A22, E3, A11, 1); put(A22, A11, E2, 1); put(A22, E4, A22, 1); put(A22, A22, E4, 1);
    return d;
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"c_z2", "c_z3", "c_z4", "c_s3", "cg_s3", "cg_z4", "kp8"};
    return names;
}

HopfData builtin(const std::string& name) {
    if (name == "c_z2") return function_algebra(FiniteGroup::cyclic(2));
    if (name == "c_z3") return function_algebra(FiniteGroup::cyclic(3));
    if (name == "c_z4") return function_algebra(FiniteGroup::cyclic(4));
    if (name == "c_s3") return function_algebra(FiniteGroup::symmetric3());
    if (name == "cg_s3") return group_algebra(FiniteGroup::symmetric3());
    if (name == "cg_z4") return group_algebra(FiniteGroup::cyclic(4));
    if (name == "kp8") return kac_paljutkin();
    throw Error(ErrorKind::ParseError, "unknown built-in '" + name + "'");
}

QuantumGroupPtr QuantumGroup::create(HopfData data, const Tolerances& tol) {
    check_shapes(data);
    if (data.labels.empty())
        for (std::size_t i = 0; i < data.dim; ++i) data.labels.push_back("e" + std::to_string(i));
    if (!data.haar) data.haar = compute_haar(data, tol.state_tol);
    auto report = validate(data, tol.axiom_tol);
    if (const auto* bad = report.first_failure())
        throw Error(ErrorKind::AxiomViolation, bad->name + " residual " + std::to_string(bad->residual));

    std::shared_ptr<QuantumGroup> g(new QuantumGroup());
    g->gns_ = qglab::gns(data, tol.state_tol);
    g->report_ = std::move(report);
    g->tol_ = tol;
    g->data_ = std::move(data);
    g->lmul_ = left_mult_tables(g->data_);
    return g;
}

Vec QuantumGroup::basis(std::size_t i) const { return unit_vector(dim(), i); }

Vec QuantumGroup::multiply(const Vec& a, const Vec& b) const { return mult_matrix(a) * b; }

Vec QuantumGroup::star(const Vec& a) const { return data_.star * a.conjugate(); }

Mat QuantumGroup::mult_matrix(const Vec& a) const {
    const auto n = static_cast<Eigen::Index>(dim());
    Mat m = Mat::Zero(n, n);
    for (std::size_t i = 0; i < dim(); ++i) {
        const Complex c = a(static_cast<Eigen::Index>(i));
        if (c != Complex{}) m += c * lmul_[i];
    }
    return m;
}

Mat QuantumGroup::coproduct(const Vec& a) const { return coproduct_of(data_, a); }

Mat QuantumGroup::tensor_mul(const Mat& x, const Mat& y) const { return tensor_mul_with(lmul_, x, y); }

Mat QuantumGroup::tensor_star(const Mat& x) const { return data_.star * x.conjugate() * data_.star.transpose(); }

Mat QuantumGroup::l2_left(const Vec& a) const { return gns_.to_l2 * mult_matrix(a) * gns_.from_l2; }

double QuantumGroup::projection_residual(const Vec& a) const {
    return std::max(l2_norm(multiply(a, a) - a), l2_norm(star(a) - a));
}

}  // namespace qglab

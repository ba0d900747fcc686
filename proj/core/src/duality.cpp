#include "qglab/duality.hpp"

#include <algorithm>

#include "qglab/errors.hpp"

namespace qglab {

namespace {

using Index = Eigen::Index;

HopfData opposite_coopposite(const HopfData& a) {
    HopfData o = a;
    const std::size_t n = a.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                o.mult(i, j, k) = a.mult(j, i, k);
                o.comult(i, j, k) = a.comult(i, k, j);
            }
    return o;
}

double structure_distance(const HopfData& a, const HopfData& b) {
    double r = 0.0;
    for (std::size_t i = 0; i < a.mult.raw().size(); ++i) {
        r = std::max(r, std::abs(a.mult.raw()[i] - b.mult.raw()[i]));
        r = std::max(r, std::abs(a.comult.raw()[i] - b.comult.raw()[i]));
    }
    r = std::max({r, sup_dist(a.unit, b.unit), sup_dist(a.counit, b.counit)});
    r = std::max(r, (a.antipode - b.antipode).cwiseAbs().maxCoeff());
    r = std::max(r, (a.star - b.star).cwiseAbs().maxCoeff());
    return r;
}

ConventionReport evaluate(const QuantumGroupPtr& g, const Convention& c, const Tolerances& tol) {
    ConventionReport r;
    r.convention = c;
    const std::size_t n = g->dim();
    const auto m = static_cast<Index>(n);
    HopfData dd = dual_data(*g, c.flip_dual_coproduct);

    const RegularRep rep(*g, c.slice);
    r.pentagon = pentagon_residual(rep.w(), n);
    r.unitarity = unitarity_residual(rep.w());
    const auto& lam = rep.lambda();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Mat prod = Mat::Zero(m, m);
            for (std::size_t k = 0; k < n; ++k) prod += dd.mult(i, j, k) * lam[k];
            r.representation = std::max(r.representation, (lam[i] * lam[j] - prod).norm());
        }
        Mat adj = Mat::Zero(m, m);
        for (std::size_t k = 0; k < n; ++k) adj += dd.star(static_cast<Index>(k), static_cast<Index>(i)) * lam[k];
        r.representation = std::max(r.representation, (adj - lam[i].adjoint()).norm());
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Mat lhs = rep.w().adjoint() * kron(Mat::Identity(m, m), lam[i]) * rep.w();
        Mat rhs = Mat::Zero(m * m, m * m);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (dd.comult(i, k, j) != Complex{}) rhs += dd.comult(i, k, j) * kron(lam[j], lam[k]);
        r.coproduct = std::max(r.coproduct, (lhs - rhs).norm());
    }
    const Vec one_l2 = g->eta(g->one());
    r.projections = std::max((rep.slice_second(g->data().counit) - Mat::Identity(m, m)).norm(),
                             (rep.slice_second(g->haar()) - one_l2 * one_l2.adjoint()).norm());

    try {
        const QuantumGroupPtr gh = QuantumGroup::create(dd, tol);
        r.dual_valid = true;
        const HopfData twice = dual_data(*gh, c.flip_dual_coproduct);
        const double direct = structure_distance(twice, g->data());
        const double twisted = structure_distance(twice, opposite_coopposite(g->data()));
        r.bidual_via_antipode = twisted < direct;
        r.biduality = std::min(direct, twisted);
    } catch (const Error& e) {
        r.dual_failure = e.what();
        r.biduality = 1.0;
    }
    return r;
}

}  // namespace

bool ConventionReport::pass(double tol) const {
    return dual_valid && pentagon < tol && unitarity < tol && representation < tol && projections < tol && coproduct < tol &&
           biduality < tol;
}

HopfData dual_data(const QuantumGroup& g, bool flip_coproduct) {
    const HopfData& a = g.data();
    const std::size_t n = a.dim;
    HopfData d;
    d.dim = n;
    d.mult = Tensor3(n);
    d.comult = Tensor3(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                d.mult(j, k, i) = a.comult(i, j, k);
                d.comult(i, j, k) = flip_coproduct ? a.mult(k, j, i) : a.mult(j, k, i);
            }
    d.unit = a.counit;
    d.counit = a.unit;
    d.antipode = a.antipode.transpose();
    // f*(x) = conj(f(S(x)*))
    d.star = (a.star.conjugate() * a.antipode).transpose();
    for (const std::string& l : g.labels()) d.labels.push_back("f_" + l);
    return d;
}

DualPair dual(const QuantumGroupPtr& g, const Tolerances& tol) {
    DualPair pair;
    pair.g = g;
    const double t = tol.state_tol;
    const ConventionReport* chosen = nullptr;
    for (const Convention& c : all_conventions()) pair.candidates.push_back(evaluate(g, c, tol));
    for (const auto& r : pair.candidates)
        if (r.pass(t)) {
            chosen = &r;
            break;
        }
    if (!chosen) throw Error(ErrorKind::ConventionFailure, "no convention satisfies the dual pair invariants");
    pair.convention = chosen->convention;
    pair.bidual_via_antipode = chosen->bidual_via_antipode;
    pair.g_hat = QuantumGroup::create(dual_data(*g, pair.convention.flip_dual_coproduct), tol);
    const auto n = static_cast<Index>(g->dim());
    pair.pairing = Mat::Identity(n, n);
    pair.rep = std::make_shared<const RegularRep>(*g, pair.convention.slice);
    return pair;
}

Coideal codual(const Coideal& n, const DualPair& pair, double tol) {
    if (n.home() != pair.g) throw Error(ErrorKind::HomeMismatch, "coideal is not in the dual pair's group");
    const QuantumGroup& g = *pair.g;
    const auto m = static_cast<Index>(g.dim());
    const auto& lam = pair.lambda_rep();
    const Index k = static_cast<Index>(n.dim());
    if (k == 0) return Coideal::whole(pair.g_hat, tol);
    Mat sys(m * m * k, m);
    for (Index b = 0; b < k; ++b) {
        const Mat lb = g.l2_left(n.basis().col(b));
        for (Index i = 0; i < m; ++i) {
            const Mat c = lam[static_cast<std::size_t>(i)] * lb - lb * lam[static_cast<std::size_t>(i)];
            sys.block(b * m * m, i, m * m, 1) = c.reshaped();
        }
    }
    Eigen::JacobiSVD<Mat> svd(sys, Eigen::ComputeFullV);
    const RealVec& s = svd.singularValues();
    const double cut = tol * std::max(1.0, s.size() ? s(0) : 0.0);
    std::vector<Vec> kernel;
    for (Index i = 0; i < m; ++i)
        if (i >= s.size() || s(i) <= cut) kernel.push_back(svd.matrixV().col(i));
    if (kernel.empty()) return Coideal::span(pair.g_hat, Mat(m, 0), tol);
    return Coideal::span(pair.g_hat, kernel, tol);
}

IdempotentState dual_state(const IdempotentState& omega, const DualPair& pair, double tol, DualStateReport* report) {
    if (omega.home() != pair.g) throw Error(ErrorKind::HomeMismatch, "state is not on the dual pair's group");
    const QuantumGroupPtr& gh = pair.g_hat;
    // omega itself is a group-like projection of A-hat.
    const Functional check = state_from_qperp(gh, omega.coeffs(), tol);
    IdempotentState out = make_idempotent(check, tol);
    if (report) {
        const QuantumGroup& g = *pair.g;
        report->routes = sup_dist(check.coeffs(), omega.q_perp);
        report->w_slice = (pair.rep->slice_first(check.coeffs()) - g.l2_left(omega.q_perp)).norm();
        report->coideal = out.n.distance(codual(omega.n, pair, tol));
        report->support = sup_dist(out.q_perp, omega.coeffs());
        report->group_like = std::max(gh->projection_residual(omega.coeffs()), group_like_residual(*gh, omega.coeffs()));
    }
    return out;
}

double double_dual_residual(const IdempotentState& omega, const DualPair& pair, const DualPair& pair_hat, double tol) {
    const IdempotentState once = dual_state(omega, pair, tol);
    const IdempotentState twice = dual_state(once, pair_hat, tol);
    // G^{op,cop} is identified with G through the antipode: phi -> phi o S.
    const Vec back = pair_hat.bidual_via_antipode ? Vec(pair.g->data().antipode.transpose() * twice.coeffs()) : twice.coeffs();
    return sup_dist(back, omega.coeffs());
}

ExchangeReport duality_exchange_check(const IdempotentState& omega, const IdempotentState& mu, const DualPair& pair,
                                      const Tolerances& tol) {
    const double t = tol.state_tol;
    const IdempotentState wc = dual_state(omega, pair, t);
    const IdempotentState mc = dual_state(mu, pair, t);
    ExchangeReport r;
    r.meet_to_join = dual_state(meet(omega, mu, t), pair, t).omega.distance(join_state(wc, mc, tol).omega);
    r.join_to_meet = dual_state(join_state(omega, mu, tol), pair, t).omega.distance(meet(wc, mc, t).omega);
    return r;
}

double conv_thmcod_residual(const IdempotentState& omega, const DualPair& pair, double tol) {
    const IdempotentState from_codual = state_from_coideal(codual(omega.n, pair, tol), tol);
    return from_codual.omega.distance(dual_state(omega, pair, tol).omega);
}

}  // namespace qglab

#include "qglab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>

#include "qglab/errors.hpp"
#include "qglab/unitary.hpp"

namespace qglab {

namespace {

using Index = Eigen::Index;

double tensor_diff(const Tensor3& a, const Tensor3& b) {
    double r = 0.0;
    for (std::size_t i = 0; i < a.raw().size(); ++i) r = std::max(r, std::abs(a.raw()[i] - b.raw()[i]));
    return r;
}

bool same_structure(const HopfData& a, const HopfData& b, double tol) {
    if (a.dim != b.dim) return false;
    return tensor_diff(a.mult, b.mult) < tol && tensor_diff(a.comult, b.comult) < tol && sup_dist(a.unit, b.unit) < tol &&
           sup_dist(a.counit, b.counit) < tol && (a.antipode - b.antipode).cwiseAbs().maxCoeff() < tol &&
           (a.star - b.star).cwiseAbs().maxCoeff() < tol;
}

FiniteGroup catalog_group(const std::string& name) {
    if (name == "c_z2") return FiniteGroup::cyclic(2);
    if (name == "c_z3") return FiniteGroup::cyclic(3);
    if (name == "c_z4" || name == "cg_z4") return FiniteGroup::cyclic(4);
    return FiniteGroup::symmetric3();
}

std::string subgroup_label(const FiniteGroup& grp, const std::vector<std::size_t>& h) {
    std::string s = "{";
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i) s += ",";
        s += grp.labels().empty() ? std::to_string(h[i]) : grp.labels()[h[i]];
    }
    return s + "}";
}

// Residual of the group-like projection system in real coordinates
// x = (Re q, Im q): q^2 = q, q* = q, Delta(q)(1 (x) q) = q (x) q, eps(q) = 1.
RealVec group_like_system(const QuantumGroup& g, const RealVec& x) {
    const auto n = static_cast<Index>(g.dim());
    Vec q(n);
    for (Index i = 0; i < n; ++i) q(i) = Complex(x(i), x(n + i));
    const Mat& t = g.gns().to_l2;
    const Vec r1 = t * (g.multiply(q, q) - q);
    const Vec r2 = t * (g.star(q) - q);
    const Mat r3 = t * (g.tensor_mul(g.coproduct(q), QuantumGroup::simple_tensor(g.one(), q)) -
                        QuantumGroup::simple_tensor(q, q)) * t.transpose();
    const Complex r4 = g.counit(q) - 1.0;
    RealVec out(4 * n + 2 * n * n + 2);
    Index k = 0;
    for (Index i = 0; i < n; ++i) { out(k++) = r1(i).real(); out(k++) = r1(i).imag(); }
    for (Index i = 0; i < n; ++i) { out(k++) = r2(i).real(); out(k++) = r2(i).imag(); }
    for (Index i = 0; i < r3.size(); ++i) { out(k++) = r3.data()[i].real(); out(k++) = r3.data()[i].imag(); }
    out(k++) = r4.real();
    out(k++) = r4.imag();
    return out;
}

// Idempotent hermitian normalized functional system.
RealVec idempotent_system(const QuantumGroupPtr& g, const RealVec& x) {
    const auto n = static_cast<Index>(g->dim());
    Vec w(n);
    for (Index i = 0; i < n; ++i) w(i) = Complex(x(i), x(n + i));
    const Functional phi(g, w);
    const Vec r1 = convolve(phi, phi).coeffs() - w;
    RealVec out(4 * n + 2);
    Index k = 0;
    for (Index i = 0; i < n; ++i) { out(k++) = r1(i).real(); out(k++) = r1(i).imag(); }
    for (Index i = 0; i < n; ++i) {
        const Complex h = phi(g->star(g->basis(static_cast<std::size_t>(i)))) - std::conj(w(i));
        out(k++) = h.real();
        out(k++) = h.imag();
    }
    const Complex u = phi(g->one()) - 1.0;
    out(k++) = u.real();
    out(k++) = u.imag();
    return out;
}

// Both systems are quadratic, so central differences with unit step are exact.
template <class F>
RealMat jacobian(const F& f, const RealVec& x, Index m) {
    RealMat j(m, x.size());
    for (Index c = 0; c < x.size(); ++c) {
        RealVec xp = x, xm = x;
        xp(c) += 1.0;
        xm(c) -= 1.0;
        j.col(c) = 0.5 * (f(xp) - f(xm));
    }
    return j;
}

// Damped Gauss-Newton (Levenberg-Marquardt). Returns the final residual norm.
template <class F>
double levenberg_marquardt(const F& f, RealVec& x, int max_iter, double target) {
    RealVec r = f(x);
    double cost = r.norm();
    double lambda = 1e-3;
    for (int it = 0; it < max_iter && cost > target; ++it) {
        const RealMat j = jacobian(f, x, r.size());
        const RealMat a = j.transpose() * j;
        const RealVec grad = j.transpose() * r;
        bool improved = false;
        for (int tries = 0; tries < 12 && !improved; ++tries) {
            RealMat damped = a;
            damped.diagonal().array() += lambda * (1.0 + a.diagonal().array());
            const RealVec step = damped.ldlt().solve(-grad);
            const RealVec xn = x + step;
            const RealVec rn = f(xn);
            if (rn.norm() < cost) {
                x = xn;
                r = rn;
                cost = rn.norm();
                lambda = std::max(lambda / 3.0, 1e-12);
                improved = true;
            } else {
                lambda *= 4.0;
            }
        }
        if (!improved) break;
    }
    return cost;
}

// Minimum-norm Gauss-Newton steps; keeps the point on the solution set.
template <class F>
void gauss_newton_polish(const F& f, RealVec& x, int iterations) {
    for (int it = 0; it < iterations; ++it) {
        const RealVec r = f(x);
        if (r.norm() < 1e-15) return;
        const RealMat j = jacobian(f, x, r.size());
        const RealVec step = j.completeOrthogonalDecomposition().solve(-r);
        const RealVec xn = x + step;
        if (f(xn).norm() >= r.norm()) return;
        x = xn;
    }
}

RealVec to_real(const Vec& v) {
    const Index n = v.size();
    RealVec x(2 * n);
    x.head(n) = v.real();
    x.tail(n) = v.imag();
    return x;
}

Vec to_complex(const RealVec& x) {
    const Index n = x.size() / 2;
    Vec v(n);
    for (Index i = 0; i < n; ++i) v(i) = Complex(x(i), x(n + i));
    return v;
}

void add_unique(std::vector<IdempotentState>& states, IdempotentState s, double tol, bool* added = nullptr) {
    if (added) *added = false;
    if (find_state(states, s.omega, tol)) return;
    states.push_back(std::move(s));
    if (added) *added = true;
}

void sort_states(std::vector<IdempotentState>& states) {
    auto key = [](const IdempotentState& s) {
        const QuantumGroup& g = *s.home();
        std::vector<double> k;
        k.push_back(std::round(g.psi(s.q_perp).real() * 1e6));
        for (Index i = 0; i < s.coeffs().size(); ++i) {
            k.push_back(-std::round(s.coeffs()(i).real() * 1e6));
            k.push_back(-std::round(s.coeffs()(i).imag() * 1e6));
        }
        return k;
    };
    std::stable_sort(states.begin(), states.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
}

void name_states(std::vector<IdempotentState>& states, const std::optional<Catalog>& cat, double tol) {
    std::size_t k = 0;
    for (auto& s : states) {
        if (!s.name.empty()) continue;
        const QuantumGroup& g = *s.home();
        if (cat) {
            for (const auto& e : cat->entries)
                if (sup_dist(e.coeffs, s.coeffs()) < tol) s.name = e.name;
            if (!s.name.empty()) continue;
        }
        if (sup_dist(s.coeffs(), g.data().counit) < tol)
            s.name = "counit";
        else if (sup_dist(s.coeffs(), g.haar()) < tol)
            s.name = "haar";
        else
            s.name = "omega" + std::to_string(k++);
    }
}

}  // namespace

std::optional<Catalog> catalog_for(const QuantumGroup& g) {
    for (const std::string& name : builtin_names()) {
        if (name == "kp8") continue;
        const HopfData ref = builtin(name);
        if (!same_structure(ref, g.data(), 1e-12)) continue;
        Catalog cat{name, catalog_group(name), name.rfind("c_", 0) == 0, {}};
        const FiniteGroup& grp = cat.group;
        for (const auto& h : grp.subgroups()) {
            Vec w = Vec::Zero(static_cast<Index>(grp.order()));
            for (std::size_t x : h) w(static_cast<Index>(x)) = cat.function_algebra ? 1.0 / static_cast<double>(h.size()) : 1.0;
            const std::string label = subgroup_label(grp, h);
            cat.entries.push_back({(cat.function_algebra ? "uniform" : "indicator") + label, w, h});
        }
        return cat;
    }
    return std::nullopt;
}

IdempotentState meet(const IdempotentState& a, const IdempotentState& b, double tol) {
    if (a.home() != b.home()) throw Error(ErrorKind::HomeMismatch, "meet of states on different groups");
    return state_from_coideal(generated_subalgebra(a.n, b.n, tol), tol);
}

JoinResult join(const IdempotentState& a, const IdempotentState& b, const Tolerances& tol) {
    if (a.home() != b.home()) throw Error(ErrorKind::HomeMismatch, "join of states on different groups");
    const QuantumGroupPtr& g = a.home();
    const RegularRep rep(*g);
    JoinResult out;

    const Functional step = convolve(a.omega, b.omega);
    const Mat pp = a.p * b.p;
    Functional nu = step;
    Mat power = pp;
    bool nu_done = false, p_done = false;
    int n = 1;
    int next_check = 1;
    std::vector<Vec> window;
    const std::size_t window_size = 64;
    for (; n <= tol.n_max; ++n) {
        if (n == next_check) {
            out.eq_prod = std::max(out.eq_prod, (rep.slice_second(nu.coeffs()) - power).norm());
            next_check *= 2;
        }
        if (nu_done && p_done) break;
        const Functional nu_next = convolve(nu, step);
        const Mat power_next = power * pp;
        nu_done = nu_done || nu_next.distance(nu) < tol.conv_tol;
        p_done = p_done || (power_next - power).cwiseAbs().maxCoeff() < tol.conv_tol;
        nu = nu_next;
        power = power_next;
        window.push_back(nu.coeffs());
        if (window.size() > window_size) window.erase(window.begin());
    }
    out.iterations = n;
    out.eq_prod = std::max(out.eq_prod, (rep.slice_second(nu.coeffs()) - power).norm());
    if (!(nu_done && p_done)) {
        // Slow or oscillating: fall back to the running average.
        Vec avg = Vec::Zero(nu.coeffs().size());
        for (const Vec& v : window) avg += v;
        avg /= static_cast<double>(window.size());
        const Functional mean(g, avg);
        if (idempotent_state_residual(mean) > tol.state_tol)
            throw Error(ErrorKind::NoConvergence, "convolution powers did not settle within " + std::to_string(tol.n_max) + " steps");
        nu = mean;
        out.cesaro = true;
    }
    if (std::abs(nu(g->one())) < tol.state_tol) {
        out.zero = true;
        return out;
    }

    // Second path: recover the state from the limit projection.
    const Functional recovered(g, rep.lambda_coordinates(power));
    out.path_agreement = recovered.distance(nu);

    IdempotentState s = make_idempotent(nu, tol.state_tol);
    const Coideal cap = intersect(a.n, b.n, tol.state_tol);
    out.intersection = std::max((power - gns_projection(cap)).norm(), (power - s.p).norm());
    const OrderCriteria ca = order_criteria(a, s);
    const OrderCriteria cb = order_criteria(b, s);
    out.dominance = std::max({ca.convolution, ca.expectations, ca.coideals, ca.projections, cb.convolution,
                              cb.expectations, cb.coideals, cb.projections});
    out.state = std::move(s);
    return out;
}

IdempotentState join_state(const IdempotentState& a, const IdempotentState& b, const Tolerances& tol) {
    JoinResult r = join(a, b, tol);
    if (r.zero || !r.state) throw Error(ErrorKind::NoConvergence, "join produced the zero functional");
    return std::move(*r.state);
}

Strategy parse_strategy(const std::string& s) {
    if (s == "auto") return Strategy::Auto;
    if (s == "catalog") return Strategy::Catalog;
    if (s == "search") return Strategy::Search;
    throw Error(ErrorKind::ParseError, "unknown strategy '" + s + "' (auto, catalog, search)");
}

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::Auto: return "auto";
        case Strategy::Catalog: return "catalog";
        case Strategy::Search: return "search";
    }
    return "auto";
}

std::optional<std::size_t> find_state(const std::vector<IdempotentState>& states, const Functional& omega, double tol) {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i].omega.distance(omega) < tol) return i;
    return std::nullopt;
}

Enumeration enumerate_idempotents(const QuantumGroupPtr& g, Strategy strategy, const Tolerances& tol, std::uint64_t seed) {
    Enumeration out;
    const std::optional<Catalog> cat = catalog_for(*g);
    if (cat) out.catalog_size = cat->entries.size();
    if (strategy == Strategy::Auto) strategy = cat ? Strategy::Catalog : Strategy::Search;
    if (strategy == Strategy::Catalog && !cat)
        throw Error(ErrorKind::ParseError, "no catalog for this quantum group; use the search strategy");
    out.strategy = strategy;
    std::vector<IdempotentState>& states = out.states;

    if (strategy == Strategy::Catalog) {
        for (const auto& e : cat->entries) add_unique(states, make_idempotent(Functional(g, e.coeffs), tol.state_tol, e.name), tol.dedup_tol);
    } else {
        const auto n = static_cast<Index>(g->dim());
        auto sys = [&](const RealVec& x) { return group_like_system(*g, x); };
        auto omega_sys = [&](const RealVec& x) { return idempotent_system(g, x); };
        for (int r = 0; r < tol.restarts; ++r) {
            ++out.restarts;
            std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                             static_cast<std::uint32_t>(r)};
            std::mt19937_64 rng(ss);
            std::normal_distribution<double> normal;
            Vec xi(n);
            for (Index i = 0; i < n; ++i) xi(i) = Complex(normal(rng), normal(rng));
            Vec q = g->eta_inv(xi / xi.norm());
            q = 0.5 * (q + g->star(q));
            RealVec x = to_real(q);
            if (levenberg_marquardt(sys, x, 200, 1e-13) > 1e-10) continue;
            ++out.converged;
            try {
                const Vec qp = to_complex(x);
                const Functional w = state_from_qperp(g, qp, tol.state_tol);
                RealVec y = to_real(w.coeffs());
                gauss_newton_polish(omega_sys, y, 5);
                const Functional polished(g, to_complex(y));
                if (!is_idempotent_state(polished, tol.state_tol)) continue;
                bool added = false;
                add_unique(states, make_idempotent(polished, tol.state_tol), tol.dedup_tol, &added);
                if (added) ++out.found_by_search;
            } catch (const Error&) {
                // Degenerate candidates (zero mass, ill-conditioned support) are skipped.
            }
        }
        add_unique(states, make_idempotent(Functional::counit(g), tol.state_tol), tol.dedup_tol);
        add_unique(states, make_idempotent(Functional::haar(g), tol.state_tol), tol.dedup_tol);
        for (bool grew = true; grew;) {
            grew = false;
            const std::size_t m = states.size();
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j) {
                    bool added = false;
                    add_unique(states, meet(states[i], states[j], tol.state_tol), tol.dedup_tol, &added);
                    grew = grew || added;
                    out.added_by_closure += added;
                    add_unique(states, join_state(states[i], states[j], tol), tol.dedup_tol, &added);
                    grew = grew || added;
                    out.added_by_closure += added;
                }
        }
    }
    sort_states(states);
    name_states(states, cat, tol.dedup_tol);
    if (cat)
        for (const auto& e : cat->entries)
            if (find_state(states, Functional(g, e.coeffs), tol.dedup_tol)) ++out.catalog_matched;
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_diagram(const std::vector<std::vector<bool>>& order) {
    const std::size_t m = order.size();
    auto strict = [&](std::size_t i, std::size_t j) { return i != j && order[i][j] && !order[j][i]; };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (!strict(i, j)) continue;
            bool cover = true;
            for (std::size_t k = 0; k < m && cover; ++k)
                if (strict(i, k) && strict(k, j)) cover = false;
            if (cover) edges.emplace_back(i, j);
        }
    return edges;
}

IdempotentLattice build_lattice(std::vector<IdempotentState> states, const Tolerances& tol) {
    IdempotentLattice lat;
    lat.states = std::move(states);
    const std::size_t m = lat.states.size();
    lat.order.assign(m, std::vector<bool>(m, false));
    lat.meet_table.assign(m, std::vector<int>(m, -1));
    lat.join_table.assign(m, std::vector<int>(m, -1));
    auto index_of = [&](const IdempotentState& s) {
        const auto k = find_state(lat.states, s.omega, tol.dedup_tol);
        return k ? static_cast<int>(*k) : -1;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) lat.order[i][j] = preceq(lat.states[i], lat.states[j], tol.state_tol);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            const int mt = index_of(meet(lat.states[i], lat.states[j], tol.state_tol));
            const int jt = index_of(join_state(lat.states[i], lat.states[j], tol));
            lat.meet_table[i][j] = lat.meet_table[j][i] = mt;
            lat.join_table[i][j] = lat.join_table[j][i] = jt;
        }
    lat.hasse_edges = hasse_diagram(lat.order);
    return lat;
}

CommutationReport commutation_equivalences(const IdempotentState& rho, const IdempotentState& mu, const Tolerances& tol) {
    CommutationReport r;
    const Functional rm = convolve(rho.omega, mu.omega);
    const Functional mr = convolve(mu.omega, rho.omega);
    const IdempotentState j = join_state(rho, mu, tol);
    r.join_residual = j.omega.distance(rm);
    r.sandwich_residual = convolve(mu.omega, rm).distance(rm);
    r.commute_residual = mr.distance(rm);
    r.join_is_product = r.join_residual < tol.state_tol;
    r.sandwich = r.sandwich_residual < tol.state_tol;
    r.commute = r.commute_residual < tol.state_tol;
    if (r.join_is_product != r.sandwich || r.sandwich != r.commute)
        throw Error(ErrorKind::CriteriaDisagree, "commutation conditions disagree");
    r.value = r.commute;
    return r;
}

ModularReport modular_law_check(const IdempotentState& omega, const IdempotentState& mu, const IdempotentState& rho,
                                const Tolerances& tol) {
    ModularReport r;
    const double t = tol.state_tol;
    r.rho_below_omega = preceq(rho, omega, t);
    r.join_residual = join_state(rho, mu, tol).omega.distance(convolve(rho.omega, mu.omega));
    r.join_is_product = r.join_residual < t;
    const IdempotentState wm = meet(omega, mu, t);
    r.span_residual = product_span(omega.n, mu.n, t).distance(wm.n);
    r.products_span = r.span_residual < t;
    r.asserted = r.rho_below_omega && r.join_is_product && r.products_span;
    if (r.asserted) {
        const IdempotentState lhs = meet(omega, join_state(mu, rho, tol), t);
        const IdempotentState rhs = join_state(wm, rho, tol);
        r.sides = lhs.omega.distance(rhs.omega);
    }
    return r;
}

}  // namespace qglab

#include "qglab/checks.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "qglab/errors.hpp"

namespace qglab {

namespace {

using Index = Eigen::Index;

struct Outcome {
    bool pass = true;
    double residual = 0.0;
    std::string detail;

    void worst(double r, double tol) {
        residual = std::max(residual, r);
        if (!(r < tol)) pass = false;
    }
    void require(bool ok, const std::string& why) {
        if (!ok) {
            pass = false;
            if (detail.empty()) detail = why;
        }
    }
};

class Suite {
public:
    void run(const std::string& key, const std::function<Outcome()>& body) {
        CheckResult r;
        r.key = key;
        try {
            const Outcome o = body();
            r.pass = o.pass;
            r.residual = o.residual;
            r.detail = o.detail;
        } catch (const Error& e) {
            r.pass = false;
            r.detail = e.what();
            r.internal = !is_input_error(e.kind());
        }
        results.push_back(std::move(r));
    }

    std::vector<CheckResult> results;
};

Functional random_functional(const QuantumGroupPtr& g, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Vec v(static_cast<Index>(g->dim()));
    for (Index i = 0; i < v.size(); ++i) v(i) = Complex(normal(rng), normal(rng));
    return {g, v};
}

std::string count_text(std::size_t n, const char* what) {
    return std::to_string(n) + " " + what;
}

}  // namespace

std::vector<CheckResult> run_checks(const QuantumGroupPtr& g, const CheckOptions& opts) {
    const Tolerances& tol = opts.tol;
    const double t = tol.state_tol;
    Suite s;

    s.run("axioms", [&] {
        Outcome o;
        for (const auto& a : g->report().axioms) o.worst(a.pass ? 0.0 : a.residual, 1.0);
        o.require(g->report().pass(), g->report().first_failure() ? g->report().first_failure()->name : "");
        return o;
    });

    s.run("convolution associativity", [&] {
        Outcome o;
        std::mt19937_64 rng(opts.seed);
        for (int k = 0; k < 8; ++k) {
            const Functional a = random_functional(g, rng), b = random_functional(g, rng), c = random_functional(g, rng);
            o.worst(convolve(convolve(a, b), c).distance(convolve(a, convolve(b, c))), 1e-10);
        }
        return o;
    });

    s.run("convolution unit and haar absorption", [&] {
        Outcome o;
        std::mt19937_64 rng(opts.seed + 1);
        const Functional eps = Functional::counit(g), h = Functional::haar(g);
        for (int k = 0; k < 8; ++k) {
            const Functional a = random_functional(g, rng);
            o.worst(convolve(eps, a).distance(a), 1e-10);
            o.worst(convolve(a, eps).distance(a), 1e-10);
            const Functional scaled(g, a(g->one()) * h.coeffs());
            o.worst(convolve(a, h).distance(scaled), 1e-10);
            o.worst(convolve(h, a).distance(scaled), 1e-10);
        }
        return o;
    });

    std::optional<Enumeration> en;
    s.run("enumeration", [&] {
        en = enumerate_idempotents(g, opts.strategy, tol, opts.seed);
        Outcome o;
        o.detail = count_text(en->states.size(), "states") + " via " + to_string(en->strategy);
        if (en->catalog_size) {
            o.detail += ", catalog " + std::to_string(en->catalog_matched) + "/" + std::to_string(*en->catalog_size);
            o.require(en->catalog_matched == *en->catalog_size && en->states.size() == *en->catalog_size,
                      "enumeration differs from the catalog");
        }
        o.require(find_state(en->states, Functional::counit(g), tol.dedup_tol).has_value(), "counit missing");
        o.require(find_state(en->states, Functional::haar(g), tol.dedup_tol).has_value(), "haar state missing");
        return o;
    });
    if (!en) return s.results;
    const std::vector<IdempotentState>& states = en->states;
    const std::size_t m = states.size();

    s.run("expectation properties", [&] {
        Outcome o;
        for (const auto& w : states) {
            o.worst(idempotent_state_residual(w.omega), t);
            const ExpectationReport r = check_expectation(w.omega, w.e, t);
            o.worst(r.idempotent, t);
            o.worst(r.unital, t);
            o.worst(std::max(0.0, -r.min_choi_eigenvalue), t);
            o.worst(r.bimodular, t);
            o.worst(r.eq1, 1e-10);
            o.require(w.n.flags().is_coideal && w.n.flags().is_subalgebra && w.n.flags().is_star_closed &&
                          w.n.flags().contains_unit,
                      w.name + ": range is not a unital coideal *-subalgebra");
        }
        return o;
    });

    s.run("support projection", [&] {
        Outcome o;
        for (const auto& w : states) {
            const SupportReport r = support_report(w.omega, w.q_perp, t);
            o.worst(r.projection, t);
            o.worst(r.kills_complement, t);
            o.worst(r.compression, t);
            o.worst(r.null_positive, std::sqrt(t));
        }
        return o;
    });

    s.run("reconstruction from support", [&] {
        Outcome o;
        for (const auto& w : states) {
            const Functional rebuilt = state_from_qperp(g, w.q_perp, t);
            double r = 0.0;
            for (std::size_t i = 0; i < g->dim(); ++i)
                r = std::max(r, std::abs(w.omega(g->basis(i)) - rebuilt(g->basis(i))));
            o.worst(r, t);
        }
        return o;
    });

    s.run("support identities", [&] {
        Outcome o;
        for (const auto& w : states) {
            const SupportIdentities r = support_identities(w, t);
            o.worst(std::max({r.membership_in, r.annihilation, r.antipode, r.group_like, r.in_coideal, r.central,
                              r.reconstruction}),
                    t);
            o.require(r.membership_agrees, w.name + ": membership criterion disagrees with N");
            o.require(r.corner_dim == 1, w.name + ": Q_perp N Q_perp is not one-dimensional");
        }
        return o;
    });

    s.run("order criteria agree", [&] {
        Outcome o;
        std::size_t disagreements = 0;
        for (const auto& a : states)
            for (const auto& b : states)
                if (!order_criteria(a, b).agree(t)) ++disagreements;
        o.require(disagreements == 0, count_text(disagreements, "disagreeing pairs"));
        return o;
    });

    s.run("coideal correspondence", [&] {
        Outcome o;
        for (const auto& w : states) {
            const IdempotentState back = state_from_coideal(w.n, t);
            o.worst(back.omega.distance(w.omega), t);
            o.worst(back.n.distance(w.n), t);
            o.worst(eq_pp_residual(w.n), t);
            const Mat te = trace_expectation(w.n);
            o.worst((g->gns().to_l2 * (te - w.e) * g->gns().from_l2).norm(), t);
        }
        return o;
    });

    std::optional<IdempotentLattice> lat;
    s.run("lattice", [&] {
        lat = build_lattice(states, tol);
        Outcome o;
        for (std::size_t i = 0; i < m; ++i) {
            o.require(lat->order[i][i], "order is not reflexive");
            for (std::size_t j = 0; j < m; ++j) {
                if (i != j) o.require(!(lat->order[i][j] && lat->order[j][i]), "order is not antisymmetric");
                for (std::size_t k = 0; k < m; ++k)
                    if (lat->order[i][j] && lat->order[j][k]) o.require(lat->order[i][k], "order is not transitive");
                o.require(lat->meet_table[i][j] >= 0 && lat->join_table[i][j] >= 0, "set is not closed under meet and join");
            }
        }
        o.detail = o.detail.empty() ? count_text(lat->hasse_edges.size(), "cover edges") : o.detail;
        return o;
    });

    if (lat) {
        const auto& mt = lat->meet_table;
        const auto& jt = lat->join_table;
        const auto& ord = lat->order;
        s.run("meet and join tables", [&] {
            Outcome o;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    const int a = mt[i][j], b = jt[i][j];
                    o.require(a == mt[j][i] && b == jt[j][i], "tables are not commutative");
                    if (a < 0 || b < 0) continue;
                    for (std::size_t k = 0; k < m; ++k) {
                        const int l1 = mt[static_cast<std::size_t>(a)][k], r1 = mt[j][k];
                        if (l1 >= 0 && r1 >= 0) o.require(l1 == mt[i][static_cast<std::size_t>(r1)], "meet is not associative");
                        const int l2 = jt[static_cast<std::size_t>(b)][k], r2 = jt[j][k];
                        if (l2 >= 0 && r2 >= 0) o.require(l2 == jt[i][static_cast<std::size_t>(r2)], "join is not associative");
                    }
                }
            return o;
        });

        s.run("infimum and supremum", [&] {
            Outcome o;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    const int a = mt[i][j], b = jt[i][j];
                    if (a < 0 || b < 0) {
                        o.require(false, "missing table entry");
                        continue;
                    }
                    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
                    o.require(ord[ua][i] && ord[ua][j], "meet is not below both arguments");
                    o.require(ord[i][ub] && ord[j][ub], "join is not above both arguments");
                    for (std::size_t k = 0; k < m; ++k) {
                        if (ord[k][i] && ord[k][j]) o.require(ord[k][ua], "meet is not the largest lower bound");
                        if (ord[i][k] && ord[j][k]) o.require(ord[ub][k], "join is not the smallest upper bound");
                    }
                }
            return o;
        });

        s.run("absorption laws", [&] {
            Outcome o;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    const int b = jt[i][j], a = mt[i][j];
                    if (b >= 0) o.require(mt[i][static_cast<std::size_t>(b)] == static_cast<int>(i), "omega ^ (omega v mu) != omega");
                    if (a >= 0) o.require(jt[i][static_cast<std::size_t>(a)] == static_cast<int>(i), "omega v (omega ^ mu) != omega");
                }
            return o;
        });
    }

    s.run("join limits", [&] {
        Outcome o;
        int worst_iter = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                const JoinResult r = join(states[i], states[j], tol);
                o.require(!r.zero && r.state.has_value(), "join produced the zero functional");
                o.worst(r.path_agreement, 1e-8);
                o.worst(r.eq_prod, 1e-8);
                o.worst(r.intersection, t);
                o.worst(r.dominance, t);
                worst_iter = std::max(worst_iter, r.iterations);
            }
        o.detail = o.detail.empty() ? "at most " + std::to_string(worst_iter) + " iterations" : o.detail;
        return o;
    });

    s.run("commutation equivalences", [&] {
        Outcome o;
        std::size_t commuting = 0;
        for (const auto& a : states)
            for (const auto& b : states)
                if (commutation_equivalences(a, b, tol).value) ++commuting;
        o.detail = count_text(commuting, "commuting ordered pairs");
        return o;
    });

    s.run("modular law", [&] {
        Outcome o;
        std::size_t asserted = 0;
        for (const auto& w : states)
            for (const auto& mu : states)
                for (const auto& rho : states) {
                    const ModularReport r = modular_law_check(w, mu, rho, tol);
                    if (!r.asserted) continue;
                    ++asserted;
                    o.worst(r.sides, t);
                }
        o.detail = count_text(asserted, "triples satisfy the hypotheses");
        return o;
    });

    s.run("haar type", [&] {
        Outcome o;
        std::size_t haar_type = 0;
        for (const auto& w : states) haar_type += haar_type_test(w, t);
        o.detail = std::to_string(haar_type) + "/" + std::to_string(m) + " of Haar type";
        // Commutative algebras have only two-sided left ideals.
        bool commutative = true;
        for (std::size_t i = 0; i < g->dim() && commutative; ++i)
            for (std::size_t j = 0; j < g->dim() && commutative; ++j)
                commutative = g->l2_norm(g->multiply(g->basis(i), g->basis(j)) - g->multiply(g->basis(j), g->basis(i))) < t;
        if (commutative) o.require(haar_type == m, "non-Haar-type state on a commutative algebra");
        return o;
    });

    std::optional<DualPair> pair, pair_hat;
    s.run("dual conventions", [&] {
        pair = dual(g, tol);
        pair_hat = dual(pair->g_hat, tol);
        Outcome o;
        for (const auto& c : pair->candidates)
            if (c.convention == pair->convention) {
                o.worst(std::max({c.pentagon, c.unitarity, c.representation, c.projections, c.coproduct, c.biduality}), 1e-10);
            }
        std::string passing;
        for (const auto& c : pair->candidates)
            if (c.pass(t)) passing += (passing.empty() ? "" : ", ") + c.convention.name();
        o.detail = "selected " + pair->convention.name() + "; passing: " + passing;
        return o;
    });
    if (!pair) return s.results;

    s.run("projections from W", [&] {
        Outcome o;
        for (const auto& w : states) o.worst((pair->rep->slice_second(w.coeffs()) - w.p).norm(), t);
        return o;
    });

    s.run("dual state identities", [&] {
        Outcome o;
        for (const auto& w : states) {
            DualStateReport r;
            dual_state(w, *pair, t, &r);
            o.worst(std::max({r.routes, r.w_slice, r.coideal, r.support, r.group_like}), 1e-8);
        }
        return o;
    });

    s.run("double dual", [&] {
        Outcome o;
        for (const auto& w : states) o.worst(double_dual_residual(w, *pair, *pair_hat, t), 1e-8);
        return o;
    });

    s.run("codual involution", [&] {
        Outcome o;
        for (const auto& w : states) {
            const Coideal once = codual(w.n, *pair, t);
            o.require(once.flags().is_coideal, w.name + ": codual is not a left coideal");
            const Coideal twice = codual(once, *pair_hat, t);
            // The double dual is G, or G^{op,cop} carried back by the antipode.
            const Mat coords = pair_hat->bidual_via_antipode ? Mat(g->data().antipode * twice.basis()) : twice.basis();
            const Coideal back = Coideal::span(g, coords, t);
            o.worst(back.distance(w.n), t);
            o.worst(conv_thmcod_residual(w, *pair, t), 1e-8);
        }
        return o;
    });

    s.run("order via supports", [&] {
        Outcome o;
        for (const auto& a : states)
            for (const auto& b : states) {
                const bool below = order_criteria(a, b).holds(t);
                const bool supports = g->l2_norm(g->multiply(b.q_perp, a.q_perp) - a.q_perp) < t;
                o.require(below == supports, a.name + " vs " + b.name + ": order and support order differ");
            }
        return o;
    });

    s.run("exchange of meet and join", [&] {
        Outcome o;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                const ExchangeReport r = duality_exchange_check(states[i], states[j], *pair, tol);
                o.worst(std::max(r.meet_to_join, r.join_to_meet), 1e-8);
            }
        return o;
    });

    return s.results;
}

}  // namespace qglab

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "oracle.hpp"
#include "qglab/duality.hpp"
#include "qglab/errors.hpp"

using namespace qglab;

namespace {

const std::vector<std::string> six = {"c_z2", "c_z3", "c_z4", "c_s3", "cg_s3", "cg_z4"};

struct Outcome {
    bool pass = true;
    std::string note;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) note = what;
        pass = pass && ok;
    }
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1e", x);
    return buf;
}

struct Env {
    Tolerances tol;
    std::map<std::string, QuantumGroupPtr> groups;
    std::map<std::string, std::vector<IdempotentState>> states;

    const QuantumGroupPtr& group(const std::string& name) {
        auto it = groups.find(name);
        if (it == groups.end()) it = groups.emplace(name, QuantumGroup::create(builtin(name), tol)).first;
        return it->second;
    }
    const std::vector<IdempotentState>& enumerated(const std::string& name) {
        auto it = states.find(name);
        if (it == states.end())
            it = states.emplace(name, enumerate_idempotents(group(name), Strategy::Auto, tol).states).first;
        return it->second;
    }
};

std::vector<std::string> all_builtins() { return builtin_names(); }

// 1. axioms hold on the built-ins and every single-entry perturbation breaks them
Outcome axioms(Env&) {
    Outcome o;
    std::size_t perturbed = 0;
    double worst = 0.0;
    for (const auto& name : six) {
        const HopfData base = builtin(name);
        const ValidationReport r = validate(base, 1e-12);
        for (const auto& a : r.axioms) worst = std::max(worst, a.residual);
        o.require(r.pass(), name + " fails validation");
        const std::size_t n = base.dim;
        auto probe = [&](auto&& bump) {
            HopfData d = base;
            bump(d);
            ++perturbed;
            o.require(!validate(d, 1e-12).pass(), name + " accepts a perturbed entry");
        };
        for (std::size_t i = 0; i < n; ++i) {
            const auto ii = static_cast<Eigen::Index>(i);
            probe([&](HopfData& d) { d.unit(ii) += 1e-3; });
            probe([&](HopfData& d) { d.counit(ii) += 1e-3; });
            for (std::size_t j = 0; j < n; ++j) {
                const auto jj = static_cast<Eigen::Index>(j);
                probe([&](HopfData& d) { d.antipode(ii, jj) += 1e-3; });
                probe([&](HopfData& d) { d.star(ii, jj) += 1e-3; });
                for (std::size_t k = 0; k < n; ++k) {
                    probe([&](HopfData& d) { d.mult(i, j, k) += 1e-3; });
                    probe([&](HopfData& d) { d.comult(i, j, k) += 1e-3; });
                }
            }
        }
    }
    o.require(worst < 1e-12, "axiom residual " + fmt(worst));
    if (o.pass) o.note = "max residual " + fmt(worst) + ", " + std::to_string(perturbed) + " perturbations rejected";
    return o;
}

// 2. search recovers exactly the subgroup catalogs
Outcome enumeration(Env& env) {
    Outcome o;
    const oracle::Group s3 = oracle::s3();
    {
        const auto& g = env.group("c_z2");
        const Enumeration en = enumerate_idempotents(g, Strategy::Search, env.tol);
        o.require(en.states.size() == 2 && find_state(en.states, Functional::counit(g), 1e-7) &&
                      find_state(en.states, Functional::haar(g), 1e-7),
                  "C(Z2) is not {counit, Haar}");
    }
    std::string counts;
    for (const auto& [name, prefix] : {std::pair<std::string, std::string>{"c_s3", "d_"}, {"cg_s3", "l_"}}) {
        const auto& g = env.group(name);
        const Enumeration en = enumerate_idempotents(g, Strategy::Search, env.tol, default_seed);
        o.require(en.restarts == 200, "restart count");
        const auto map = oracle::basis_map(*g, s3, prefix);
        const auto subs = oracle::subgroups(s3);
        o.require(en.states.size() == subs.size(), name + " yields " + std::to_string(en.states.size()) + " states");
        for (const auto& h : subs) {
            const Vec expected = oracle::to_basis(map, prefix == "d_" ? oracle::uniform(s3, h) : oracle::indicator(s3, h));
            o.require(find_state(en.states, Functional(g, expected), 1e-7).has_value(), name + " misses a subgroup state");
        }
        counts += name + " " + std::to_string(en.states.size()) + " (" + std::to_string(en.converged) + "/200 converged) ";
    }
    if (o.pass) o.note = "C(Z2) 2, " + counts;
    return o;
}

// 3. lattice of C(S3) is the subgroup lattice
Outcome lattice_iso(Env& env) {
    Outcome o;
    const oracle::Group s3 = oracle::s3();
    const auto& g = env.group("c_s3");
    const auto map = oracle::basis_map(*g, s3, "d_");
    const auto subs = oracle::subgroups(s3);
    const IdempotentLattice lat = build_lattice(env.enumerated("c_s3"), env.tol);
    const std::size_t n = subs.size();
    o.require(lat.states.size() == n, "state count");
    if (!o.pass) return o;
    std::vector<int> idx;
    for (const auto& h : subs) {
        const auto hit = find_state(lat.states, Functional(g, oracle::to_basis(map, oracle::uniform(s3, h))), 1e-9);
        o.require(hit.has_value(), "subgroup state missing");
        idx.push_back(hit ? static_cast<int>(*hit) : -1);
    }
    if (!o.pass) return o;
    auto index_of = [&](const oracle::Subset& s) {
        for (std::size_t k = 0; k < n; ++k)
            if (subs[k] == s) return idx[k];
        return -1;
    };
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto ia = static_cast<std::size_t>(idx[a]), ib = static_cast<std::size_t>(idx[b]);
            o.require(lat.order[ia][ib] == oracle::subset_of(subs[a], subs[b]), "order matrix");
            o.require(lat.meet_table[ia][ib] == index_of(oracle::intersection(subs[a], subs[b])), "meet table");
            o.require(lat.join_table[ia][ib] == index_of(oracle::generated(s3, subs[a], subs[b])), "join table");
            if (a == b || !oracle::subset_of(subs[a], subs[b])) continue;
            bool cover = true;
            for (std::size_t m = 0; m < n; ++m)
                if (m != a && m != b && oracle::subset_of(subs[a], subs[m]) && oracle::subset_of(subs[m], subs[b])) cover = false;
            if (cover) edges.insert({ia, ib});
        }
    o.require(std::set<std::pair<std::size_t, std::size_t>>(lat.hasse_edges.begin(), lat.hasse_edges.end()) == edges,
              "Hasse edges");
    if (o.pass) o.note = std::to_string(n) + " states, " + std::to_string(edges.size()) + " cover edges";
    return o;
}

// 4. join by convolution powers and by alternating projections
Outcome join_limits(Env& env) {
    Outcome o;
    const oracle::Group s3 = oracle::s3();
    const auto& g = env.group("c_s3");
    const auto map = oracle::basis_map(*g, s3, "d_");
    const auto u12 = make_idempotent({g, oracle::to_basis(map, oracle::uniform(s3, s3.set({"e", "(12)"})))}, 1e-9);
    const auto u13 = make_idempotent({g, oracle::to_basis(map, oracle::uniform(s3, s3.set({"e", "(13)"})))}, 1e-9);
    const JoinResult j = join(u12, u13, env.tol);
    o.require(j.state.has_value() && !j.zero, "no state");
    if (!o.pass) return o;
    const double d = j.state->omega.distance(Functional::haar(g));
    o.require(d < 1e-9, "join differs from Haar by " + fmt(d));
    o.require(j.iterations <= 200, std::to_string(j.iterations) + " iterations");
    double paths = 0.0, inter = 0.0;
    for (const auto& name : six)
        for (const auto& a : env.enumerated(name))
            for (const auto& b : env.enumerated(name)) {
                const JoinResult r = join(a, b, env.tol);
                paths = std::max(paths, r.path_agreement);
                inter = std::max(inter, r.intersection);
            }
    o.require(paths < 1e-8, "paths disagree by " + fmt(paths));
    o.require(inter < 1e-9, "intersection residual " + fmt(inter));
    if (o.pass)
        o.note = std::to_string(j.iterations) + " iterations, path agreement " + fmt(paths) + ", intersection " + fmt(inter);
    return o;
}

// 5. omega(x) = psi(Q x Q) / psi(Q), evaluated directly
Outcome reconstruction(Env& env) {
    Outcome o;
    double worst = 0.0;
    std::size_t count = 0;
    for (const auto& name : all_builtins()) {
        const auto& g = env.group(name);
        for (const auto& s : env.enumerated(name)) {
            const Complex mass = g->psi(s.q_perp);
            for (std::size_t i = 0; i < g->dim(); ++i) {
                const Complex v = g->psi(g->multiply(g->multiply(s.q_perp, g->basis(i)), s.q_perp)) / mass;
                worst = std::max(worst, std::abs(s.coeffs()(static_cast<Eigen::Index>(i)) - v));
            }
            ++count;
        }
    }
    o.require(worst < 1e-9, "residual " + fmt(worst));
    if (o.pass) o.note = std::to_string(count) + " states, max residual " + fmt(worst);
    return o;
}

// 6. the four order criteria never disagree
Outcome order_criteria_agree(Env& env) {
    Outcome o;
    std::size_t pairs = 0, disagreements = 0;
    for (const auto& name : all_builtins())
        for (const auto& a : env.enumerated(name))
            for (const auto& b : env.enumerated(name)) {
                ++pairs;
                try {
                    preceq(a, b, env.tol.state_tol);
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::CriteriaDisagree) throw;
                    ++disagreements;
                }
            }
    o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    if (o.pass) o.note = std::to_string(pairs) + " ordered pairs, 0 disagreements";
    return o;
}

// 7. membership, annihilation, antipode invariance, group-likeness, minimal central support
Outcome support_identities_all(Env& env) {
    Outcome o;
    double worst = 0.0;
    for (const auto& name : all_builtins())
        for (const auto& s : env.enumerated(name)) {
            const SupportIdentities si = support_identities(s, env.tol.state_tol);
            worst = std::max({worst, si.membership_in, si.annihilation, si.antipode, si.group_like, si.in_coideal, si.central});
            o.require(si.membership_agrees, name + " membership criterion disagrees");
            o.require(si.corner_dim == 1, name + " support not minimal");
        }
    o.require(worst < 1e-9, "residual " + fmt(worst));
    if (o.pass) o.note = "max residual " + fmt(worst);
    return o;
}

// 8. pentagon, double dual, slices of W, exchange of meet and join, support order
Outcome duality(Env& env) {
    Outcome o;
    const double t = env.tol.state_tol;
    double pent = 0.0, dd = 0.0, slice = 0.0;
    std::size_t exchanges = 0;
    for (const auto& name : all_builtins()) pent = std::max(pent, pentagon_residual(dual(env.group(name), env.tol).w(), env.group(name)->dim()));
    for (const auto& name : {"c_s3", "cg_s3", "c_z4"}) {
        const auto& g = env.group(name);
        const DualPair p = dual(g, env.tol);
        const DualPair ph = dual(p.g_hat, env.tol);
        const auto& states = env.enumerated(name);
        for (const auto& s : states) {
            dd = std::max(dd, double_dual_residual(s, p, ph, t));
            DualStateReport r;
            dual_state(s, p, t, &r);
            slice = std::max(slice, r.w_slice);
        }
        for (const auto& a : states)
            for (const auto& b : states) {
                ++exchanges;
                o.require(duality_exchange_check(a, b, p, env.tol).pass(1e-8), std::string(name) + " exchange fails");
                const bool below = sup_dist(g->multiply(b.q_perp, a.q_perp), a.q_perp) < t;
                o.require(preceq(a, b, t) == below, std::string(name) + " order differs from support order");
            }
    }
    o.require(pent < 1e-10, "pentagon " + fmt(pent));
    o.require(dd < 1e-8, "double dual " + fmt(dd));
    o.require(slice < 1e-8, "W slice " + fmt(slice));
    if (o.pass)
        o.note = "pentagon " + fmt(pent) + ", double dual " + fmt(dd) + ", W slice " + fmt(slice) + ", " +
                 std::to_string(exchanges) + " exchange pairs";
    return o;
}

// 9. modular law instance and the commutation equivalences
Outcome modular(Env& env) {
    Outcome o;
    const oracle::Group s3 = oracle::s3();
    const auto& g = env.group("c_s3");
    const auto map = oracle::basis_map(*g, s3, "d_");
    auto u = [&](std::initializer_list<const char*> h) {
        return make_idempotent({g, oracle::to_basis(map, oracle::uniform(s3, s3.set(h)))}, 1e-9);
    };
    const auto all = u({"e", "(12)", "(13)", "(23)", "(123)", "(132)"}), h12 = u({"e", "(12)"}), h13 = u({"e", "(13)"}),
               a3 = u({"e", "(123)", "(132)"});
    const ModularReport r = modular_law_check(all, h12, a3, env.tol);
    o.require(r.rho_below_omega && r.join_is_product && r.products_span, "hypotheses fail");
    o.require(r.asserted && r.sides < 1e-9, "sides differ by " + fmt(r.sides));
    try {
        const CommutationReport yes = commutation_equivalences(a3, h12, env.tol);
        o.require(yes.join_is_product && yes.sandwich && yes.commute, "(A3, <(12)>) not all true");
        const CommutationReport no = commutation_equivalences(h12, h13, env.tol);
        o.require(!no.join_is_product && !no.sandwich && !no.commute, "(<(12)>, <(13)>) not all false");
    } catch (const Error& e) {
        o.require(false, e.what());
    }
    if (o.pass) o.note = "both sides agree to " + fmt(r.sides);
    return o;
}

// 10. Haar-type flags
Outcome haar_type(Env& env) {
    Outcome o;
    const double t = env.tol.state_tol;
    for (const auto& s : env.enumerated("c_s3")) o.require(haar_type_test(s, t), "C(S3) state not Haar type");
    const oracle::Group s3 = oracle::s3();
    const auto& g = env.group("cg_s3");
    const auto map = oracle::basis_map(*g, s3, "l_");
    auto ind = [&](std::initializer_list<const char*> h) {
        return make_idempotent({g, oracle::to_basis(map, oracle::indicator(s3, s3.set(h)))}, t);
    };
    o.require(!haar_type_test(ind({"e", "(12)"}), t), "1_<(12)> flagged Haar type");
    o.require(haar_type_test(ind({"e", "(123)", "(132)"}), t), "1_A3 not flagged Haar type");
    if (o.pass) o.note = "6/6 on C(S3); 1_<(12)> no, 1_A3 yes";
    return o;
}

// 11. coideal to state and back, and the projection identity
Outcome coideal_roundtrip(Env& env) {
    Outcome o;
    double rt = 0.0, pp = 0.0;
    for (const auto& name : all_builtins())
        for (const auto& s : env.enumerated(name)) {
            const Coideal n = range_coideal(s.omega, env.tol.state_tol);
            rt = std::max(rt, state_from_coideal(n, env.tol.state_tol).omega.distance(s.omega));
            pp = std::max(pp, eq_pp_residual(n));
        }
    o.require(rt < 1e-9, "round trip " + fmt(rt));
    o.require(pp < 1e-9, "projection identity " + fmt(pp));
    if (o.pass) o.note = "round trip " + fmt(rt) + ", projection identity " + fmt(pp);
    return o;
}

}  // namespace

int main() {
    Env env;
    struct Criterion {
        std::string name;
        std::function<Outcome(Env&)> run;
        double limit;  // seconds, 0 when unbounded
    };
    const std::vector<Criterion> criteria = {
        {"axioms", axioms, 1.0},
        {"enumeration vs subgroup oracle", enumeration, 30.0},
        {"lattice isomorphism", lattice_iso, 0.0},
        {"join limits", join_limits, 0.0},
        {"reconstruction from support", reconstruction, 0.0},
        {"order criteria agree", order_criteria_agree, 0.0},
        {"support identities", support_identities_all, 0.0},
        {"duality", duality, 0.0},
        {"modular law", modular, 0.0},
        {"haar-type detection", haar_type, 0.0},
        {"coideal round trip", coideal_roundtrip, 0.0},
    };
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = clock::now();
        Outcome o;
        try {
            o = criteria[i].run(env);
        } catch (const std::exception& e) {
            o.pass = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(clock::now() - t0).count();
        if (criteria[i].limit > 0 && secs > criteria[i].limit) o.require(false, "over the " + fmt(criteria[i].limit) + " s budget");
        std::printf("%s %2zu %-32s %6.2f s  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(), secs,
                    o.note.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    const double total = std::chrono::duration<double>(clock::now() - start).count();
    const bool in_budget = total < 120.0;
    std::printf("%d/%zu criteria passed in %.1f s%s\n", static_cast<int>(criteria.size()) - failed, criteria.size(), total,
                in_budget ? "" : " (over the 120 s suite budget)");
    return failed == 0 && in_budget ? 0 : 1;
}

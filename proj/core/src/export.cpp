#include "qglab/export.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "qglab/io.hpp"

namespace qglab {

namespace {

using nlohmann::json;
using Index = Eigen::Index;

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json vec_json(const Vec& v) {
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
    return out;
}

json mat_json(const Mat& m) {
    json out = json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

std::string dump(const json& j) { return j.dump(1) + "\n"; }

std::string sci(double x) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(2) << x;
    return s.str();
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string validation_json(const ValidationReport& report) {
    json axioms = json::array();
    for (const auto& a : report.axioms) axioms.push_back({{"name", a.name}, {"residual", a.residual}, {"pass", a.pass}});
    return dump({{"pass", report.pass()}, {"axioms", axioms}});
}

std::string validation_text(const ValidationReport& report) {
    std::ostringstream s;
    for (const auto& a : report.axioms)
        s << (a.pass ? "ok   " : "FAIL ") << std::left << std::setw(34) << a.name << sci(a.residual) << "\n";
    s << (report.pass() ? "valid" : "invalid: " + report.first_failure()->name) << "\n";
    return s.str();
}

std::string functional_json(const Functional& phi) {
    return dump({{"group", content_hash(phi.home()->data())}, {"coeffs", vec_json(phi.coeffs())}});
}

std::string enumeration_json(const Enumeration& en, double tol) {
    json states = json::array();
    std::string hash;
    for (const auto& s : en.states) {
        if (hash.empty()) hash = content_hash(s.home()->data());
        states.push_back({{"name", s.name},
                          {"coeffs", vec_json(s.coeffs())},
                          {"q_perp", vec_json(s.q_perp)},
                          {"dim_n", s.n.dim()},
                          {"haar_type", haar_type_test(s, tol)}});
    }
    json j = {{"group", hash},
              {"strategy", to_string(en.strategy)},
              {"restarts", en.restarts},
              {"converged", en.converged},
              {"found_by_search", en.found_by_search},
              {"added_by_closure", en.added_by_closure},
              {"states", states}};
    if (en.catalog_size) j["catalog"] = {{"size", *en.catalog_size}, {"matched", en.catalog_matched}};
    return dump(j);
}

std::string enumeration_text(const Enumeration& en, double tol) {
    std::ostringstream s;
    s << en.states.size() << " idempotent states (" << to_string(en.strategy);
    if (en.strategy == Strategy::Search) s << ", " << en.converged << "/" << en.restarts << " restarts converged";
    if (en.catalog_size) s << ", catalog " << en.catalog_matched << "/" << *en.catalog_size;
    s << ")\n";
    for (const auto& st : en.states)
        s << "  " << std::left << std::setw(44) << st.name << " dim N = " << st.n.dim()
          << (haar_type_test(st, tol) ? "  haar type" : "  not haar type") << "\n";
    return s.str();
}

std::string lattice_json(const IdempotentLattice& lat) {
    json states = json::array();
    for (const auto& s : lat.states) {
        states.push_back({{"name", s.name}, {"coeffs", vec_json(s.coeffs())}});
    }
    json edges = json::array();
    for (const auto& [a, b] : lat.hasse_edges) edges.push_back({a, b});
    return dump({{"states", states}, {"order", lat.order}, {"meet", lat.meet_table}, {"join", lat.join_table}, {"hasse", edges}, {"dot", lattice_dot(lat)}});
}

std::string lattice_dot(const IdempotentLattice& lat) {
    std::ostringstream s;
    s << "digraph idempotents {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < lat.states.size(); ++i) s << "  n" << i << " [label=" << quoted(lat.states[i].name) << "];\n";
    for (const auto& [a, b] : lat.hasse_edges) s << "  n" << a << " -> n" << b << ";\n";
    s << "}\n";
    return s.str();
}

std::string lattice_text(const IdempotentLattice& lat) {
    std::ostringstream s;
    s << lat.states.size() << " states, " << lat.hasse_edges.size() << " cover relations\n";
    for (std::size_t i = 0; i < lat.states.size(); ++i) s << "  [" << i << "] " << lat.states[i].name << "\n";
    for (const auto& [a, b] : lat.hasse_edges) s << "  " << a << " < " << b << "\n";
    return s.str();
}

std::string convention_json(const DualPair& pair) {
    json cands = json::array();
    for (const auto& c : pair.candidates)
        cands.push_back({{"name", c.convention.name()},
                         {"dual_valid", c.dual_valid},
                         {"dual_failure", c.dual_failure},
                         {"pentagon", c.pentagon},
                         {"unitarity", c.unitarity},
                         {"representation", c.representation},
                         {"projections", c.projections},
                         {"coproduct", c.coproduct},
                         {"biduality", c.biduality},
                         {"bidual_via_antipode", c.bidual_via_antipode},
                         {"pass", c.pass(pair.g->tolerances().state_tol)}});
    return dump({{"selected", pair.convention.name()},
                 {"bidual_via_antipode", pair.bidual_via_antipode},
                 {"group", content_hash(pair.g->data())},
                 {"dual", content_hash(pair.g_hat->data())},
                 {"candidates", cands}});
}

std::string convention_text(const DualPair& pair) {
    std::ostringstream s;
    const double tol = pair.g->tolerances().state_tol;
    s << "selected convention: " << pair.convention.name()
      << (pair.bidual_via_antipode ? " (double dual identified through the antipode)" : "") << "\n";
    for (const auto& c : pair.candidates)
        s << "  " << (c.pass(tol) ? "pass " : "fail ") << std::left << std::setw(20) << c.convention.name()
          << " pentagon " << sci(c.pentagon) << "  rep " << sci(c.representation) << "  coproduct " << sci(c.coproduct)
          << "  biduality " << sci(c.biduality) << (c.dual_valid ? "" : "  dual invalid: " + c.dual_failure) << "\n";
    return s.str();
}

std::string matrix_json(const Mat& m) { return dump(mat_json(m)); }

std::string checks_json(const std::vector<CheckResult>& results) {
    json arr = json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        arr.push_back({{"key", r.key}, {"pass", r.pass}, {"residual", r.residual}, {"detail", r.detail}, {"internal", r.internal}});
    }
    return dump({{"pass", all}, {"checks", arr}});
}

std::string checks_text(const std::vector<CheckResult>& results) {
    std::ostringstream s;
    for (const auto& r : results) {
        s << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(38) << r.key << sci(r.residual);
        if (!r.detail.empty()) s << "  " << r.detail;
        s << "\n";
    }
    return s.str();
}

}  // namespace qglab

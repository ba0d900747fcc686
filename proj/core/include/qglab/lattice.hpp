#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qglab/group.hpp"
#include "qglab/idempotent.hpp"

namespace qglab {

// Known idempotent states of a recognized built-in: uniform measures on
// subgroups for C(G), subgroup indicators for C[G].
struct CatalogEntry {
    std::string name;
    Vec coeffs;
    std::vector<std::size_t> subgroup;
};

struct Catalog {
    std::string builtin;
    FiniteGroup group;
    bool function_algebra = true;
    std::vector<CatalogEntry> entries;
};

// Recognizes a built-in by its structure constants; kp8 has no catalog.
std::optional<Catalog> catalog_for(const QuantumGroup& g);

// Result of omega v mu. The zero variant is representable but never
// produced by a finite quantum group.
struct JoinResult {
    bool zero = false;
    std::optional<IdempotentState> state;
    int iterations = 0;
    bool cesaro = false;
    double path_agreement = 0.0;  // convolution powers vs alternating projections
    double eq_prod = 0.0;         // max ||(id (x) nu_n)(W) - (P_omega P_mu)^n|| at checked steps
    double intersection = 0.0;    // limit projection vs L2(N_omega cap N_mu)
    double dominance = 0.0;       // omega <= nu and mu <= nu
};

IdempotentState meet(const IdempotentState& a, const IdempotentState& b, double tol);
// Throws NoConvergence when neither the powers nor their running average settle.
JoinResult join(const IdempotentState& a, const IdempotentState& b, const Tolerances& tol);
// join(), requiring a state.
IdempotentState join_state(const IdempotentState& a, const IdempotentState& b, const Tolerances& tol);

enum class Strategy { Auto, Catalog, Search };
Strategy parse_strategy(const std::string& s);
std::string to_string(Strategy s);

struct Enumeration {
    std::vector<IdempotentState> states;
    Strategy strategy = Strategy::Auto;  // what actually ran
    int restarts = 0;
    int converged = 0;          // restarts reaching a group-like projection
    int found_by_search = 0;    // distinct states before closure
    int added_by_closure = 0;
    std::optional<std::size_t> catalog_size;
    std::size_t catalog_matched = 0;
};

inline constexpr std::uint64_t default_seed = 20240601;

// Catalog: the built-in list. Search: multi-start solves for the support
// projection, filtered, deduplicated, closed under meet and join.
// Auto uses the catalog when one exists.
Enumeration enumerate_idempotents(const QuantumGroupPtr& g, Strategy strategy, const Tolerances& tol,
                                  std::uint64_t seed = default_seed);

std::optional<std::size_t> find_state(const std::vector<IdempotentState>& states, const Functional& omega, double tol);

struct IdempotentLattice {
    std::vector<IdempotentState> states;
    std::vector<std::vector<bool>> order;  // order[i][j]: states[i] <= states[j]
    std::vector<std::vector<int>> meet_table;  // -1 when outside the set
    std::vector<std::vector<int>> join_table;
    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;  // covers i < j
};

IdempotentLattice build_lattice(std::vector<IdempotentState> states, const Tolerances& tol);

// Transitive reduction of a strict order.
std::vector<std::pair<std::size_t, std::size_t>> hasse_diagram(const std::vector<std::vector<bool>>& order);

struct CommutationReport {
    bool join_is_product = false;  // rho v mu = rho * mu
    bool sandwich = false;         // mu * rho * mu = rho * mu
    bool commute = false;          // mu * rho = rho * mu
    double join_residual = 0.0;
    double sandwich_residual = 0.0;
    double commute_residual = 0.0;
    bool value = false;
};
// Throws CriteriaDisagree when the three conditions split.
CommutationReport commutation_equivalences(const IdempotentState& rho, const IdempotentState& mu, const Tolerances& tol);

struct ModularReport {
    bool rho_below_omega = false;
    bool join_is_product = false;
    bool products_span = false;  // span N_omega N_mu is the coideal of omega ^ mu
    double join_residual = 0.0;
    double span_residual = 0.0;
    bool asserted = false;       // all hypotheses hold
    double sides = 0.0;          // || omega ^ (mu v rho) - (omega ^ mu) v rho ||
    bool holds(double tol) const { return !asserted || sides < tol; }
};
ModularReport modular_law_check(const IdempotentState& omega, const IdempotentState& mu, const IdempotentState& rho,
                                const Tolerances& tol);

}  // namespace qglab

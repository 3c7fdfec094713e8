#pragma once

#include "succmso/cnf.hpp"
#include "succmso/graph.hpp"
#include "succmso/mso.hpp"
#include "succmso/reduce.hpp"

#include <optional>
#include <string>
#include <vector>

namespace succmso {

/// Satisfying assignment (index v-1 holds variable v) or nullopt for Unsat.
using SatResult = std::optional<std::vector<bool>>;

inline constexpr std::size_t kEnumerationLimit = 20;

/// Enumerates assignments in increasing order for s <= 20 (the first model
/// found is returned), unit-propagating backtracking above. Every returned
/// assignment is checked against S.
SatResult sat_solve(const CnfInstance& s);

inline constexpr std::uint64_t kLayoutLimit = std::uint64_t{1} << 14;

/// Δ(2·S̄·3) built by placing each gadget copy at its offset in the layout
/// and merging the P1∩P2 block into one region after the last copy. Throws
/// TooLarge when N > kLayoutLimit and NotValidated for a raw quadruple.
Digraph delta_layout(const GadgetQuadruple& quad, const CnfInstance& s);

/// Bijection from the canonical labels of delta(quad.g, 2·S̄·3) to layout
/// labels, assembled from the gluing's per-factor maps.
std::vector<Vertex> canonical_to_layout(const GadgetQuadruple& quad, const CnfInstance& s);

struct InstanceRecord {
    std::string id;
    bool satisfiable = false;
    bool formula_holds = false;
    bool formula_ok = false;   ///< formula verdict matches the expected polarity
    bool layout_equal = false; ///< materialize(compile) == delta_layout
    bool succ_ref_equal = false;
    double micros = 0;
    std::string error; ///< nonempty when a guard fired
    bool pass() const noexcept { return error.empty() && formula_ok && layout_equal && succ_ref_equal; }
};

struct EndToEndReport {
    std::vector<InstanceRecord> records;
    bool pass() const;
    std::string to_text() const;
    std::string to_json() const;
};

struct NamedInstance {
    std::string id;
    CnfInstance cnf;
};

/// For every instance: (a) materialize(compile) equals delta_layout label for
/// label, (b) φ holds on it iff S is satisfiable (iff unsatisfiable when
/// `models_when_sat` is false), (c) succ_ref agrees on every label.
/// Records keep input order whatever the thread count.
EndToEndReport end_to_end(const GadgetQuadruple& quad, const mso::FormulaPtr& phi,
                          const std::vector<NamedInstance>& instances, bool models_when_sat = true,
                          std::size_t threads = 1);

inline constexpr std::uint64_t kDefaultBatterySeed = 20250607;

/// Every CNF over s in {1, 2} variables with at most two distinct clauses,
/// each clause a nonempty set of distinct literals (7 + 121 instances), then
/// ten pseudorandom s = 3 instances drawn from mt19937(seed).
std::vector<NamedInstance> builtin_battery(std::uint64_t seed = kDefaultBatterySeed);

/// The s = 3 part alone.
std::vector<NamedInstance> random_instances(std::uint64_t seed, std::size_t count, std::size_t vars);

} // namespace succmso

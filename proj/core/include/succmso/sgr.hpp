#pragma once

#include "succmso/bigint.hpp"
#include "succmso/circuit.hpp"
#include "succmso/graph.hpp"

#include <string>
#include <string_view>

namespace succmso {

/// Succinct graph representation ⟨N, C⟩: vertices 0..N-1, edge x→y iff C(x, y).
/// Circuit behaviour on labels >= N is unconstrained and never observed.
class Sgr {
  public:
    /// Throws BadParam unless 1 <= N <= 2^label_bits.
    Sgr(BigInt n_vertices, BoolCircuit circuit);

    const BigInt& n_vertices() const noexcept { return n_; }
    const BoolCircuit& circuit() const noexcept { return circuit_; }

  private:
    BigInt n_;
    BoolCircuit circuit_;
};

/// Throws LabelOutOfRange when x or y >= N.
bool edge_query(const Sgr& s, const BigInt& x, const BigInt& y);

/// Explicit graph from N^2 circuit evaluations, optionally split across
/// threads (rows are partitioned, merge order is fixed). Throws
/// TooLargeToMaterialize when N > limit.
Digraph materialize(const Sgr& s, std::uint64_t limit, std::size_t threads = 1);

/// Size convention: gate_count <= 64 * (N^2 + 64). Advisory only.
bool check_size_convention(const Sgr& s);
BigInt size_convention_bound(const BigInt& n_vertices);

/// SGR bundle: {"N":"<decimal>","circuit":{...}}.
std::string serialize(const Sgr& s);
Sgr parse_sgr(std::string_view text);

} // namespace succmso

#pragma once

#include "succmso/bigint.hpp"
#include "succmso/synth.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace succmso {

/// SAT instance over variables 1..vars. Each clause is a nonempty list of
/// nonzero literals with |literal| <= vars; an empty clause list is true.
struct CnfInstance {
    std::size_t vars = 1;
    std::vector<synth::Clause> clauses;

    /// Throws BadParam for vars == 0, BadLiteral for zero or out-of-range
    /// literals and for empty clauses.
    void validate() const;

    /// Total number of literal occurrences.
    std::size_t literal_count() const;

    friend bool operator==(const CnfInstance&, const CnfInstance&) = default;
};

/// Reads `p cnf V C` followed by zero-terminated clauses; `c` lines are
/// comments and a `%` line ends the input. Throws ParseError on malformed
/// input and BadLiteral on literals beyond V.
CnfInstance parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfInstance& s);

/// S under the assignment in which variable j+1 takes bit j of `assignment`.
bool evaluate(const CnfInstance& s, const BigInt& assignment);
bool evaluate(const CnfInstance& s, std::uint64_t assignment);

/// Bit q of the word S̄: 1 iff assignment q falsifies S. Throws
/// IndexOutOfRange unless 0 <= q < 2^vars.
bool sbar_at(const CnfInstance& s, const BigInt& q);

} // namespace succmso

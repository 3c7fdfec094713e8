#pragma once

#include "succmso/bigint.hpp"
#include "succmso/graph.hpp"
#include "succmso/mso.hpp"

#include <optional>
#include <span>

namespace succmso {

inline constexpr std::size_t kEfVertexLimit = 5;
inline constexpr std::size_t kEfRoundLimit = 3;

/// Decides g ≡_m h by searching the m-round MSO game in which Spoiler picks,
/// each round, a side and either a vertex or a vertex set. Duplicator must keep
/// equality, edges in both directions and membership in the chosen sets.
/// Throws TooLarge beyond kEfVertexLimit vertices or kEfRoundLimit rounds.
bool ef_equiv(const Digraph& g, const Digraph& h, std::size_t m);

/// Least q in [1, q_max] with q copies of g ≡_m q+1 copies, or nullopt.
/// Throws EmptyGraph for an empty g; the game guards apply to the unions.
std::optional<std::size_t> q_search(const Digraph& g, std::size_t m, std::size_t q_max);

/// Refusal threshold for the exponent in q_bound.
inline constexpr std::uint64_t kQBoundExponentLimit = 1'000'000;

/// q(m1, 0) = m1 and log2 q(m1, m2) = size_g * (q(m1, m2-1) + m1 + m2).
/// Throws BoundTooLarge when an exponent exceeds kQBoundExponentLimit.
BigInt q_bound(std::uint64_t size_g, std::uint64_t m1, std::uint64_t m2);

/// max over m1 + m2 = m of q_bound(size_g, m1, m2).
BigInt q_bound_total(std::uint64_t size_g, std::uint64_t m);

enum class ScanVerdict { kSufficient, kForbidden, kMixed };
std::string_view name(ScanVerdict v);

/// Evaluates phi on omega ⊔ G for every G in the battery. An empty battery
/// counts as Sufficient.
ScanVerdict saturating_scan(const Digraph& omega, const mso::FormulaPtr& phi, std::span<const Digraph> battery);

} // namespace succmso

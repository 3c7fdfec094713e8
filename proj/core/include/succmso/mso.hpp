#pragma once

#include "succmso/graph.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace succmso::mso {

enum class Op {
    kEdge,       ///< E(x, y)
    kEq,         ///< x = y
    kMember,     ///< x in X
    kNot,
    kAnd,
    kOr,
    kImplies,
    kExistsPoint,
    kForallPoint,
    kExistsSet,
    kForallSet,
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable MSO formula node. Atoms use `first`/`second` for their
/// variables; quantifiers bind `first` over `left`; connectives use
/// `left` and, for binary ones, `right`.
class Formula {
  public:
    Op op;
    std::string first;
    std::string second;
    FormulaPtr left;
    FormulaPtr right;

    friend bool operator==(const Formula& a, const Formula& b);
};

bool is_point_name(std::string_view name);
bool is_set_name(std::string_view name);

FormulaPtr edge(std::string x, std::string y);
FormulaPtr equals(std::string x, std::string y);
FormulaPtr member(std::string x, std::string set);
FormulaPtr negate(FormulaPtr f);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr exists(std::string var, FormulaPtr body);
FormulaPtr forall(std::string var, FormulaPtr body);

/// Structural equality of two trees.
bool same(const FormulaPtr& a, const FormulaPtr& b);

/// Concrete syntax:
///   φ ::= E(v,v) | v=v | v in V | ~φ | (φ & φ) | (φ | φ) | (φ -> φ)
///       | ex ident. φ | all ident. φ
/// Lowercase identifiers are point variables, capitalised ones set variables.
/// Redundant parentheses around a single formula are accepted.
///
/// Throws ParseError on bad syntax (a set name where a point is expected
/// counts as syntax) and ScopeError on a free variable or a rebinding of a
/// name that is already in scope.
FormulaPtr parse(std::string_view text);

/// Same, but the listed variables may occur free.
FormulaPtr parse_open(std::string_view text, const std::set<std::string>& free_vars);

std::string print(const FormulaPtr& f);

/// Number of quantifier nodes.
std::size_t rank(const FormulaPtr& f);

bool has_set_quantifier(const FormulaPtr& f);

/// Free variables, sorted.
std::set<std::string> free_variables(const FormulaPtr& f);

struct Valuation {
    std::map<std::string, Vertex> points;
    std::map<std::string, std::set<Vertex>> sets;
};

/// Largest graph on which formulas with set quantifiers are evaluated.
inline constexpr std::size_t kSetQuantifierLimit = 24;

/// Brute-force satisfaction. Set quantifiers range over all 2^|g| subsets in
/// increasing binary order. Throws ScopeError if φ has free variables not
/// covered by `valuation`, BadVertex for out-of-range valuation entries, and
/// TooLargeForBruteForce when φ quantifies over sets and |g| exceeds the limit.
bool eval(const Digraph& g, const FormulaPtr& f);
bool eval(const Digraph& g, const FormulaPtr& f, const Valuation& valuation);

/// E*(x, y): every set containing x and closed under E contains y.
/// `set_var`, `u` and `v` must not clash with names in scope at the use site.
FormulaPtr reach(const std::string& x, const std::string& y, const std::string& set_var = "R",
                 const std::string& u = "u", const std::string& v = "v");

/// Named sentences used throughout the tests and the CLI.
namespace sentences {
FormulaPtr loop();
FormulaPtr loop_unique();
FormulaPtr determinism();
FormulaPtr nontrivial_cycle();
FormulaPtr clique();
FormulaPtr clique_irreflexive();

struct Named {
    std::string name;
    FormulaPtr formula;
};

/// Twenty sentences of rank at most 3 (point and set quantifiers) used to
/// cross-check game equivalence against evaluation.
const std::vector<Named>& battery();
} // namespace sentences

} // namespace succmso::mso

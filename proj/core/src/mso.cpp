#include "succmso/mso.hpp"

#include "succmso/error.hpp"

#include <functional>
#include <optional>

namespace succmso::mso {

namespace {

FormulaPtr make(Op op, std::string first, std::string second, FormulaPtr left, FormulaPtr right) {
    auto f = std::make_shared<Formula>();
    f->op = op;
    f->first = std::move(first);
    f->second = std::move(second);
    f->left = std::move(left);
    f->right = std::move(right);
    return f;
}

bool is_quantifier(Op op) {
    return op == Op::kExistsPoint || op == Op::kForallPoint || op == Op::kExistsSet || op == Op::kForallSet;
}

bool is_set_quantifier(Op op) { return op == Op::kExistsSet || op == Op::kForallSet; }

} // namespace

bool operator==(const Formula& a, const Formula& b) {
    return a.op == b.op && a.first == b.first && a.second == b.second && same(a.left, b.left) &&
           same(a.right, b.right);
}

bool same(const FormulaPtr& a, const FormulaPtr& b) {
    if (!a || !b) return !a && !b;
    return a == b || *a == *b;
}

bool is_point_name(std::string_view name) {
    if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
    for (char c : name.substr(1))
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))) return false;
    return true;
}

bool is_set_name(std::string_view name) {
    if (name.empty() || name[0] < 'A' || name[0] > 'Z') return false;
    for (char c : name.substr(1))
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))) return false;
    return true;
}

FormulaPtr edge(std::string x, std::string y) { return make(Op::kEdge, std::move(x), std::move(y), nullptr, nullptr); }
FormulaPtr equals(std::string x, std::string y) { return make(Op::kEq, std::move(x), std::move(y), nullptr, nullptr); }
FormulaPtr member(std::string x, std::string set) {
    return make(Op::kMember, std::move(x), std::move(set), nullptr, nullptr);
}
FormulaPtr negate(FormulaPtr f) { return make(Op::kNot, {}, {}, std::move(f), nullptr); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) { return make(Op::kAnd, {}, {}, std::move(a), std::move(b)); }
FormulaPtr disj(FormulaPtr a, FormulaPtr b) { return make(Op::kOr, {}, {}, std::move(a), std::move(b)); }
FormulaPtr implies(FormulaPtr a, FormulaPtr b) { return make(Op::kImplies, {}, {}, std::move(a), std::move(b)); }

FormulaPtr exists(std::string var, FormulaPtr body) {
    const Op op = is_set_name(var) ? Op::kExistsSet : Op::kExistsPoint;
    return make(op, std::move(var), {}, std::move(body), nullptr);
}

FormulaPtr forall(std::string var, FormulaPtr body) {
    const Op op = is_set_name(var) ? Op::kForallSet : Op::kForallPoint;
    return make(op, std::move(var), {}, std::move(body), nullptr);
}

std::string print(const FormulaPtr& f) {
    switch (f->op) {
    case Op::kEdge: return "E(" + f->first + "," + f->second + ")";
    case Op::kEq: return f->first + "=" + f->second;
    case Op::kMember: return f->first + " in " + f->second;
    case Op::kNot: return "~" + print(f->left);
    case Op::kAnd: return "(" + print(f->left) + " & " + print(f->right) + ")";
    case Op::kOr: return "(" + print(f->left) + " | " + print(f->right) + ")";
    case Op::kImplies: return "(" + print(f->left) + " -> " + print(f->right) + ")";
    case Op::kExistsPoint:
    case Op::kExistsSet: return "ex " + f->first + ". " + print(f->left);
    case Op::kForallPoint:
    case Op::kForallSet: return "all " + f->first + ". " + print(f->left);
    }
    return {};
}

std::size_t rank(const FormulaPtr& f) {
    if (!f) return 0;
    return (is_quantifier(f->op) ? 1 : 0) + rank(f->left) + rank(f->right);
}

bool has_set_quantifier(const FormulaPtr& f) {
    if (!f) return false;
    return is_set_quantifier(f->op) || has_set_quantifier(f->left) || has_set_quantifier(f->right);
}

std::set<std::string> free_variables(const FormulaPtr& f) {
    std::set<std::string> out;
    std::function<void(const FormulaPtr&, std::multiset<std::string>&)> walk =
        [&](const FormulaPtr& node, std::multiset<std::string>& bound) {
            if (!node) return;
            switch (node->op) {
            case Op::kEdge:
            case Op::kEq:
            case Op::kMember:
                if (!bound.contains(node->first)) out.insert(node->first);
                if (!bound.contains(node->second)) out.insert(node->second);
                return;
            default: break;
            }
            if (is_quantifier(node->op)) {
                auto it = bound.insert(node->first);
                walk(node->left, bound);
                bound.erase(it);
                return;
            }
            walk(node->left, bound);
            walk(node->right, bound);
        };
    std::multiset<std::string> bound;
    walk(f, bound);
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation: the tree is compiled once into slot-addressed nodes so the
// inner loops never touch strings.

namespace {

struct Node {
    Op op;
    int a = 0;
    int b = 0;
    int left = -1;
    int right = -1;
};

class Evaluator {
  public:
    Evaluator(const Digraph& g, const FormulaPtr& f, const Valuation& valuation) : n_(g.size()) {
        words_ = (n_ + 63) / 64;
        adj_.assign(n_ * words_, 0);
        for (const auto& [u, v] : g.edges()) adj_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);

        std::map<std::string, int> point_scope;
        std::map<std::string, int> set_scope;
        for (const auto& [name, vertex] : valuation.points) {
            if (vertex >= n_) fail(ErrorCode::kBadVertex, "valuation of " + name + " out of range");
            point_scope[name] = static_cast<int>(points_.size());
            points_.push_back(vertex);
        }
        const bool needs_sets = !valuation.sets.empty() || has_set_quantifier(f);
        if (has_set_quantifier(f) && n_ > kSetQuantifierLimit)
            fail(ErrorCode::kTooLargeForBruteForce, "set quantification over " + std::to_string(n_) +
                                                        " vertices (limit " + std::to_string(kSetQuantifierLimit) +
                                                        ")");
        if (needs_sets && n_ > 64) fail(ErrorCode::kTooLargeForBruteForce, "set variables on more than 64 vertices");
        for (const auto& [name, members] : valuation.sets) {
            std::uint64_t mask = 0;
            for (Vertex v : members) {
                if (v >= n_) fail(ErrorCode::kBadVertex, "valuation of " + name + " out of range");
                mask |= std::uint64_t{1} << v;
            }
            set_scope[name] = static_cast<int>(sets_.size());
            sets_.push_back(mask);
        }
        root_ = compile(f, point_scope, set_scope);
    }

    bool run() { return eval(root_); }

  private:
    int compile(const FormulaPtr& f, std::map<std::string, int>& point_scope, std::map<std::string, int>& set_scope) {
        auto lookup = [](const std::map<std::string, int>& scope, const std::string& name) {
            auto it = scope.find(name);
            if (it == scope.end()) fail(ErrorCode::kScopeError, "variable '" + name + "' is free");
            return it->second;
        };
        Node node{f->op};
        switch (f->op) {
        case Op::kEdge:
        case Op::kEq:
            node.a = lookup(point_scope, f->first);
            node.b = lookup(point_scope, f->second);
            break;
        case Op::kMember:
            node.a = lookup(point_scope, f->first);
            node.b = lookup(set_scope, f->second);
            break;
        case Op::kNot: node.left = compile(f->left, point_scope, set_scope); break;
        case Op::kAnd:
        case Op::kOr:
        case Op::kImplies:
            node.left = compile(f->left, point_scope, set_scope);
            node.right = compile(f->right, point_scope, set_scope);
            break;
        case Op::kExistsPoint:
        case Op::kForallPoint:
        case Op::kExistsSet:
        case Op::kForallSet: {
            const bool is_set = is_set_quantifier(f->op);
            auto& scope = is_set ? set_scope : point_scope;
            auto& slots = is_set ? set_slots_ : point_slots_;
            const int slot = (is_set ? static_cast<int>(sets_.size()) : static_cast<int>(points_.size())) + slots++;
            auto previous = scope.find(f->first);
            std::optional<int> saved;
            if (previous != scope.end()) saved = previous->second;
            scope[f->first] = slot;
            node.a = slot;
            node.left = compile(f->left, point_scope, set_scope);
            if (saved)
                scope[f->first] = *saved;
            else
                scope.erase(f->first);
            break;
        }
        }
        nodes_.push_back(node);
        return static_cast<int>(nodes_.size() - 1);
    }

    bool eval(int id) {
        if (point_values_.empty()) {
            point_values_ = points_;
            point_values_.resize(points_.size() + static_cast<std::size_t>(point_slots_));
            set_values_ = sets_;
            set_values_.resize(sets_.size() + static_cast<std::size_t>(set_slots_));
        }
        return step(id);
    }

    bool step(int id) {
        const Node& node = nodes_[static_cast<std::size_t>(id)];
        switch (node.op) {
        case Op::kEdge: {
            const Vertex u = point_values_[node.a];
            const Vertex v = point_values_[node.b];
            return (adj_[u * words_ + v / 64] >> (v % 64)) & 1U;
        }
        case Op::kEq: return point_values_[node.a] == point_values_[node.b];
        case Op::kMember: return (set_values_[node.b] >> point_values_[node.a]) & 1U;
        case Op::kNot: return !step(node.left);
        case Op::kAnd: return step(node.left) && step(node.right);
        case Op::kOr: return step(node.left) || step(node.right);
        case Op::kImplies: return !step(node.left) || step(node.right);
        case Op::kExistsPoint:
        case Op::kForallPoint: {
            const bool want = node.op == Op::kExistsPoint;
            for (Vertex v = 0; v < n_; ++v) {
                point_values_[node.a] = v;
                if (step(node.left) == want) return want;
            }
            return !want;
        }
        case Op::kExistsSet:
        case Op::kForallSet: {
            const bool want = node.op == Op::kExistsSet;
            const std::uint64_t count = std::uint64_t{1} << n_;
            for (std::uint64_t mask = 0; mask < count; ++mask) {
                set_values_[node.a] = mask;
                if (step(node.left) == want) return want;
            }
            return !want;
        }
        }
        return false;
    }

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> adj_;
    std::vector<Vertex> points_;
    std::vector<std::uint64_t> sets_;
    int point_slots_ = 0;
    int set_slots_ = 0;
    std::vector<Node> nodes_;
    int root_ = -1;
    std::vector<Vertex> point_values_;
    std::vector<std::uint64_t> set_values_;
};

} // namespace

bool eval(const Digraph& g, const FormulaPtr& f) { return eval(g, f, Valuation{}); }

bool eval(const Digraph& g, const FormulaPtr& f, const Valuation& valuation) {
    Evaluator ev(g, f, valuation);
    return ev.run();
}

FormulaPtr reach(const std::string& x, const std::string& y, const std::string& set_var, const std::string& u,
                 const std::string& v) {
    // all R. ((x in R & all u. all v. ((u in R & E(u,v)) -> v in R)) -> y in R)
    auto closed = forall(u, forall(v, implies(conj(member(u, set_var), edge(u, v)), member(v, set_var))));
    return forall(set_var, implies(conj(member(x, set_var), closed), member(y, set_var)));
}

namespace sentences {

FormulaPtr loop() { return exists("x", edge("x", "x")); }

FormulaPtr loop_unique() {
    return forall("x", forall("z", implies(conj(edge("x", "x"), edge("z", "z")), equals("x", "z"))));
}

FormulaPtr determinism() {
    return forall("x", forall("y", forall("z", implies(conj(edge("x", "y"), edge("x", "z")), equals("y", "z")))));
}

FormulaPtr nontrivial_cycle() {
    // ex X. ((ex x. x in X) & all x. (x in X -> ex y. (y in X & (~x=y & E(x,y)))))
    auto nonempty = exists("x", member("x", "X"));
    auto successor = exists("y", conj(member("y", "X"), conj(negate(equals("x", "y")), edge("x", "y"))));
    return exists("X", conj(nonempty, forall("x", implies(member("x", "X"), successor))));
}

FormulaPtr clique() { return forall("x", forall("y", edge("x", "y"))); }

FormulaPtr clique_irreflexive() { return forall("x", forall("y", implies(negate(equals("x", "y")), edge("x", "y")))); }

const std::vector<Named>& battery() {
    static const std::vector<Named> list = [] {
        const std::pair<const char*, const char*> texts[] = {
            {"reflexive-eq", "all x. x=x"},
            {"some-loop", "ex x. E(x,x)"},
            {"all-loops", "all x. E(x,x)"},
            {"some-edge", "ex x. ex y. E(x,y)"},
            {"two-vertices", "ex x. ex y. ~x=y"},
            {"at-most-one", "all x. all y. x=y"},
            {"complete", "all x. all y. E(x,y)"},
            {"symmetric", "all x. all y. (E(x,y) -> E(y,x))"},
            {"dominating", "ex x. all y. E(x,y)"},
            {"source", "ex x. all y. ~E(y,x)"},
            {"no-sink", "all x. ex y. E(x,y)"},
            {"isolated", "ex x. all y. (~E(x,y) & ~E(y,x))"},
            {"two-cycle", "ex x. ex y. (E(x,y) & E(y,x))"},
            {"deterministic", "all x. all y. all z. ((E(x,y) & E(x,z)) -> y=z)"},
            {"two-path", "ex x. ex y. ex z. (E(x,y) & E(y,z))"},
            {"three-vertices", "ex x. ex y. ex z. ((~x=y & ~y=z) & ~x=z)"},
            {"full-set", "ex X. all x. x in X"},
            {"transitive", "all x. all y. all z. ((E(x,y) & E(y,z)) -> E(x,z))"},
            {"looped-set", "ex X. ((ex x. x in X) & all y. (y in X -> E(y,y)))"},
            {"two-colourable", "ex X. all x. all y. (E(x,y) -> ((x in X -> ~y in X) & (~x in X -> y in X)))"},
        };
        std::vector<Named> out;
        for (const auto& [name, text] : texts) out.push_back({name, parse(text)});
        return out;
    }();
    return list;
}

} // namespace sentences

} // namespace succmso::mso

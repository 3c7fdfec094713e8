#pragma once

#include "succmso/circuit.hpp"
#include "succmso/error.hpp"
#include "succmso/graph.hpp"

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testing {

#ifdef SUCCMSO_TEST_DATA
inline std::string read_data(const std::string& name) {
    std::ifstream in(std::string(SUCCMSO_TEST_DATA) + "/" + name);
    if (!in) throw std::runtime_error("missing test data " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
#endif

// Evaluates every gate directly from the records, without BoolCircuit::eval.
inline std::vector<bool> simulate(const succmso::BoolCircuit& c, std::uint64_t x, std::uint64_t y) {
    using succmso::GateKind;
    const std::size_t n = c.label_bits();
    std::vector<bool> v;
    v.reserve(c.gates().size());
    for (const auto& g : c.gates()) {
        switch (g.kind) {
        case GateKind::kInput: v.push_back(g.a < n ? (x >> g.a) & 1 : (y >> (g.a - n)) & 1); break;
        case GateKind::kConst: v.push_back(g.a != 0); break;
        case GateKind::kNot: v.push_back(!v[g.a]); break;
        case GateKind::kAnd: v.push_back(v[g.a] && v[g.b]); break;
        case GateKind::kOr: v.push_back(v[g.a] || v[g.b]); break;
        }
    }
    return v;
}

inline std::uint64_t read_bundle(const std::vector<bool>& values, const succmso::WireBundle& w) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < w.width(); ++i)
        if (values[w[i]]) out |= std::uint64_t{1} << i;
    return out;
}

inline succmso::Digraph random_digraph(std::mt19937& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    succmso::Digraph g(n);
    for (succmso::Vertex u = 0; u < n; ++u)
        for (succmso::Vertex v = 0; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline succmso::Digraph path(std::size_t n) {
    succmso::Digraph g(n);
    for (succmso::Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline succmso::Digraph cycle(std::size_t n) {
    succmso::Digraph g = path(n);
    if (n > 0) g.add_edge(static_cast<succmso::Vertex>(n - 1), 0);
    return g;
}

} // namespace testing

#define CHECK_CODE(expr, expected)                                                                                     \
    do {                                                                                                               \
        bool thrown_ = false;                                                                                          \
        try {                                                                                                          \
            (void)(expr);                                                                                              \
        } catch (const succmso::Error& e_) {                                                                           \
            thrown_ = true;                                                                                            \
            CHECK_MESSAGE(e_.code() == (expected), "got " << succmso::name(e_.code()) << ": " << std::string(e_.what()));          \
        }                                                                                                              \
        CHECK_MESSAGE(thrown_, "no exception from " #expr);                                                            \
    } while (false)

#include "succmso/cnf.hpp"

#include "succmso/error.hpp"

#include <cstdlib>
#include <sstream>

namespace succmso {

void CnfInstance::validate() const {
    if (vars == 0) fail(ErrorCode::kBadParam, "a CNF instance needs at least one variable");
    for (std::size_t c = 0; c < clauses.size(); ++c) {
        if (clauses[c].empty()) fail(ErrorCode::kBadLiteral, "clause " + std::to_string(c + 1) + " is empty");
        for (int lit : clauses[c])
            if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > vars)
                fail(ErrorCode::kBadLiteral, "literal " + std::to_string(lit) + " outside 1.." + std::to_string(vars));
    }
}

std::size_t CnfInstance::literal_count() const {
    std::size_t total = 0;
    for (const auto& c : clauses) total += c.size();
    return total;
}

CnfInstance parse_dimacs(std::string_view text) {
    CnfInstance out;
    bool header = false;
    std::size_t declared = 0;
    synth::Clause current;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        std::istringstream in(line);
        std::string first;
        if (!(in >> first) || first == "c" || first[0] == 'c') continue;
        if (first == "%") break;
        if (first == "p") {
            std::string fmt;
            long v = -1;
            long c = -1;
            if (header) throw ParseError("duplicate header", line_no, 1);
            if (!(in >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0)
                throw ParseError("expected 'p cnf <vars> <clauses>'", line_no, 1);
            if (v == 0) throw ParseError("instance needs at least one variable", line_no, 1);
            std::string extra;
            if (in >> extra) throw ParseError("trailing token '" + extra + "' in header", line_no, 1);
            out.vars = static_cast<std::size_t>(v);
            declared = static_cast<std::size_t>(c);
            header = true;
            continue;
        }
        if (!header) throw ParseError("clause before 'p cnf' header", line_no, 1);
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            char* stop = nullptr;
            const long lit = std::strtol(tok.c_str(), &stop, 10);
            if (*stop != '\0') throw ParseError("bad literal '" + tok + "'", line_no, 1);
            if (lit == 0) {
                if (current.empty()) throw ParseError("empty clause", line_no, 1);
                out.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (static_cast<std::size_t>(std::labs(lit)) > out.vars)
                fail(ErrorCode::kBadLiteral, "literal " + tok + " on line " + std::to_string(line_no) +
                                                 " exceeds " + std::to_string(out.vars) + " variables");
            current.push_back(static_cast<int>(lit));
        }
    }
    if (!header) throw ParseError("missing 'p cnf' header", line_no, 1);
    if (!current.empty()) throw ParseError("last clause is not terminated by 0", line_no, 1);
    if (out.clauses.size() != declared)
        throw ParseError("header declares " + std::to_string(declared) + " clauses, found " +
                             std::to_string(out.clauses.size()),
                         line_no, 1);
    return out;
}

std::string to_dimacs(const CnfInstance& s) {
    std::ostringstream out;
    out << "p cnf " << s.vars << ' ' << s.clauses.size() << '\n';
    for (const auto& c : s.clauses) {
        for (int lit : c) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

bool evaluate(const CnfInstance& s, const BigInt& assignment) {
    for (const auto& clause : s.clauses) {
        bool sat = false;
        for (int lit : clause) {
            const bool value = boost::multiprecision::bit_test(assignment, static_cast<unsigned>(std::abs(lit) - 1));
            if (value == (lit > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

bool evaluate(const CnfInstance& s, std::uint64_t assignment) {
    for (const auto& clause : s.clauses) {
        bool sat = false;
        for (int lit : clause) {
            const unsigned bit = static_cast<unsigned>(std::abs(lit) - 1);
            const bool value = bit < 64 && ((assignment >> bit) & 1U);
            if (value == (lit > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

bool sbar_at(const CnfInstance& s, const BigInt& q) {
    if (q < 0 || q >= pow2(s.vars))
        fail(ErrorCode::kIndexOutOfRange, "S̄ index " + to_decimal(q) + " outside [0, 2^" + std::to_string(s.vars) + ")");
    return !evaluate(s, q);
}

} // namespace succmso

#include "succmso/error.hpp"
#include "succmso/mso.hpp"

#include <vector>

namespace succmso::mso {

namespace {

enum class Tok { kIdent, kLParen, kRParen, kComma, kDot, kEq, kNot, kAnd, kOr, kArrow, kEnd };

struct Token {
    Tok kind;
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        const std::size_t col = i + 1;
        auto single = [&](Tok kind) {
            out.push_back({kind, std::string(1, c), col});
            ++i;
        };
        switch (c) {
        case '(': single(Tok::kLParen); continue;
        case ')': single(Tok::kRParen); continue;
        case ',': single(Tok::kComma); continue;
        case '.': single(Tok::kDot); continue;
        case '=': single(Tok::kEq); continue;
        case '~': single(Tok::kNot); continue;
        case '&': single(Tok::kAnd); continue;
        case '|': single(Tok::kOr); continue;
        case '-':
            if (i + 1 < src.size() && src[i + 1] == '>') {
                out.push_back({Tok::kArrow, "->", col});
                i += 2;
                continue;
            }
            throw ParseError("expected '->'", 1, col);
        default: break;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
            std::size_t j = i + 1;
            while (j < src.size() && ((src[j] >= 'a' && src[j] <= 'z') || (src[j] >= '0' && src[j] <= '9'))) ++j;
            out.push_back({Tok::kIdent, std::string(src.substr(i, j - i)), col});
            i = j;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", 1, col);
    }
    out.push_back({Tok::kEnd, "", src.size() + 1});
    return out;
}

bool is_keyword(const std::string& s) { return s == "ex" || s == "all" || s == "in" || s == "E"; }

class Parser {
  public:
    Parser(std::string_view src, const std::set<std::string>& free_vars) : toks_(tokenize(src)) {
        for (const auto& v : free_vars) {
            if (!is_point_name(v) && !is_set_name(v)) fail(ErrorCode::kBadParam, "bad free variable name '" + v + "'");
            bound_.push_back(v);
        }
    }

    FormulaPtr parse_all() {
        FormulaPtr f = formula();
        if (peek().kind != Tok::kEnd) throw error("trailing input");
        return f;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }

    ParseError error(const std::string& what) const {
        const Token& t = peek();
        return ParseError(what + (t.kind == Tok::kEnd ? " at end of input" : " near '" + t.text + "'"), 1, t.column);
    }

    const Token& expect(Tok kind, const char* what) {
        if (peek().kind != kind) throw error(std::string("expected ") + what);
        return take();
    }

    bool in_scope(const std::string& name) const {
        for (const auto& b : bound_)
            if (b == name) return true;
        return false;
    }

    std::string point_use() {
        const Token& t = expect(Tok::kIdent, "a point variable");
        if (is_keyword(t.text) || !is_point_name(t.text))
            throw ParseError("'" + t.text + "' is not a point variable", 1, t.column);
        if (!in_scope(t.text)) throw Error(ErrorCode::kScopeError, "variable '" + t.text + "' is free");
        return t.text;
    }

    std::string set_use() {
        const Token& t = expect(Tok::kIdent, "a set variable");
        if (is_keyword(t.text) || !is_set_name(t.text))
            throw ParseError("'" + t.text + "' is not a set variable", 1, t.column);
        if (!in_scope(t.text)) throw Error(ErrorCode::kScopeError, "variable '" + t.text + "' is free");
        return t.text;
    }

    FormulaPtr formula() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::kNot:
            take();
            return negate(formula());
        case Tok::kLParen: {
            take();
            FormulaPtr lhs = formula();
            const Tok op = peek().kind;
            if (op == Tok::kRParen) {
                take();
                return lhs;
            }
            if (op != Tok::kAnd && op != Tok::kOr && op != Tok::kArrow) throw error("expected '&', '|', '->' or ')'");
            take();
            FormulaPtr rhs = formula();
            expect(Tok::kRParen, "')'");
            if (op == Tok::kAnd) return conj(std::move(lhs), std::move(rhs));
            if (op == Tok::kOr) return disj(std::move(lhs), std::move(rhs));
            return implies(std::move(lhs), std::move(rhs));
        }
        case Tok::kIdent: break;
        default: throw error("expected a formula");
        }

        if (t.text == "ex" || t.text == "all") {
            const bool existential = t.text == "ex";
            take();
            const Token& var = expect(Tok::kIdent, "a variable to bind");
            if (is_keyword(var.text) || (!is_point_name(var.text) && !is_set_name(var.text)))
                throw ParseError("'" + var.text + "' cannot be bound", 1, var.column);
            if (in_scope(var.text))
                throw Error(ErrorCode::kScopeError, "'" + var.text + "' is already bound (shadowing is not allowed)");
            expect(Tok::kDot, "'.'");
            bound_.push_back(var.text);
            FormulaPtr body = formula();
            bound_.pop_back();
            return existential ? exists(var.text, std::move(body)) : forall(var.text, std::move(body));
        }
        if (t.text == "E" && toks_[pos_ + 1].kind == Tok::kLParen) {
            take();
            take();
            std::string x = point_use();
            expect(Tok::kComma, "','");
            std::string y = point_use();
            expect(Tok::kRParen, "')'");
            return edge(std::move(x), std::move(y));
        }
        std::string x = point_use();
        if (peek().kind == Tok::kEq) {
            take();
            return equals(std::move(x), point_use());
        }
        if (peek().kind == Tok::kIdent && peek().text == "in") {
            take();
            return member(std::move(x), set_use());
        }
        throw error("expected '=' or 'in'");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<std::string> bound_;
};

} // namespace

FormulaPtr parse(std::string_view text) { return Parser(text, {}).parse_all(); }

FormulaPtr parse_open(std::string_view text, const std::set<std::string>& free_vars) {
    return Parser(text, free_vars).parse_all();
}

} // namespace succmso::mso

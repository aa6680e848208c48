#include "twocat/elevator.hpp"

#include <cctype>
#include <vector>

namespace twocat {

namespace {

struct Token {
    enum class Kind { Ident, KwV, KwId, Dot, LParen, RParen, End };
    Kind kind;
    std::string text;
    size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_cont(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (c == '.') { out.push_back({Token::Kind::Dot, ".", i++}); continue; }
        if (c == '(') { out.push_back({Token::Kind::LParen, "(", i++}); continue; }
        if (c == ')') { out.push_back({Token::Kind::RParen, ")", i++}); continue; }
        if (ident_start(c)) {
            size_t j = i + 1;
            while (j < s.size() && ident_cont(s[j])) ++j;
            std::string word = s.substr(i, j - i);
            Token::Kind k = word == "v"    ? Token::Kind::KwV
                            : word == "id" ? Token::Kind::KwId
                                           : Token::Kind::Ident;
            out.push_back({k, word, i});
            i = j;
            continue;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Token::Kind::End, "", s.size()});
    return out;
}

struct Parser {
    const std::vector<Token>& toks;
    size_t at = 0;

    const Token& peek() const { return toks[at]; }
    Token take() { return toks[at++]; }

    std::unique_ptr<ElevatorExpr> expr() {
        auto node = term();
        while (peek().kind == Token::Kind::KwV) {
            take();
            auto rhs = term();
            auto v = std::make_unique<ElevatorExpr>();
            v->kind = ElevatorExpr::Kind::Vertical;
            v->begin = node->begin;
            v->end = rhs->end;
            v->first = std::move(node);  // top
            v->second = std::move(rhs);  // bottom
            node = std::move(v);
        }
        return node;
    }

    std::unique_ptr<ElevatorExpr> term() {
        auto node = factor();
        while (peek().kind == Token::Kind::Dot) {
            take();
            auto rhs = factor();
            auto h = std::make_unique<ElevatorExpr>();
            h->kind = ElevatorExpr::Kind::Horizontal;
            h->begin = node->begin;
            h->end = rhs->end;
            h->first = std::move(node);  // outer (left)
            h->second = std::move(rhs);  // inner (right)
            node = std::move(h);
        }
        return node;
    }

    std::unique_ptr<ElevatorExpr> factor() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Ident) {
            Token tok = take();
            auto a = std::make_unique<ElevatorExpr>();
            a->kind = ElevatorExpr::Kind::Atom;
            a->name = tok.text;
            a->begin = tok.pos;
            a->end = tok.pos + tok.text.size();
            return a;
        }
        if (t.kind == Token::Kind::KwId) {
            Token kw = take();
            if (peek().kind != Token::Kind::LParen)
                throw SyntaxError("expected '(' after id", peek().pos);
            take();
            if (peek().kind != Token::Kind::Ident)
                throw SyntaxError("expected a 1-cell name inside id(...)",
                                  peek().pos);
            Token name = take();
            if (peek().kind != Token::Kind::RParen)
                throw SyntaxError("expected ')' after id(" + name.text,
                                  peek().pos);
            Token close = take();
            auto a = std::make_unique<ElevatorExpr>();
            a->kind = ElevatorExpr::Kind::Identity;
            a->name = name.text;
            a->begin = kw.pos;
            a->end = close.pos + 1;
            return a;
        }
        if (t.kind == Token::Kind::LParen) {
            take();
            auto node = expr();
            if (peek().kind != Token::Kind::RParen)
                throw SyntaxError("expected ')'", peek().pos);
            Token close = take();
            node->begin = t.pos;
            node->end = close.pos + 1;
            return node;
        }
        if (t.kind == Token::Kind::KwV)
            throw SyntaxError("'v' is reserved and cannot start a factor", t.pos);
        throw SyntaxError("expected a cell name, id(...), or '('", t.pos);
    }
};

int eval_node(const TwoCat& c, const ElevatorExpr& node,
              const std::string& source) {
    switch (node.kind) {
    case ElevatorExpr::Kind::Atom: {
        int a = c.two_index(node.name);
        if (a < 0) throw UnknownAtom(node.name);
        return a;
    }
    case ElevatorExpr::Kind::Identity: {
        int f = c.one_index(node.name);
        if (f < 0) throw UnknownAtom(node.name);
        return c.id2[f];
    }
    case ElevatorExpr::Kind::Vertical: {
        int top = eval_node(c, *node.first, source);
        int bottom = eval_node(c, *node.second, source);
        if (!c.vcomposable(bottom, top))
            throw BoundaryMismatch(source.substr(node.begin,
                                                 node.end - node.begin));
        return c.vcompose(bottom, top);
    }
    case ElevatorExpr::Kind::Horizontal: {
        int outer = eval_node(c, *node.first, source);
        int inner = eval_node(c, *node.second, source);
        if (!c.hcomposable(outer, inner))
            throw BoundaryMismatch(source.substr(node.begin,
                                                 node.end - node.begin));
        return c.hcompose2(outer, inner);
    }
    }
    throw Error("eval_node: unreachable");
}

} // namespace

std::unique_ptr<ElevatorExpr> parse_elevator(const std::string& source) {
    auto toks = tokenize(source);
    Parser p{toks};
    auto node = p.expr();
    if (p.peek().kind != Token::Kind::End)
        throw SyntaxError("trailing input", p.peek().pos);
    return node;
}

int eval_elevator(const TwoCat& c, const std::string& source) {
    auto ast = parse_elevator(source);
    return eval_node(c, *ast, source);
}

bool elevator_equal(const TwoCat& c, const std::string& lhs,
                    const std::string& rhs) {
    return eval_elevator(c, lhs) == eval_elevator(c, rhs);
}

std::array<int, 3> grid_readings(const TwoCat& c, int alpha, int beta) {
    const std::string a = c.two_cells[alpha];
    const std::string b = c.two_cells[beta];
    const std::string f = c.one_cells[c.src2[alpha]];
    const std::string fp = c.one_cells[c.tgt2[alpha]];
    const std::string g = c.one_cells[c.src2[beta]];
    const std::string gp = c.one_cells[c.tgt2[beta]];
    return {
        eval_elevator(c, b + " . " + a),
        eval_elevator(c, "(id(" + g + ") . " + a + ") v (" + b + " . id(" +
                             fp + "))"),
        eval_elevator(c, "(" + b + " . id(" + f + ")) v (id(" + gp + ") . " +
                             a + ")"),
    };
}

} // namespace twocat

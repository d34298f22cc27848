#include "jetcl/parse.hpp"

#include <cctype>
#include <optional>

#include "jetcl/errors.hpp"

namespace jetcl {

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ >= src_.size()) { current_ = {Token::Kind::End, ""}; return; }
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            // rational literal p/q
            if (pos_ < src_.size() && src_[pos_] == '/') {
                std::size_t slash = pos_;
                ++pos_;
                if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    throw ParseError("expected digits after '/' at position " + std::to_string(slash));
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            }
            current_ = {Token::Kind::Number, src_.substr(start, pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            current_ = {Token::Kind::Ident, src_.substr(start, pos_ - start)};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': current_ = {Token::Kind::Plus, "+"}; return;
            case '-': current_ = {Token::Kind::Minus, "-"}; return;
            case '*': current_ = {Token::Kind::Star, "*"}; return;
            case '^': current_ = {Token::Kind::Caret, "^"}; return;
            case '(': current_ = {Token::Kind::LParen, "("}; return;
            case ')': current_ = {Token::Kind::RParen, ")"}; return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "' at position " +
                                 std::to_string(pos_ - 1));
        }
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    Token current_{Token::Kind::End, ""};
};

class Parser {
public:
    Parser(const std::string& src, RingPtr ring) : lex_(src), ring_(std::move(ring)) {}

    Polynomial parse() {
        Polynomial p = expression();
        if (lex_.peek().kind != Token::Kind::End)
            throw ParseError("unexpected trailing input '" + lex_.peek().text + "'");
        return p;
    }

private:
    Polynomial expression() {
        bool negate = false;
        if (lex_.peek().kind == Token::Kind::Minus) { lex_.take(); negate = true; }
        else if (lex_.peek().kind == Token::Kind::Plus) lex_.take();
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (lex_.peek().kind == Token::Kind::Plus || lex_.peek().kind == Token::Kind::Minus) {
            const bool minus = lex_.take().kind == Token::Kind::Minus;
            Polynomial t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.peek().kind == Token::Kind::Star) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            return -factor();
        }
        Polynomial base = atom();
        if (lex_.peek().kind == Token::Kind::Caret) {
            lex_.take();
            const Token e = lex_.take();
            if (e.kind != Token::Kind::Number || e.text.find('/') != std::string::npos)
                throw ParseError("exponent must be a natural number");
            const unsigned long exp = std::stoul(e.text);
            if (exp > 64)
                throw ParseError("exponent " + e.text + " too large");
            base = pow(base, static_cast<std::uint32_t>(exp));
        }
        return base;
    }

    Polynomial atom() {
        const Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::Number:
                return Polynomial::constant(ring_, parse_rational(t.text));
            case Token::Kind::Ident: {
                auto idx = ring_->index_of(t.text);
                if (!idx)
                    throw ParseError("unknown variable '" + t.text + "'");
                return Polynomial::variable(ring_, *idx);
            }
            case Token::Kind::LParen: {
                Polynomial p = expression();
                if (lex_.take().kind != Token::Kind::RParen)
                    throw ParseError("expected ')'");
                return p;
            }
            default:
                throw ParseError("unexpected token '" + t.text + "'");
        }
    }

    Lexer lex_;
    RingPtr ring_;
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).parse();
}

std::vector<Polynomial> parse_generators(const std::string& text, const RingPtr& ring) {
    std::vector<Polynomial> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        bool blank = true;
        for (char c : piece)
            if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
        if (!blank) out.push_back(parse_polynomial(piece, ring));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

RingPtr parse_ring(const std::string& text) {
    std::vector<std::string> names;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            if (!current.empty()) names.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current += c;
        }
    }
    if (!current.empty()) names.push_back(current);
    if (names.empty())
        throw ParseError("empty ring specification");
    for (const auto& n : names) {
        if (!(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
            throw ParseError("invalid variable name '" + n + "'");
        for (char c : n)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw ParseError("invalid variable name '" + n + "'");
    }
    try {
        return make_ring(names);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

} // namespace jetcl

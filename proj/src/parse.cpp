#include "hv/parse.hpp"

#include <cctype>

namespace hv {

namespace {

struct Token {
    enum class Type { Int, Ident, Punct, End };
    Type type;
    std::string text;
    size_t offset;  // 1-based
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Type::Int, std::string(s.substr(start, i - start)), start + 1});
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Token::Type::Ident, std::string(s.substr(start, i - start)), start + 1});
        } else if (ch == '+' || ch == '-' || ch == '*' || ch == '/' || ch == '(' || ch == ')' ||
                   ch == ';' || ch == ',') {
            ++i;
            out.push_back({Token::Type::Punct, std::string(1, ch), start + 1});
        } else {
            throw parse_error("syntax error: unexpected character '" + std::string(1, ch) + "'",
                              start + 1);
        }
    }
    out.push_back({Token::Type::End, "", s.size() + 1});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, const GroupInstance& g, AlgebraTag tag)
        : tokens_(tokenize(text)), group_(g), tag_(tag) {}

    AlgebraElement run() {
        AlgebraElement out = parse_element();
        expect_end();
        return out;
    }

    Scalar run_scalar() {
        Scalar s;
        if (!try_parse_scalar(s)) fail("expected a scalar");
        expect_end();
        return s;
    }

    GroupElement run_coords() {
        GroupElement x = parse_group_element();
        expect_end();
        return x;
    }

private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;
    const GroupInstance& group_;
    AlgebraTag tag_;

    const Token& peek(size_t ahead = 0) const {
        size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& advance() { return tokens_[pos_++]; }
    bool accept(const char* punct) {
        if (peek().type == Token::Type::Punct && peek().text == punct) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool accept_ident(const char* name) {
        if (peek().type == Token::Type::Ident && peek().text == name) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(const char* punct) {
        if (!accept(punct)) fail(std::string("expected '") + punct + "'");
    }
    void expect_end() {
        if (peek().type != Token::Type::End) fail("trailing input");
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error("syntax error: " + what, peek().offset);
    }

    AlgebraElement parse_element() {
        AlgebraElement out(tag_);
        bool negate = accept("-");
        out += parse_term(negate);
        while (true) {
            if (accept("+")) {
                out += parse_term(false);
            } else if (accept("-")) {
                out += parse_term(true);
            } else {
                return out;
            }
        }
    }

    AlgebraElement parse_term(bool negate) {
        size_t save = pos_;
        Scalar coeff(1);
        bool have_scalar = try_parse_scalar(coeff);
        if (have_scalar) {
            if (accept("*")) {
                AlgebraElement prim = parse_primary();
                return (negate ? -coeff : coeff) * prim;
            }
            if (scalar_terminates()) {
                // bare scalar: multiple of the unit element
                return (negate ? -coeff : coeff) * unit_element();
            }
            pos_ = save;  // e.g. "2" was actually the start of something else
        }
        AlgebraElement prim = parse_primary();
        return negate ? -prim : prim;
    }

    bool scalar_terminates() const {
        const Token& t = peek();
        return t.type == Token::Type::End ||
               (t.type == Token::Type::Punct && (t.text == "+" || t.text == "-" || t.text == ")"));
    }

    AlgebraElement unit_element() {
        switch (tag_) {
            case AlgebraTag::D1:
            case AlgebraTag::HV:
                return AlgebraElement::single(tag_, BasisSymbol::I(group_.zero()));
            case AlgebraTag::D:
                return AlgebraElement::single(tag_, BasisSymbol::D(group_.zero(), 0));
            case AlgebraTag::W:
                fail("W has no unit element for a bare scalar term");
        }
        fail("bad algebra tag");
    }

    AlgebraElement parse_primary() {
        if (peek().type == Token::Type::Ident) return parse_symbol();
        if (accept("(")) {
            AlgebraElement inner = parse_element();
            expect(")");
            return inner;
        }
        fail("expected a term");
    }

    AlgebraElement parse_symbol() {
        const Token& t = advance();
        const std::string& name = t.text;
        if (name == "C_L" || name == "C_I" || name == "C_LI") {
            BasisSymbol sym = name == "C_L" ? BasisSymbol::C_L()
                              : name == "C_I" ? BasisSymbol::C_I()
                                              : BasisSymbol::C_LI();
            return AlgebraElement::single(tag_, sym);
        }
        if (name == "L" || name == "I" || name == "D") {
            expect("(");
            GroupElement x = parse_group_element();
            BasisSymbol sym = BasisSymbol::C_L();
            if (name == "D") {
                expect(";");
                if (peek().type != Token::Type::Int) fail("expected an operator power");
                int m = static_cast<int>(BigInt::from_string(advance().text).to_int64());
                sym = BasisSymbol::D(x, m);
            } else {
                sym = name == "L" ? BasisSymbol::L(x) : BasisSymbol::I(x);
            }
            expect(")");
            return AlgebraElement::single(tag_, sym);
        }
        throw parse_error("syntax error: unknown symbol '" + name + "'", t.offset);
    }

    GroupElement parse_group_element() {
        std::vector<Rational> coords;
        coords.push_back(parse_rational());
        while (accept(",")) coords.push_back(parse_rational());
        return group_.element(std::move(coords));
    }

    Rational parse_rational() {
        bool neg = accept("-");
        if (peek().type != Token::Type::Int) fail("expected a number");
        BigInt num = BigInt::from_string(advance().text);
        BigInt den(1);
        if (accept("/")) {
            if (peek().type != Token::Type::Int) fail("expected a denominator");
            den = BigInt::from_string(advance().text);
        }
        Rational r(num, den);
        return neg ? -r : r;
    }

    // sqrt coefficient suffix: 'sqrt' '(' nat ')'
    bool try_parse_sqrt(Scalar& out, const Rational& coeff) {
        size_t save = pos_;
        if (!accept_ident("sqrt")) return false;
        if (!accept("(") || peek().type != Token::Type::Int) {
            pos_ = save;
            return false;
        }
        long long d = BigInt::from_string(advance().text).to_int64();
        if (!accept(")")) {
            pos_ = save;
            return false;
        }
        out = Scalar(Rational(0), coeff, d);
        return true;
    }

    bool try_parse_scalar(Scalar& out) {
        size_t save = pos_;
        if (accept("(")) {
            Scalar body;
            if (try_parse_scalar_body(body) && accept(")")) {
                out = body;
                return true;
            }
            pos_ = save;
            return false;
        }
        if (try_parse_scalar_body(out)) return true;
        pos_ = save;
        return false;
    }

    // A leading '-' binds to the first summand only: "-5/6+1/2*sqrt(2)" is
    // (-5/6) + (1/2) sqrt(2).
    bool try_parse_scalar_body(Scalar& out) {
        size_t save = pos_;
        bool neg = accept("-");
        if (try_parse_sqrt(out, Rational(1))) {
            if (neg) out = -out;
            return true;
        }
        if (peek().type != Token::Type::Int) {
            pos_ = save;
            return false;
        }
        Rational r = parse_rational_unsigned();
        if (neg) r = -r;
        // "r*sqrt(d)": pure irrational with coefficient
        if (peek().type == Token::Type::Punct && peek().text == "*" &&
            peek(1).type == Token::Type::Ident && peek(1).text == "sqrt") {
            ++pos_;  // '*'
            Scalar irr;
            if (!try_parse_sqrt(irr, r)) {
                pos_ = save;
                return false;
            }
            out = irr;
            return true;
        }
        // "r +/- s*sqrt(d)" or plain "r"
        if (peek().type == Token::Type::Punct && (peek().text == "+" || peek().text == "-")) {
            size_t mark = pos_;
            bool minus = peek().text == "-";
            ++pos_;
            Scalar irr;
            if (try_parse_irr_part(irr)) {
                out = Scalar(r) + (minus ? -irr : irr);
                return true;
            }
            pos_ = mark;  // the sign belongs to the next element-level term
        }
        out = Scalar(r);
        return true;
    }

    // rational '*' sqrt(...) | sqrt(...)
    bool try_parse_irr_part(Scalar& out) {
        if (try_parse_sqrt(out, Rational(1))) return true;
        size_t save = pos_;
        if (peek().type != Token::Type::Int) return false;
        Rational r = parse_rational_unsigned();
        if (!(peek().type == Token::Type::Punct && peek().text == "*")) {
            pos_ = save;
            return false;
        }
        ++pos_;
        if (!try_parse_sqrt(out, r)) {
            pos_ = save;
            return false;
        }
        return true;
    }

    Rational parse_rational_unsigned() {
        BigInt num = BigInt::from_string(advance().text);
        BigInt den(1);
        if (peek().type == Token::Type::Punct && peek().text == "/" &&
            peek(1).type == Token::Type::Int) {
            ++pos_;
            den = BigInt::from_string(advance().text);
        }
        return Rational(num, den);
    }
};

}  // namespace

AlgebraElement parse_element(std::string_view text, const GroupInstance& g, AlgebraTag tag) {
    return Parser(text, g, tag).run();
}

Scalar parse_scalar_text(std::string_view text) {
    GroupInstance dummy(GroupKind::Z, {Scalar(1)}, 0);
    return Parser(text, dummy, AlgebraTag::D1).run_scalar();
}

GroupElement parse_coords(std::string_view text, const GroupInstance& g) {
    return Parser(text, g, AlgebraTag::D1).run_coords();
}

}  // namespace hv

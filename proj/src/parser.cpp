#include "bp/parser.hpp"

#include <cctype>
#include <vector>

namespace bp {

namespace {

std::string describe(size_t position, const std::string& expected)
{
    return "parse error at position " + std::to_string(position) + ": expected " + expected;
}

constexpr int kMaxPowerIndex = 1000000;

struct Token {
    enum Kind { plus, minus, bockstein, power, number, end } kind;
    size_t pos = 0;
    int power_index = 0;
    Fp value_mod_p = 0;     // number tokens, reduced while reading
    bool literal_one = false;  // number token spelled exactly "1"
};

std::vector<Token> lex(std::string_view src, const Prime& p)
{
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '+') {
            tokens.push_back({Token::plus, i++});
            continue;
        }
        if (c == '-') {
            tokens.push_back({Token::minus, i++});
            continue;
        }
        if (c == 'b') {
            tokens.push_back({Token::bockstein, i++});
            continue;
        }
        if (c == 'P') {
            const size_t start = i++;
            if (i >= src.size() || !std::isdigit(static_cast<unsigned char>(src[i])))
                throw ParseError(i, "a decimal index directly after 'P'");
            long long index = 0;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                index = index * 10 + (src[i] - '0');
                if (index > kMaxPowerIndex)
                    throw ParseError(start, "a power index <= " + std::to_string(kMaxPowerIndex));
                ++i;
            }
            Token t{Token::power, start};
            t.power_index = static_cast<int>(index);
            tokens.push_back(t);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const size_t start = i;
            long long value = 0;
            size_t digits = 0;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                value = (value * 10 + (src[i] - '0')) % p.value();
                ++digits;
                ++i;
            }
            Token t{Token::number, start};
            t.value_mod_p = static_cast<Fp>(value);
            t.literal_one = digits == 1 && src[start] == '1';
            tokens.push_back(t);
            continue;
        }
        throw ParseError(i, "'b', 'P<k>', a number, '+' or '-'");
    }
    tokens.push_back({Token::end, src.size()});
    return tokens;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const Prime& p) : tokens_(std::move(tokens)), p_(p) {}

    Element parse()
    {
        Element out;
        parse_term(out, 1);
        while (cur().kind == Token::plus || cur().kind == Token::minus) {
            const Fp sign = cur().kind == Token::plus ? 1 : p_.neg(1);
            ++index_;
            parse_term(out, sign);
        }
        if (cur().kind != Token::end)
            throw ParseError(cur().pos, "'+', '-' or end of input");
        return out;
    }

private:
    const Token& cur() const { return tokens_[index_]; }
    const Token& next() const { return tokens_[index_ + 1]; }

    static bool starts_factor(const Token& t)
    {
        return t.kind == Token::bockstein || t.kind == Token::power ||
               (t.kind == Token::number && t.literal_one);
    }

    void parse_term(Element& out, Fp sign)
    {
        Fp coeff = 1;
        bool had_coeff = false;
        if (cur().kind == Token::number && !(cur().literal_one && !starts_factor(next()))) {
            coeff = cur().value_mod_p;
            had_coeff = true;
            ++index_;
        }
        Monomial word;
        bool any = false;
        while (starts_factor(cur())) {
            if (cur().kind == Token::bockstein)
                word.push_back(Generator::bockstein());
            else if (cur().kind == Token::power)
                word.push_back(Generator::power(cur().power_index));
            // a literal '1' is the empty factor
            ++index_;
            any = true;
        }
        // A bare coefficient is a scalar multiple of the unit, so every
        // rendered element (including "0") reads back.
        if (!any && !had_coeff)
            throw ParseError(cur().pos, "a factor ('b', 'P<k>' or '1')");
        add_term(out, word, p_.mul(sign, coeff), p_);
    }

    std::vector<Token> tokens_;
    size_t index_ = 0;
    Prime p_;
};

}  // namespace

ParseError::ParseError(size_t position, std::string expected)
    : std::runtime_error(describe(position, expected)), position_(position),
      expected_(std::move(expected))
{
}

Element parse_expression(std::string_view src, const Prime& p)
{
    return Parser(lex(src, p), p).parse();
}

}  // namespace bp

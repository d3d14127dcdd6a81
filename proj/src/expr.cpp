#include "voa/expr.hpp"

#include <cctype>

namespace voa {

namespace {

struct Parser {
    const std::string& s;
    const Context& ctx;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw Error(Errc::ParseError, what + " at position " + std::to_string(pos), (long)pos);
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }

    mpz_class parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected a number");
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        return mpz_class(s.substr(start, pos - start));
    }

    Rational parse_rational() {
        bool neg = eat('-');
        mpz_class num = parse_uint();
        mpz_class den = 1;
        if (eat('/')) den = parse_uint();
        if (den == 0) fail("zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return neg ? Rational(-r) : r;
    }

    std::string parse_ident() {
        skip_ws();
        if (pos >= s.size() ||
            !(std::isalpha((unsigned char)s[pos]) || s[pos] == '_'))
            fail("expected an identifier");
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    // one gen* charge block with its leading coefficient
    RawTerm parse_term() {
        RawTerm rt;
        rt.coeff = 1;
        skip_ws();
        // optional "rational *"
        {
            size_t save = pos;
            char c = peek();
            if (c == '-' || std::isdigit((unsigned char)c)) {
                Rational r = parse_rational();
                if (eat('*')) {
                    rt.coeff = r;
                } else {
                    pos = save;
                    fail("a coefficient must be followed by '*'");
                }
            }
        }
        // gen* then charge
        while (true) {
            skip_ws();
            if (peek() == 'v' || peek() == 'E') {
                size_t save = pos;
                std::string word = parse_ident();
                if (word == "vac") {
                    rt.charge = Charge(QVec(ctx.lat.rank, 0));
                    return rt;
                }
                if (word == "E") {
                    expect('[');
                    QVec coords;
                    coords.push_back(parse_rational());
                    while (eat(',')) coords.push_back(parse_rational());
                    bool lam = false;
                    if (eat(';')) {
                        std::string tag = parse_ident();
                        if (tag != "L") fail("expected 'L' after ';'");
                        lam = true;
                    }
                    expect(']');
                    if ((long)coords.size() != ctx.lat.rank)
                        fail("charge has " + std::to_string(coords.size()) +
                             " coordinates, lattice rank is " +
                             std::to_string(ctx.lat.rank));
                    if (lam && !ctx.lambda) fail("no lambda block configured");
                    rt.charge = Charge(std::move(coords), lam);
                    return rt;
                }
                pos = save;  // fall through: a generator name starting with v/E
            }
            std::string name = parse_ident();
            long idx = -1;
            for (long i = 0; i < ctx.lat.rank; ++i)
                if (ctx.lat.basis_names[i] == name) idx = i;
            if (idx < 0)
                throw Error(Errc::UnknownName, "unknown generator '" + name + "'", (long)pos);
            expect('(');
            expect('-');
            mpz_class mode = parse_uint();
            expect(')');
            if (mode == 0) throw Error(Errc::NonnegativeMode, "mode must be negative");
            QVec h(ctx.lat.rank, 0);
            h[idx] = 1;
            rt.factors.push_back({std::move(h), -mode.get_si()});
        }
    }
};

}  // namespace

FockVector parse_element(const std::string& text, const Context& ctx) {
    Parser p{text, ctx};
    std::vector<RawTerm> terms;
    int sign = 1;
    if (p.eat('-'))
        sign = -1;
    else
        p.eat('+');
    while (true) {
        RawTerm rt = p.parse_term();
        rt.coeff *= sign;
        terms.push_back(std::move(rt));
        if (p.at_end()) break;
        if (p.eat('+'))
            sign = 1;
        else if (p.eat('-'))
            sign = -1;
        else
            p.fail("expected '+' or '-'");
    }
    return normalize(ctx, terms);
}

}  // namespace voa

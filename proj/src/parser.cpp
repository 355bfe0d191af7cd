#include "mage/parser.hpp"

#include <cctype>
#include <functional>
#include <optional>

namespace mage {
namespace {

struct Token {
    enum class Kind {
        Int, Ident, Plus, Minus, Star, Caret, Slash,
        LParen, RParen, LBracket, RBracket, Comma, Semi, End
    };
    Kind kind = Kind::End;
    std::string text;
    std::size_t pos = 0;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Kind::Int, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Kind::Ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        Token::Kind k;
        switch (c) {
        case '+': k = Token::Kind::Plus; break;
        case '-': k = Token::Kind::Minus; break;
        case '*': k = Token::Kind::Star; break;
        case '^': k = Token::Kind::Caret; break;
        case '/': k = Token::Kind::Slash; break;
        case '(': k = Token::Kind::LParen; break;
        case ')': k = Token::Kind::RParen; break;
        case '[': k = Token::Kind::LBracket; break;
        case ']': k = Token::Kind::RBracket; break;
        case ',': k = Token::Kind::Comma; break;
        case ';': k = Token::Kind::Semi; break;
        default: throw ParseError(i, "a token");
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Token::Kind::End, "", s.size()});
    return out;
}

// Splits an all-digit suffix into single-digit indices (n <= 6, so indices
// are single digits): "12" -> {1, 2}.
std::vector<int> digit_indices(const std::string& digits, std::size_t pos) {
    std::vector<int> r;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(pos, "digit indices");
        r.push_back(c - '0');
    }
    return r;
}

class Parser {
public:
    Parser(const std::string& text, const ParseContext& ctx)
        : ctx_(ctx), tokens_(lex(text)) {}

    const Token& peek(int ahead = 0) const {
        const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }
    const Token& next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    void expect(Token::Kind k, const char* what) {
        if (!accept(k)) throw ParseError(peek().pos, what);
    }
    bool at_end() const { return peek().kind == Token::Kind::End; }

    // ---- generic polynomial expression over a variable resolver ----

    template <class Var>
    PolynomialT<Var> poly_expr(const std::function<Var(const std::string&, std::size_t)>& var) {
        bool neg = false;
        if (accept(Token::Kind::Minus))
            neg = true;
        else
            accept(Token::Kind::Plus);
        PolynomialT<Var> total = poly_term<Var>(var);
        if (neg) total = -total;
        while (true) {
            if (accept(Token::Kind::Plus))
                total = total + poly_term<Var>(var);
            else if (accept(Token::Kind::Minus))
                total = total - poly_term<Var>(var);
            else
                return total;
        }
    }

    template <class Var>
    PolynomialT<Var> poly_term(const std::function<Var(const std::string&, std::size_t)>& var) {
        PolynomialT<Var> total = poly_factor<Var>(var);
        while (accept(Token::Kind::Star)) total = total * poly_factor<Var>(var);
        return total;
    }

    template <class Var>
    PolynomialT<Var> poly_factor(const std::function<Var(const std::string&, std::size_t)>& var) {
        PolynomialT<Var> base;
        const Token& t = peek();
        if (t.kind == Token::Kind::Int) {
            base = PolynomialT<Var>::constant(rational_literal());
        } else if (t.kind == Token::Kind::Ident) {
            next();
            base = PolynomialT<Var>::variable(var(t.text, t.pos));
        } else if (accept(Token::Kind::LParen)) {
            base = poly_expr<Var>(var);
            expect(Token::Kind::RParen, "')'");
        } else {
            throw ParseError(t.pos, "a number, variable, or '('");
        }
        if (accept(Token::Kind::Caret)) {
            const Token& e = peek();
            if (e.kind != Token::Kind::Int) throw ParseError(e.pos, "a nonnegative integer exponent");
            next();
            base = base.pow(std::stoi(e.text));
        }
        return base;
    }

    Rational rational_literal() {
        const Token& t = peek();
        if (t.kind != Token::Kind::Int) throw ParseError(t.pos, "an integer");
        next();
        Integer num(t.text);
        if (accept(Token::Kind::Slash)) {
            const Token& d = peek();
            if (d.kind != Token::Kind::Int) throw ParseError(d.pos, "a denominator");
            next();
            Integer den(d.text);
            if (den == 0) throw ParseError(d.pos, "a nonzero denominator");
            return Rational(num) / Rational(den);
        }
        return Rational(num);
    }

    // ---- variable resolvers ----

    VariableId chart_variable(const std::string& name, std::size_t pos) const {
        if (name == "u") return VariableId::fiber();
        if (name == "e") return VariableId::extension();
        if (name == "phi") return VariableId::field_value();
        if (name.size() >= 2 && (name[0] == 'q' || name[0] == 'p')) {
            bool digits = true;
            for (std::size_t i = 1; i < name.size(); ++i)
                digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
            if (digits) {
                const int idx = std::stoi(name.substr(1));
                if (idx < 1 || idx > ctx_.n)
                    throw DimensionError("index of '" + name + "' exceeds dimension " +
                                         std::to_string(ctx_.n));
                return name[0] == 'q' ? VariableId::coord(idx) : VariableId::momentum(idx);
            }
        }
        if (ctx_.is_param(name)) return VariableId::parameter(name);
        (void)pos;
        throw UnknownParameter(name);
    }

    JetVar jet_variable(const std::string& name, std::size_t pos) const {
        if (ctx_.is_param(name)) return JetVar::parameter(name);
        if (name.size() >= 2 && name[0] == 'q') {
            bool digits = true;
            for (std::size_t i = 1; i < name.size(); ++i)
                digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
            if (digits) {
                const int idx = std::stoi(name.substr(1));
                if (idx < 1 || idx > ctx_.n)
                    throw DimensionError("index of '" + name + "' exceeds dimension " +
                                         std::to_string(ctx_.n));
                return JetVar::coord(idx);
            }
        }
        // field symbol: letters, optionally _<digit indices>
        std::string base = name;
        std::vector<int> multi;
        if (const auto us = name.find('_'); us != std::string::npos) {
            base = name.substr(0, us);
            multi = digit_indices(name.substr(us + 1), pos);
        }
        if (base.empty()) throw ParseError(pos, "a field symbol");
        for (char c : base)
            if (!std::isalpha(static_cast<unsigned char>(c))) throw ParseError(pos, "a field symbol");
        for (int i : multi)
            if (i < 1 || i > ctx_.n)
                throw DimensionError("jet index of '" + name + "' exceeds dimension " +
                                     std::to_string(ctx_.n));
        return JetVar::symbol(base, std::move(multi));
    }

    // ---- differential form grammar ----

    static bool is_atom_name(const std::string& s) {
        if (s == "du" || s == "de" || s == "dphi" || s == "beta" || s == "Omega" ||
            s == "contact")
            return true;
        if (s.rfind("beta_", 0) == 0) return true;
        if ((s.rfind("dq", 0) == 0 || s.rfind("dp", 0) == 0) && s.size() > 2) {
            for (std::size_t i = 2; i < s.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
            return true;
        }
        return false;
    }

    bool at_atom() const {
        const Token& t = peek();
        if (t.kind != Token::Kind::Ident) return false;
        if (is_atom_name(t.text)) return true;
        return t.text == "d" && peek(1).kind == Token::Kind::LBracket;
    }

    DifferentialForm form(const GeneratorSet& gens) {
        bool neg = false;
        if (accept(Token::Kind::Minus))
            neg = true;
        else
            accept(Token::Kind::Plus);
        DifferentialForm total = form_term(gens, neg);
        while (true) {
            if (accept(Token::Kind::Plus))
                total = total + form_term(gens, false);
            else if (accept(Token::Kind::Minus))
                total = total + form_term(gens, true);
            else {
                if (!at_end()) throw ParseError(peek().pos, "'+', '-', or end of input");
                return total;
            }
        }
    }

    // term := (polyfactor "*")* [mono]; the monomial, when present, ends the term.
    DifferentialForm form_term(const GeneratorSet& gens, bool negate) {
        Polynomial coeff = Polynomial::constant(Rational(negate ? -1 : 1));
        std::optional<DifferentialForm> mono;
        std::function<VariableId(const std::string&, std::size_t)> res =
            [this](const std::string& s, std::size_t p) { return chart_variable(s, p); };
        while (true) {
            if (at_atom()) {
                mono = form_mono(gens);
                break;
            }
            coeff = coeff * poly_factor<VariableId>(res);
            if (!accept(Token::Kind::Star)) break;
        }
        if (!mono) return DifferentialForm::scalar(gens, coeff);
        return mono->scaled(coeff);
    }

    DifferentialForm form_mono(const GeneratorSet& gens) {
        DifferentialForm total = form_atom(gens);
        while (accept(Token::Kind::Caret)) total = wedge(total, form_atom(gens));
        return total;
    }

    DifferentialForm form_atom(const GeneratorSet& gens) {
        const Token t = next();
        if (t.kind != Token::Kind::Ident) throw ParseError(t.pos, "a form atom");
        const std::string& s = t.text;
        const Polynomial one = Polynomial::constant(Rational(1));

        auto single = [&](Generator g) {
            return DifferentialForm::product(gens, {g}, one);
        };

        if (s == "du") return single(Generator::du());
        if (s == "de") return single(Generator::de());
        if (s == "dphi") return single(Generator::dphi());
        if (s.rfind("dq", 0) == 0 && s.size() > 2)
            return single(Generator::dq(coord_index(s.substr(2), t.pos)));
        if (s.rfind("dp", 0) == 0 && s.size() > 2)
            return single(Generator::dp(coord_index(s.substr(2), t.pos)));
        if (s == "beta") return beta_form(gens);
        if (s.rfind("beta_", 0) == 0) {
            const int mu = coord_index(s.substr(5), t.pos);
            return contract_direction(gens.slot(Generator::dq(mu)), beta_form(gens));
        }
        if (s == "Omega") {
            DifferentialForm omega(gens, 2);
            for (int mu = 1; mu <= gens.n(); ++mu)
                omega = omega +
                        DifferentialForm::product(gens, {Generator::dq(mu), Generator::dp(mu)});
            return omega;
        }
        if (s == "contact") {
            if (!gens.has_du()) throw ParseError(t.pos, "contact on a chart with du");
            DifferentialForm c = DifferentialForm::product(gens, {Generator::du()});
            for (int mu = 1; mu <= gens.n(); ++mu)
                c = c + DifferentialForm::product(
                            gens, {Generator::dq(mu)},
                            -Polynomial::variable(VariableId::momentum(mu)));
            return c;
        }
        if (s == "d" && accept(Token::Kind::LBracket)) {
            std::vector<Generator> gs;
            if (peek().kind == Token::Kind::Int)
                for (int i : index_list()) gs.push_back(Generator::dq(i));
            if (accept(Token::Kind::Semi))
                for (int i : index_list()) gs.push_back(Generator::dp(i));
            expect(Token::Kind::RBracket, "']'");
            if (gs.empty()) throw ParseError(t.pos, "at least one index in d[...]");
            return DifferentialForm::product(gens, gs, one);
        }
        throw ParseError(t.pos, "a form atom");
    }

    std::vector<int> index_list() {
        std::vector<int> r;
        do {
            const Token& t = peek();
            if (t.kind != Token::Kind::Int) throw ParseError(t.pos, "an index");
            next();
            r.push_back(coord_index(t.text, t.pos));
        } while (accept(Token::Kind::Comma));
        return r;
    }

    int coord_index(const std::string& digits, std::size_t pos) const {
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(pos, "an index");
        const int idx = std::stoi(digits);
        if (idx < 1 || idx > ctx_.n)
            throw DimensionError("index " + digits + " exceeds dimension " +
                                 std::to_string(ctx_.n));
        return idx;
    }

    DifferentialForm beta_form(const GeneratorSet& gens) const {
        std::vector<Generator> qs;
        for (int mu = 1; mu <= gens.n(); ++mu) qs.push_back(Generator::dq(mu));
        return DifferentialForm::product(gens, qs);
    }

    // Chart inference scans the raw tokens before parsing.
    GeneratorSet infer_chart() const {
        bool de = false, dphi = false, du = false;
        for (const Token& t : tokens_) {
            if (t.kind != Token::Kind::Ident) continue;
            if (t.text == "de") de = true;
            if (t.text == "dphi") dphi = true;
            if (t.text == "du" || t.text == "contact") du = true;
        }
        if (dphi && du)
            throw ParseError(0, "a single chart (du and dphi cannot be mixed)");
        if (dphi) return GeneratorSet::covariant_phase(ctx_.n);
        if (de) return GeneratorSet::jet_chart_extended(ctx_.n);
        return GeneratorSet::jet_chart(ctx_.n);
    }

    const ParseContext& ctx_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

Rational parse_rational(const std::string& text) {
    ParseContext pc;
    Parser p(text, pc);
    bool neg = false;
    while (true) {
        if (p.accept(Token::Kind::Minus))
            neg = !neg;
        else if (!p.accept(Token::Kind::Plus))
            break;
    }
    Rational r = p.rational_literal();
    if (!p.at_end()) throw ParseError(0, "end of input");
    return neg ? -r : r;
}

Polynomial parse_polynomial(const std::string& text, const ParseContext& ctx) {
    Parser p(text, ctx);
    std::function<VariableId(const std::string&, std::size_t)> res =
        [&p](const std::string& s, std::size_t pos) { return p.chart_variable(s, pos); };
    Polynomial r = p.poly_expr<VariableId>(res);
    if (!p.at_end()) throw ParseError(0, "end of input");
    return r;
}

JetPolynomial parse_jet_polynomial(const std::string& text, const ParseContext& ctx) {
    Parser p(text, ctx);
    std::function<JetVar(const std::string&, std::size_t)> res =
        [&p](const std::string& s, std::size_t pos) { return p.jet_variable(s, pos); };
    JetPolynomial r = p.poly_expr<JetVar>(res);
    if (!p.at_end()) throw ParseError(0, "end of input");
    return r;
}

DifferentialForm parse_form(const std::string& text, const ParseContext& ctx) {
    Parser p(text, ctx);
    return p.form(p.infer_chart());
}

} // namespace mage

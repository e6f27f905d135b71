#include "quatpoly/text.hpp"

#include <algorithm>
#include <cctype>

#include <nlohmann/json.hpp>

namespace quatpoly {

namespace {

enum class Tok { Num, Unit, Z, Op, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

[[noreturn]] void parse_error(const std::string& msg, std::size_t pos) {
    fail(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos));
}

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            std::size_t st = i;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) ++i;
            if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
                if (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                    i = j;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                }
            }
            out.push_back({Tok::Num, std::string(s.substr(st, i - st)), st});
            continue;
        }
        if (c == 'i' || c == 'j' || c == 'k') { out.push_back({Tok::Unit, std::string(1, c), i}); ++i; continue; }
        if (c == 'z' || c == 'Z') { out.push_back({Tok::Z, "z", i}); ++i; continue; }
        if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
            out.push_back({Tok::Op, std::string(1, c), i});
            ++i;
            continue;
        }
        parse_error(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

template <class S>
S scalar_from_text(const std::string& t) {
    Rational r = Rational::parse(t);
    if constexpr (std::is_same_v<S, Rational>) return r;
    else return r.to_double();
}

template <class S>
Quat<S> unit_quat(char u) {
    switch (u) {
    case 'i': return Quat<S>::i();
    case 'j': return Quat<S>::j();
    default: return Quat<S>::k();
    }
}

template <class S>
class Parser {
public:
    explicit Parser(std::string_view s) : toks_(tokenize(s)) {}

    QPolynomial<S> parse_all() {
        auto v = expr();
        if (peek().kind != Tok::End) parse_error("trailing input '" + peek().text + "'", peek().pos);
        return v;
    }

private:
    using P = QPolynomial<S>;

    const Token& peek() const { return toks_[pos_]; }
    bool is_op(char c) const { return peek().kind == Tok::Op && peek().text[0] == c; }
    Token take() { return toks_[pos_++]; }

    P expr() {
        P v = term();
        while (is_op('+') || is_op('-')) {
            bool plus = take().text[0] == '+';
            P t = term();
            v = plus ? v + t : v - t;
        }
        return v;
    }

    P term() {
        P v = unary();
        for (;;) {
            if (is_op('*')) {
                take();
                v = v * unary();
            } else if (is_op('/')) {
                std::size_t at = take().pos;
                P d = unary();
                if (d.size() != 1 || !d[0].is_real(Tolerance{0}) || d[0].is_exact_zero())
                    parse_error("division only by a nonzero real constant", at);
                v = v * Quat<S>(S(1) / d[0].x0);
            } else if (is_op('(') && pos_ > 0 && toks_[pos_ - 1].kind == Tok::Op && toks_[pos_ - 1].text == ")") {
                v = v * unary();
            } else {
                return v;
            }
        }
    }

    P unary() {
        if (is_op('-')) { take(); return -unary(); }
        if (is_op('+')) { take(); return unary(); }
        return power_expr();
    }

    P power_expr() {
        P base = primary();
        if (is_op('^')) {
            take();
            if (peek().kind != Tok::Num) parse_error("exponent must be a nonnegative integer", peek().pos);
            Token t = take();
            Rational e = Rational::parse(t.text);
            if (!e.is_integer() || e.sign() < 0 || e > Rational(64))
                parse_error("exponent must be an integer in [0, 64]", t.pos);
            base = power(base, static_cast<std::size_t>(e.num().get_ui()));
        }
        return base;
    }

    P primary() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Num: {
            Token n = take();
            Quat<S> q(scalar_from_text<S>(n.text));
            if (peek().kind == Tok::Unit) q = q * unit_quat<S>(take().text[0]);
            return P::constant(q);
        }
        case Tok::Unit: return P::constant(unit_quat<S>(take().text[0]));
        case Tok::Z: take(); return P::monomial(1);
        case Tok::Op:
            if (t.text == "(") {
                take();
                P v = expr();
                if (!is_op(')')) parse_error("expected ')'", peek().pos);
                take();
                return v;
            }
            parse_error("unexpected '" + t.text + "'", t.pos);
        case Tok::End: parse_error("unexpected end of input", t.pos);
        }
        parse_error("bad token", t.pos);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Split on commas that are not nested in parentheses.
std::vector<std::string> split_top(std::string_view s) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t st = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ',' && depth == 0) {
            out.emplace_back(trim(s.substr(st, i - st)));
            st = i + 1;
        }
    }
    auto last = trim(s.substr(st));
    if (!last.empty() || !out.empty()) out.emplace_back(last);
    return out;
}

std::vector<std::string> json_strings(const nlohmann::json& arr) {
    if (!arr.is_array()) fail(ErrorCode::ParseError, "expected a JSON array");
    std::vector<std::string> out;
    for (const auto& e : arr) {
        if (e.is_string()) out.push_back(e.get<std::string>());
        else if (e.is_number_integer()) out.push_back(std::to_string(e.get<long long>()));
        else if (e.is_number()) out.push_back(e.dump());
        else fail(ErrorCode::ParseError, "array entries must be strings or numbers");
    }
    return out;
}

nlohmann::json parse_json(std::string_view s) {
    try {
        return nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
    }
}

std::vector<std::string> bracket_list(std::string_view s) {
    s = trim(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail(ErrorCode::ParseError, "expected [ ... ]");
    return split_top(s.substr(1, s.size() - 2));
}

template <class S>
QPolynomial<S> from_coeff_texts(const std::vector<std::string>& items) {
    std::vector<Quat<S>> c;
    for (const auto& t : items) c.push_back(parse_quaternion<S>(t));
    return QPolynomial<S>(std::move(c));
}

} // namespace

template <class S>
QPolynomial<S> parse_polynomial(std::string_view text) {
    auto s = trim(text);
    if (!s.empty() && s.front() == '{') {
        auto j = parse_json(s);
        if (!j.is_object() || !j.contains("coeffs")) fail(ErrorCode::ParseError, "JSON polynomial needs \"coeffs\"");
        return from_coeff_texts<S>(json_strings(j["coeffs"]));
    }
    if (s.rfind("coeffs", 0) == 0) {
        auto eq = s.find('=');
        if (eq == std::string_view::npos) fail(ErrorCode::ParseError, "expected coeffs=[...]");
        return from_coeff_texts<S>(bracket_list(s.substr(eq + 1)));
    }
    return Parser<S>(s).parse_all();
}

template <class S>
Quat<S> parse_quaternion(std::string_view text) {
    auto p = Parser<S>(trim(text)).parse_all();
    if (p.size() > 1) fail(ErrorCode::ParseError, "expected a constant, found a polynomial");
    return p.coeff(0);
}

template <class S>
std::vector<Quat<S>> parse_quaternion_list(std::string_view text) {
    auto s = trim(text);
    std::vector<std::string> items;
    if (!s.empty() && s.front() == '[') {
        bool json_like = s.find('"') != std::string_view::npos;
        items = json_like ? json_strings(parse_json(s)) : bracket_list(s);
    } else {
        items = split_top(s);
    }
    std::vector<Quat<S>> out;
    for (const auto& t : items) out.push_back(parse_quaternion<S>(t));
    return out;
}

template <class S>
std::string format_scalar(const S& x) {
    return ScalarOps<S>::to_string(x);
}

namespace {

template <class S>
bool negative(const S& x) {
    return x < S(0);
}

// Terms of a quaternion as (sign, body) pairs.
template <class S>
std::vector<std::pair<bool, std::string>> quat_terms(const Quat<S>& q) {
    std::vector<std::pair<bool, std::string>> t;
    if (!(q.x0 == S(0))) t.push_back({negative(q.x0), format_scalar<S>(negative(q.x0) ? S(-q.x0) : q.x0)});
    const S* comp[3] = {&q.x1, &q.x2, &q.x3};
    const char* names[3] = {"i", "j", "k"};
    for (int u = 0; u < 3; ++u) {
        const S& c = *comp[u];
        if (c == S(0)) continue;
        bool neg = negative(c);
        S a = neg ? S(-c) : c;
        std::string body = a == S(1) ? names[u] : format_scalar<S>(a) + "*" + names[u];
        t.push_back({neg, body});
    }
    return t;
}

std::string join_terms(const std::vector<std::pair<bool, std::string>>& t) {
    if (t.empty()) return "0";
    std::string s = t[0].first ? "-" + t[0].second : t[0].second;
    for (std::size_t i = 1; i < t.size(); ++i) s += (t[i].first ? " - " : " + ") + t[i].second;
    return s;
}

} // namespace

template <class S>
std::string format_quaternion(const Quat<S>& q) {
    return join_terms(quat_terms(q));
}

template <class S>
std::string format_polynomial(const QPolynomial<S>& f) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<bool, std::string>> terms;
    for (std::size_t k = f.size(); k-- > 0;) {
        const auto& q = f[k];
        if (q.is_exact_zero()) continue;
        std::string zpow = k == 0 ? "" : k == 1 ? "z" : "z^" + std::to_string(k);
        auto qt = quat_terms(q);
        if (k == 0) {
            for (auto& t : qt) terms.push_back(t);
            continue;
        }
        if (qt.size() == 1 && q.imag().is_exact_zero()) {
            const auto& [neg, body] = qt[0];
            terms.push_back({neg, body == "1" ? zpow : body + "*" + zpow});
        } else if (qt.size() == 1) {
            terms.push_back({qt[0].first, zpow + "*" + qt[0].second});
        } else {
            // pull out a common minus sign
            bool all_neg = std::all_of(qt.begin(), qt.end(), [](const auto& t) { return t.first; });
            if (all_neg)
                for (auto& t : qt) t.first = false;
            terms.push_back({all_neg, zpow + "*(" + join_terms(qt) + ")"});
        }
    }
    return join_terms(terms);
}

#define QUATPOLY_INSTANTIATE(S)                                                   \
    template QPolynomial<S> parse_polynomial<S>(std::string_view);                \
    template Quat<S> parse_quaternion<S>(std::string_view);                       \
    template std::vector<Quat<S>> parse_quaternion_list<S>(std::string_view);     \
    template std::string format_scalar<S>(const S&);                              \
    template std::string format_quaternion<S>(const Quat<S>&);                    \
    template std::string format_polynomial<S>(const QPolynomial<S>&);

QUATPOLY_INSTANTIATE(Rational)
QUATPOLY_INSTANTIATE(double)

} // namespace quatpoly

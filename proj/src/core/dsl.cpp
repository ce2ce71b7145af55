#include "bqr/dsl.hpp"

#include "json.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace bqr {

DslError::DslError(const std::string& msg, SourceSpan span)
    : std::runtime_error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + msg),
      msg_(msg),
      span_(span) {}

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok { ident, string, number, punct, end };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0, line = 1, col = 1;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        SourceSpan sp{line, col, i, 1};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            sp.length = j - i;
            out.push_back({Tok::ident, std::string(src.substr(i, j - i)), sp});
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            sp.length = j - i;
            out.push_back({Tok::number, std::string(src.substr(i, j - i)), sp});
            advance(j - i);
        } else if (c == '"') {
            std::size_t j = i + 1;
            while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
            if (j >= src.size() || src[j] != '"') {
                sp.length = j - i;
                throw DslError("unterminated string", sp);
            }
            sp.length = j + 1 - i;
            out.push_back({Tok::string, std::string(src.substr(i + 1, j - i - 1)), sp});
            advance(j + 1 - i);
        } else if (std::string_view("{}();:,.|+-*/=").find(c) != std::string_view::npos) {
            out.push_back({Tok::punct, std::string(1, c), sp});
            advance(1);
        } else {
            throw DslError(std::string("unexpected character '") + c + "'", sp);
        }
    }
    out.push_back({Tok::end, "", SourceSpan{line, col, i, 0}});
    return out;
}

// ---------------------------------------------------------------- AST

struct Atom {  // coefficient * name or coefficient * (lincomb)
    Rational coef{1};
    std::string name;
    SourceSpan span;
    std::vector<Atom> group;  // non-empty for a parenthesised combination
};
using LinComb = std::vector<Atom>;

struct BiTerm {
    Rational coef{1};
    LinComb first, second;
};
using Bilin = std::vector<BiTerm>;

struct RelationAst {
    Bilin left, right;
};

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    const Token& peek() const { return toks_[pos_]; }
    bool is(const char* p) const { return peek().kind == Tok::punct && peek().text == p; }
    bool is_kw(const char* k) const { return peek().kind == Tok::ident && peek().text == k; }
    Token take() { return toks_[pos_++]; }

    Token expect(const char* p) {
        if (!is(p)) throw DslError(std::string("expected '") + p + "'" + found(), peek().span);
        return take();
    }
    std::string found() const {
        if (peek().kind == Tok::end) return ", found end of input";
        return ", found '" + peek().text + "'";
    }
    Token name() {
        if (peek().kind != Tok::ident && peek().kind != Tok::string)
            throw DslError("expected a name" + found(), peek().span);
        return take();
    }

    Rational coefficient() {
        // [sign] [p[/q] *]
        Rational c(1);
        if (peek().kind == Tok::number) {
            Token n = take();
            std::string text = n.text;
            if (is("/")) {
                take();
                if (peek().kind != Tok::number) throw DslError("expected a denominator" + found(), peek().span);
                text += "/" + take().text;
            }
            try {
                c = Rational::parse(text);
            } catch (const MathError& e) {
                throw DslError(e.what(), n.span);
            }
            expect("*");
        }
        return c;
    }

    Atom atom(const Rational& sign) {
        Atom a;
        a.coef = sign * coefficient();
        a.span = peek().span;
        if (is("(")) {
            take();
            a.group = lincomb();
            if (a.group.empty()) throw DslError("empty combination", a.span);
            expect(")");
        } else {
            Token n = name();
            a.name = n.text;
            a.span = n.span;
        }
        return a;
    }

    LinComb lincomb() {
        LinComb out;
        Rational sign(1);
        if (is("-")) {
            take();
            sign = Rational(-1);
        } else if (is("+")) {
            take();
        }
        out.push_back(atom(sign));
        while (is("+") || is("-")) {
            sign = take().text == "-" ? Rational(-1) : Rational(1);
            out.push_back(atom(sign));
        }
        return out;
    }

    Bilin bilin() {
        Bilin out;
        if (peek().kind == Tok::number && peek().text == "0" &&
            (toks_[pos_ + 1].text == "|" || toks_[pos_ + 1].text == ")")) {
            take();
            return out;
        }
        Rational sign(1);
        if (is("-")) {
            take();
            sign = Rational(-1);
        } else if (is("+")) {
            take();
        }
        while (true) {
            BiTerm t;
            t.coef = sign * coefficient();
            t.first = {atom(Rational(1))};
            expect(".");
            t.second = {atom(Rational(1))};
            out.push_back(std::move(t));
            if (is("+") || is("-")) {
                sign = take().text == "-" ? Rational(-1) : Rational(1);
                continue;
            }
            break;
        }
        return out;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

struct Resolver {
    std::vector<std::string> generators;
    std::map<std::string, Vector> names;

    Vector eval(const LinComb& c) const {
        Vector v(generators.size());
        for (const Atom& a : c) {
            Vector part;
            if (!a.group.empty()) {
                part = eval(a.group);
            } else {
                auto it = names.find(a.name);
                if (it == names.end()) throw DslError("unknown identifier '" + a.name + "'", a.span);
                part = it->second;
            }
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!part[i].is_zero()) v[i] += Scalar(a.coef) * part[i];
        }
        return v;
    }

    Matrix eval(const Bilin& b) const {
        const std::size_t m = generators.size();
        Matrix out(m, m);
        for (const BiTerm& t : b) {
            Vector u = eval(t.first), w = eval(t.second);
            for (std::size_t i = 0; i < m; ++i) {
                if (u[i].is_zero()) continue;
                for (std::size_t j = 0; j < m; ++j)
                    if (!w[j].is_zero()) out(i, j) += Scalar(t.coef) * u[i] * w[j];
            }
        }
        return out;
    }
};

}  // namespace

ParseResult parse_type(std::string_view text) {
    Parser p(text);
    if (!p.is_kw("type")) throw DslError("expected 'type'" + p.found(), p.peek().span);
    p.take();
    Token type_name = p.name();
    p.expect("{");

    std::vector<Token> gens;
    std::optional<LinComb> star;
    std::vector<std::pair<Token, LinComb>> aux;
    std::vector<RelationAst> relations;
    std::set<std::string> sections;
    SourceSpan open_span = p.peek().span;

    while (!p.is("}")) {
        if (p.peek().kind == Tok::end) throw DslError("missing '}'", p.peek().span);
        if (p.peek().kind != Tok::ident) throw DslError("expected a section name" + p.found(), p.peek().span);
        Token sec = p.take();
        if (!sections.insert(sec.text).second) throw DslError("duplicate section '" + sec.text + "'", sec.span);
        p.expect(":");
        if (sec.text == "generators") {
            gens.push_back(p.name());
            while (p.is(",")) {
                p.take();
                gens.push_back(p.name());
            }
        } else if (sec.text == "star") {
            star = p.lincomb();
        } else if (sec.text == "aux") {
            while (p.peek().kind == Tok::ident || p.peek().kind == Tok::string) {
                Token n = p.name();
                p.expect("=");
                aux.emplace_back(n, p.lincomb());
                if (!p.is(",")) break;
                p.take();
            }
        } else if (sec.text == "relations") {
            while (p.is("(")) {
                p.take();
                RelationAst r;
                r.left = p.bilin();
                p.expect("|");
                r.right = p.bilin();
                p.expect(")");
                relations.push_back(std::move(r));
            }
            if (relations.empty()) throw DslError("expected '('" + p.found(), p.peek().span);
        } else {
            throw DslError("unknown section '" + sec.text + "'", sec.span);
        }
        if (p.is(";")) p.take();
        else if (!p.is("}")) throw DslError("expected ';' or '}'" + p.found(), p.peek().span);
    }
    p.take();
    if (p.peek().kind != Tok::end) throw DslError("trailing input after '}'", p.peek().span);
    if (gens.empty()) throw DslError("missing generators section", open_span);

    Resolver res;
    for (const auto& g : gens) {
        if (res.names.count(g.text)) throw DslError("duplicate generator '" + g.text + "'", g.span);
        res.names[g.text] = unit_vector(gens.size(), res.generators.size());
        res.generators.push_back(g.text);
    }
    std::vector<AuxOperation> aux_ops;
    for (const auto& [n, c] : aux) {
        if (res.names.count(n.text)) throw DslError("name '" + n.text + "' is already defined", n.span);
        Vector v = res.eval(c);
        res.names[n.text] = v;
        aux_ops.push_back({n.text, v});
    }
    std::optional<Vector> star_vec;
    if (star) star_vec = res.eval(*star);
    std::vector<RelationElement> rels;
    for (const auto& r : relations) rels.push_back({res.eval(r.left), res.eval(r.right)});

    TypePresentation t(type_name.text, res.generators, star_vec, rels, aux_ops);
    t.set_dual(!star_vec.has_value());
    ValidationReport rep = validate(t);
    return {std::move(t), std::move(rep)};
}

TypePresentation parse_valid_type(std::string_view text) {
    ParseResult r = parse_type(text);
    if (!r.report.valid) {
        std::string why = r.report.notes.empty() ? "invalid presentation" : r.report.notes.front();
        throw DslError("invalid presentation: " + why, SourceSpan{1, 1, 0, text.size()});
    }
    return std::move(r.type);
}

// ---------------------------------------------------------------- serialization

namespace {

bool plain_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::string quoted(const std::string& s) { return plain_identifier(s) ? s : "\"" + s + "\""; }

// Appends " + c*term" with the sign folded in; first term has no leading "+".
void append_term(std::string& out, const Scalar& c, const std::string& term) {
    const Rational& r = c.rational();
    bool neg = r.sign() < 0;
    Rational a = neg ? -r : r;
    if (out.empty())
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    if (!a.is_one()) out += a.str() + "*";
    out += term;
}

std::string lincomb_text(const TypePresentation& t, const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) append_term(out, v[i], quoted(t.generators()[i]));
    return out.empty() ? "0" : out;
}

std::string bilin_text(const TypePresentation& t, const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero())
                append_term(out, m(i, j), quoted(t.generators()[i]) + "." + quoted(t.generators()[j]));
    return out.empty() ? "0" : out;
}

}  // namespace

std::string relation_text(const TypePresentation& t, const RelationElement& r) {
    return "(" + bilin_text(t, r.left) + " | " + bilin_text(t, r.right) + ")";
}

std::string combination_text(const TypePresentation& t, const Vector& v) { return lincomb_text(t, v); }

namespace {

std::string to_dsl(const TypePresentation& t) {
    std::string out = "type " + quoted(t.name()) + " {\n  generators: ";
    for (std::size_t i = 0; i < t.dim(); ++i) out += (i ? ", " : "") + quoted(t.generators()[i]);
    out += ";\n";
    // Aux operations are written expanded so that their order does not matter.
    if (!t.aux().empty()) {
        out += "  aux: ";
        for (std::size_t i = 0; i < t.aux().size(); ++i)
            out += std::string(i ? ", " : "") + quoted(t.aux()[i].name) + " = " + lincomb_text(t, t.aux()[i].coeffs);
        out += ";\n";
    }
    if (t.star()) out += "  star: " + lincomb_text(t, *t.star()) + ";\n";
    out += "  relations:\n";
    for (const auto& r : t.relations())
        out += "    (" + bilin_text(t, r.left) + " | " + bilin_text(t, r.right) + ")\n";
    out += "}\n";
    return out;
}

using ojson = nlohmann::ordered_json;

ojson vector_json(const Vector& v) {
    ojson a = ojson::array();
    for (const auto& s : v) a.push_back(s.str());
    return a;
}

ojson matrix_json(const Matrix& m) {
    ojson a = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row_vector(i)));
    return a;
}

std::string to_json(const TypePresentation& t) {
    ojson j;
    j["name"] = t.name();
    j["generators"] = t.generators();
    j["star"] = t.star() ? vector_json(*t.star()) : ojson(nullptr);
    ojson aux = ojson::object();
    for (const auto& a : t.aux()) aux[a.name] = vector_json(a.coeffs);
    j["aux"] = aux;
    ojson rels = ojson::array();
    for (const auto& r : t.relations()) {
        ojson e;
        e["L"] = matrix_json(r.left);
        e["R"] = matrix_json(r.right);
        rels.push_back(e);
    }
    j["relations"] = rels;
    return j.dump(2) + "\n";
}

std::string latex_symbol(const std::string& label) {
    static const std::map<std::string, std::string> table = {
        {"lt", "\\prec"}, {"gt", "\\succ"},   {"cir", "\\circ"}, {"bul", "\\bullet"},
        {"lv", "\\dashv"}, {"rv", "\\vdash"}, {"st", "\\star"},  {"m", "\\cdot"}};
    if (label.size() > 2 && label.front() == '(' && label.back() == ')') {
        std::vector<std::string> parts;
        int depth = 0;
        std::string cur;
        for (std::size_t i = 1; i + 1 < label.size(); ++i) {
            char c = label[i];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == '|' && depth == 0) {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        parts.push_back(cur);
        std::string out = "\\left(\\begin{smallmatrix}";
        for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "\\\\ " : "") + latex_symbol(parts[i]);
        return out + "\\end{smallmatrix}\\right)";
    }
    auto it = table.find(label);
    if (it != table.end()) return it->second;
    std::string esc;
    for (char c : label) {
        if (c == '_' || c == '^') esc += '\\';
        esc += c;
    }
    return "\\mathrm{" + esc + "}";
}

std::string latex_side(const TypePresentation& t, const Matrix& m, bool left) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            const Rational& r = m(i, j).rational();
            bool neg = r.sign() < 0;
            Rational a = neg ? -r : r;
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (!a.is_one()) {
                if (a.value().get_den() == 1)
                    out += a.str() + "\\,";
                else
                    out += "\\tfrac{" + a.value().get_num().get_str() + "}{" + a.value().get_den().get_str() + "}";
            }
            std::string a_op = latex_symbol(t.generators()[i]), b_op = latex_symbol(t.generators()[j]);
            out += left ? "(x " + a_op + " y) " + b_op + " z" : "x " + a_op + " (y " + b_op + " z)";
        }
    return out.empty() ? "0" : out;
}

std::string to_latex(const TypePresentation& t) {
    std::string out = "% " + t.name() + ": " + std::to_string(t.relations().size()) + " relations\n";
    out += "\\begin{array}{rcl}\n";
    for (const auto& r : t.relations())
        out += latex_side(t, r.left, true) + " &=& " + latex_side(t, r.right, false) + " \\\\\n";
    out += "\\end{array}\n";
    return out;
}

Vector vector_from_json(const ojson& a, std::size_t m, const char* what) {
    if (!a.is_array() || a.size() != m) throw MathError(std::string("json: ") + what + " has wrong length");
    Vector v;
    for (const auto& e : a) {
        if (!e.is_string()) throw MathError(std::string("json: ") + what + " entries must be strings");
        v.push_back(Scalar(Rational::parse(e.get<std::string>())));
    }
    return v;
}

Matrix matrix_from_json(const ojson& a, std::size_t m) {
    if (!a.is_array() || a.size() != m) throw MathError("json: relation matrix has wrong shape");
    Matrix out(0, m);
    for (const auto& row : a) out.append_row(vector_from_json(row, m, "matrix row"));
    return out;
}

}  // namespace

std::string serialize(const TypePresentation& t, Format format) {
    switch (format) {
        case Format::dsl: return to_dsl(t);
        case Format::json: return to_json(t);
        case Format::latex: return to_latex(t);
    }
    return {};
}

std::string matrix_to_json(const Matrix& m) { return matrix_json(m).dump(); }

TypePresentation type_from_json(std::string_view text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MathError(std::string("json: ") + e.what());
    }
    try {
        std::string name = j.at("name").get<std::string>();
        auto gens = j.at("generators").get<std::vector<std::string>>();
        const std::size_t m = gens.size();
        std::optional<Vector> star;
        if (j.contains("star") && !j.at("star").is_null()) star = vector_from_json(j.at("star"), m, "star");
        std::vector<AuxOperation> aux;
        if (j.contains("aux"))
            for (const auto& [k, v] : j.at("aux").items()) aux.push_back({k, vector_from_json(v, m, "aux")});
        std::vector<RelationElement> rels;
        for (const auto& r : j.at("relations")) rels.push_back({matrix_from_json(r.at("L"), m), matrix_from_json(r.at("R"), m)});
        TypePresentation t(name, gens, star, rels, aux);
        t.set_dual(!star.has_value());
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw MathError(std::string("json: ") + e.what());
    }
}

}  // namespace bqr

#include "heis/expr.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace heis {

namespace {

constexpr int kMaxPermAtomDegree = 8;

struct Token {
    enum class Kind { Ident, Number, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            bump();
        tok_ = Token{Token::Kind::End, "", line_, col_};
        if (pos_ >= text_.size()) return;
        const char c = text_[pos_];
        tok_.line = line_;
        tok_.col = col_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Token::Kind::Number;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                tok_.text += text_[pos_];
                bump();
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok_.kind = Token::Kind::Ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                tok_.text += text_[pos_];
                bump();
            }
            return;
        }
        tok_.kind = Token::Kind::Punct;
        tok_.text = std::string(1, c);
        bump();
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    std::unique_ptr<Expr> run() {
        auto e = parse_sum();
        expect_end();
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& expected) {
        const Token& t = lex_.peek();
        std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
        throw ParseError("expected " + expected + ", got " + got, t.line, t.col);
    }

    void expect_end() {
        if (lex_.peek().kind != Token::Kind::End) fail("end of input or an operator");
    }

    bool eat_punct(char c) {
        if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text[0] == c) {
            lex_.take();
            return true;
        }
        return false;
    }

    void expect_punct(char c) {
        if (!eat_punct(c)) fail(std::string("'") + c + "'");
    }

    int expect_int() {
        if (lex_.peek().kind != Token::Kind::Number) fail("an integer");
        return std::stoi(lex_.take().text);
    }

    std::unique_ptr<Expr> parse_sum() {
        auto e = parse_product();
        while (true) {
            if (eat_punct('+'))
                e = binary('+', std::move(e), parse_product());
            else if (eat_punct('-'))
                e = binary('-', std::move(e), parse_product());
            else
                return e;
        }
    }

    std::unique_ptr<Expr> parse_product() {
        auto e = parse_factor();
        while (true) {
            if (eat_punct('#'))
                e = binary('#', std::move(e), parse_factor());
            else if (eat_punct('*'))
                e = binary('*', std::move(e), parse_factor());
            else if (eat_punct('.'))
                e = binary('.', std::move(e), parse_factor());
            else
                return e;
        }
    }

    static std::unique_ptr<Expr> binary(char op, std::unique_ptr<Expr> l,
                                        std::unique_ptr<Expr> r) {
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::Binary;
        e->op = op;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }

    std::unique_ptr<Expr> parse_factor() {
        if (eat_punct('(')) {
            auto e = parse_sum();
            expect_punct(')');
            return e;
        }
        if (eat_punct('-')) {
            auto minus_one = std::make_unique<Expr>();
            minus_one->kind = Expr::Kind::Literal;
            minus_one->literal = -1;
            return binary('*', std::move(minus_one), parse_factor());
        }
        if (lex_.peek().kind == Token::Kind::Number) {
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Literal;
            Integer num(lex_.take().text);
            if (eat_punct('/')) {
                if (lex_.peek().kind != Token::Kind::Number) fail("a denominator");
                Integer den(lex_.take().text);
                if (den == 0) fail("a nonzero denominator");
                e->literal = Rational(num, den);
            } else {
                e->literal = Rational(num);
            }
            return e;
        }
        if (lex_.peek().kind != Token::Kind::Ident)
            fail("an atom (h[...], p[...], X[...], M[...], perm ...), a number, or '('");
        const Token ident = lex_.take();
        const std::string& name = ident.text;
        if (name == "h" || name == "p" || name == "X" || name == "M") {
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Atom;
            e->atom_space = name == "h"   ? Space::H
                            : name == "p" ? Space::P
                            : name == "X" ? Space::X
                                          : Space::M;
            expect_punct('[');
            if (!eat_punct(']')) {
                e->index.push_back(expect_int());
                while (eat_punct(',')) e->index.push_back(expect_int());
                expect_punct(']');
            }
            return e;
        }
        if (name == "perm") {
            if (lex_.peek().kind != Token::Kind::Number) fail("a one-line permutation word");
            const Token word = lex_.take();
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Atom;
            e->atom_space = Space::Perm;
            for (char d : word.text) {
                if (d == '0')
                    throw ParseError("permutation values are 1-based", word.line, word.col);
                e->index.push_back(d - '0');
            }
            return e;
        }
        static const std::set<std::string> funcs = {"delta",   "delta_heis", "antipode",
                                                    "pi",      "psi",        "psi_inv",
                                                    "phi"};
        if (funcs.count(name)) {
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Call;
            e->func = name;
            expect_punct('(');
            e->arg = parse_sum();
            if (eat_punct(',')) e->param = expect_int();
            expect_punct(')');
            return e;
        }
        throw ParseError("unknown name '" + name + "'", ident.line, ident.col);
    }

    Lexer lex_;
};

std::string index_str(const std::vector<int>& index) {
    std::string s = "[";
    for (size_t i = 0; i < index.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(index[i]);
    }
    return s + "]";
}

} // namespace

std::string space_name(Space s) {
    switch (s) {
        case Space::Scalar: return "scalar";
        case Space::H: return "h";
        case Space::P: return "p";
        case Space::X: return "X";
        case Space::M: return "M";
        case Space::Perm: return "perm";
    }
    return "?";
}

std::unique_ptr<Expr> parse(const std::string& text) { return Parser(text).run(); }

std::string print_expr(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Literal:
            return rational_str(e.literal);
        case Expr::Kind::Atom:
            if (e.atom_space == Space::Perm) {
                std::string s = "perm ";
                for (int v : e.index) s += std::to_string(v);
                return s;
            }
            return space_name(e.atom_space) + index_str(e.index);
        case Expr::Kind::Binary: {
            auto wrap = [](const Expr& sub) {
                std::string s = print_expr(sub);
                if (sub.kind == Expr::Kind::Binary) return "(" + s + ")";
                return s;
            };
            return wrap(*e.lhs) + " " + std::string(1, e.op) + " " + wrap(*e.rhs);
        }
        case Expr::Kind::Call: {
            std::string s = e.func + "(" + print_expr(*e.arg);
            if (e.param) s += ", " + std::to_string(*e.param);
            return s + ")";
        }
    }
    return "";
}

namespace {

Value scalar_value(Rational q) {
    Value v;
    v.space = Space::Scalar;
    v.scalar = std::move(q);
    return v;
}

// Promotes a scalar to c times the unit of the target space.
Value promote(const Value& v, Space target) {
    Value out;
    out.space = target;
    switch (target) {
        case Space::H: out.sym = SymElem(SymBasis::H, LinearCombo<Partition>(Partition(), v.scalar)); break;
        case Space::P: out.sym = SymElem(SymBasis::P, LinearCombo<Partition>(Partition(), v.scalar)); break;
        case Space::X: out.nsym = NSymElem(LinearCombo<Composition>(Composition(), v.scalar)); break;
        case Space::M: out.qsym = QSymElem(LinearCombo<Composition>(Composition(), v.scalar)); break;
        case Space::Perm: out.perm = PermElem(LinearCombo<Permutation>(Permutation(), v.scalar)); break;
        default: out = v;
    }
    return out;
}

[[noreturn]] void type_error(const std::string& op, const Value& a, const Value& b) {
    throw TypeError("operator '" + op + "' cannot combine " + space_name(a.space) +
                    (a.tensor ? " tensor" : "") + " with " + space_name(b.space) +
                    (b.tensor ? " tensor" : ""));
}

Value eval_binary(char op, Value a, Value b) {
    const std::string ops(1, op);
    if (op == '+' || op == '-') {
        if (a.space == Space::Scalar && b.space != Space::Scalar && !b.tensor)
            a = promote(a, b.space);
        if (b.space == Space::Scalar && a.space != Space::Scalar && !a.tensor)
            b = promote(b, a.space);
        if (a.space != b.space || a.tensor != b.tensor) type_error(ops, a, b);
        Value out = a;
        const Rational sign = op == '+' ? 1 : -1;
        switch (a.space) {
            case Space::Scalar: out.scalar = a.scalar + sign * b.scalar; break;
            case Space::H:
            case Space::P:
                if (a.tensor) {
                    out.sym_tensor = a.sym_tensor;
                    out.sym_tensor += sign == 1 ? b.sym_tensor : Rational(-1) * b.sym_tensor;
                } else {
                    out.sym = sign == 1 ? a.sym + b.sym : a.sym - b.sym;
                }
                break;
            case Space::X:
                if (a.tensor)
                    out.nsym_tensor = sign == 1 ? a.nsym_tensor + b.nsym_tensor
                                                : a.nsym_tensor - b.nsym_tensor;
                else
                    out.nsym = sign == 1 ? a.nsym + b.nsym : a.nsym - b.nsym;
                break;
            case Space::M:
                if (a.tensor)
                    out.qsym_tensor = sign == 1 ? a.qsym_tensor + b.qsym_tensor
                                                : a.qsym_tensor - b.qsym_tensor;
                else
                    out.qsym = sign == 1 ? a.qsym + b.qsym : a.qsym - b.qsym;
                break;
            case Space::Perm:
                if (a.tensor)
                    out.perm_tensor = sign == 1 ? a.perm_tensor + b.perm_tensor
                                                : a.perm_tensor - b.perm_tensor;
                else
                    out.perm = sign == 1 ? a.perm + b.perm : a.perm - b.perm;
                break;
        }
        return out;
    }

    // Scalar multiplication through '*'.
    if (op == '*' && (a.space == Space::Scalar || b.space == Space::Scalar)) {
        if (b.space == Space::Scalar) std::swap(a, b);
        if (b.space == Space::Scalar) return scalar_value(a.scalar * b.scalar);
        Value out = b;
        switch (b.space) {
            case Space::H:
            case Space::P:
                if (b.tensor) out.sym_tensor *= a.scalar; else out.sym = a.scalar * b.sym;
                break;
            case Space::X:
                if (b.tensor) out.nsym_tensor *= a.scalar; else out.nsym = a.scalar * b.nsym;
                break;
            case Space::M:
                if (b.tensor) out.qsym_tensor *= a.scalar; else out.qsym = a.scalar * b.qsym;
                break;
            case Space::Perm:
                if (b.tensor) out.perm_tensor *= a.scalar; else out.perm = a.scalar * b.perm;
                break;
            default: break;
        }
        return out;
    }

    if (a.tensor || b.tensor) type_error(ops, a, b);
    if (a.space == Space::Scalar && b.space == Space::Scalar)
        return scalar_value(a.scalar * b.scalar);
    if (a.space == Space::Scalar && (op == '#' || op == '.'))
        a = promote(a, b.space);
    if (b.space == Space::Scalar && (op == '#' || op == '.'))
        b = promote(b, a.space);
    if (a.space != b.space) type_error(ops, a, b);

    Value out;
    out.space = a.space;
    switch (a.space) {
        case Space::H:
        case Space::P:
            out.sym = op == '#'   ? heisenberg(a.sym, b.sym)
                      : op == '*' ? external_product(a.sym, b.sym)
                                  : internal_product(a.sym, b.sym);
            return out;
        case Space::X:
            out.nsym = op == '#'   ? heisenberg(a.nsym, b.nsym)
                       : op == '*' ? external_product(a.nsym, b.nsym)
                                   : internal_product(a.nsym, b.nsym);
            return out;
        case Space::M:
            if (op != '*')
                throw TypeError(std::string("operator '") + op +
                                "' is not defined on M; QSym carries coproducts instead");
            out.qsym = product(a.qsym, b.qsym);
            return out;
        case Space::Perm:
            out.perm = op == '#'   ? heisenberg(a.perm, b.perm)
                       : op == '*' ? mr_product(a.perm, b.perm)
                                   : compose_product(a.perm, b.perm);
            return out;
        default:
            type_error(ops, a, b);
    }
}

Value eval_call(const Expr& e) {
    Value v = eval(*e.arg);
    if (v.tensor) throw TypeError(e.func + " expects a plain (non-tensor) argument");
    Value out;
    if (e.func == "pi") {
        if (v.space != Space::X) throw TypeError("pi maps X-space to h-space");
        out.space = Space::H;
        out.sym = project_pi(v.nsym);
        return out;
    }
    if (e.func == "psi" || e.func == "psi_inv") {
        if (v.space != Space::X) throw TypeError(e.func + " acts on X-space");
        out.space = Space::X;
        out.nsym = e.func == "psi" ? iso_psi(v.nsym) : iso_psi_inverse(v.nsym);
        return out;
    }
    if (e.func == "delta") {
        out.tensor = true;
        out.space = v.space;
        switch (v.space) {
            case Space::H:
            case Space::P: out.sym_tensor = coproduct(v.sym); return out;
            case Space::X: out.nsym_tensor = coproduct(v.nsym); return out;
            case Space::Perm: out.perm_tensor = coproduct(v.perm); return out;
            case Space::M: out.qsym_tensor = external_coproduct(v.qsym); return out;
            default: throw TypeError("delta needs an algebra element");
        }
    }
    if (e.func == "delta_heis") {
        if (v.space != Space::M)
            throw TypeError("delta_heis is the Heisenberg coproduct of M-space");
        out.tensor = true;
        out.space = Space::M;
        out.qsym_tensor = heisenberg_coproduct(v.qsym);
        return out;
    }
    if (e.func == "antipode") {
        if (v.space == Space::X) {
            out.space = Space::X;
            out.nsym = antipode_heisenberg(v.nsym);
            return out;
        }
        if (v.space == Space::M) {
            if (!e.param)
                throw TypeError("antipode on M-space needs a truncation parameter: "
                                "antipode(expr, N)");
            out.space = Space::M;
            out.qsym = antipode_heisenberg(v.qsym, *e.param);
            out.truncation = *e.param;
            return out;
        }
        throw TypeError("antipode acts on X-space (exact) or M-space (truncated)");
    }
    if (e.func == "phi") {
        if (!e.param)
            throw TypeError("phi needs a truncation parameter: phi(expr, N)");
        if (v.space == Space::H) {
            out.space = Space::H;
            out.sym = iso_heisenberg_to_internal_truncated(v.sym, *e.param);
            out.truncation = *e.param;
            return out;
        }
        if (v.space == Space::X) {
            out.space = Space::X;
            out.nsym = iso_heisenberg_to_internal_truncated(v.nsym, *e.param);
            out.truncation = *e.param;
            return out;
        }
        throw TypeError("phi acts on h-space or X-space");
    }
    throw TypeError("unknown function " + e.func);
}

} // namespace

Value eval(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Literal:
            return scalar_value(e.literal);
        case Expr::Kind::Atom: {
            Value v;
            v.space = e.atom_space;
            switch (e.atom_space) {
                case Space::H: v.sym = SymElem::h(e.index); break;
                case Space::P: v.sym = SymElem::p(e.index); break;
                case Space::X: v.nsym = NSymElem::X(e.index); break;
                case Space::M: v.qsym = QSymElem::M(e.index); break;
                case Space::Perm:
                    if (static_cast<int>(e.index.size()) > kMaxPermAtomDegree)
                        throw GuardError("permutation atoms are limited to degree " +
                                         std::to_string(kMaxPermAtomDegree));
                    v.perm = PermElem::perm(e.index);
                    break;
                default: break;
            }
            return v;
        }
        case Expr::Kind::Binary:
            return eval_binary(e.op, eval(*e.lhs), eval(*e.rhs));
        case Expr::Kind::Call:
            return eval_call(e);
    }
    throw TypeError("malformed expression tree");
}

namespace {

template <typename B>
std::vector<int> basis_index(const B& b);

template <>
std::vector<int> basis_index(const Partition& b) { return b.parts(); }
template <>
std::vector<int> basis_index(const Composition& b) { return b.parts(); }
template <>
std::vector<int> basis_index(const Permutation& b) { return b.image(); }

template <typename B>
void fill_plain(ResultDoc& doc, const LinearCombo<B>& combo, auto degree_of) {
    std::set<int> degrees;
    for (const auto& [b, c] : combo.terms()) {
        ResultDoc::Term t;
        t.index = basis_index(b);
        t.coeff = c;
        doc.terms.push_back(std::move(t));
        degrees.insert(degree_of(b));
    }
    doc.degrees.assign(degrees.begin(), degrees.end());
}

template <typename B>
void fill_tensor(ResultDoc& doc, const Tensor2<B>& combo, auto degree_of) {
    std::set<int> degrees;
    for (const auto& [lr, c] : combo.terms()) {
        ResultDoc::Term t;
        t.left = basis_index(lr.first);
        t.right = basis_index(lr.second);
        t.coeff = c;
        doc.terms.push_back(std::move(t));
        degrees.insert(degree_of(lr.first) + degree_of(lr.second));
    }
    doc.degrees.assign(degrees.begin(), degrees.end());
}

std::string term_basis_str(const std::string& space, const std::vector<int>& index) {
    if (space == "perm") {
        std::string s = "perm ";
        for (int v : index) s += std::to_string(v);
        return s;
    }
    return space + index_str(index);
}

} // namespace

ResultDoc ResultDoc::from_value(const Value& v) {
    ResultDoc doc;
    doc.space = space_name(v.space);
    doc.tensor = v.tensor;
    doc.truncation = v.truncation;
    auto part_deg = [](const Partition& l) { return l.weight(); };
    auto comp_deg = [](const Composition& a) { return a.weight(); };
    auto perm_deg = [](const Permutation& s) { return s.degree(); };
    switch (v.space) {
        case Space::Scalar: {
            Term t;
            t.coeff = v.scalar;
            if (v.scalar != 0) doc.terms.push_back(std::move(t));
            doc.degrees = {0};
            break;
        }
        case Space::H:
        case Space::P:
            if (v.tensor) fill_tensor(doc, v.sym_tensor, part_deg);
            else fill_plain(doc, v.sym.terms(), part_deg);
            break;
        case Space::X:
            if (v.tensor) fill_tensor(doc, v.nsym_tensor, comp_deg);
            else fill_plain(doc, v.nsym.terms(), comp_deg);
            break;
        case Space::M:
            if (v.tensor) fill_tensor(doc, v.qsym_tensor, comp_deg);
            else fill_plain(doc, v.qsym.terms(), comp_deg);
            break;
        case Space::Perm:
            if (v.tensor) fill_tensor(doc, v.perm_tensor, perm_deg);
            else fill_plain(doc, v.perm.terms(), perm_deg);
            break;
    }
    return doc;
}

std::string ResultDoc::to_text() const {
    std::ostringstream os;
    os << "space: " << space << (tensor ? " (x) " + space : "") << "\n";
    if (truncation) os << "truncated at degree " << *truncation << "\n";
    if (terms.empty()) {
        os << "0\n";
        return os.str();
    }
    for (const auto& t : terms) {
        os << rational_str(t.coeff) << " * ";
        if (tensor)
            os << term_basis_str(space, t.left) << " (x) " << term_basis_str(space, t.right);
        else if (space == "scalar")
            os << "1";
        else
            os << term_basis_str(space, t.index);
        os << "\n";
    }
    return os.str();
}

std::string ResultDoc::to_json() const {
    nlohmann::ordered_json j;
    j["space"] = tensor ? space + "x" + space : space;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : terms) {
        nlohmann::ordered_json jt;
        if (tensor) {
            jt["index"] = {{"left", t.left}, {"right", t.right}};
        } else {
            jt["index"] = t.index;
        }
        jt["coeff"] = rational_repr(t.coeff);
        j["terms"].push_back(std::move(jt));
    }
    nlohmann::ordered_json meta;
    meta["degrees"] = degrees;
    if (truncation) meta["truncation"] = *truncation;
    j["meta"] = std::move(meta);
    return j.dump(2);
}

} // namespace heis

#pragma once

#include "heis/permalg.hpp"
#include "heis/qsymfn.hpp"
#include "heis/symfn.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace heis {

enum class Space { Scalar, H, P, X, M, Perm };

std::string space_name(Space s);

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line, col;
};

struct TypeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Expr {
    enum class Kind { Literal, Atom, Binary, Call };

    Kind kind = Kind::Literal;
    Rational literal;                    // Literal
    Space atom_space = Space::Scalar;    // Atom
    std::vector<int> index;              // Atom
    char op = 0;                         // Binary: '#','*','.','+','-'
    std::unique_ptr<Expr> lhs, rhs;      // Binary
    std::string func;                    // Call
    std::unique_ptr<Expr> arg;           // Call
    std::optional<int> param;            // Call truncation parameter
};

std::unique_ptr<Expr> parse(const std::string& text);
std::string print_expr(const Expr& e);

// Evaluation result: exactly one payload is active, selected by
// (space, tensor).
struct Value {
    Space space = Space::Scalar;
    bool tensor = false;
    Rational scalar;
    SymElem sym{SymBasis::H};
    NSymElem nsym;
    QSymElem qsym;
    PermElem perm;
    SymTensor sym_tensor;
    NSymTensor nsym_tensor;
    QSymTensor qsym_tensor;
    PermTensor perm_tensor;
    std::optional<int> truncation;
};

Value eval(const Expr& e);

// Canonically ordered list of (index, coefficient) pairs with metadata; the
// single exchange format of the CLI.
struct ResultDoc {
    struct Term {
        std::vector<int> index;             // plain spaces
        std::vector<int> left, right;       // tensor spaces
        Rational coeff;
    };
    std::string space;
    bool tensor = false;
    std::vector<Term> terms;
    std::vector<int> degrees;
    std::optional<int> truncation;

    static ResultDoc from_value(const Value& v);
    std::string to_text() const;
    std::string to_json() const;
};

} // namespace heis

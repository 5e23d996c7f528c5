#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heis/expr.hpp"

using namespace heis;

namespace {
Value eval_str(const std::string& s) { return eval(*parse(s)); }
} // namespace

TEST_CASE("parsing") {
    SUBCASE("atoms and operators") {
        const auto e = parse("h[2,1] # h[3]");
        REQUIRE(e->kind == Expr::Kind::Binary);
        CHECK(e->op == '#');
        CHECK(e->lhs->index == std::vector<int>{2, 1});
        CHECK(e->rhs->index == std::vector<int>{3});
    }
    SUBCASE("permutation atoms") {
        const auto e = parse("perm 52413");
        CHECK(e->atom_space == Space::Perm);
        CHECK(e->index == std::vector<int>{5, 2, 4, 1, 3});
    }
    SUBCASE("whitespace insensitivity") {
        CHECK(print_expr(*parse("h[2,1]#h[3]")) == print_expr(*parse(" h[2,1]  #  h[3] ")));
    }
    SUBCASE("product operators share one level, left associative") {
        CHECK(print_expr(*parse("h[1] # h[2] * h[3]")) == "(h[1] # h[2]) * h[3]");
    }
    SUBCASE("errors carry positions and expectations") {
        try {
            parse("h[2,");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("expected an integer") != std::string::npos);
            CHECK(e.line == 1);
            CHECK(e.col == 5);
        }
        CHECK_THROWS_AS(parse("q[2]"), ParseError);
        CHECK_THROWS_AS(parse("h[2] h[3]"), ParseError);
    }
    SUBCASE("print-parse idempotence on fixtures") {
        const std::vector<std::string> fixtures = {
            "h[2,1] # h[3]",
            "perm 12 # perm 132",
            "delta(perm 52413)",
            "antipode(M[1], 3)",
            "pi(psi(X[1,1]))",
            "1/2 * p[1,1] + p[2] . p[2]",
            "phi(X[3] # X[3], 9)",
        };
        for (const std::string& s : fixtures) {
            const std::string once = print_expr(*parse(s));
            CHECK(once == print_expr(*parse(once)));
        }
    }
}

TEST_CASE("evaluation and typing") {
    SUBCASE("worked example") {
        const Value v = eval_str("h[2,1] # h[3]");
        CHECK(v.space == Space::H);
        CHECK(v.sym.terms().size() == 6);
    }
    SUBCASE("type errors") {
        CHECK_THROWS_AS(eval_str("h[2] * X[2]"), TypeError);
        CHECK_THROWS_AS(eval_str("h[2] + p[2]"), TypeError);
        CHECK_THROWS_AS(eval_str("M[1] # M[1]"), TypeError);
        CHECK_THROWS_AS(eval_str("antipode(M[1])"), TypeError);
        CHECK_THROWS_AS(eval_str("phi(h[1])"), TypeError);
        CHECK_THROWS_AS(eval_str("antipode(h[1])"), TypeError);
    }
    SUBCASE("size guard on permutation atoms") {
        CHECK_THROWS_AS(eval_str("perm 123456789"), GuardError);
    }
    SUBCASE("scalars promote to units") {
        CHECK(eval_str("2 * h[1] + h[1]").sym == Rational(3) * SymElem::h({1}));
        CHECK(eval_str("1/2 * p[1,1]").sym ==
              Rational(1, 2) * SymElem::p({1, 1}));
        CHECK(eval_str("1 # X[2]").nsym == NSymElem::X({2}));
        CHECK(eval_str("h[1] - h[1]").sym.is_zero());
    }
    SUBCASE("unary functions dispatch") {
        CHECK(eval_str("pi(X[1,2])").sym == SymElem::h({2, 1}));
        CHECK(eval_str("psi_inv(psi(X[2,1]))").nsym == NSymElem::X({2, 1}));
        CHECK(eval_str("antipode(X[1])").nsym == Rational(-1) * NSymElem::X({1}));
        CHECK(eval_str("phi(h[], 3)").sym ==
              SymElem::one(SymBasis::H) + SymElem::h({1}) + SymElem::h({2}) +
                  SymElem::h({3}));
        CHECK(eval_str("delta(p[3])").sym_tensor.size() == 2);
        CHECK(eval_str("delta_heis(M[1])").qsym_tensor.size() == 3);
    }
}

TEST_CASE("result documents") {
    SUBCASE("text output lists terms in canonical order") {
        const ResultDoc doc = ResultDoc::from_value(eval_str("h[1] # h[1]"));
        CHECK(doc.to_text() == "space: h\n1 * h[1]\n1 * h[1,1]\n");
    }
    SUBCASE("json is canonical and byte-stable") {
        const ResultDoc doc = ResultDoc::from_value(eval_str("perm 1 * perm 1"));
        const std::string once = doc.to_json();
        CHECK(once == ResultDoc::from_value(eval_str("perm 1 * perm 1")).to_json());
        CHECK(once.find("\"coeff\": \"1/1\"") != std::string::npos);
        CHECK(once.find("\"space\": \"perm\"") != std::string::npos);
        CHECK(once.find("\"degrees\"") != std::string::npos);
    }
    SUBCASE("tensor documents") {
        const ResultDoc doc = ResultDoc::from_value(eval_str("delta(X[2])"));
        CHECK(doc.tensor);
        CHECK(doc.terms.size() == 3);
        CHECK(doc.to_json().find("\"left\"") != std::string::npos);
    }
    SUBCASE("truncation metadata") {
        const ResultDoc doc = ResultDoc::from_value(eval_str("antipode(M[1], 3)"));
        REQUIRE(doc.truncation.has_value());
        CHECK(*doc.truncation == 3);
    }
}

#include "tracforge/script.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace tracforge {

namespace {

struct Token {
    enum class Kind { ident, number, punct, end };
    Kind kind = Kind::end;
    std::string text;
    int line = 1, col = 1;
    std::size_t offset = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }
    bool at(const std::string& p) const {
        return tok_.kind != Token::Kind::end && tok_.text == p;
    }
    bool accept(const std::string& p) {
        if (at(p)) {
            advance();
            return true;
        }
        return false;
    }
    Token expect(const std::string& p) {
        if (!at(p)) fail("expected '" + p + "'");
        return next();
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ScriptError(tok_.line, tok_.col, msg);
    }
    const std::string& source() const { return s_; }

private:
    void advance() {
        while (i_ < s_.size()) {
            char c = s_[i_];
            if (c == '#') {
                while (i_ < s_.size() && s_[i_] != '\n') ++i_;
            } else if (c == '\n') {
                ++i_;
                ++line_;
                col_ = 1;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++i_;
                ++col_;
            } else {
                break;
            }
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        tok_.offset = i_;
        if (i_ >= s_.size()) return;
        char c = s_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                bump();
            tok_.kind = Token::Kind::ident;
            tok_.text = s_.substr(start, i_ - start);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) bump();
            tok_.kind = Token::Kind::number;
            tok_.text = s_.substr(start, i_ - start);
        } else {
            std::size_t start = i_;
            bump();
            if (c == '=' && i_ < s_.size() && s_[i_] == '=') bump();
            tok_.kind = Token::Kind::punct;
            tok_.text = s_.substr(start, i_ - start);
        }
    }
    void bump() {
        ++i_;
        ++col_;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class ScriptParser {
public:
    explicit ScriptParser(const std::string& text) : lex_(text) {}

    Script parse() {
        Script s;
        while (lex_.peek().kind != Token::Kind::end) s.stmts.push_back(parse_statement());
        return s;
    }

private:
    Lexer lex_;

    Statement parse_statement() {
        Token t = lex_.peek();
        Statement st;
        st.line = t.line;
        st.col = t.col;
        if (t.text == "ring") {
            lex_.next();
            st.kind = Statement::Kind::ring_decl;
            parse_ring_decl(st);
        } else if (t.text == "ideal") {
            lex_.next();
            st.kind = Statement::Kind::bind_ideal;
            st.name = expect_ident();
            lex_.expect("=");
            st.rhs = parse_expr();
        } else if (t.text == "module") {
            lex_.next();
            st.kind = Statement::Kind::bind_module;
            st.name = expect_ident();
            lex_.expect("=");
            st.rhs = parse_module_expr();
        } else if (t.text == "print") {
            lex_.next();
            st.kind = Statement::Kind::print_stmt;
            st.rhs = parse_expr();
        } else if (t.text == "assert") {
            lex_.next();
            st.kind = Statement::Kind::assert_stmt;
            st.rhs = parse_expr();
            if (lex_.accept("==")) {
                st.rhs2 = parse_expr();
                st.has_rhs2 = true;
            }
        } else {
            lex_.fail("expected a statement (ring/ideal/module/print/assert)");
        }
        lex_.expect(";");
        return st;
    }

    std::string expect_ident() {
        if (lex_.peek().kind != Token::Kind::ident) lex_.fail("expected identifier");
        return lex_.next().text;
    }

    void parse_ring_decl(Statement& st) {
        st.name = expect_ident();
        lex_.expect("=");
        if (lex_.at("GF")) {
            lex_.next();
            lex_.expect("(");
            if (lex_.peek().kind != Token::Kind::number) lex_.fail("expected a prime");
            st.field_spec = "gf:" + lex_.next().text;
            lex_.expect(")");
        } else if (lex_.at("QQ")) {
            lex_.next();
            st.field_spec = "qq";
        }
        lex_.expect("[");
        st.vars.push_back(expect_ident());
        while (lex_.accept(",")) st.vars.push_back(expect_ident());
        lex_.expect("]");
        if (lex_.accept("/")) {
            lex_.expect("(");
            st.defining = parse_raw_list(")");
            lex_.expect(")");
        }
        if (lex_.at("weights")) {
            lex_.next();
            lex_.expect("(");
            for (;;) {
                bool negative = lex_.accept("-");
                if (lex_.peek().kind != Token::Kind::number) lex_.fail("expected weight");
                std::int64_t w = std::stoll(lex_.next().text);
                st.weights.push_back(negative ? -w : w);
                if (!lex_.accept(",")) break;
            }
            lex_.expect(")");
        }
        if (lex_.at("order")) {
            lex_.next();
            st.order_spec = expect_ident();
        }
    }

    // raw text entries separated by ',' at depth zero, up to `close`
    std::vector<std::string> parse_raw_list(const std::string& close) {
        std::vector<std::string> out;
        if (lex_.at(close)) return out;
        for (;;) {
            out.push_back(parse_raw_text(close));
            if (!lex_.accept(",")) break;
        }
        return out;
    }

    std::string parse_raw_text(const std::string& close) {
        std::size_t start = lex_.peek().offset;
        std::size_t end = start;
        int depth = 0;
        for (;;) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Kind::end) lex_.fail("unterminated expression");
            if (depth == 0 && (t.text == "," || t.text == close)) break;
            if (t.text == "(" || t.text == "[") ++depth;
            if (t.text == ")" || t.text == "]") --depth;
            Token taken = lex_.next();
            end = taken.offset + taken.text.size();
        }
        if (end == start) lex_.fail("expected an expression");
        return lex_.source().substr(start, end - start);
    }

    std::vector<std::vector<std::string>> parse_matrix() {
        lex_.expect("[");
        std::vector<std::vector<std::string>> rows;
        for (;;) {
            lex_.expect("[");
            rows.push_back(parse_raw_list("]"));
            lex_.expect("]");
            if (!lex_.accept(",")) break;
        }
        lex_.expect("]");
        return rows;
    }

    Expr parse_module_expr() {
        Token t = lex_.peek();
        Expr e;
        e.line = t.line;
        e.col = t.col;
        if (t.text == "coker" || t.text == "submodule") {
            lex_.next();
            e.kind = Expr::Kind::matrix;
            e.text = t.text;
            e.rows = parse_matrix();
            return e;
        }
        return parse_expr();
    }

    Expr parse_expr() {
        Token t = lex_.peek();
        Expr e;
        e.line = t.line;
        e.col = t.col;
        if (t.text == "(") {
            lex_.next();
            e.kind = Expr::Kind::ideal_list;
            e.entries = parse_raw_list(")");
            lex_.expect(")");
            return e;
        }
        if (t.text == "true" || t.text == "false") {
            lex_.next();
            e.kind = Expr::Kind::boolean;
            e.bool_value = t.text == "true";
            return e;
        }
        if (t.kind == Token::Kind::ident) {
            // lookahead: call or bare name / polynomial
            Token name = lex_.next();
            if (lex_.at("(")) {
                lex_.next();
                e.kind = Expr::Kind::call;
                e.text = name.text;
                if (!lex_.at(")")) {
                    e.args.push_back(parse_arg());
                    while (lex_.accept(",")) e.args.push_back(parse_arg());
                }
                lex_.expect(")");
                return e;
            }
            e.kind = Expr::Kind::raw;
            e.text = name.text;
            // continue consuming a polynomial expression if one follows
            if (lex_.at("^") || lex_.at("*") || lex_.at("+") || lex_.at("-")) {
                std::size_t start = name.offset;
                std::size_t end = name.offset + name.text.size();
                int depth = 0;
                for (;;) {
                    const Token& u = lex_.peek();
                    if (u.kind == Token::Kind::end) break;
                    if (depth == 0 && (u.text == "," || u.text == ")" || u.text == ";" ||
                                       u.text == "]" || u.text == "=="))
                        break;
                    if (u.text == "(") ++depth;
                    if (u.text == ")") --depth;
                    Token taken = lex_.next();
                    end = taken.offset + taken.text.size();
                }
                e.text = lex_.source().substr(start, end - start);
            }
            return e;
        }
        // untagged polynomial text (e.g. starts with a digit or '-')
        e.kind = Expr::Kind::raw;
        e.text = parse_raw_text(";");
        return e;
    }

    Expr parse_arg() {
        Token t = lex_.peek();
        if (t.text == "(" || t.text == "true" || t.text == "false" ||
            t.kind == Token::Kind::ident) {
            // may still be a polynomial like x^2*y; parse_expr handles the
            // ident-prefix case, '(' means an ideal literal
            if (t.kind == Token::Kind::ident) return parse_expr();
            if (t.text != "(") return parse_expr();
            return parse_expr();
        }
        Expr e;
        e.line = t.line;
        e.col = t.col;
        e.kind = Expr::Kind::raw;
        e.text = parse_raw_text(")");
        return e;
    }
};

MonomialOrder order_from_spec(const std::string& spec, const std::vector<std::int64_t>& weights,
                              int line, int col) {
    bool weighted = false;
    for (auto w : weights)
        if (w != 1) weighted = true;
    if (spec.empty() || spec == "grevlex")
        return weighted ? MonomialOrder::weighted_grevlex(weights) : MonomialOrder::grevlex();
    if (spec == "lex") return MonomialOrder::lex();
    throw ScriptError(line, col, "unknown order '" + spec + "'");
}

Field field_from_spec(const std::string& spec, int line, int col) {
    if (spec == "qq") return Field::rationals();
    if (spec.rfind("gf:", 0) == 0) {
        try {
            return Field::gf(std::stoll(spec.substr(3)));
        } catch (const std::exception& e) {
            throw ScriptError(line, col, e.what());
        }
    }
    throw ScriptError(line, col, "unknown field spec '" + spec + "' (use gf:P or qq)");
}

} // namespace

Script parse_script(const std::string& text) { return ScriptParser(text).parse(); }

// --- evaluation -----------------------------------------------------------

Polynomial EvalState::parse_poly_at(const std::string& text, int line, int col) {
    if (!ring_) throw ScriptError(line, col, "no ring declared");
    try {
        return parse_polynomial(ring_->base(), text);
    } catch (const std::exception& e) {
        throw ScriptError(line, col, e.what());
    }
}

EvalState::Value EvalState::eval_expr(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::boolean:
        return Value{e.bool_value};
    case Expr::Kind::ideal_list: {
        std::vector<Polynomial> gens;
        for (const auto& s : e.entries) {
            Polynomial p = parse_poly_at(s, e.line, e.col);
            if (!p.is_zero()) gens.push_back(std::move(p));
        }
        return Value{Submodule::ideal(ring_, std::move(gens))};
    }
    case Expr::Kind::matrix: {
        if (!ring_) throw ScriptError(e.line, e.col, "no ring declared");
        std::vector<std::vector<Polynomial>> rows;
        for (const auto& r : e.rows) {
            std::vector<Polynomial> row;
            for (const auto& s : r) row.push_back(parse_poly_at(s, e.line, e.col));
            rows.push_back(std::move(row));
        }
        for (const auto& r : rows)
            if (r.size() != rows[0].size())
                throw ScriptError(e.line, e.col, "ragged matrix literal");
        if (e.text == "coker") {
            PolyMatrix A(ring_->base(), static_cast<int>(rows.size()),
                         static_cast<int>(rows[0].size()));
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < rows[i].size(); ++j)
                    A.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
            return Value{FPModule::from_cokernel(ring_, A)};
        }
        // submodule: each row is one generator vector
        std::vector<FreeVector> gens;
        for (auto& r : rows) gens.push_back(FreeVector(r.begin(), r.end()));
        return Value{FPModule::from_submodule(
            Submodule(ring_, static_cast<int>(rows[0].size()), std::move(gens)))};
    }
    case Expr::Kind::raw: {
        auto it = bindings_.find(e.text);
        if (it != bindings_.end()) return it->second;
        bool identifier_like = !e.text.empty() &&
                               e.text.find_first_of("+-*^ ()") == std::string::npos &&
                               !std::isdigit(static_cast<unsigned char>(e.text[0]));
        if (identifier_like && ring_ && ring_->base()->var_index(e.text) < 0)
            throw ScriptError(e.line, e.col, "unknown identifier '" + e.text + "'");
        return Value{parse_poly_at(e.text, e.line, e.col)};
    }
    case Expr::Kind::call:
        break;
    }

    const std::string& fn = e.text;
    auto arity = [&](std::size_t n) {
        if (e.args.size() != n)
            throw ScriptError(e.line, e.col,
                              fn + " expects " + std::to_string(n) + " argument(s)");
    };
    if (!ring_) throw ScriptError(e.line, e.col, "no ring declared");

    if (fn == "free") {
        arity(1);
        return Value{FPModule::free_module(ring_, static_cast<int>(std::stol(e.args[0].text)))};
    }
    if (fn == "syz") {
        arity(1);
        return Value{syzygy_of_residue_field(ring_, static_cast<int>(std::stol(e.args[0].text)))};
    }
    if (fn == "dsum") {
        if (e.args.empty()) throw ScriptError(e.line, e.col, "dsum needs arguments");
        FPModule acc = expect_module(e.args[0]);
        for (std::size_t i = 1; i < e.args.size(); ++i)
            acc = direct_sum(acc, expect_module(e.args[i]));
        return Value{std::move(acc)};
    }
    if (fn == "tensor") {
        arity(2);
        return Value{tensor(expect_module(e.args[0]), expect_module(e.args[1]))};
    }
    if (fn == "trace") {
        arity(1);
        return Value{trace_ideal(expect_module(e.args[0]))};
    }
    if (fn == "closure") {
        arity(2);
        return Value{closure_of_ideal(expect_ideal(e.args[0]), expect_module(e.args[1]))};
    }
    if (fn == "family") {
        std::vector<FPModule> fam;
        for (const auto& a : e.args) fam.push_back(expect_module(a));
        return Value{family_test_ideal(ring_, fam)};
    }
    if (fn == "intersect") {
        arity(2);
        return Value{intersect(expect_ideal(e.args[0]), expect_ideal(e.args[1]))};
    }
    if (fn == "colon") {
        arity(2);
        return Value{colon(expect_ideal(e.args[0]), expect_poly(e.args[1]))};
    }
    if (fn == "socle") {
        arity(0);
        return Value{socle(ring_)};
    }
    if (fn == "annihilator") {
        arity(1);
        FPModule M = expect_module(e.args[0]);
        return Value{annihilator(M.rank(), M.relation_submodule())};
    }
    if (fn == "generates") {
        arity(2);
        return Value{generates(expect_module(e.args[0]), expect_module(e.args[1]))};
    }
    if (fn == "free_summand") {
        arity(1);
        return Value{has_free_summand(expect_module(e.args[0]))};
    }
    if (fn == "m_primary") {
        arity(1);
        return Value{is_m_primary(expect_ideal(e.args[0]))};
    }
    if (fn == "singular_check") {
        arity(1);
        return Value{singular_containment_check(expect_module(e.args[0])).ok};
    }
    if (fn == "radical_member") {
        arity(2);
        return Value{radical_membership(expect_poly(e.args[0]), expect_ideal(e.args[1]))};
    }
    if (fn == "member") {
        arity(2);
        return Value{expect_ideal(e.args[1]).contains(expect_poly(e.args[0]))};
    }
    if (fn == "dim") {
        arity(1);
        return Value{static_cast<long>(krull_dimension(expect_ideal(e.args[0])))};
    }
    if (fn == "hom_gens") {
        arity(1);
        return Value{hom(expect_module(e.args[0]), FPModule::free_module(ring_, 1))};
    }
    throw ScriptError(e.line, e.col, "unknown operation '" + fn + "'");
}

Ideal EvalState::expect_ideal(const Expr& e) {
    Value v = eval_expr(e);
    if (auto* i = std::get_if<Ideal>(&v)) {
        if (i->rank() == 1) return *i;
    }
    if (auto* p = std::get_if<Polynomial>(&v))
        return Submodule::ideal(ring_, {*p});
    throw ScriptError(e.line, e.col, "expected an ideal");
}

FPModule EvalState::expect_module(const Expr& e) {
    Value v = eval_expr(e);
    if (auto* m = std::get_if<FPModule>(&v)) return *m;
    throw ScriptError(e.line, e.col, "expected a module");
}

Polynomial EvalState::expect_poly(const Expr& e) {
    Value v = eval_expr(e);
    if (auto* p = std::get_if<Polynomial>(&v)) return *p;
    throw ScriptError(e.line, e.col, "expected a ring element");
}

namespace {

std::string expr_text(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::raw:
        return e.text;
    case Expr::Kind::boolean:
        return e.bool_value ? "true" : "false";
    case Expr::Kind::ideal_list: {
        std::string s = "(";
        for (std::size_t i = 0; i < e.entries.size(); ++i) {
            if (i) s += ", ";
            s += e.entries[i];
        }
        return s + ")";
    }
    case Expr::Kind::matrix:
        return e.text + " [...]";
    case Expr::Kind::call: {
        std::string s = e.text + "(";
        for (std::size_t i = 0; i < e.args.size(); ++i) {
            if (i) s += ", ";
            s += expr_text(e.args[i]);
        }
        return s + ")";
    }
    }
    return "?";
}

std::string path_for_op(const std::string& fn) {
    if (fn == "trace") return "kernel-of-transpose";
    if (fn == "closure") return "colon-annihilator";
    if (fn == "family") return "trace-intersection";
    if (fn == "socle") return "colon-of-zero";
    if (fn == "hom_gens") return "hom-presentation";
    if (fn == "intersect" || fn == "colon" || fn == "annihilator") return "syzygy-projection";
    if (fn == "generates" || fn == "free_summand") return "trace-generation";
    if (fn == "m_primary" || fn == "dim") return "leading-term-dimension";
    if (fn == "radical_member") return "rabinowitsch";
    if (fn == "singular_check") return "jacobian-radical";
    if (fn == "member") return "normal-form";
    return "direct";
}

} // namespace

ClosureReport EvalState::report_for(const std::string& op_text, Value v, const std::string& path,
                                    double ms) {
    ClosureReport r;
    r.ring_header = ring_ ? ring_->header() : "(no ring)";
    r.op = op_text;
    r.path = path;
    r.millis = ms;
    if (auto* i = std::get_if<Ideal>(&v)) {
        r.gens = canonical_generator_strings(*i);
    } else if (auto* m = std::get_if<FPModule>(&v)) {
        r.label = "value";
        r.gens = {"module rank " + std::to_string(m->rank()) + " with " +
                  std::to_string(m->relations().size()) + " relations"};
    } else if (auto* p = std::get_if<Polynomial>(&v)) {
        r.label = "value";
        r.gens = {to_string(*p)};
    } else if (auto* b = std::get_if<bool>(&v)) {
        r.label = "value";
        r.gens = {*b ? "true" : "false"};
    } else if (auto* n = std::get_if<long>(&v)) {
        r.label = "value";
        r.gens = {std::to_string(*n)};
    } else if (auto* h = std::get_if<HomResult>(&v)) {
        r.label = "matrix";
        for (const auto& mat : h->generators) {
            std::string s = "[";
            for (int i = 0; i < mat.rows(); ++i) {
                if (i) s += ", ";
                s += "[";
                for (int j = 0; j < mat.cols(); ++j) {
                    if (j) s += ", ";
                    s += to_string(mat.at(i, j));
                }
                s += "]";
            }
            s += "]";
            r.gens.push_back(std::move(s));
        }
    }
    return r;
}

void EvalState::execute(const Statement& stmt, EvalOutcome& out) {
    switch (stmt.kind) {
    case Statement::Kind::ring_decl: {
        if (ring_) throw ScriptError(stmt.line, stmt.col, "ring already declared in this scope");
        std::string fs = stmt.field_spec.empty() ? opts_.default_field : stmt.field_spec;
        Field field = field_from_spec(fs, stmt.line, stmt.col);
        std::string os = stmt.order_spec.empty() ? opts_.default_order : stmt.order_spec;
        std::vector<std::int64_t> weights = stmt.weights;
        if (weights.empty()) weights.assign(stmt.vars.size(), 1);
        if (weights.size() != stmt.vars.size())
            throw ScriptError(stmt.line, stmt.col, "weights length mismatch");
        MonomialOrder order = order_from_spec(os, weights, stmt.line, stmt.col);
        PolyRingPtr base;
        try {
            base = PolyRing::make(field, stmt.vars, order, weights);
        } catch (const std::exception& e) {
            throw ScriptError(stmt.line, stmt.col, e.what());
        }
        std::vector<Polynomial> defining;
        for (const auto& s : stmt.defining) {
            Polynomial f;
            try {
                f = parse_polynomial(base, s);
            } catch (const std::exception& e) {
                throw ScriptError(stmt.line, stmt.col, e.what());
            }
            if (!is_homogeneous(f, weights))
                throw ScriptError(stmt.line, stmt.col,
                                  "defining generator '" + s +
                                      "' is not homogeneous for the declared weights");
            defining.push_back(std::move(f));
        }
        try {
            ring_ = QuotientRing::make(base, std::move(defining));
        } catch (const std::exception& e) {
            throw ScriptError(stmt.line, stmt.col, e.what());
        }
        break;
    }
    case Statement::Kind::bind_ideal:
    case Statement::Kind::bind_module: {
        if (bindings_.count(stmt.name))
            throw ScriptError(stmt.line, stmt.col, "name '" + stmt.name + "' already bound");
        Value v = eval_expr(stmt.rhs);
        if (stmt.kind == Statement::Kind::bind_ideal && !std::holds_alternative<Ideal>(v)) {
            if (auto* p = std::get_if<Polynomial>(&v))
                v = Value{Submodule::ideal(ring_, {*p})};
            else
                throw ScriptError(stmt.line, stmt.col, "expected an ideal value");
        }
        if (stmt.kind == Statement::Kind::bind_module && !std::holds_alternative<FPModule>(v))
            throw ScriptError(stmt.line, stmt.col, "expected a module value");
        bindings_.emplace(stmt.name, std::move(v));
        break;
    }
    case Statement::Kind::print_stmt: {
        auto t0 = std::chrono::steady_clock::now();
        Value v = eval_expr(stmt.rhs);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                        .count();
        std::string path = stmt.rhs.kind == Expr::Kind::call ? path_for_op(stmt.rhs.text) : "direct";
        out.reports.push_back(report_for(expr_text(stmt.rhs), std::move(v), path, ms));
        break;
    }
    case Statement::Kind::assert_stmt: {
        ++out.assertions_checked;
        Value lhs = eval_expr(stmt.rhs);
        bool ok = false;
        std::string detail;
        if (!stmt.has_rhs2) {
            auto* b = std::get_if<bool>(&lhs);
            if (!b) throw ScriptError(stmt.line, stmt.col, "bare assert expects a boolean");
            ok = *b;
            detail = ok ? "true" : "false";
        } else {
            Value rhs = eval_expr(stmt.rhs2);
            if (std::holds_alternative<Ideal>(lhs) || std::holds_alternative<Ideal>(rhs)) {
                Ideal a = expect_ideal(stmt.rhs);
                Ideal b = expect_ideal(stmt.rhs2);
                ok = a.equals(b);
                detail = canonical_ideal_string(a) + " vs " + canonical_ideal_string(b);
            } else if (std::holds_alternative<bool>(lhs) && std::holds_alternative<bool>(rhs)) {
                ok = std::get<bool>(lhs) == std::get<bool>(rhs);
                detail = std::string(std::get<bool>(lhs) ? "true" : "false") + " vs " +
                         (std::get<bool>(rhs) ? "true" : "false");
            } else if (std::holds_alternative<long>(lhs) || std::holds_alternative<long>(rhs)) {
                // integer comparisons; a bare numeral evaluates to a constant
                auto as_long = [&](const Value& v) -> long {
                    if (auto* n = std::get_if<long>(&v)) return *n;
                    if (auto* p = std::get_if<Polynomial>(&v)) {
                        if (p->is_zero()) return 0;
                        if (p->is_constant() && p->ring()->field().is_prime_field())
                            return static_cast<long>(std::get<std::int64_t>(p->leading().coef));
                    }
                    throw ScriptError(stmt.line, stmt.col, "incomparable values in assert");
                };
                long a = as_long(lhs), b = as_long(rhs);
                ok = a == b;
                detail = std::to_string(a) + " vs " + std::to_string(b);
            } else if (std::holds_alternative<Polynomial>(lhs) &&
                       std::holds_alternative<Polynomial>(rhs)) {
                Polynomial a = ring_->reduce(std::get<Polynomial>(lhs));
                Polynomial b = ring_->reduce(std::get<Polynomial>(rhs));
                ok = a.equals(b);
                detail = to_string(a) + " vs " + to_string(b);
            } else {
                throw ScriptError(stmt.line, stmt.col, "incomparable values in assert");
            }
        }
        if (!ok) {
            ++out.assertions_failed;
            out.messages.push_back("assertion failed at line " + std::to_string(stmt.line) + ": " +
                                   expr_text(stmt.rhs) + " (" + detail + ")");
        }
        break;
    }
    }
}

EvalOutcome evaluate_script(const Script& s, const EvalOptions& opts) {
    EvalState state(opts);
    EvalOutcome out;
    for (const auto& stmt : s.stmts) state.execute(stmt, out);
    return out;
}

// --- corpus ----------------------------------------------------------------

namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string line_diff(const std::string& expected, const std::string& actual) {
    auto e = split_lines(expected), a = split_lines(actual);
    std::string out;
    std::size_t n = std::max(e.size(), a.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::string* el = i < e.size() ? &e[i] : nullptr;
        const std::string* al = i < a.size() ? &a[i] : nullptr;
        if (el && al && *el == *al) continue;
        out += "  @ line " + std::to_string(i + 1) + "\n";
        if (el) out += "  - " + *el + "\n";
        if (al) out += "  + " + *al + "\n";
    }
    return out;
}

} // namespace

CorpusSummary run_corpus(const std::string& dir, const EvalOptions& opts) {
    namespace fs = std::filesystem;
    CorpusSummary summary;
    std::ostringstream log;

    std::vector<fs::path> cases;
    if (fs::exists(dir)) {
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.path().extension() == ".tfs") cases.push_back(entry.path());
        }
    }
    std::sort(cases.begin(), cases.end());

    for (const auto& path : cases) {
        ++summary.cases;
        fs::path expected_path = path;
        expected_path.replace_extension(".expected");
        std::string case_id = path.stem().string();
        auto t0 = std::chrono::steady_clock::now();
        std::string verdict;
        std::string detail;
        try {
            std::string source = read_file(path);
            std::string expected = read_file(expected_path);
            Script script = parse_script(source);
            EvalOutcome out = evaluate_script(script, opts);
            std::string actual;
            for (std::size_t i = 0; i < out.reports.size(); ++i) {
                if (i) actual += "\n";
                actual += out.reports[i].canonical_text();
            }
            if (out.assertions_failed > 0) {
                verdict = "FAIL";
                for (const auto& m : out.messages) detail += "  " + m + "\n";
            } else if (actual != expected) {
                verdict = "FAIL";
                detail = line_diff(expected, actual);
            } else {
                verdict = "PASS";
            }
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = std::string("  error: ") + e.what() + "\n";
        }
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (verdict == "FAIL") ++summary.failures;
        log << "case " << case_id << ": " << verdict;
        if (opts.timing) log << " (" << static_cast<long>(ms) << " ms)";
        log << "\n";
        if (!detail.empty()) log << detail;
    }
    log << summary.cases << " cases, " << summary.failures << " failures\n";
    summary.text = log.str();
    return summary;
}

} // namespace tracforge

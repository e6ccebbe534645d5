#pragma once

#include "tracforge/closure.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace tracforge {

struct ScriptError : std::runtime_error {
    int line, col;
    ScriptError(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ", col " + std::to_string(c) + ": " +
                             msg),
          line(l), col(c) {}
};

/// Argument or right-hand side of a statement. Polynomial text is kept raw
/// and parsed once a ring is bound.
struct Expr {
    enum class Kind { raw, call, ideal_list, boolean, matrix };
    Kind kind = Kind::raw;
    std::string text;                            // raw | call name
    bool bool_value = false;                     // boolean
    std::vector<Expr> args;                      // call
    std::vector<std::string> entries;            // ideal_list
    std::vector<std::vector<std::string>> rows;  // matrix
    int line = 0, col = 0;
};

struct Statement {
    enum class Kind { ring_decl, bind_ideal, bind_module, print_stmt, assert_stmt };
    Kind kind;
    int line = 0, col = 0;
    std::string name; // bound name for declarations

    // ring declaration parts
    std::string field_spec; // "gf:P" | "qq" | "" (use default)
    std::vector<std::string> vars;
    std::vector<std::string> defining;
    std::vector<std::int64_t> weights;
    std::string order_spec; // "grevlex" | "lex" | ""

    Expr rhs;           // bindings and print
    Expr rhs2;          // assert comparison target
    bool has_rhs2 = false;
};

struct Script {
    std::vector<Statement> stmts;
};

Script parse_script(const std::string& text);

struct EvalOptions {
    std::string default_field = "gf:32003";
    std::string default_order = "grevlex";
    bool timing = false;
};

struct EvalOutcome {
    std::vector<ClosureReport> reports;
    int assertions_checked = 0;
    int assertions_failed = 0;
    std::vector<std::string> messages; // assertion diagnostics, warnings
};

/// Session state for script evaluation and the REPL. One ring per scope;
/// names bind once.
class EvalState {
public:
    explicit EvalState(EvalOptions opts = {}) : opts_(std::move(opts)) {}

    void execute(const Statement& stmt, EvalOutcome& out);
    const QRingPtr& ring() const { return ring_; }

private:
    using Value = std::variant<Ideal, FPModule, Polynomial, bool, long, HomResult>;

    Value eval_expr(const Expr& e);
    Ideal expect_ideal(const Expr& e);
    FPModule expect_module(const Expr& e);
    Polynomial expect_poly(const Expr& e);
    Polynomial parse_poly_at(const std::string& text, int line, int col);
    ClosureReport report_for(const std::string& op_text, Value v, const std::string& path,
                             double ms);

    EvalOptions opts_;
    QRingPtr ring_;
    std::map<std::string, Value> bindings_;
};

/// Parses and evaluates a whole script.
EvalOutcome evaluate_script(const Script& s, const EvalOptions& opts = {});

struct CorpusSummary {
    int cases = 0;
    int failures = 0;
    std::string text; // human-readable run log with one line per case
};

/// Runs every `.tfs` case in the directory against its `.expected` sibling.
CorpusSummary run_corpus(const std::string& dir, const EvalOptions& opts = {});

} // namespace tracforge

#include "tracforge/script.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

// exit contract: 0 success, 1 assertion/corpus failure, 2 parse/usage error
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_script(const std::string& path, const tracforge::EvalOptions& opts) {
    std::string source;
    try {
        source = read_file(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    try {
        tracforge::Script script = tracforge::parse_script(source);
        tracforge::EvalOutcome out = tracforge::evaluate_script(script, opts);
        for (std::size_t i = 0; i < out.reports.size(); ++i) {
            if (i) std::cout << "\n";
            std::cout << out.reports[i].canonical_text();
            if (opts.timing)
                std::cerr << "# " << out.reports[i].op << ": "
                          << static_cast<long>(out.reports[i].millis) << " ms\n";
        }
        for (const auto& m : out.messages) std::cerr << m << "\n";
        return out.assertions_failed > 0 ? kFailed : kOk;
    } catch (const tracforge::ScriptError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}

int run_repl(const tracforge::EvalOptions& opts) {
    tracforge::EvalState state(opts);
    std::string line;
    std::cout << "tracforge repl; one statement per line, Ctrl-D to exit\n";
    while (std::cout << "> " << std::flush, std::getline(std::cin, line)) {
        if (line.empty()) continue;
        try {
            tracforge::Script script = tracforge::parse_script(line);
            tracforge::EvalOutcome out;
            for (const auto& stmt : script.stmts) state.execute(stmt, out);
            for (const auto& r : out.reports) std::cout << r.canonical_text();
            for (const auto& m : out.messages) std::cout << m << "\n";
        } catch (const std::exception& e) {
            std::cout << "error: " << e.what() << "\n";
        }
    }
    std::cout << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"trace ideals, test ideals and module closures over quotient rings"};
    app.require_subcommand(1);

    tracforge::EvalOptions opts;
    app.add_option("--field", opts.default_field, "default coefficient field: gf:P or qq")
        ->capture_default_str();
    app.add_option("--order", opts.default_order, "default monomial order: grevlex or lex")
        ->capture_default_str();
    app.add_flag("--timing", opts.timing, "report per-operation timing");

    std::string script_path, corpus_dir;
    CLI::App* run = app.add_subcommand("run", "evaluate a .tfs script");
    run->add_option("script", script_path, "script file")->required();
    CLI::App* corpus = app.add_subcommand("corpus", "run every case in a directory");
    corpus->add_option("dir", corpus_dir, "directory of .tfs/.expected cases")->required();
    CLI::App* repl = app.add_subcommand("repl", "interactive session");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    if (run->parsed()) return run_script(script_path, opts);
    if (corpus->parsed()) {
        tracforge::CorpusSummary summary = tracforge::run_corpus(corpus_dir, opts);
        std::cout << summary.text;
        return summary.failures > 0 ? kFailed : kOk;
    }
    if (repl->parsed()) return run_repl(opts);
    return kUsage;
}

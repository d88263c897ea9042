#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cli.hpp"

namespace {

using namespace cesaro2;
using namespace cesaro2::cli;

struct CommonOpts {
    std::vector<std::string> alphas;
    std::string grid;
    long n = 0;
    bool json = false;
    bool csv = false;
    std::string out;
    int parallelism = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, long default_n) {
    o.n = default_n;
    cmd->add_option("--alpha", o.alphas, "alpha as an exact rational p/q (repeatable)");
    cmd->add_option("--grid", o.grid, "rational grid start:stop:step, endpoints included when hit");
    cmd->add_option("--n", o.n, "section size");
    auto* j = cmd->add_flag("--json", o.json, "emit JSON");
    cmd->add_flag("--csv", o.csv, "emit CSV")->excludes(j);
    cmd->add_option("--out", o.out, "write the report stream to a file instead of stdout");
    cmd->add_option("--parallelism", o.parallelism, "worker threads for the alpha sweep");
}

Format format_of(const CommonOpts& o, Format fallback) {
    if (o.json) return Format::json;
    if (o.csv) return Format::csv;
    return fallback;
}

SweepConfig build_config(const CommonOpts& o, Format fallback, bool& used_default_alphas) {
    SweepConfig cfg;
    used_default_alphas = o.alphas.empty() && o.grid.empty();
    if (used_default_alphas) {
        cfg.alphas = default_alpha_set();
    } else {
        for (const auto& s : o.alphas) cfg.alphas.push_back(parse_alpha(s));
        if (!o.grid.empty()) {
            for (auto& a : parse_grid(o.grid)) cfg.alphas.push_back(std::move(a));
        }
    }
    if (o.n < 1) throw UsageError("--n must be >= 1");
    if (o.parallelism < 1) throw UsageError("--parallelism must be >= 1");
    cfg.n = o.n;
    cfg.format = format_of(o, fallback);
    cfg.parallelism = o.parallelism;
    return cfg;
}

/// Stream sink that is either stdout or an owned file.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw UsageError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::vector<Rational> parse_moment_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(Rational::parse(item));
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad moment '") + item + "': " + e.what());
        }
    }
    if (out.empty()) throw UsageError("--moments must list at least one rational");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cesaro2: exact verification toolkit for generalized Cesaro matrices of order two"};
    app.require_subcommand(1);

    CommonOpts verify_opts, region_opts, conj_opts;
    bool verify_symbolic = false;
    std::string findings_path;

    auto* verify = app.add_subcommand(
        "verify", "run all operator identity checks at each alpha (exit 1 on any failure)");
    add_common(verify, verify_opts, 20);
    verify->add_flag("--symbolic", verify_symbolic,
                     "also run the symbolic-alpha MQM and BB checks (on by default for the default suite)");

    auto* region = app.add_subcommand(
        "region", "certify the hyponormality region {0} u [1,oo) via Q >= I >= P (exit 1 on mismatch)");
    add_common(region, region_opts, 30);

    auto* conjecture = app.add_subcommand(
        "conjecture", "sweep exact leading minors of I - B*B sections; nonpositive minors are findings");
    add_common(conjecture, conj_opts, 25);
    conjecture->add_option("--findings", findings_path,
                           "write finding records to a file (default: stderr)");

    auto* dets = app.add_subcommand(
        "dets", "reproduce the determinant polynomials det(S_0..S_3) and diff against the reference");
    bool dets_json = false;
    long dets_extend = 3;
    std::string dets_out;
    dets->add_flag("--json", dets_json, "emit JSON");
    dets->add_option("--extend", dets_extend, "also compute uncompared det(S_n) up to this n");
    dets->add_option("--out", dets_out, "write to a file instead of stdout");

    auto* matrix = app.add_subcommand("matrix", "dump a finite section of any operator");
    std::string kind_str, matrix_alpha, moments_str, matrix_out;
    long matrix_n = 0, matrix_beta = 2;
    bool matrix_csv = false;
    matrix->add_option("--kind", kind_str,
                       "hausdorff|cesaro|c1|c2|b_matrix|c2_P|c2_Q|c1_P|c1_Q|pB")
        ->required();
    matrix->add_option("--alpha", matrix_alpha, "alpha as p/q")->required();
    matrix->add_option("--n", matrix_n, "section size")->required();
    matrix->add_option("--beta", matrix_beta, "order for cesaro/hausdorff (integer >= 1)");
    matrix->add_option("--moments", moments_str, "comma-separated rational moments for hausdorff");
    matrix->add_flag("--csv", matrix_csv, "emit CSV instead of JSON");
    matrix->add_option("--out", matrix_out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);

        if (verify->parsed()) {
            bool defaults = false;
            const SweepConfig cfg = build_config(verify_opts, Format::text, defaults);
            Sink sink(verify_opts.out);
            return run_verify(cfg, defaults || verify_symbolic, sink.stream());
        }
        if (region->parsed()) {
            bool defaults = false;
            SweepConfig cfg = build_config(region_opts, Format::text, defaults);
            if (cfg.n < 2) throw UsageError("region needs --n >= 2");
            Sink sink(region_opts.out);
            return run_region(cfg, sink.stream());
        }
        if (conjecture->parsed()) {
            bool defaults = false;
            const SweepConfig cfg = build_config(conj_opts, Format::csv, defaults);
            Sink sink(conj_opts.out);
            Sink findings_sink(findings_path);
            std::ostream& findings = findings_path.empty() ? std::cerr : findings_sink.stream();
            return run_conjecture(cfg, sink.stream(), findings);
        }
        if (dets->parsed()) {
            if (dets_extend < 3) throw UsageError("--extend must be >= 3");
            Sink sink(dets_out);
            return run_dets(dets_json ? Format::json : Format::text, dets_extend, sink.stream());
        }
        if (matrix->parsed()) {
            const auto kind = kind_from_string(kind_str);
            if (!kind) throw UsageError("unknown operator kind '" + kind_str + "'");
            const Rational alpha = parse_alpha(matrix_alpha);
            if (matrix_n < 1) throw UsageError("--n must be >= 1");
            if (matrix_beta < 1) throw UsageError("--beta must be >= 1");
            std::optional<std::vector<Rational>> moments;
            if (!moments_str.empty()) {
                if (*kind != OperatorKind::hausdorff)
                    throw UsageError("--moments only applies to --kind hausdorff");
                moments = parse_moment_list(moments_str);
                if (static_cast<long>(moments->size()) < matrix_n)
                    throw UsageError("--moments needs at least n values");
            }
            const OperatorSpec spec(*kind, alpha, matrix_beta, std::move(moments));
            Sink sink(matrix_out);
            return run_matrix(spec, matrix_n, matrix_csv ? Format::csv : Format::json, sink.stream());
        }
        return 2;  // unreachable: a subcommand is required
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

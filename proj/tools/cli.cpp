#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <thread>
#include <utility>

#include <nlohmann/json.hpp>

#include "cesaro2/identities.hpp"
#include "cesaro2/positivity.hpp"

namespace cesaro2::cli {

using nlohmann::json;

Rational parse_alpha(const std::string& s) {
    Rational a;
    try {
        a = Rational::parse(s);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad alpha '") + s + "': " + e.what());
    }
    if (!(a > Rational(-1))) throw UsageError("alpha must be > -1, got " + a.to_string());
    return a;
}

std::vector<Rational> parse_grid(const std::string& spec) {
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw UsageError("grid must be start:stop:step, got '" + spec + "'");
    Rational start, stop, step;
    try {
        start = Rational::parse(spec.substr(0, c1));
        stop = Rational::parse(spec.substr(c1 + 1, c2 - c1 - 1));
        step = Rational::parse(spec.substr(c2 + 1));
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad grid '") + spec + "': " + e.what());
    }
    if (!(step > Rational(0))) throw UsageError("grid step must be > 0");
    if (stop < start) throw UsageError("grid stop must be >= start");
    std::vector<Rational> out;
    for (Rational a = start; !(stop < a); a += step) {
        if (!(a > Rational(-1))) throw UsageError("grid point " + a.to_string() + " is not > -1");
        out.push_back(a);
    }
    return out;
}

const std::vector<Rational>& default_alpha_set() {
    static const std::vector<Rational> set = {
        Rational(-1, 2), Rational(0), Rational(1, 3), Rational(1, 2), Rational(1), Rational(5, 2)};
    return set;
}

namespace {

/// Runs job(i) for i in [0, count) on config.parallelism threads. Jobs write
/// only into their own slot, so results are deterministic and order-stable.
void fan_out(int parallelism, std::size_t count, const std::function<void(std::size_t)>& job) {
    const int workers = std::max(1, std::min<int>(parallelism, static_cast<int>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = static_cast<std::size_t>(w); i < count; i += static_cast<std::size_t>(workers))
                job(i);
        });
    }
    for (auto& t : pool) t.join();
}

json report_json(const IdentityReport& r) {
    json o{{"identity", r.identity}, {"alpha", r.alpha}, {"n", r.n},
           {"verdict", r.passed() ? "exact-pass" : "fail"}};
    if (r.first_mismatch) {
        o["first_mismatch"] = {{"i", r.first_mismatch->i},
                               {"j", r.first_mismatch->j},
                               {"lhs", r.first_mismatch->lhs},
                               {"rhs", r.first_mismatch->rhs}};
    }
    return o;
}

void emit_reports(const std::vector<IdentityReport>& reports, Format format, std::ostream& out) {
    if (format == Format::json) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        out << arr.dump(2) << "\n";
        return;
    }
    for (const auto& r : reports) {
        if (format == Format::csv) {
            out << r.identity << "," << r.alpha << "," << r.n << ","
                << (r.passed() ? "exact-pass" : "fail") << "\n";
        } else {
            out << r.identity << " alpha=" << r.alpha << " n=" << r.n << " "
                << (r.passed() ? "exact-pass" : "FAIL");
            if (r.first_mismatch)
                out << " first mismatch at (" << r.first_mismatch->i << "," << r.first_mismatch->j
                    << "): " << r.first_mismatch->lhs << " != " << r.first_mismatch->rhs;
            out << "\n";
        }
    }
}

}  // namespace

int run_verify(const SweepConfig& config, bool include_symbolic, std::ostream& out) {
    std::vector<std::vector<IdentityReport>> per_alpha(config.alphas.size());
    fan_out(config.parallelism, config.alphas.size(),
            [&](std::size_t i) { per_alpha[i] = run_identity_suite(config.alphas[i], config.n); });

    std::vector<IdentityReport> reports;
    for (auto& batch : per_alpha)
        for (auto& r : batch) reports.push_back(std::move(r));
    if (include_symbolic) {
        const long sym_n = std::min<long>(config.n, 8);
        reports.push_back(check_mqm_symbolic(sym_n));
        reports.push_back(check_bb_symbolic(sym_n));
    }
    emit_reports(reports, config.format, out);
    const bool all_pass = std::all_of(reports.begin(), reports.end(),
                                      [](const IdentityReport& r) { return r.passed(); });
    return all_pass ? 0 : 1;
}

int run_region(const SweepConfig& config, std::ostream& out) {
    struct Row {
        Rational alpha;
        RegionCertificate cert;
        bool expected;
    };
    std::vector<Row> rows(config.alphas.size());
    fan_out(config.parallelism, config.alphas.size(), [&](std::size_t i) {
        const Rational& a = config.alphas[i];
        rows[i] = {a, region_certificate(a, config.n), a == Rational(0) || !(a < Rational(1))};
    });

    bool all_match = true;
    json arr = json::array();
    if (config.format == Format::csv) out << "alpha,n,minor_num,minor_den,verdict\n";
    for (const auto& row : rows) {
        const bool certified = row.cert.certified;
        all_match = all_match && certified == row.expected;
        const std::string verdict = certified ? "certified" : "uncertified";
        const Rational z0 = row.cert.q_minus_i.minors.at(0);
        const Rational z1 = row.cert.q_minus_i.minors.at(1);
        switch (config.format) {
            case Format::json:
                arr.push_back({{"alpha", row.alpha.to_string()},
                               {"n", config.n},
                               {"certified", certified},
                               {"expected", row.expected},
                               {"q_minus_i", to_string(row.cert.q_minus_i.classification)},
                               {"i_minus_p", to_string(row.cert.i_minus_p.classification)},
                               {"det_Z0", z0.to_string()},
                               {"det_Z1", z1.to_string()}});
                break;
            case Format::csv:
                out << row.alpha.to_string() << ",1," << z0.num_string() << "," << z0.den_string()
                    << "," << verdict << "\n";
                out << row.alpha.to_string() << ",2," << z1.num_string() << "," << z1.den_string()
                    << "," << verdict << "\n";
                break;
            case Format::text:
                out << "alpha=" << row.alpha.to_string() << " n=" << config.n << " " << verdict
                    << " (Q-I " << to_string(row.cert.q_minus_i.classification) << ", I-P "
                    << to_string(row.cert.i_minus_p.classification) << ")"
                    << (certified == row.expected ? "" : "  ** region mismatch **") << "\n";
                break;
        }
    }
    if (config.format == Format::json) out << arr.dump(2) << "\n";
    return all_match ? 0 : 1;
}

int run_conjecture(const SweepConfig& config, std::ostream& out, std::ostream& findings) {
    std::vector<PositivityReport> reports(config.alphas.size());
    fan_out(config.parallelism, config.alphas.size(),
            [&](std::size_t i) { reports[i] = conjecture_minors(config.alphas[i], config.n); });

    std::vector<FindingRecord> found;
    json arr = json::array();
    if (config.format == Format::csv) out << "alpha,n,minor_num,minor_den,verdict\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const Rational& a = config.alphas[i];
        const auto& rep = reports[i];
        for (std::size_t s = 0; s < rep.minors.size(); ++s) {
            const Rational& minor = rep.minors[s];
            const int sign = minor.sign();
            const std::string verdict = sign > 0 ? "positive" : (sign == 0 ? "zero" : "negative");
            switch (config.format) {
                case Format::json:
                    arr.push_back({{"alpha", a.to_string()},
                                   {"n", s + 1},
                                   {"minor", minor.to_string()},
                                   {"verdict", verdict}});
                    break;
                case Format::csv:
                    out << a.to_string() << "," << (s + 1) << "," << minor.num_string() << ","
                        << minor.den_string() << "," << verdict << "\n";
                    break;
                case Format::text:
                    out << "alpha=" << a.to_string() << " n=" << (s + 1)
                        << " minor=" << minor.to_string() << " " << verdict << "\n";
                    break;
            }
            if (sign <= 0) {
                const bool open_unit = a > Rational(0) && a < Rational(1);
                found.push_back({a, static_cast<long>(s + 1), minor,
                                 open_unit ? "conjecture-counterexample-candidate" : "info"});
            }
        }
    }
    if (config.format == Format::json) out << arr.dump(2) << "\n";
    // Findings go to their own channel so automation can tell "conjecture
    // news" apart from ordinary rows. They never affect the exit code.
    for (const auto& f : found) {
        findings << "FINDING severity=" << f.severity << " alpha=" << f.alpha.to_string()
                 << " n=" << f.section << " minor=" << f.minor.to_string() << "\n";
    }
    return 0;
}

int run_dets(Format format, long extend, std::ostream& out) {
    bool all_match = true;
    json arr = json::array();
    const long n_max = std::max<long>(3, extend);
    for (long n = 0; n <= n_max; ++n) {
        const DetPolynomial dp = section_det_polynomial(n);
        all_match = all_match && (!dp.has_reference || dp.matches_reference);
        if (format == Format::json) {
            json coeffs = json::array();
            for (const auto& c : dp.numerator.coefficients()) coeffs.push_back(c.to_string());
            json factors = json::array();
            for (const auto& [c, e] : dp.denominator_factors) factors.push_back({c, e});
            arr.push_back({{"n", dp.n},
                           {"numerator_coeffs", coeffs},
                           {"denominator_factors", factors},
                           {"status", dp.has_reference
                                          ? (dp.matches_reference ? "match" : "MISMATCH")
                                          : "unverified extension"}});
        } else {
            out << "det(S_" << n << ") numerator = " << dp.numerator.to_string("a") << "\n";
            out << "         denominator =";
            for (const auto& [c, e] : dp.denominator_factors) out << " (" << c << "+a)^" << e;
            out << "\n";
            if (dp.has_reference) {
                out << "         reference   = " << (dp.matches_reference ? "match" : "MISMATCH")
                    << "\n";
                if (!dp.matches_reference)
                    out << "         expected    = " << reference_det_numerator(n).to_string("a")
                        << "\n";
            } else {
                out << "         reference   = none (unverified extension)\n";
            }
        }
    }
    if (format == Format::json) out << arr.dump(2) << "\n";
    return all_match ? 0 : 1;
}

int run_matrix(const OperatorSpec& spec, long n, Format format, std::ostream& out) {
    const Matrix<Rational> section = finite_section(spec, n);
    if (format == Format::csv) {
        for (std::size_t i = 0; i < section.rows(); ++i) {
            for (std::size_t j = 0; j < section.cols(); ++j)
                out << (j ? "," : "") << section.at(i, j).to_string();
            out << "\n";
        }
        return 0;
    }
    json rows = json::array();
    for (std::size_t i = 0; i < section.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < section.cols(); ++j) row.push_back(section.at(i, j).to_string());
        rows.push_back(row);
    }
    out << rows.dump() << "\n";
    return 0;
}

}  // namespace cesaro2::cli

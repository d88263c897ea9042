#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "cesaro2/operators.hpp"
#include "cesaro2/positivity.hpp"

using json = nlohmann::json;
using namespace cesaro2;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CESARO2_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("verify exits 0 when all identities pass") {
    const auto r = run_cli("verify --alpha 0 --n 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("exact-pass") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify emits six JSON reports per alpha") {
    const auto r = run_cli("verify --alpha 1/2 --n 20 --json");
    CHECK(r.exit_code == 0);
    const json reports = json::parse(r.out);
    REQUIRE(reports.is_array());
    CHECK(reports.size() == 6);
    for (const auto& rep : reports) {
        CHECK(rep.at("alpha") == "1/2");
        CHECK(rep.at("verdict") == "exact-pass");
    }
}

TEST_CASE("verify rejects alpha <= -1 with a usage error") {
    CHECK(run_cli("verify --alpha -1 --n 5").exit_code == 2);
    CHECK(run_cli("verify --alpha -3/2 --n 5").exit_code == 2);
    CHECK(run_cli("verify --alpha nonsense").exit_code == 2);
    CHECK(run_cli("verify --n 0").exit_code == 2);
    CHECK(run_cli("verify --bogus-flag").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("default verify suite includes the symbolic checks") {
    const auto r = run_cli("verify --n 6 --json");
    CHECK(r.exit_code == 0);
    const json reports = json::parse(r.out);
    // 6 default alphas x 6 checks + symbolic MQM and BB
    CHECK(reports.size() == 6 * 6 + 2);
    int symbolic = 0;
    for (const auto& rep : reports)
        if (rep.at("alpha") == "symbolic") ++symbolic;
    CHECK(symbolic == 2);
}

TEST_CASE("verify is deterministic under parallelism") {
    const auto serial = run_cli("verify --alpha 0 --alpha 1/2 --n 6 --json");
    const auto parallel = run_cli("verify --alpha 0 --alpha 1/2 --n 6 --json --parallelism 4");
    CHECK(serial.exit_code == 0);
    CHECK(parallel.exit_code == 0);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("matrix dumps pinned sections") {
    const auto c2 = run_cli("matrix --kind c2 --alpha 0 --n 2");
    CHECK(c2.exit_code == 0);
    CHECK(json::parse(c2.out) == json::parse(R"([["1","0"],["2/3","1/3"]])"));

    // recomputed entrywise from the defining three-case formula
    const auto b = run_cli("matrix --kind b_matrix --alpha 0 --n 3");
    CHECK(b.exit_code == 0);
    CHECK(json::parse(b.out) ==
          json::parse(R"([["1/6","1/5","1/5"],["-1/3","-1/10","0"],["1/6","-2/5","-1/5"]])"));

    const auto q = run_cli("matrix --kind c2_Q --alpha 1 --n 2");
    CHECK(q.exit_code == 0);
    CHECK(json::parse(q.out) == json::parse(R"([["5","-2"],["-2","2"]])"));
}

TEST_CASE("matrix CSV round trips to exactly equal rationals") {
    const auto r = run_cli("matrix --kind cesaro --beta 3 --alpha 5/2 --n 4 --csv");
    CHECK(r.exit_code == 0);
    const auto section = finite_section(OperatorSpec(OperatorKind::cesaro, Rational(5, 2), 3), 4);
    std::size_t i = 0, pos = 0;
    while (pos < r.out.size()) {
        const auto eol = r.out.find('\n', pos);
        REQUIRE(eol != std::string::npos);
        std::string line = r.out.substr(pos, eol - pos);
        pos = eol + 1;
        std::size_t j = 0, cell = 0;
        while (cell <= line.size()) {
            auto comma = line.find(',', cell);
            if (comma == std::string::npos) comma = line.size();
            CHECK(Rational::parse(line.substr(cell, comma - cell)) == section.at(i, j));
            cell = comma + 1;
            ++j;
        }
        CHECK(j == 4);
        ++i;
    }
    CHECK(i == 4);
}

TEST_CASE("matrix kind validation") {
    CHECK(run_cli("matrix --kind c3 --alpha 0 --n 2").exit_code == 2);
    CHECK(run_cli("matrix --kind c2 --alpha 0 --n 0").exit_code == 2);
    CHECK(run_cli("matrix --kind cesaro --beta 0 --alpha 0 --n 2").exit_code == 2);
    // user moments apply to hausdorff only, and must cover the section
    CHECK(run_cli("matrix --kind c2 --alpha 0 --n 2 --moments 1,1/2").exit_code == 2);
    CHECK(run_cli("matrix --kind hausdorff --alpha 0 --n 3 --moments 1,1/2").exit_code == 2);
    const auto ok = run_cli("matrix --kind hausdorff --alpha 0 --n 2 --moments 1,1/2,1/3");
    CHECK(ok.exit_code == 0);
    CHECK(json::parse(ok.out) == json::parse(R"([["1","0"],["1/2","1/2"]])"));
}

TEST_CASE("region certifies exactly {0} u [1, oo) on a sample grid") {
    const auto r = run_cli("region --alpha 0 --alpha 1/2 --alpha 1 --alpha 2 --n 12 --json");
    CHECK(r.exit_code == 0);
    const json rows = json::parse(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].at("certified") == true);   // 0
    CHECK(rows[1].at("certified") == false);  // 1/2
    CHECK(rows[2].at("certified") == true);   // 1
    CHECK(rows[3].at("certified") == true);   // 2
    CHECK(run_cli("region --alpha 1/10 --n 12").exit_code == 0);
    // outside the claim, uncertified is the expected outcome
    CHECK(run_cli("region --alpha -1/2 --n 12").exit_code == 0);
}

TEST_CASE("conjecture emits one CSV row per section and exits 0") {
    const auto r = run_cli("conjecture --alpha 1/2 --n 4 --csv");
    CHECK(r.exit_code == 0);
    // header + 4 rows
    std::size_t lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 5);
    CHECK(r.out.find("alpha,n,minor_num,minor_den,verdict") == 0);
    // the rows carry exactly det(S_0..S_3) evaluated at alpha = 1/2
    std::size_t pos = r.out.find('\n') + 1;
    for (long n = 0; n <= 3; ++n) {
        const auto eol = r.out.find('\n', pos);
        const std::string line = r.out.substr(pos, eol - pos);
        pos = eol + 1;
        const auto c1 = line.find(','), c2 = line.find(',', c1 + 1), c3 = line.find(',', c2 + 1),
                   c4 = line.find(',', c3 + 1);
        const Rational num = Rational::parse(line.substr(c2 + 1, c3 - c2 - 1));
        const Rational den = Rational::parse(line.substr(c3 + 1, c4 - c3 - 1));
        CHECK(num / den == section_det_polynomial(n).evaluate(Rational(1, 2)));
        CHECK(line.substr(0, c1) == "1/2");
        CHECK(line.substr(c1 + 1, c2 - c1 - 1) == std::to_string(n + 1));
        CHECK(line.substr(c4 + 1) == "positive");
    }
}

TEST_CASE("conjecture grid sweep") {
    const auto r = run_cli("conjecture --grid 1/10:9/10:1/10 --n 6 --csv");
    CHECK(r.exit_code == 0);
    std::size_t lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 1 + 9 * 6);
    CHECK(r.out.find("negative") == std::string::npos);
    CHECK(run_cli("conjecture --grid 1/10:9/10:-1/10 --n 4").exit_code == 2);
    CHECK(run_cli("conjecture --grid 1/10:9/10 --n 4").exit_code == 2);
}

TEST_CASE("dets reproduces the reference tables") {
    const auto r = run_cli("dets --json");
    CHECK(r.exit_code == 0);
    const json rows = json::parse(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].at("numerator_coeffs") == json::array({"120", "140", "28", "8"}));
    CHECK(rows[0].at("denominator_factors") == json::parse("[[3,2],[4,2]]"));
    for (const auto& row : rows) CHECK(row.at("status") == "match");
    // extension rows are labeled, not compared
    const auto ext = run_cli("dets --json --extend 4");
    const json extrows = json::parse(ext.out);
    REQUIRE(extrows.size() == 5);
    CHECK(extrows[4].at("status") == "unverified extension");
}

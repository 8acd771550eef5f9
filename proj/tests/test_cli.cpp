// Copyright 2026 The tfps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tfps/classical.hpp"
#include "tfps/json_io.hpp"
#include "tfps/special.hpp"

using namespace tfps;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "tfps_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_fixture(const std::string& name, const std::string& content) {
    const fs::path p = scratch_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

// Runs the tool with sh-quoted arguments; stdout/stderr land in files.
CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const char* bin = std::getenv("TFPS_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "TFPS_BIN must point at the CLI binary");
    static int counter = 0;
    const fs::path out_path = scratch_dir() / ("out" + std::to_string(counter));
    const fs::path err_path = scratch_dir() / ("err" + std::to_string(counter));
    ++counter;
    const std::string cmd = env_prefix + std::string(bin) + " " + args + " > " +
                            out_path.string() + " 2> " + err_path.string();
    const int status = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WEXITSTATUS(status);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

std::string sq(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("series constructor emits the hermite moments") {
    const CliResult r = run_cli("series --family hermite --t -1 --order 8");
    CHECK(r.exit_code == 0);
    CHECK(series_from_json(r.out) == hermite_series(TParam::generic(Rational(-1)), 8));
}

TEST_CASE("cumulants of a laguerre series are constant") {
    const std::string laguerre =
        to_json(laguerre_series(Rational(3), TParam::generic(Rational(1, 2)), 4));
    const CliResult r = run_cli("cumulants --t 1/2 " + sq(laguerre));
    CHECK(r.exit_code == 0);
    const CumulantVector k = cumulants_from_json(r.out);
    CHECK(k.kappas == std::vector<Rational>(4, Rational(3)));
}

TEST_CASE("conv on moment files reproduces the enumerated sum law") {
    const DiscreteLaw bernoulli{{{Rational(0), Rational(1, 2)}, {Rational(1), Rational(1, 2)}}};
    const fs::path a = write_fixture("bern_a.json", to_json(moments_discrete(bernoulli, 6)));
    const fs::path b = write_fixture("bern_b.json", to_json(moments_discrete(bernoulli, 6)));
    const CliResult r = run_cli("conv --t -1 " + a.string() + " " + b.string());
    CHECK(r.exit_code == 0);
    const DiscreteLaw sum{{{Rational(0), Rational(1, 4)},
                           {Rational(1), Rational(1, 2)},
                           {Rational(2), Rational(1, 4)}}};
    CHECK(series_from_json(r.out) == moments_discrete(sum, 6));

    const CliResult r2 = run_cli("classical-conv " + a.string() + " " + b.string());
    CHECK(r2.exit_code == 0);
    CHECK(r2.out == r.out);
}

TEST_CASE("output re-parses as input with byte-identical rationals") {
    const CliResult made = run_cli("series --family laguerre --lambda 7/5 --t -2 --order 6");
    REQUIRE(made.exit_code == 0);
    const std::string trimmed = made.out.substr(0, made.out.find_last_not_of('\n') + 1);
    CHECK(to_json(series_from_json(trimmed)) == trimmed);

    // feed it straight back in
    const CliResult roundtrip = run_cli("powersums " + sq(trimmed));
    CHECK(roundtrip.exit_code == 0);
}

TEST_CASE("cumulants and from-cumulants invert each other through files") {
    const std::string series =
        to_json(laguerre_series(Rational(2), TParam::generic(Rational(-2)), 6));
    const CliResult k = run_cli("cumulants --t -2 " + sq(series));
    REQUIRE(k.exit_code == 0);
    const fs::path kfile = write_fixture("kappas.json", k.out);
    const CliResult back = run_cli("from-cumulants " + kfile.string());
    CHECK(back.exit_code == 0);
    CHECK(series_from_json(back.out) == series_from_json(series));
}

TEST_CASE("exit code 2: unknown subcommand and malformed input") {
    CHECK(run_cli("frobnicate").exit_code == 2);

    const CliResult bad = run_cli("powersums " + sq(R"({"order":2,"coeffs":["1/0"]})"));
    CHECK(bad.exit_code == 2);
    const auto err = nlohmann::json::parse(bad.err, nullptr, false);
    REQUIRE(!err.is_discarded());
    CHECK(err["error"]["type"] == "parse");

    const CliResult missing = run_cli("powersums /nonexistent/path.json");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("exit code 1: domain and parameter errors carry error JSON") {
    // constant term != 1
    const CliResult dom = run_cli("cumulants --t -1 " + sq(R"({"order":2,"coeffs":["2"]})"));
    CHECK(dom.exit_code == 1);
    const auto derr = nlohmann::json::parse(dom.err, nullptr, false);
    REQUIRE(!derr.is_discarded());
    CHECK(derr["error"]["type"] == "domain");

    const CliResult par = run_cli("series --family hermite --t 3 --order 4");
    CHECK(par.exit_code == 1);
    const auto perr = nlohmann::json::parse(par.err, nullptr, false);
    REQUIRE(!perr.is_discarded());
    CHECK(perr["error"]["type"] == "parameter");
}

TEST_CASE("csv format carries exact and decimal columns") {
    const CliResult r = run_cli("series --family binomial --lambda 1 --t -1 --order 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "k,coeff,decimal\n0,1,1.000000000000\n1,1,1.000000000000\n2,1,1.000000000000\n");
}

TEST_CASE("--out writes the payload to a file") {
    const fs::path target = scratch_dir() / "written.json";
    fs::remove(target);
    const CliResult r = run_cli("series --family hermite --t -1 --order 4 --out " + target.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(series_from_json(slurp(target)) == hermite_series(TParam::generic(Rational(-1)), 4));
}

TEST_CASE("default order comes from the environment when omitted") {
    const CliResult r = run_cli("series --family hermite --t -1", "TFPS_DEFAULT_ORDER=6 ");
    CHECK(r.exit_code == 0);
    CHECK(series_from_json(r.out).order() == 6);

    const CliResult bare = run_cli("series --family hermite --t -1", "TFPS_DEFAULT_ORDER= ");
    CHECK(bare.exit_code == 2);
}

TEST_CASE("--order override truncates but never extends") {
    const std::string wide = to_json(laguerre_series(Rational(1), TParam::generic(Rational(-1)), 8));
    const CliResult ok = run_cli("powersums --order 4 " + sq(wide));
    CHECK(ok.exit_code == 0);

    const CliResult too_big = run_cli("powersums --order 12 " + sq(wide));
    CHECK(too_big.exit_code == 1);
    const auto err = nlohmann::json::parse(too_big.err, nullptr, false);
    REQUIRE(!err.is_discarded());
    CHECK(err["error"]["type"] == "truncation");
}

TEST_CASE("dconv matches conv in finite mode") {
    const std::string a = to_json(binomial_series(Rational(1), TParam::finite(3), 3));
    const CliResult viad = run_cli("dconv --d 3 " + sq(a) + " " + sq(a));
    const CliResult viat = run_cli("conv --t d:3 " + sq(a) + " " + sq(a));
    CHECK(viad.exit_code == 0);
    CHECK(viat.exit_code == 0);
    CHECK(viad.out == viat.out);
    CHECK(series_from_json(viad.out) == binomial_series(Rational(2), TParam::finite(3), 3));
}

TEST_CASE("clt subcommand returns exact scaling rows") {
    // the hermite series itself is normalized: kappa_1 = 0, kappa_2 = 1
    const std::string h = to_json(hermite_series(TParam::generic(Rational(-1)), 6));
    const CliResult r = run_cli("clt --t -1 --ms 4,16 " + sq(h));
    CHECK(r.exit_code == 0);
    const auto rows = nlohmann::json::parse(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["m"] == 4);
    CHECK(rows[0]["first_index"] == 1);
    for (const auto& e : rows[0]["errors"]) CHECK(e.get<std::string>() == "0");
}

TEST_CASE("mixture and hypergeometric spec operands") {
    const CliResult mix = run_cli("mixture --order 5 " + sq(R"({"beta":[["1","2"]],"gamma":[]})"));
    CHECK(mix.exit_code == 0);
    const TruncatedSeries m = series_from_json(mix.out);
    for (int k = 0; k <= 5; ++k) CHECK(m[k] == Rational(1, k + 1));

    const std::string spec = R"({"upper":["1/2"],"lower":[],"t":{"mode":"generic","t":"-1"}})";
    const CliResult hg = run_cli("series --family hypergeometric --order 5 --spec " + sq(spec));
    CHECK(hg.exit_code == 0);

    const CliResult odd = run_cli("mixture --order 5 " + sq(R"({"beta":[],"gamma":["2"]})"));
    CHECK(odd.exit_code == 1);
}

TEST_CASE("apply-generator accepts a symbol series or a family") {
    const std::string a = to_json(TruncatedSeries::one(4));
    const std::string eta = R"({"order":4,"coeffs":["0","0","1/2"]})";
    const CliResult via_eta = run_cli("apply-generator --t -1 --eta " + sq(eta) + " " + sq(a));
    const CliResult via_family = run_cli("apply-generator --t -1 --family hermite " + sq(a));
    CHECK(via_eta.exit_code == 0);
    CHECK(via_family.exit_code == 0);
    CHECK(via_eta.out == via_family.out);
    CHECK(series_from_json(via_eta.out) == make_series({Rational(0), Rational(0), Rational(1)}, 4));

    const CliResult both =
        run_cli("apply-generator --t -1 --family hermite --eta " + sq(eta) + " " + sq(a));
    CHECK(both.exit_code == 2);
}

TEST_CASE("evolve through a named family") {
    const std::string one = to_json(TruncatedSeries::one(6));
    const CliResult r = run_cli("evolve --t -1 --family hermite --s 2 " + sq(one));
    CHECK(r.exit_code == 0);
    CHECK(series_from_json(r.out) ==
          hermite_semigroup(Rational(2), TParam::generic(Rational(-1)), 6));
}

TEST_CASE("forward-check reports residuals as JSON") {
    const std::string a = to_json(TruncatedSeries::one(8));
    const CliResult r =
        run_cli("forward-check --t -1 --family levy --triplet " +
                sq(R"({"gamma":"0","a":"1","nu":[]})") + " --s 1 " + sq(a));
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["exact_residual"] == "0");
    CHECK(j["fd_residual"].get<double>() <= 1e-6);
}

TEST_CASE("finfree subcommands round the polynomial bridge") {
    const std::string f = R"({"degree":2,"coeffs":["1","0","-1"]})";
    const CliResult conv = run_cli("finfree-conv --d 2 " + sq(f) + " " + sq(f));
    CHECK(conv.exit_code == 0);
    CHECK(poly_from_json(conv.out) ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(-2)});

    const std::string cubic = R"({"degree":3,"coeffs":["1","0","0","0"]})";
    const CliResult gen = run_cli("finfree-generator --d 3 " + sq(cubic));
    CHECK(gen.exit_code == 0);
    CHECK(poly_from_json(gen.out) ==
          std::vector<Rational>{Rational(0), Rational(0), Rational(-1), Rational(0)});
}

}  // TEST_SUITE

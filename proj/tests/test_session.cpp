#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "semimod/session.hpp"

using namespace semimod;

namespace {

const std::string kData = SEMIMOD_TEST_DATA;
const std::string kCli = SEMIMOD_CLI;

struct CliRun {
    int code;
    std::string out;
};

CliRun run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + kCli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<Json> records(const std::string& out) {
    std::vector<Json> v;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) v.push_back(Json::parse(line));
    return v;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(SessionLoad, ResolvesObjectsAndCommands) {
    const Session s = Session::load(kData + "/all_pass.json");
    EXPECT_EQ(s.ring_names().size(), 3u);
    EXPECT_EQ(s.ring("R6")->size(), 6u);
    EXPECT_EQ(s.module("MT")->size(), 64u);
    EXPECT_EQ(s.series("f").support_size(), 2u);
    EXPECT_EQ(s.commands().size(), 15u);
    EXPECT_THROW(s.ring("nope"), ReferenceError);
}

TEST(SessionLoad, TwoObjectSession) {
    const Session s = Session::parse(R"({"rings": [{"name": "R6", "kind": "zmod", "n": 6}],
        "modules": [{"name": "M", "kind": "ring_as_module", "ring": "R6"}]})");
    EXPECT_EQ(s.ring_names().size() + s.module_names().size(), 2u);
}

TEST(SessionLoad, ForwardReferencesResolve) {
    const Session s = Session::parse(R"({
        "modules": [{"name": "Q", "kind": "quotient", "module": "M", "generators": [3]},
                    {"name": "M", "kind": "ring_as_module", "ring": "R"}],
        "rings": [{"name": "R", "kind": "quotient", "ring": "Z12", "ideal": [6]},
                  {"name": "Z12", "kind": "zmod", "n": 12}]})");
    EXPECT_EQ(s.ring("R")->size(), 6u);
    EXPECT_EQ(s.module("Q")->size(), 3u);
}

TEST(SessionLoad, ErrorsCarryLocation) {
    try {
        Session::load(kData + "/syntax_error.json");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_GT(e.column(), 1u);
    }
    try {
        Session::load(kData + "/malformed_table.json");
        FAIL();
    } catch (const ValidationError& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("rings[0] 'Bad'"), std::string::npos) << what;
        EXPECT_NE(what.find("fails at ("), std::string::npos) << what;
    }
    try {
        Session::load(kData + "/bad_monoid_table.json");
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("associativity"), std::string::npos) << e.what();
    }
    try {
        Session::load(kData + "/unresolved.json");
        FAIL();
    } catch (const ReferenceError& e) {
        EXPECT_NE(std::string(e.what()).find("'S9'"), std::string::npos) << e.what();
    }
    EXPECT_THROW(Session::load(kData + "/cycle.json"), ReferenceError);
    EXPECT_THROW(Session::load(kData + "/duplicate.json"), ValidationError);
    EXPECT_THROW(Session::parse(R"({"ringz": []})"), ValidationError);
    EXPECT_THROW(Session::load(kData + "/does_not_exist.json"), ValidationError);
}

TEST(SessionLoad, BudgetPrecedence) {
    const std::string text = R"({"settings": {"budget": 77}})";
    EXPECT_EQ(Session::parse(text).settings().budget, 77u);
    EXPECT_EQ(Session::parse(text, 5).settings().budget, 5u);
    ::setenv(kBudgetEnv, "123", 1);
    EXPECT_EQ(Session::parse("{}").settings().budget, 123u);
    EXPECT_EQ(Session::parse(text).settings().budget, 77u);
    ::setenv(kBudgetEnv, "abc", 1);
    EXPECT_THROW(Session::parse("{}"), ValidationError);
    ::unsetenv(kBudgetEnv);
    EXPECT_EQ(Session::parse("{}").settings().budget, kDefaultBudget);
}

TEST(SessionExport, RoundTripIsStructurallyIdentical) {
    const Session s = Session::load(kData + "/all_pass.json");
    const Session back = Session::parse(s.export_json().dump());
    for (const auto& n : s.ring_names()) EXPECT_TRUE(s.ring(n)->same_structure(*back.ring(n))) << n;
    for (const auto& n : s.monoid_names()) EXPECT_TRUE(s.monoid(n)->same_structure(*back.monoid(n))) << n;
    for (const auto& n : s.module_names()) EXPECT_TRUE(s.module(n)->same_structure(*back.module(n))) << n;
    for (const auto& n : s.submodule_names())
        EXPECT_EQ(s.submodule(n).members(), back.submodule(n).members()) << n;
    for (const auto& n : s.series_names()) EXPECT_EQ(s.series(n).terms(), back.series(n).terms()) << n;
    // Exporting again is a fixed point.
    EXPECT_EQ(back.export_json().dump(), s.export_json().dump());
}

TEST(Execute, KnownPayloads) {
    const Session s = Session::load(kData + "/all_pass.json");
    const auto recs = execute_all(s);
    ASSERT_EQ(recs.size(), 15u);
    for (const auto& r : recs) EXPECT_EQ(r.status, Status::ok) << r.command.dump() << r.payload.dump();

    EXPECT_EQ(recs[0].payload["degree"], 2);
    EXPECT_EQ(recs[0].payload["primal"], false);
    EXPECT_EQ(recs[0].payload["property_A"]["holds"], true);
    EXPECT_EQ(recs[0].payload["zero_divisors"]["members"], Json::parse("[0,2,3,4]"));
    EXPECT_EQ(recs[1].payload["degree"], 1);
    EXPECT_EQ(recs[1].payload["primal"], true);
    EXPECT_EQ(recs[2].payload["k_min"], 2);
    EXPECT_EQ(recs[3].payload["witness"], 3);
    EXPECT_EQ(recs[4].payload["witness"], 3);
    EXPECT_EQ(recs[8].payload["outcome"], "pass");
    EXPECT_EQ(recs[8].payload["instances_checked"], 46656);
}

TEST(Execute, ErrorsBecomeRecordsAndExecutionContinues) {
    const Session s = Session::load(kData + "/command_error.json");
    const auto recs = execute_all(s);
    ASSERT_EQ(recs.size(), 4u);
    EXPECT_EQ(recs[0].status, Status::error);
    EXPECT_EQ(recs[0].payload["error_kind"], "hypothesis");
    EXPECT_EQ(recs[1].status, Status::error);
    EXPECT_EQ(recs[2].status, Status::ok);
    EXPECT_EQ(recs[3].status, Status::skipped);
    EXPECT_EQ(exit_code(recs), 2);
}

TEST(Execute, ExitCodePriority) {
    auto rec = [](Status s) {
        CommandRecord r;
        r.status = s;
        return r;
    };
    EXPECT_EQ(exit_code({}), 0);
    EXPECT_EQ(exit_code({rec(Status::ok)}), 0);
    EXPECT_EQ(exit_code({rec(Status::ok), rec(Status::skipped)}), 3);
    EXPECT_EQ(exit_code({rec(Status::skipped), rec(Status::error)}), 2);
    EXPECT_EQ(exit_code({rec(Status::error), rec(Status::counterexample), rec(Status::skipped)}), 1);
}

TEST(Execute, PayloadHashIsStableAndExcludesTiming) {
    const Session s = Session::load(kData + "/all_pass.json");
    const auto a = execute_all(s);
    const auto b = execute_all(s);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].payload.dump(), b[i].payload.dump());
        EXPECT_EQ(payload_hash(a[i].payload), payload_hash(b[i].payload));
        EXPECT_FALSE(a[i].payload.dump().find("elapsed") != std::string::npos);
    }
    EXPECT_EQ(payload_hash(Json::object()), "08f44b07b5901a25");  // FNV-1a 64 of "{}"
}

TEST(Cli, ExitCodeContract) {
    EXPECT_EQ(run_cli("run " + kData + "/all_pass.json").code, 0);
    EXPECT_EQ(run_cli("run " + kData + "/malformed_table.json").code, 2);
    EXPECT_EQ(run_cli("run " + kData + "/syntax_error.json").code, 2);
    EXPECT_EQ(run_cli("run " + kData + "/unresolved.json").code, 2);
    EXPECT_EQ(run_cli("run " + kData + "/oversized.json").code, 3);
    EXPECT_EQ(run_cli("run " + kData + "/command_error.json").code, 2);
    EXPECT_EQ(run_cli("run " + kData + "/all_pass.json", std::string(kFaultEnv) + "=mccoy").code, 1);
    EXPECT_EQ(run_cli("run " + kData + "/all_pass.json --output /nonexistent-dir/out.jsonl").code, 2);
    EXPECT_EQ(run_cli("run " + kData + "/budget_probe.json").code, 0);
    EXPECT_EQ(run_cli("run " + kData + "/budget_probe.json --budget 100").code, 3);
    EXPECT_EQ(run_cli("run " + kData + "/budget_probe.json", std::string(kBudgetEnv) + "=100").code, 3);
    EXPECT_EQ(run_cli("run " + kData + "/budget_probe.json --budget 100000", std::string(kBudgetEnv) + "=100").code,
              0);
    EXPECT_EQ(run_cli("run " + kData + "/all_pass.json --budget 10").code, 3);
    EXPECT_EQ(run_cli("run " + kData + "/all_pass.json", std::string(kBudgetEnv) + "=10").code, 0)
        << "the file's settings.budget wins over the environment";
    EXPECT_EQ(run_cli("validate " + kData + "/all_pass.json").code, 0);
    EXPECT_EQ(run_cli("validate " + kData + "/cycle.json").code, 2);
    EXPECT_EQ(run_cli("bogus").code, 2);
}

TEST(Cli, RecordsAreDeterministic) {
    const CliRun a = run_cli("run " + kData + "/all_pass.json");
    const CliRun b = run_cli("run " + kData + "/all_pass.json");
    const auto ra = records(a.out), rb = records(b.out);
    ASSERT_EQ(ra.size(), 15u);
    ASSERT_EQ(ra.size(), rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
        EXPECT_EQ(ra[i]["payload_hash"], rb[i]["payload_hash"]);
        EXPECT_EQ(ra[i]["payload"].dump(), rb[i]["payload"].dump());
        EXPECT_EQ(ra[i]["payload_hash"], payload_hash(ra[i]["payload"]));
        EXPECT_EQ(ra[i]["version"], kVersion);
        EXPECT_TRUE(ra[i].contains("elapsed_ms"));
    }
}

TEST(Cli, LoadErrorRecordHasPosition) {
    const auto recs = records(run_cli("run " + kData + "/syntax_error.json").out);
    ASSERT_EQ(recs.size(), 1u);
    EXPECT_EQ(recs[0]["status"], "error");
    EXPECT_EQ(recs[0]["payload"]["error_kind"], "parse");
    EXPECT_EQ(recs[0]["payload"]["line"], 3);
}

TEST(Cli, HumanFormatAndOutputFile) {
    const std::string path = ::testing::TempDir() + "semimod_out.jsonl";
    EXPECT_EQ(run_cli("run " + kData + "/all_pass.json --output " + path).code, 0);
    EXPECT_EQ(records(slurp(path)).size(), 15u);
    const CliRun h = run_cli("run " + kData + "/all_pass.json --format human");
    EXPECT_EQ(h.code, 0);
    EXPECT_NE(h.out.find("[0] analyze: ok"), std::string::npos);
}

TEST(Cli, ExportRoundTrip) {
    const std::string path = ::testing::TempDir() + "semimod_export.json";
    ASSERT_EQ(run_cli("export " + kData + "/all_pass.json --output " + path).code, 0);
    const CliRun a = run_cli("run " + kData + "/all_pass.json");
    const CliRun b = run_cli("run " + path);
    ASSERT_EQ(b.code, 0);
    const auto ra = records(a.out), rb = records(b.out);
    ASSERT_EQ(ra.size(), rb.size());
    // Labels of table-defined objects differ from builder labels, so compare
    // the label-free parts of the analysis.
    EXPECT_EQ(ra[0]["payload"]["zero_divisors"]["members"], rb[0]["payload"]["zero_divisors"]["members"]);
    EXPECT_EQ(ra[0]["payload"]["degree"], rb[0]["payload"]["degree"]);
    EXPECT_EQ(ra[2]["payload"], rb[2]["payload"]);
}

TEST(Cli, PermutedLabelsGiveTheSameDecomposition) {
    const auto recs = records(run_cli("run " + kData + "/permuted_z6.json").out);
    ASSERT_EQ(recs.size(), 1u);
    const Json& p = recs[0]["payload"];
    EXPECT_EQ(p["degree"], 2);
    // perm: old -> new = 3 5 0 4 1 2, so (2) = {0,2,4} -> {3,0,1}, (3) = {0,3} -> {3,4}.
    std::set<std::set<int>> got;
    for (const Json& q : p["decomposition"]["primes"]) got.insert(q["ideal"]["members"].get<std::set<int>>());
    EXPECT_EQ(got, (std::set<std::set<int>>{{0, 1, 3}, {3, 4}}));
}

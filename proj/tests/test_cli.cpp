#include <padzeta/cli.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace padzeta;

namespace {

struct Captured {
    int code;
    std::string out;
    std::string err;
};

Captured run_args(std::vector<std::string> args) {
    args.insert(args.begin(), "padzeta_cli");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST(Cli, VerifyA1) {
    const auto r = run_args({"verify", "--prime", "3", "--avatar", "A1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "lhs = |u*theta|^(1/2) I(-3/2) = -1/3 - 4/9*sqrt(3)")) << r.out;
    EXPECT_TRUE(contains(r.out, "= -1/3 - 4/9*sqrt(3)\nPASS")) << r.out;
}

TEST(Cli, VolumesBoth) {
    const auto r = run_args({"volumes", "--prime", "3", "--avatar", "A3", "--max-n", "2", "--mode", "both"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "0\t2/3\t2/3\tok\n"));
    EXPECT_TRUE(contains(r.out, "1\t5/9\t5/9\tok\n"));
    EXPECT_TRUE(contains(r.out, "2\t4/27\t4/27\tok\n"));
    EXPECT_TRUE(contains(r.out, "mismatches: 0"));
}

TEST(Cli, ClassifyAnisotropic) {
    const auto r = run_args({"classify", "--prime", "5", "--u-val", "1", "--u-unit", "1", "--theta-val", "0",
                             "--theta-unit", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "anisotropic, kappa=-1")) << r.out;
    EXPECT_TRUE(contains(r.out, "|u*theta| = 5^-1"));
}

TEST(Cli, NegativeUnitArgument) {
    const auto r = run_args({"classify", "--prime", "5", "--u-val", "0", "--u-unit", "-1", "--theta-val", "0",
                             "--theta-unit", "2", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["avatar"], "A1");
    EXPECT_EQ(j["input"]["u"]["unit"], -1);
}

TEST(Cli, JsonRoundTripsByteIdentical) {
    const std::vector<std::vector<std::string>> cmds{
        {"classify", "--prime", "7", "--avatar", "B", "--format", "json"},
        {"volumes", "--prime", "3", "--avatar", "A2", "--max-n", "3", "--format", "json"},
        {"zeta", "--prime", "5", "--avatar", "A1", "--format", "json"},
        {"verify", "--prime", "11", "--avatar", "A3", "--format", "json"},
    };
    for (const auto& cmd : cmds) {
        const auto r = run_args(cmd);
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(nlohmann::json::parse(r.out).dump(2) + "\n", r.out);
    }
}

TEST(Cli, JsonSchema) {
    const auto v = nlohmann::json::parse(run_args({"verify", "--prime", "3", "--avatar", "A1", "--format", "json"}).out);
    EXPECT_EQ(v["lhs"], (nlohmann::json{{"a", "-1/3"}, {"b", "-4/9"}, {"q", 3}}));
    EXPECT_EQ(v["lhs"], v["rhs"]);
    EXPECT_EQ(v["pass"], true);

    const auto z = nlohmann::json::parse(run_args({"zeta", "--prime", "3", "--avatar", "A1", "--format", "json"}).out);
    EXPECT_EQ(z["num"], (nlohmann::json{"-3/1", "1/9"}));
    EXPECT_EQ(z["den"], (nlohmann::json{"-3/1", "1/1"}));
    EXPECT_EQ(z["s"], "-3/2");
    EXPECT_EQ(z["in_region"], false);
    EXPECT_EQ(z["radius"], "3/1");
}

TEST(Cli, CsvVolumes) {
    const auto r = run_args({"volumes", "--prime", "3", "--avatar", "A3", "--max-n", "1", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,vol_num,vol_den,source\n0,2,3,closed\n1,5,9,closed\n0,2,3,oracle\n1,5,9,oracle\n");
}

TEST(Cli, ZetaAtChosenS) {
    auto r = run_args({"zeta", "--prime", "3", "--avatar", "A1", "--s=0"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "I at s = 0/1: 13/9")) << r.out;
    r = run_args({"zeta", "--prime", "3", "--avatar", "A1", "--s-num", "-3", "--s-den", "2"});
    EXPECT_TRUE(contains(r.out, "-1/3 - 4/9*sqrt(3)   (analytic continuation")) << r.out;
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run_args({"verify", "--prime", "2", "--avatar", "A1"}).code, 1);
    EXPECT_EQ(run_args({"verify", "--prime", "15", "--avatar", "A1"}).code, 1);
    EXPECT_EQ(run_args({"verify", "--prime", "3", "--avatar", "Z"}).code, 1);
    EXPECT_EQ(run_args({"verify", "--prime", "3"}).code, 1);
    EXPECT_EQ(run_args({"frobnicate"}).code, 1);
    EXPECT_EQ(run_args({"zeta", "--prime", "3", "--avatar", "A1", "--s=1/3"}).code, 1);
    EXPECT_EQ(run_args({"zeta", "--prime", "3", "--avatar", "A1", "--s=-1"}).code, 1);  // pole

    const auto sq = run_args({"classify", "--prime", "5", "--u-val", "0", "--u-unit", "1", "--theta-val", "0",
                              "--theta-unit", "4"});
    EXPECT_EQ(sq.code, 1);
    EXPECT_TRUE(contains(sq.err, "InvalidTheta")) << sq.err;

    const auto val = run_args({"classify", "--prime", "5", "--u-val", "2", "--u-unit", "1", "--theta-val", "0",
                               "--theta-unit", "2"});
    EXPECT_EQ(val.code, 1);
    EXPECT_TRUE(contains(val.err, "valuation must be 0 or 1"));
}

TEST(Cli, ResourceLimitNamesShell) {
    const auto r =
        run_args({"volumes", "--prime", "7", "--avatar", "A1", "--max-n", "4", "--node-budget", "1000"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.err, "ResourceLimit")) << r.err;
    EXPECT_TRUE(contains(r.err, "shell n = 4")) << r.err;
}

TEST(Cli, RunConfigDirect) {
    cli::RunConfig cfg;
    cfg.command = "verify";
    cfg.prime = 7;
    cfg.avatar = "A2";
    const auto r = cli::run(cfg);
    EXPECT_EQ(r.exit_code, 0);
    cfg.s_den = 3;
    EXPECT_EQ(cli::run(cfg).exit_code, 1);
}

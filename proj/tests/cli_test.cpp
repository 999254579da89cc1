#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"

namespace bilinear::cli {
namespace {

struct Result
{
    int code = 0;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> const& args)
{
    std::ostringstream out;
    std::ostringstream err;
    int const code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(std::string const& text, std::string const& needle)
{
    return text.find(needle) != std::string::npos;
}

std::filesystem::path temp_file(std::string const& name, std::string const& content)
{
    auto const path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

TEST(Cli, VerifyToeplitz)
{
    Result const r = run_cli({"verify", "--kind", "toeplitz", "--n", "8", "--trials", "100", "--seed", "42"});
    EXPECT_EQ(r.code, exit_pass);
    EXPECT_TRUE(contains(r.out, "fast count: 15\n"));
    EXPECT_TRUE(contains(r.out, "result: PASS"));
}

TEST(Cli, VerifySmallAndSymmetric)
{
    Result const c = run_cli({"verify", "--kind", "circulant", "--n", "1"});
    EXPECT_EQ(c.code, exit_pass);
    EXPECT_TRUE(contains(c.out, "fast count: 1\n"));
    Result const s = run_cli({"verify", "--kind", "symmetric", "--n", "4"});
    EXPECT_TRUE(contains(s.out, "fast count: 10\n"));
    Result const m = run_cli({"verify", "--levels", "toeplitz:3,toeplitz:2", "--trials", "10"});
    EXPECT_EQ(m.code, exit_pass);
    EXPECT_TRUE(contains(m.out, "fast count: 15\n"));
    Result const f = run_cli({"verify", "--kind", "f_circulant", "--n", "5", "--f", "0,1"});
    EXPECT_EQ(f.code, exit_pass);
    Result const sp = run_cli({"verify", "--kind", "sparse", "--n", "5", "--trials", "5"});
    EXPECT_EQ(sp.code, exit_pass);
}

TEST(Cli, ToleranceOverrides)
{
    Result const strict = run_cli({"verify", "--kind", "toeplitz", "--n", "8", "--tol", "1e-30"});
    EXPECT_EQ(strict.code, exit_fail);
    EXPECT_TRUE(contains(strict.out, "result: FAIL"));
    setenv("BILINEAR_KERNELS_TOL", "1e-30", 1);
    Result const env = run_cli({"verify", "--kind", "toeplitz", "--n", "8"});
    Result const bad = [] {
        setenv("BILINEAR_KERNELS_TOL", "abc", 1);
        return run_cli({"verify", "--kind", "toeplitz", "--n", "8"});
    }();
    unsetenv("BILINEAR_KERNELS_TOL");
    EXPECT_EQ(env.code, exit_fail);
    EXPECT_EQ(bad.code, exit_usage);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run_cli({}).code, exit_usage);
    EXPECT_EQ(run_cli({"frobnicate"}).code, exit_usage);
    EXPECT_EQ(run_cli({"verify", "--kind", "banded"}).code, exit_usage);
    EXPECT_EQ(run_cli({"verify"}).code, exit_usage);
    EXPECT_EQ(run_cli({"verify", "--kind", "toeplitz", "--n", "x"}).code, exit_usage);
    EXPECT_EQ(run_cli({"simul", "--variant", "h"}).code, exit_usage);
    EXPECT_EQ(run_cli({"tpp"}).code, exit_usage);
    EXPECT_EQ(run_cli({"tensor", "--builder", "complex_mul", "--ottaviani"}).code, exit_usage);
    EXPECT_EQ(run_cli({"count-table", "--out", "/nonexistent/dir/table.csv"}).code, exit_usage);
    EXPECT_EQ(run_cli({"--help"}).code, exit_pass);
}

TEST(Cli, CountTable)
{
    Result const r = run_cli({"count-table", "--max-n", "8"});
    EXPECT_EQ(r.code, exit_pass);
    EXPECT_EQ(r.out.rfind("structure,n,fast_mults,naive_mults,formula,match\n", 0), 0u);
    EXPECT_TRUE(contains(r.out, "\nskew_symmetric,3,6,6*,6,true\n"));
    EXPECT_TRUE(contains(r.out, "\ntph,1,1,1,1,true\n"));
    EXPECT_TRUE(contains(r.out, "\nbttb,3x2,15,36,15,true\n"));
    EXPECT_FALSE(contains(r.out, "false"));
    EXPECT_EQ(run_cli({"count-table", "--max-n", "8"}).out, r.out);
}

TEST(Cli, CountTableToFile)
{
    auto const path = std::filesystem::temp_directory_path() / "bilinear_count_table.csv";
    Result const r = run_cli({"count-table", "--max-n", "3", "--out", path.string()});
    EXPECT_EQ(r.code, exit_pass);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "structure,n,fast_mults,naive_mults,formula,match");
    std::filesystem::remove(path);
}

TEST(Cli, Tensor)
{
    Result const c = run_cli({"tensor", "--kind", "circulant", "--n", "4"});
    EXPECT_EQ(c.code, exit_pass);
    EXPECT_TRUE(contains(c.out, "rank certified = 4"));
    Result const cm = run_cli({"tensor", "--builder", "complex_mul"});
    EXPECT_EQ(cm.code, exit_pass);
    EXPECT_TRUE(contains(cm.out, "flattening ranks: (2,2,2)"));
    Result const beta = run_cli({"tensor", "--builder", "commutator_beta", "--ottaviani"});
    EXPECT_EQ(beta.code, exit_pass);
    EXPECT_TRUE(contains(beta.out, "border rank >= 5"));
    Result const tph = run_cli({"tensor", "--kind", "tph", "--n", "3"});
    EXPECT_EQ(tph.code, exit_pass);
    EXPECT_TRUE(contains(tph.out, "kernel terms: 9"));
    EXPECT_TRUE(contains(tph.out, "rank certified = 8"));
    Result const skew = run_cli({"tensor", "--kind", "skew_symmetric", "--n", "3"});
    EXPECT_EQ(skew.code, exit_fail);
    EXPECT_TRUE(contains(skew.out, "rank bounds: 3 <= rank <= 6"));
}

TEST(Cli, TensorVerifiesDecompositionFile)
{
    auto const path = temp_file("bilinear_gauss.json",
                                R"({"dims":[2,2,2],"terms":[
                                   {"u":[[1,0],[1,0]],"v":[[1,0],[1,0]],"w":[[0,0],[1,0]]},
                                   {"u":[[1,0],[0,0]],"v":[[1,0],[0,0]],"w":[[1,0],[-1,0]]},
                                   {"u":[[0,0],[1,0]],"v":[[0,0],[1,0]],"w":[[-1,0],[-1,0]]}]})");
    Result const r = run_cli({"tensor", "--builder", "complex_mul", "--decomposition", path.string()});
    EXPECT_EQ(r.code, exit_pass);
    EXPECT_TRUE(contains(r.out, "verify: pass"));
    Result const s = run_cli({"stability", "--decomposition", path.string()});
    EXPECT_TRUE(contains(s.out, "4.8284271247"));
    std::filesystem::remove(path);
}

TEST(Cli, Stability)
{
    Result const r = run_cli({"stability", "--preset", "gauss"});
    EXPECT_EQ(r.code, exit_pass);
    EXPECT_TRUE(contains(r.out, "gauss: 4.8284271247"));
    Result const all = run_cli({"stability"});
    EXPECT_TRUE(contains(all.out, "usual: 4.0000000000"));
    EXPECT_TRUE(contains(all.out, "cube: 4.0000000000"));
    EXPECT_EQ(run_cli({"stability", "--preset", "strassen"}).code, exit_usage);
}

TEST(Cli, TppAndSimul)
{
    Result const d4 = run_cli({"tpp", "--preset", "d4-222"});
    EXPECT_EQ(d4.code, exit_pass);
    EXPECT_TRUE(contains(d4.out, "tpp: true"));
    EXPECT_EQ(run_cli({"tpp", "--preset", "cyclic-1n1", "--n", "6"}).code, exit_pass);
    Result const f = run_cli({"simul", "--variant", "f", "--seed", "7"});
    EXPECT_EQ(f.code, exit_pass);
    EXPECT_TRUE(contains(f.out, "count: 8\n"));
    Result const g = run_cli({"simul", "--variant", "g", "--n", "3"});
    EXPECT_EQ(g.code, exit_pass);
    EXPECT_TRUE(contains(g.out, "count: 24\n"));
}

TEST(Cli, Apply)
{
    auto const m = temp_file("bilinear_m.json", R"({"kind":"circulant","n":2,"data":[[1,0],[2,0]]})");
    auto const v = temp_file("bilinear_v.json", R"({"n":2,"data":[[3,0],[4,0]]})");
    Result const r = run_cli({"apply", "--matrix", m.string(), "--vector", v.string()});
    EXPECT_EQ(r.code, exit_pass);
    nlohmann::json const doc = nlohmann::json::parse(r.out);
    EXPECT_NEAR(doc["data"][0][0].get<double>(), 11.0, 1e-12);
    EXPECT_NEAR(doc["data"][0][1].get<double>(), 0.0, 1e-12);
    EXPECT_NEAR(doc["data"][1][0].get<double>(), 10.0, 1e-12);
    EXPECT_NEAR(doc["data"][1][1].get<double>(), 0.0, 1e-12);
    EXPECT_EQ(doc["bilinear_mults"], 2);
    EXPECT_EQ(doc["formula"], 2);
    auto const bad = temp_file("bilinear_bad.json", R"({"kind":"toeplitz","n":2,"data":[[1,0]]})");
    Result const e = run_cli({"apply", "--matrix", bad.string(), "--vector", v.string()});
    EXPECT_EQ(e.code, exit_usage);
    EXPECT_TRUE(contains(e.err, "/data"));
    for (auto const& p : {m, v, bad})
    {
        std::filesystem::remove(p);
    }
}

}  // namespace
}  // namespace bilinear::cli

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "frozen_values.hpp"

namespace {

namespace fs = std::filesystem;
namespace frozen = hpmbs::validation::frozen;
using hpmbs::cli::ExitCode;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = hpmbs::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Value of the "key: value" line in price output.
double field(const std::string& text, const std::string& key) {
    std::istringstream is(text);
    std::string line;
    const std::string prefix = key + ": ";
    while (std::getline(is, line)) {
        if (line.rfind(prefix, 0) == 0) return std::stod(line.substr(prefix.size()));
    }
    ADD_FAILURE() << "no '" << key << "' line in:\n" << text;
    return NAN;
}

class TempDir : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("hpmbs_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    static std::string slurp(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }

    fs::path dir_;
};

TEST(Cli, PriceDefaultsMatchFrozenValues) {
    Result r = run({"price", "single"});
    ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
    EXPECT_DOUBLE_EQ(field(r.out, "price"), frozen::kVanillaAtm);

    r = run({"price", "quanto"});
    ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
    EXPECT_DOUBLE_EQ(field(r.out, "price"), frozen::kQuantoAtm);

    r = run({"price", "basket"});
    ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
    EXPECT_DOUBLE_EQ(field(r.out, "price"), frozen::kBasketAtm);
}

TEST(Cli, SeriesPriceReportsDeviation) {
    const Result r = run({"price", "single", "--method", "hpm2"});
    ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
    const double price = field(r.out, "price");
    const double exact = field(r.out, "exact");
    EXPECT_DOUBLE_EQ(exact, frozen::kVanillaAtm);
    EXPECT_NEAR(field(r.out, "deviation"), price - exact, 1e-15);
    EXPECT_NE(r.out.find("order: "), std::string::npos);
}

TEST(Cli, BadInputExitsTwo) {
    EXPECT_EQ(run({"price", "single", "--vol", "-0.2"}).code, ExitCode::kBadInput);
    EXPECT_EQ(run({"price", "single", "--vol", "abc"}).code, ExitCode::kBadInput);
    EXPECT_EQ(run({"price", "swaption"}).code, ExitCode::kBadInput);
    EXPECT_EQ(run({"price", "single", "--method", "magic"}).code, ExitCode::kBadInput);
    EXPECT_EQ(run({"figure", "7"}).code, ExitCode::kBadInput);
    EXPECT_EQ(run({"no-such-command"}).code, ExitCode::kBadInput);
    EXPECT_EQ(run({"price", "single", "--order", "9", "--method", "hpm2"}).code, ExitCode::kBadInput);
}

TEST(Cli, HelpExitsZero) {
    EXPECT_EQ(run({"--help"}).code, ExitCode::kOk);
}

TEST_F(TempDir, ConfigFileAndFlagPrecedence) {
    const std::string cfg = write("c.json", R"({"spot": 36.0, "vol": 0.3})");
    const Result from_file = run({"price", "single", "--config", cfg});
    ASSERT_EQ(from_file.code, ExitCode::kOk) << from_file.err;
    EXPECT_DOUBLE_EQ(field(from_file.out, "spot"), 36.0);
    EXPECT_DOUBLE_EQ(field(from_file.out, "vol"), 0.3);

    const Result flag_wins = run({"price", "single", "--config", cfg, "--spot", "44"});
    ASSERT_EQ(flag_wins.code, ExitCode::kOk) << flag_wins.err;
    EXPECT_DOUBLE_EQ(field(flag_wins.out, "spot"), 44.0);
    EXPECT_DOUBLE_EQ(field(flag_wins.out, "vol"), 0.3);

    const Result defaults = run({"price", "single"});
    EXPECT_DOUBLE_EQ(field(defaults.out, "spot"), 40.0);
}

TEST_F(TempDir, ConfigErrors) {
    EXPECT_EQ(run({"price", "single", "--config", write("u.json", R"({"spott": 1})")}).code,
              ExitCode::kBadInput);
    EXPECT_EQ(run({"price", "single", "--config", write("t.json", R"({"spot": "forty"})")}).code,
              ExitCode::kBadInput);
    EXPECT_EQ(run({"price", "single", "--config", write("j.json", "{not json")}).code,
              ExitCode::kBadInput);
    EXPECT_EQ(run({"price", "single", "--config", write("a.json", "[1, 2]")}).code,
              ExitCode::kBadInput);
    EXPECT_EQ(run({"price", "single", "--config", (dir_ / "missing.json").string()}).code,
              ExitCode::kIoError);
}

TEST(Cli, FigureOneCsvShape) {
    const Result r = run({"figure", "1"});
    ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
    std::istringstream is(r.out);
    std::string line;
    std::string header;
    int rows = 0;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header.empty()) {
            header = line;
            continue;
        }
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 3) << line;
    }
    EXPECT_EQ(header, "S,exact,hpm1,hpm2");
    EXPECT_EQ(rows, 201);
    EXPECT_EQ(r.out.find("timestamp"), std::string::npos);
}

TEST_F(TempDir, FigureFileIsByteStable) {
    const std::string a = (dir_ / "a.csv").string();
    const std::string b = (dir_ / "b.csv").string();
    ASSERT_EQ(run({"figure", "6", "--out", a}).code, ExitCode::kOk);
    ASSERT_EQ(run({"figure", "6", "--out", b, "--threads", "3"}).code, ExitCode::kOk);
    const std::string text = slurp(a);
    EXPECT_FALSE(text.empty());
    EXPECT_EQ(text, slurp(b));
}

TEST_F(TempDir, TimestampIsOptIn) {
    const std::string a = (dir_ / "a.csv").string();
    ASSERT_EQ(run({"figure", "1", "--out", a, "--timestamp"}).code, ExitCode::kOk);
    EXPECT_NE(slurp(a).find("# timestamp: "), std::string::npos);
}

TEST_F(TempDir, UnwritableOutputExitsThree) {
    const std::string bad = (dir_ / "no" / "such" / "dir" / "x.csv").string();
    EXPECT_EQ(run({"figure", "1", "--out", bad}).code, ExitCode::kIoError);
    EXPECT_EQ(run({"grid", "single", "--out", bad}).code, ExitCode::kIoError);
}

TEST(Cli, GridMethodColumns) {
    const Result r = run({"grid", "basket", "--method", "hpm2", "--s1-points", "5", "--s2-points", "4"});
    ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
    EXPECT_NE(r.out.find("\nS1,S2,price,exact,error\n"), std::string::npos) << r.out;
}

TEST(Cli, ValidateSingleCriterionPasses) {
    const Result r = run({"validate", "--criterion", "1"});
    EXPECT_EQ(r.code, ExitCode::kOk) << r.out << r.err;
    EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST(Cli, ValidateDetectsMutatedCoefficient) {
    const Result r = run({"validate", "--mutate-phi2", "--criterion", "2"});
    EXPECT_EQ(r.code, ExitCode::kValidationFailure);
    EXPECT_NE(r.out.find("extrapolated recursion residual"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, MeasurePrintsRegressionValues) {
    const Result r = run({"validate", "--measure"});
    ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
    EXPECT_NE(r.out.find("kVanillaAtm"), std::string::npos) << r.out;
}

}  // namespace

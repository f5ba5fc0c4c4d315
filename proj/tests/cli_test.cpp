#include "cli.hpp"

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = simplexwidth::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST(CliTable, Csv) {
    const CliRun r = run({"table", "--max-n", "3", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 4u);
    EXPECT_EQ(ls[0], "n,parity,width_std_sq,width_reg_sq,width_reg,inradius,circumradius");
    EXPECT_EQ(ls[1], "1,odd,2/1,1/1,1,0.5,0.5");
    EXPECT_EQ(ls[2], "2,even,3/2,3/4,0.866025403784,0.288675134595,0.57735026919");
    EXPECT_EQ(ls[3].rfind("3,odd,1/1,1/2,0.707106781187,", 0), 0u);
}

TEST(CliTable, Json) {
    const CliRun r = run({"table", "--max-n", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 1u);
    EXPECT_EQ(nlohmann::json::parse(ls[0])["width_reg_sq"], "1/1");
}

TEST(CliTable, IncludeNumeric) {
    const CliRun r = run({"table", "--max-n", "4", "--include-numeric"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 5u);
    EXPECT_EQ(ls[0], "n,parity,width_std_sq,width_reg_sq,width_reg,inradius,circumradius,numeric_width,abs_error");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const std::string err = ls[i].substr(ls[i].rfind(',') + 1);
        EXPECT_LE(std::stod(err), 1e-6) << ls[i];
    }
}

TEST(CliTable, RangeErrors) {
    EXPECT_EQ(run({"table", "--max-n", "0"}).code, 2);
    EXPECT_EQ(run({"table", "--max-n", "10001"}).code, 2);
    EXPECT_EQ(run({"table", "--max-n", "101", "--include-numeric"}).code, 2);
    EXPECT_EQ(run({"table", "--max-n", "3", "--format", "xml"}).code, 2);
    const CliRun r = run({"table", "--max-n", "0"});
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
}

TEST(CliWidth, ExactAndDecimal) {
    EXPECT_EQ(run({"width", "--n", "5", "--kind", "regular", "--exact"}).out, "width^2 = 1/3\n");
    EXPECT_EQ(run({"width", "--n", "2", "--kind", "standard", "--exact"}).out, "width^2 = 3/2\n");
    EXPECT_EQ(run({"width", "--n", "3"}).out, "width = 0.707106781187\n");
    EXPECT_EQ(run({"width", "--n", "0"}).code, 2);
    EXPECT_EQ(run({"width", "--n", "3", "--kind", "weird"}).code, 2);
}

TEST(CliDirections, ListsFamily) {
    const CliRun r = run({"directions", "--n", "3", "--list"});
    ASSERT_EQ(r.code, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 8u);
    EXPECT_EQ(ls[0], "count: 6");
    EXPECT_EQ(ls[2], "[-0.5, -0.5, 0.5, 0.5]");
    for (std::size_t i = 2; i < ls.size(); ++i) {
        std::string stripped = ls[i];
        for (const char* tok : {"-0.5", "0.5", "[", "]", ",", " "}) {
            for (auto pos = stripped.find(tok); pos != std::string::npos; pos = stripped.find(tok)) {
                stripped.erase(pos, std::string(tok).size());
            }
        }
        EXPECT_TRUE(stripped.empty()) << ls[i];
    }
    EXPECT_EQ(run({"directions", "--n", "21"}).code, 2);
}

TEST(CliOptimize, RecoversEvenCase) {
    const CliRun r = run({"optimize", "--n", "2", "--restarts", "64", "--seed", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("width: 1.22474487139\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("optimal-family: true\n"), std::string::npos) << r.out;
}

TEST(CliVerify, PassesAndRejectsBadRange) {
    const CliRun r = run({"verify", "--max-n", "8", "--seed", "42"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("9/9 checks passed"), std::string::npos);
    EXPECT_EQ(run({"verify", "--max-n", "0"}).code, 2);
    EXPECT_EQ(run({"verify", "--max-n", "65"}).code, 2);
}

TEST(CliUsage, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"width"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliDeterminism, ByteIdenticalOutput) {
    const std::vector<std::string> args{"optimize", "--n", "5", "--seed", "123"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> table{"table", "--max-n", "3", "--include-numeric", "--seed", "9"};
    EXPECT_EQ(run(table).out, run(table).out);
}

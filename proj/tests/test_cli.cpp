#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#ifndef NETSEL_CLI
#error "NETSEL_CLI must point at the built command-line tool"
#endif

namespace {

struct CliResult {
    int code;
    std::string out;
};

CliResult run(const std::string& args) {
    const std::string cmd = std::string(NETSEL_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::vector<double> fields(const std::string& line) {
    std::vector<double> out;
    std::istringstream in(line);
    std::string cell;
    std::getline(in, cell, ',');  // name
    while (std::getline(in, cell, ',')) out.push_back(std::stod(cell));
    return out;
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST(Cli, SimulateIsReproducible) {
    const std::string args =
        "simulate --iterations 100 --seed 7 --method topsis --weighting ahp,bwm-gwo --class streaming --removal worst";
    const CliResult a = run(args);
    ASSERT_EQ(a.code, 0) << a.out;
    const auto rows = lines(a.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], "method,weighting,class,removal,iterations,incidence,step_ratio");
    EXPECT_EQ(rows[1].rfind("topsis,ahp,streaming,worst,100,", 0), 0u);
    EXPECT_EQ(rows[2].rfind("topsis,bwm-gwo,streaming,worst,100,", 0), 0u);
    EXPECT_EQ(run(args).out, a.out);
}

TEST(Cli, ConfigFileAndOverrides) {
    const auto conf = temp_file("netsel_cli_test.conf", "iterations = 5\nmethod = saw\nweighting = ahp\nclass = background\n");
    const CliResult a = run("simulate --config " + conf + " --iterations 3");
    ASSERT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(lines(a.out)[1].rfind("saw,ahp,background,worst,3,", 0), 0u);
    const CliResult missing = run("simulate --config /nonexistent/netsel.conf");
    EXPECT_EQ(missing.code, 2);
    EXPECT_EQ(run("simulate --iterations 0").code, 2);
    EXPECT_EQ(run("simulate --method vikor").code, 2);
}

TEST(Cli, JsonOutput) {
    const CliResult a = run("simulate --iterations 2 --method saw --weighting bwm --class interactive --format json");
    ASSERT_EQ(a.code, 0) << a.out;
    EXPECT_NE(a.out.find("\"iterations_with_reversal\""), std::string::npos);
}

TEST(Cli, WeightsAhpRow) {
    const CliResult a = run("weights --weighting ahp --class streaming");
    ASSERT_EQ(a.code, 0) << a.out;
    const auto rows = lines(a.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], "name,cb,s,dr,d,j,plr");
    EXPECT_EQ(rows[1], "ahp,0.101,0.195,0.297,0.092,0.119,0.192");
}

TEST(Cli, WeightsBwmPutsDelayFirstForConversational) {
    const CliResult a = run("weights --weighting bwm --class conversational");
    ASSERT_EQ(a.code, 0) << a.out;
    const auto rows = lines(a.out);
    ASSERT_EQ(rows.size(), 2u);
    const auto w = fields(rows[1]);
    ASSERT_EQ(w.size(), 6u);
    EXPECT_EQ(std::max_element(w.begin(), w.end()) - w.begin(), 3);
}

TEST(Cli, HybridWithAlphaOneIsSubjective) {
    const CliResult a = run("weights --weighting bwm-gwo --class interactive --alpha 1 --beta 0 --gwo-iters 10");
    ASSERT_EQ(a.code, 0) << a.out;
    const auto rows = lines(a.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[1].rfind("subjective,", 0), 0u);
    EXPECT_EQ(rows[3].rfind("combined,", 0), 0u);
    EXPECT_EQ(fields(rows[3]), fields(rows[1]));
    EXPECT_EQ(run("weights --alpha 0.5 --beta 0.6").code, 2);
}

TEST(Cli, RankMatrix) {
    const auto csv = temp_file("netsel_cli_rank.csv", "rat,cb,s,dr,d,j,plr\n"
                                                      "wifi,7,50,5,120,15,40\n"
                                                      "lte,45,60,50,150,8,50\n"
                                                      "5g,90,70,900,3,1.5,8\n");
    const CliResult a = run("rank --matrix " + csv + " --method topsis --weighting ahp --class conversational");
    ASSERT_EQ(a.code, 0) << a.out;
    const auto rows = lines(a.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0], "rank,row,rat,score");
    EXPECT_EQ(rows[1].rfind("1,2,5g,", 0), 0u);

    const auto single = temp_file("netsel_cli_single.csv", "rat,cb,s,dr,d,j,plr\nwifi,7,50,5,120,15,40\n");
    const CliResult s = run("rank --matrix " + single);
    ASSERT_EQ(s.code, 0) << s.out;
    EXPECT_EQ(lines(s.out).size(), 2u);

    const auto bad = temp_file("netsel_cli_bad.csv", "rat,cb,s,datarate,d,j,plr\nwifi,7,50,5,120,15,40\n");
    const CliResult b = run("rank --matrix " + bad);
    EXPECT_EQ(b.code, 2);
    EXPECT_NE(b.out.find("'dr'"), std::string::npos) << b.out;
    EXPECT_EQ(run("rank").code, 2);
}

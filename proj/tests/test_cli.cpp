#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <pw/pw.hpp>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(PWTOOL_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    for (std::size_t k; (k = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, k);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& bytes) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path, std::ios::binary) << bytes;
    return path.string();
}

} // namespace

TEST(Cli, EnumerateCsv) {
    auto r = run("enumerate --class triangulation --kappa 3 --n 10 --report csv");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("10,triangulation,3,72,1,18,17,233"), std::string::npos) << r.out;
}

TEST(Cli, EnumerateAudit) {
    auto r = run("enumerate --class quadrangulation --kappa 3 --n 12 --report json --audit --jobs 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"max_wiener\": 136"), std::string::npos);
    EXPECT_NE(r.out.find("audit quad3_last_layer passed=3 failed=0 skipped=0"), std::string::npos) << r.out;
}

TEST(Cli, Bounds) {
    auto r = run("bounds --class tri5 --n 12");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("remoteness_bound 18/11"), std::string::npos);
    EXPECT_NE(r.out.find("differs from the known maximum 108"), std::string::npos) << r.out;
}

TEST(Cli, Formula) {
    auto r = run("formula --class tri4 --n 14");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "conjectured_wiener 166\ncase n=4k+2\n");
}

TEST(Cli, MeasureK4) {
    auto path = temp_file("pw_k4.pc", pw::encode_planar_code(pw::build_from_rotation(pw::detail::k4_rotation())));
    auto r = run("measure " + path + " --wiener");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "wiener 6\n");
}

TEST(Cli, BuildThenMeasureThroughPipe) {
    auto r = run("build --family T3 --n 12 | " + std::string(PWTOOL_PATH) + " measure - --remoteness --profile 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("remoteness 26/11"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("transmission 26"), std::string::npos);
}

TEST(Cli, Deterministic) {
    EXPECT_EQ(run("build --family Q3 --n 20").out, run("build --family Q3 --n 20").out);
}

TEST(Cli, VerifyFamily) {
    EXPECT_EQ(run("verify-family --family T4 --n-from 6 --n-to 30").code, 0);
    EXPECT_EQ(run("verify-family --family T5_WIENER --n-from 22 --n-to 40").code, 0);
    auto r = run("verify-family --family Q3 --n-from 14 --n-to 16");
    EXPECT_EQ(r.out.substr(0, 15), "Q3 n=14 PASS wi");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("build --family T3 --n 5").code, 2);
    EXPECT_EQ(run("build --family T9 --n 9").code, 2);
    EXPECT_EQ(run("formula --class tri3 --n 9 --bogus").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("measure /nonexistent/file").code, 2);
}

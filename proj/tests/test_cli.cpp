#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <unistd.h>

#include "cli.hpp"
#include "config.hpp"
#include "sampling.hpp"
#include "ssrr/serialize.hpp"
#include "svg_check.hpp"

using namespace ssrr;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "ssrr");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() /
               ("ssrr_cli_" + std::to_string(::getpid()) + "_" + info->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const json& j) { return write_text(name, j.dump()); }
    std::string write_text(const std::string& name, const std::string& text) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    static std::string slurp(const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    fs::path dir_;
};

json golden(double delta_deg = 0.0) {
    const double c = std::cos(deg_to_rad(delta_deg)), s = std::sin(deg_to_rad(delta_deg));
    return {{"gamma", 2.0}, {"upstream", {{"rho", 1.0}, {"v", {3.0, 0.0}}}}, {"xi_r", {c, s}}, {"wall_dir", {c, s}}};
}

}  // namespace

TEST_F(Cli, PolarGoldenRowsSatisfyShockRelation) {
    const Outcome r = run({"polar", "--config", write("g.json", golden()), "--samples", "360"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    const auto rows = read_polar_csv(in);
    ASSERT_EQ(rows.size(), 720u);
    const UpstreamData up(GasModel(2.0), 1.0, {3.0, 0.0});
    double worst = 0.0;
    for (const auto& row : rows) worst = std::max(worst, std::abs(g_eval(up, row.v, {1.0, 0.0})));
    EXPECT_LT(worst, 1e-10);
    // The last minus-side row is the pseudo-normal point v_d = (sqrt 5, 0).
    EXPECT_NEAR(rows[359].v.x, std::sqrt(5.0), 1e-12);
}

TEST_F(Cli, PseudoSubsonicUpstreamExitsThree) {
    json j = golden();
    j["upstream"]["v"] = {1.2, 0.0};
    j["xi_r"] = {0.0, 0.0};
    for (const char* cmd : {"polar", "reflect", "certify"}) {
        const Outcome r = run({cmd, "--config", write("s.json", j)});
        EXPECT_EQ(r.code, 3) << cmd;
        EXPECT_NE(r.err.find("upstream pseudo-subsonic at xi"), std::string::npos) << r.err;
        EXPECT_TRUE(r.out.empty());
    }
}

TEST_F(Cli, SvgIsWellFormedAndMarksRoots) {
    const std::string svg = path("p.svg");
    const Outcome r = run({"polar", "--config", write("g.json", golden(2.0)), "--samples", "64", "--svg", svg,
                       "--out", path("p.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string doc = slurp(svg);
    std::string why;
    EXPECT_TRUE(svgcheck::well_formed(doc, &why)) << why;
    EXPECT_NE(doc.find("<polyline"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
    std::ifstream csv(path("p.csv"));
    EXPECT_EQ(read_polar_csv(csv).size(), 128u);
}

TEST_F(Cli, ReflectListsWeakAndStrongRoots) {
    const Outcome r = run({"reflect", "--config", write("g.json", golden(2.0))});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    ASSERT_EQ(j["solutions"].size(), 2u);
    EXPECT_EQ(j["solutions"][0]["type"], "weak");
    EXPECT_EQ(j["solutions"][1]["type"], "strong");
    EXPECT_GT(j["solutions"][1]["rho_d"].get<double>(), j["solutions"][0]["rho_d"].get<double>());
    EXPECT_FALSE(j["detached"].get<bool>());
}

TEST_F(Cli, DetachmentIsSuccessWithEmptyList) {
    const Outcome r = run({"reflect", "--config", write("g.json", golden(80.0))});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["solutions"].empty());
    EXPECT_TRUE(j["detached"].get<bool>());
}

TEST_F(Cli, IncidentShockFrontEnd) {
    // Golden normal incident shock; the reflected shock sees the state behind it.
    json j = golden();
    j["upstream"] = {{"rho", 1.0}, {"v", {2.0, 0.0}}};
    j["xi_r"] = {-1.0, 0.0};
    j["wall_dir"] = {1.0, 0.0};
    j["incident"] = {{"xi", {0.0, 0.0}}, {"normal", {1.0, 0.0}}};
    const Outcome r = run({"reflect", "--config", write("i.json", j)});
    ASSERT_EQ(r.code, 0) << r.err;
    const json out = json::parse(r.out);
    EXPECT_NEAR(out["upstream"]["rho"].get<double>(), (1.0 + std::sqrt(5.0)) / 2.0, 1e-12);
}

TEST_F(Cli, CertifyStrongAndWeakDesignations) {
    const std::string cfg = write("g.json", golden(2.0));
    const Outcome strong = run({"certify", "--config", cfg, "--grid", "64x64"});
    ASSERT_EQ(strong.code, 0) << strong.err;
    const json s = json::parse(strong.out);
    EXPECT_EQ(s["status"], "certified");
    EXPECT_GT(s["delta_interior"].get<double>(), 0.0);
    EXPECT_GT(s["delta_shock"].get<double>(), 0.0);

    const Outcome weak = run({"certify", "--config", cfg, "--root", "weak"});
    ASSERT_EQ(weak.code, 0) << weak.err;
    const json w = json::parse(weak.out);
    EXPECT_EQ(w["status"], "not_strong_type");
    EXPECT_TRUE(w["delta_shock"].is_null());

    const Outcome detached = run({"certify", "--config", write("d.json", golden(80.0))});
    EXPECT_EQ(json::parse(detached.out)["status"], "not_strong_type");
}

TEST_F(Cli, CertifyForcedWeakHasNegativeShockMargin) {
    // Transonic weak root: deflection between the sonic and detachment angles.
    const Polar p = polar_trace(UpstreamData(GasModel(2.0), 1.0, {2.0 * std::sqrt(2.0), 0.0}), {0, 0}, 128, 1);
    ASSERT_TRUE(p.sonic_phi.has_value());
    const double tau_s = turning_angle(polar_shock_at_angle(p.upstream, p.xi, *p.sonic_phi, Side::plus));
    const double tau = 0.5 * (tau_s + p.tau_max);
    json j = {{"gamma", 2.0},
              {"upstream", {{"rho", 1.0}, {"v", {2.0 * std::sqrt(2.0), 0.0}}}},
              {"xi_r", {0.0, 0.0}},
              {"wall_dir", {std::cos(tau), std::sin(tau)}},
              {"certify", {{"force_weak", true}, {"grid", {64, 64}}}}};
    const Outcome r = run({"certify", "--config", write("w.json", j)});
    ASSERT_EQ(r.code, 0) << r.err;
    const json c = json::parse(r.out);
    EXPECT_EQ(c["status"], "failed");
    EXPECT_LT(c["delta_shock"].get<double>(), 0.0);
}

TEST_F(Cli, DiagnoseSynthesizedFields) {
    const std::string weak = path("weak.field");
    write_field_file(weak, synthesize_field({}));
    const Outcome ok = run({"diagnose", "--field", weak});
    ASSERT_EQ(ok.code, 0) << ok.err;
    const json j = json::parse(ok.out);
    EXPECT_EQ(j["verdict"], "consistent_weak");
    EXPECT_TRUE(j["violations"].empty());

    SynthSpec dip;
    dip.plant_wall_dip = true;
    const std::string bad = path("dip.field");
    write_field_file(bad, synthesize_field(dip));
    const json cfg = {{"diagnose", {{"field", bad}}}};
    const Outcome v = run({"diagnose", "--config", write("d.json", cfg)});
    ASSERT_EQ(v.code, 0) << v.err;
    const json b = json::parse(v.out);
    EXPECT_EQ(b["verdict"], "violates_minimum_principle");
    const PlantedNode at = planted_node(dip);
    bool found = false;
    for (const auto& x : b["violations"]) found = found || (x["i"] == at.i && x["j"] == at.j);
    EXPECT_TRUE(found) << b.dump();
}

TEST_F(Cli, DiagnoseMalformedFieldIsIoError) {
    const Outcome r = run({"diagnose", "--field", write_text("bad.field", "SSRR-FIELD 1\nnonsense\n")});
    EXPECT_EQ(r.code, 4);
    EXPECT_EQ(run({"diagnose", "--field", path("missing.field")}).code, 4);
}

TEST_F(Cli, SweepCsvAndLociRoundTrip) {
    json j = {{"gamma", 1.4}, {"scenario", "supersonic_wedge"},
              {"sweep", {{"tau_deg", {1.0, 85.0, 15}}, {"mach", {2.0, 4.0, 3}}, {"samples", 64}}}};
    const std::string loci = path("loci.csv");
    const Outcome r = run({"sweep", "--config", write("s.json", j), "--loci", loci});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    const auto points = read_sweep_csv(in);
    EXPECT_EQ(points.size(), 45u);
    std::ifstream lin(loci);
    const auto rows = read_loci_csv(lin);
    int detach = 0;
    for (const auto& row : rows) detach += row.locus == "detachment";
    EXPECT_EQ(detach, 3);  // one crossing per Mach column

    // Re-emitting the parsed rows reproduces the file byte for byte.
    SweepResult again{Scenario::supersonic_wedge, 1.4, points, {}};
    for (const auto& row : rows) again.loci.push_back({row.locus, row.tau_deg, row.mach});
    std::ostringstream p2, l2;
    write_sweep_csv(p2, again);
    write_loci_csv(l2, again);
    EXPECT_EQ(p2.str(), r.out);
    EXPECT_EQ(l2.str(), slurp(loci));

    // --grid overrides the configured counts.
    const Outcome g = run({"sweep", "--config", path("s.json"), "--grid", "4x2"});
    ASSERT_EQ(g.code, 0) << g.err;
    std::istringstream gin(g.out);
    EXPECT_EQ(read_sweep_csv(gin).size(), 8u);
}

TEST_F(Cli, OutputIsIndependentOfJobs) {
    const std::string cfg = write("g.json", golden(2.0));
    json sj = {{"gamma", 2.0}, {"sweep", {{"tau_deg", {1.0, 80.0, 9}}, {"mach", {1.5, 3.0, 4}}, {"samples", 48}}}};
    const std::string scfg = write("s.json", sj);
    const std::string field = path("f.field");
    write_field_file(field, synthesize_field({}));
    const std::vector<std::vector<std::string>> commands = {
        {"polar", "--config", cfg, "--samples", "200"},
        {"reflect", "--config", cfg},
        {"certify", "--config", cfg, "--grid", "96x80"},
        {"sweep", "--config", scfg},
        {"diagnose", "--field", field},
    };
    for (auto args : commands) {
        args.push_back("--jobs");
        args.push_back("1");
        const Outcome serial = run(args);
        ASSERT_EQ(serial.code, 0) << args[0] << serial.err;
        for (const char* jobs : {"2", "4", "1"}) {
            args.back() = jobs;
            EXPECT_EQ(run(args).out, serial.out) << args[0] << " --jobs " << jobs;
        }
    }
}

TEST_F(Cli, JsonNumbersRoundTripExactly) {
    const Outcome r = run({"certify", "--config", write("g.json", golden(2.0)), "--grid", "64x64"});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(dump_json(j), r.out);
    const double d = j["delta_shock"].get<double>();
    EXPECT_EQ(json::parse(json(d).dump()).get<double>(), d);
}

TEST_F(Cli, ConfigErrorsNameTheField) {
    auto expect = [&](const json& j, const std::string& needle) {
        const Outcome r = run({"reflect", "--config", write("c.json", j)});
        EXPECT_EQ(r.code, 2) << j.dump();
        EXPECT_NE(r.err.find(needle), std::string::npos) << r.err;
    };
    json j = golden();
    j.erase("gamma");
    expect(j, "gamma");
    j = golden();
    j["upstream"]["v"] = {1.0};
    expect(j, "upstream.v must be an array of 2 numbers");
    j = golden();
    j["upstream"]["rho"] = -1.0;
    expect(j, "upstream.rho must be positive");
    j = golden();
    j["speed"] = 3;
    expect(j, "unknown field speed");
    j = golden();
    j["xi_r"] = {1.0, 0.5};
    expect(j, "xi_r");
    j = golden();
    j["wall_dir"] = {0.0, 0.0};
    expect(j, "wall_dir");
    j = golden();
    j["scenario"] = "mach_reflection";
    expect(j, "scenario");

    EXPECT_EQ(run({"reflect", "--config", write_text("x.json", "{ not json")}).code, 2);
    EXPECT_EQ(run({"reflect"}).code, 2);
    EXPECT_EQ(run({"reflect", "--config", path("nope.json")}).code, 4);
    const std::string g = write("g.json", golden(2.0));
    EXPECT_EQ(run({"certify", "--config", g, "--beta", "1.5"}).code, 2);
    EXPECT_EQ(run({"certify", "--config", g, "--beta", "half"}).code, 2);
    EXPECT_EQ(run({"certify", "--config", g, "--grid", "64by64"}).code, 2);
    EXPECT_EQ(run({"certify", "--config", g, "--root", "critical"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"reflect", "--config", g, "--out", path("no/such/dir/out.json")}).code, 4);
}

TEST_F(Cli, ExplicitBetaIsUsed) {
    const Outcome r = run({"certify", "--config", write("g.json", golden(2.0)), "--beta", "0.75", "--grid", "64x64",
                       "--epsilon", "0.01"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["beta"].get<double>(), 0.75);
    EXPECT_EQ(j["epsilon"].get<double>(), 0.01);
}

TEST_F(Cli, HelpExitsZero) {
    const Outcome r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("certify"), std::string::npos);
}

TEST_F(Cli, BinaryMatchesInProcess) {
    const char* exe = std::getenv("SSRR_CLI");
    if (!exe) GTEST_SKIP() << "SSRR_CLI not set";
    const std::string cfg = write("g.json", golden(2.0));
    const std::string out = path("r.json");
    const std::string cmd = std::string(exe) + " reflect --config " + cfg + " --out " + out;
    ASSERT_EQ(std::system(cmd.c_str()), 0);
    EXPECT_EQ(slurp(out), run({"reflect", "--config", cfg}).out);

    json j = golden();
    j["upstream"]["v"] = {1.2, 0.0};
    j["xi_r"] = {0.0, 0.0};
    const std::string bad = std::string(exe) + " polar --config " + write("s.json", j) + " 2>" + path("err.txt");
    const int status = std::system(bad.c_str());
    ASSERT_TRUE(WIFEXITED(status));
    EXPECT_EQ(WEXITSTATUS(status), 3);
    EXPECT_NE(slurp(path("err.txt")).find("upstream pseudo-subsonic at xi"), std::string::npos);
}

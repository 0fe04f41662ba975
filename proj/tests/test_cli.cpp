#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sca/cli.hpp"

using sca::cli::kExitOk;
using sca::cli::kExitUsage;

namespace {

const std::string kDir = SCA_SCENARIO_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = sca::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = temp_path(name);
    std::ofstream(path) << text;
    return path;
}

// Label column of the analysis tables is 24 wide.
std::string table_row(const std::string& label, const std::string& value) {
    std::string l = label;
    l.resize(24, ' ');
    return "  " + l + " " + value;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze the bundled scenarios") {
    const auto ac = run({"analyze", kDir + "/80211ac.scn"});
    CHECK(ac.code == kExitOk);
    CHECK(has(ac.out, table_row("SC throughput SC_R", "80 bits/us")));
    CHECK(has(ac.out, table_row("t_comp", "3.2 us")));
    CHECK(has(ac.out, table_row("bandwidth W", "160 MHz")));
    CHECK(has(ac.out, table_row("min processor rate", "1440 instr/us")));

    const auto eq = run({"analyze", kDir + "/80211a_equal_resources.scn"});
    CHECK(has(eq.out, table_row("SC throughput SC_R", "18.4615 bits/us")));

    const auto legacy = run({"analyze", kDir + "/80211a.scn"});
    CHECK(has(legacy.out, table_row("min processor rate", "120 instr/us")));
    CHECK(has(legacy.out, table_row("SC throughput SC_R", "10 bits/us")));
}

TEST_CASE("analyze writes a csv row") {
    const auto path = temp_path("sca_cli_analyze.csv");
    const auto r = run({"--csv", path, "--quiet", "analyze", kDir + "/80211ac.scn"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    const auto csv = slurp(path);
    CHECK(csv.rfind("scenario,n,m,", 0) == 0);
    CHECK(has(csv, "\n80211ac,512,2,312500,1.44e+09,fft_radix2,3.2e-06,1.6e+08,8e+07,0.5,"));
    std::filesystem::remove(path);
}

TEST_CASE("analyze reports config errors with exit 2") {
    const auto path = write_temp("sca_cli_bad.scn", "waveform.nn = 64\n");
    const auto r = run({"analyze", path});
    CHECK(r.code == kExitUsage);
    CHECK(has(r.err, "waveform.nn"));
    CHECK(has(r.err, "unknown key"));
    std::filesystem::remove(path);

    CHECK(run({"analyze", kDir + "/does_not_exist.scn"}).code == kExitUsage);
}

TEST_CASE("compare the Wi-Fi generations") {
    const auto r = run({"compare", kDir + "/80211ac.scn", kDir + "/80211a_equal_resources.scn"});
    CHECK(r.code == kExitOk);
    CHECK(has(r.out, table_row("classic gain", "8\n")));
    CHECK(has(r.out, table_row("SC gain", "4.33333\n")));

    const auto legacy = run({"compare", kDir + "/80211ac.scn", kDir + "/80211a.scn"});
    CHECK(has(legacy.out, table_row("SC gain", "8\n")));

    const auto same = run({"compare", kDir + "/80211ac.scn", kDir + "/80211ac.scn"});
    CHECK(has(same.out, table_row("classic gain", "1\n")));
    CHECK(has(same.out, table_row("SC gain", "1\n")));
}

TEST_CASE("classify") {
    const auto nlogn = run({"classify", "--ofdm", "--conjecture", "nlogn"});
    CHECK(nlogn.code == kExitOk);
    CHECK(has(nlogn.out, "comp-limited: yes"));

    CHECK(has(run({"classify", "--ofdm", "--conjecture", "linear:1"}).out, "comp-limited: no"));
    CHECK(has(run({"classify", "--b", "N", "--t", "N^2"}).out, "scalable: no"));
    CHECK(has(run({"classify", "--b", "N", "--t", "N*log", "--capacity"}).out, "comp-limited: yes"));

    const auto rec = run({"classify", "--ofdm", "--conjecture", "linear:7", "--record"});
    CHECK(has(rec.out, "relation=theta\n"));
    CHECK(has(rec.out, "comp_limited=false\n"));

    const auto path = temp_path("sca_cli_classify.txt");
    CHECK(run({"--csv", path, "--quiet", "classify", "--ofdm", "--conjecture", "nlogn"}).code == kExitOk);
    CHECK(has(slurp(path), "comp_limited=true\n"));
    std::filesystem::remove(path);
}

TEST_CASE("classify usage errors") {
    CHECK(run({"classify", "--ofdm"}).code == kExitUsage);
    CHECK(run({"classify", "--ofdm", "--conjecture", "cubic"}).code == kExitUsage);
    CHECK(run({"classify", "--b", "N"}).code == kExitUsage);
    CHECK(run({"classify", "--b", "N^", "--t", "N"}).code == kExitUsage);
    CHECK(run({"classify", "--b", "N", "--t", "N", "--conjecture", "nlogn"}).code == kExitUsage);
}

TEST_CASE("sweep") {
    const auto r = run({"sweep", kDir + "/80211ac.scn", "--n-min", "64", "--n-max", "65536"});
    CHECK(r.code == kExitOk);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,sc_throughput_bps,sc_efficiency_bps_hz");
    std::uint64_t best_n = 0;
    double best = 0.0;
    int count = 0;
    while (std::getline(lines, line)) {
        ++count;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const double v = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        if (v > best) {
            best = v;
            best_n = std::stoull(line.substr(0, c1));
        }
    }
    CHECK(count == 11);
    CHECK((best_n == 2048 || best_n == 4096));

    CHECK(run({"sweep", kDir + "/80211ac.scn", "--n-min", "128", "--n-max", "64"}).code == kExitUsage);
    CHECK(run({"sweep", kDir + "/80211ac.scn", "--n-min", "96"}).code == kExitUsage);
}

TEST_CASE("sweep to a csv file prints the peak") {
    const auto path = temp_path("sca_cli_sweep.csv");
    const auto r = run({"--csv", path, "sweep", kDir + "/80211ac.scn"});
    CHECK(r.code == kExitOk);
    CHECK(has(r.out, table_row("peak N", "4096")));
    CHECK(slurp(path).rfind("n,sc_throughput_bps", 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("bench") {
    const auto naive = run({"bench", "--impl", "dft_naive", "--n-list", "64", "--reps", "3"});
    CHECK(naive.code == kExitOk);
    CHECK(has(naive.out, "\ndft_naive,64,4096,4096,"));

    const auto fast = run({"bench", "--impl", "fft_radix2", "--n-list", "64,512", "--reps", "3"});
    CHECK(has(fast.out, "\nfft_radix2,64,192,384,"));
    CHECK(has(fast.out, "\nfft_radix2,512,2304,4608,"));

    CHECK(run({"bench", "--impl", "fft_radix2", "--n-list", "100"}).code == kExitUsage);
    CHECK(run({"bench", "--impl", "bluestein", "--n-list", "64"}).code == kExitUsage);
    CHECK(run({"bench", "--impl", "dft_naive", "--n-list", "64", "--reps", "2"}).code == kExitUsage);
    CHECK(run({"bench", "--impl", "dft_naive", "--n-list", "x"}).code == kExitUsage);
}

TEST_CASE("bench counts are deterministic for a seed") {
    auto counts = [](const std::string& out) {
        std::string kept;
        std::istringstream lines(out);
        std::string line;
        while (std::getline(lines, line)) kept += line.substr(0, line.rfind(',', line.rfind(',') - 1)) + "\n";
        return kept;
    };
    const auto a = run({"bench", "--impl", "fft_radix2", "--n-list", "8,16,32", "--reps", "3", "--seed", "4"});
    const auto b = run({"bench", "--impl", "fft_radix2", "--n-list", "8,16,32", "--reps", "3", "--seed", "4"});
    CHECK(counts(a.out) == counts(b.out));
}

TEST_CASE("dump round-trips through analyze") {
    const auto d = run({"dump", kDir + "/80211a.scn"});
    CHECK(d.code == kExitOk);
    CHECK(has(d.out, "waveform.delta_f_hz = 312500\n"));
    const auto path = write_temp("sca_cli_dump.scn", d.out);
    CHECK(run({"analyze", path}).out == run({"analyze", kDir + "/80211a.scn"}).out);
    std::filesystem::remove(path);
    CHECK(run({"--csv", "x.csv", "dump", kDir + "/80211a.scn"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"analyze"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

}  // TEST_SUITE

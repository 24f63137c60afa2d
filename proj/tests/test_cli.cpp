// End-to-end checks of the command-line tool: spawns the binary given as
// argv[1] and inspects outputs and exit codes.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string g_binary;
int g_failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_text = "") {
    std::string infile = "/tmp/wdparam_cli_in.json";
    std::string cmd = g_binary + " " + args;
    if (!stdin_text.empty()) {
        std::ofstream f(infile);
        f << stdin_text;
        f.close();
        cmd += " < " + infile;
    }
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void check(bool cond, const std::string& what) {
    if (!cond) {
        std::cerr << "FAILED: " << what << "\n";
        ++g_failures;
    }
}

std::string steinberg_file(unsigned q, unsigned M) {
    json j;
    j["q"] = q;
    j["M"] = M;
    j["segments"] = json::array();
    json seg;
    seg["summand"]["zeta"] = 0;
    seg["summand"]["alpha"]["coeffs"] = json::array({json::array({0, 0, 1, 1})});
    seg["d"] = 2;
    j["segments"].push_back(seg);
    return j.dump();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <wdparam-binary>\n";
        return 2;
    }
    g_binary = argv[1];

    // factors on the special parameter: the Steinberg-shaped L-factor
    {
        auto r = run("factors --input -", steinberg_file(3, 4));
        check(r.exit_code == 0, "factors exit code");
        json out = json::parse(r.out, nullptr, false);
        check(!out.is_discarded(), "factors emits JSON");
        check(out["L"] == "(1 - q^{-1/2}*T)^{-1}",
              "factors L pretty value, got " + out["L"].dump());
    }

    // moduli-count golden value {"count": 8}
    {
        auto r = run("moduli-count --n 1 --q 3 --ell 5");
        json out = json::parse(r.out, nullptr, false);
        check(r.exit_code == 0 && out["count"] == 8, "moduli count n=1 q=3 ell=5 is 8");
    }
    {
        auto r = run("--format csv moduli-count --n 1 --q 2 --ell 3");
        check(r.exit_code == 0 && r.out.find("1,2,3,2") != std::string::npos,
              "moduli csv output");
    }

    // reconstruct self-test mode round trip
    {
        json j;
        j["n"] = 2;
        j["hidden"]["q"] = 2;
        j["hidden"]["M"] = 3;
        j["hidden"]["summands"] = json::array();
        json s;
        s["zeta"] = 1;
        s["alpha"]["coeffs"] = json::array({json::array({0, 0, 5, 1})});
        j["hidden"]["summands"].push_back(s);
        auto r = run("reconstruct --input -", j.dump());
        json out = json::parse(r.out, nullptr, false);
        check(r.exit_code == 0 && out["isomorphic_to_hidden"] == true,
              "reconstruct self-test");
    }

    // monodromy report on a chain of two characters
    {
        json j;
        j["q"] = 2;
        j["M"] = 1;
        j["summands"] = json::array();
        json a, b;
        a["zeta"] = 0;
        a["alpha"]["coeffs"] = json::array({json::array({0, 0, 1, 1})});
        b["zeta"] = 0;
        b["alpha"]["coeffs"] = json::array({json::array({0, 0, 1, 2})});
        j["summands"].push_back(a);
        j["summands"].push_back(b);
        auto r = run("monodromy --input -", j.dump());
        json out = json::parse(r.out, nullptr, false);
        check(r.exit_code == 0 && out["dim_V_r"] == 1 && out["orbits"].size() == 2 &&
                  out["open_orbits"] == 1,
              "monodromy report");
    }

    // integrality report and exit codes
    {
        json j;
        j["q"] = 2;
        j["M"] = 3;
        j["summands"] = json::array();
        json s;
        s["zeta"] = 0;
        s["alpha"]["coeffs"] = json::array({json::array({0, 0, 5, 1})});
        j["summands"].push_back(s);
        auto r = run("integrality --ell 5 --input -", j.dump());
        json out = json::parse(r.out, nullptr, false);
        check(r.exit_code == 0 && out["integral"] == false && out["agree"] == true,
              "integrality report");
        auto r2 = run("integrality --ell 2 --input -", j.dump());
        check(r2.exit_code == 1, "ell=p is a validation error");
    }

    // plancherel identity check, case 3
    {
        json t1;
        t1["q"] = 2;
        t1["M"] = 3;
        t1["summands"] = json::array();
        json s;
        s["zeta"] = 0;
        s["alpha"]["coeffs"] = json::array({json::array({0, 0, 3, 1})});
        t1["summands"].push_back(s);
        json req;
        req["case"] = 3;
        req["taus"] = json::array({t1});
        req["taus2"] = json::array({t1});
        auto r = run("plancherel --input -", req.dump());
        json out = json::parse(r.out, nullptr, false);
        check(r.exit_code == 0 && out["holds"] == true, "plancherel case 3");
    }

    // computation errors exit with code 2
    {
        json j;
        j["q"] = 2;
        j["M"] = 5;
        j["summands"] = json::array();
        json s;
        s["zeta"] = 0;
        // alpha = 1 + zeta: not monomial, so the valuation is undefined
        s["alpha"]["coeffs"] = json::array(
            {json::array({0, 0, 1, 1}), json::array({1, 0, 1, 1})});
        j["summands"].push_back(s);
        auto r = run("integrality --ell 3 --input -", j.dump());
        check(r.exit_code == 2, "non-monomial eigenvalue is a computation error");
    }

    // validation errors carry pointers and exit code 1
    {
        auto r = run("factors --input -", "{\"q\": 2}");
        check(r.exit_code == 1, "missing M is a validation error");
        json out = json::parse(r.out, nullptr, false);
        check(out.contains("error"), "error body present");
        auto r2 = run("factors --input -", "not json");
        check(r2.exit_code == 1, "malformed JSON is a validation error");
    }

    // byte-identical outputs for identical inputs
    {
        auto a = run("factors --input -", steinberg_file(3, 4));
        auto b = run("factors --input -", steinberg_file(3, 4));
        check(a.out == b.out, "deterministic output");
    }

    // selftest at a small scale emits a manifest
    {
        auto r = run("selftest --scale 2 --seed 7");
        json out = json::parse(r.out, nullptr, false);
        check(r.exit_code == 0 && out["total"] == 12 && out["passed"] == 12,
              "selftest manifest");
    }

    if (g_failures == 0) {
        std::cout << "cli_tests: all checks passed\n";
        return 0;
    }
    std::cout << "cli_tests: " << g_failures << " failures\n";
    return 1;
}

// Acceptance suite: runs every acceptance criterion at full scale and prints
// one pass/fail line per criterion plus a machine-readable summary.
#include <cstdlib>
#include <cstring>
#include <iostream>

#include "wdparam/selftest.hpp"

int main(int argc, char** argv) {
    wdparam::SelftestOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            opt.seed = std::strtoull(argv[++i], nullptr, 10);
        else if (std::strcmp(argv[i], "--scale") == 0 && i + 1 < argc)
            opt.scale = static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
    }
    auto results = wdparam::run_acceptance(opt, &std::cout);
    unsigned passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    return wdparam::all_passed(results) ? 0 : 1;
}

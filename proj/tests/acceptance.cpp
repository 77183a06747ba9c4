#include <chrono>
#include <cstdio>

#include "pfh/verify.hpp"

int main() {
    auto t0 = std::chrono::steady_clock::now();
    auto results = pfh::run_acceptance();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        std::printf("%s %2d  %-32s %6.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.number,
                    r.name.c_str(), r.seconds, r.detail.c_str());
    }
    double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s: %zu criteria in %.2fs\n", all ? "OK" : "FAILURES",
                results.size(), total);
    return all ? 0 : 1;
}

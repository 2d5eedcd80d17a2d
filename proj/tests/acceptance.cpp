// Runs every acceptance criterion and prints one line per criterion.

#include <yangian/acceptance.hpp>

#include <chrono>
#include <iostream>

int main()
{
    bool all = true;
    for (const auto& criterion : yangian::acceptance::all_criteria()) {
        const auto start = std::chrono::steady_clock::now();
        const auto r = criterion();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && r.pass;
        std::cout << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " - " << r.title << " ["
                  << r.detail << "] (" << secs << " s)" << std::endl;
    }
    std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
    return all ? 0 : 1;
}

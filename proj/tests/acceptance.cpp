// Acceptance suite: runs every desk-scale criterion at its stated bound and
// prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <iostream>

#include "gravop/checks.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();

    struct Item {
        const char* label;
        gravop::checks::CheckResult (*run)();
    };
    const Item items[] = {
        {"1 poincare products (n<=6, d<=3, exact, oracle-checked)",
         [] { return gravop::checks::check_poincare_products(6, 3); }},
        {"2 quotient-ring tensor structure (n<=6, d<=3, exact)",
         [] { return gravop::checks::check_th_tensor_structure(6, 3); }},
        {"3 kernel = Y and free splitting (n<=6, d<=3, exact)",
         [] { return gravop::checks::check_kernel_equals_Y_and_splitting(6, 3); }},
        {"4 delta^2 = 0 and derivation identity (combined arity <= 6, d<=3)",
         [] { return gravop::checks::check_delta_operator(6, 3); }},
        {"5 rank ker = rank im; kernel = shifted fiber (arity 2..6, d<=3)",
         [] { return gravop::checks::check_kernel_equals_image(6, 3); }},
        {"6 bracket relation, full parity sweep (k+l-1 <= 6, d<=3)",
         [] { return gravop::checks::check_gravity_relations(6, 3); }},
        {"7 rank-level operad comparison (n<=6, d<=3)",
         [] { return gravop::checks::check_main_theorem(6, 3); }},
        {"8 d=1 regression to the moduli gravity ranks (n<=6)",
         [] { return gravop::checks::check_getzler_regression(6); }},
        {"9 confluence, 1000 random products per (n<=5, d<=3), oracle-checked",
         [] { return gravop::checks::check_confluence(5, 3, 1000, 0x67726176); }},
    };

    bool all_pass = true;
    for (const auto& item : items) {
        const auto start = clock::now();
        auto result = item.run();
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
        all_pass = all_pass && result.pass;
        std::cout << (result.pass ? "[PASS] " : "[FAIL] ") << "criterion " << item.label << "  ("
                  << ms << " ms)\n";
        for (auto& line : result.details) std::cout << "       " << line << "\n";
    }

    const auto total =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
    std::cout << (all_pass ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << "  (" << total
              << " ms total)\n";
    return all_pass ? 0 : 1;
}

// acceptance runner: one pass/fail line per criterion, nonzero exit on any failure
#include <drg/selftest.hpp>

#include <iostream>

int main() {
    const drg::ToleranceConfig tol;
    const std::vector<drg::AcceptanceRow> rows = drg::run_acceptance(tol);
    std::cout << drg::acceptance_table(rows);
    for (const drg::AcceptanceRow& r : rows)
        if (!r.pass) return 1;
    return 0;
}

#ifndef PHI_VERIFY_HPP
#define PHI_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

namespace phi {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// 21-term reference series for the eleven irreducible graphs with <= 8
// edges, and the q^0..q^5 prefixes of the three 9-edge graphs.
const std::map<std::string, std::vector<long long>>& golden_series_21();
const std::map<std::string, std::vector<long long>>& golden_prefix_9edge();

std::vector<CheckResult> suite_theorem1(int order = 2);
std::vector<CheckResult> suite_golden_table(int order = 20);
std::vector<CheckResult> suite_products(int order = 15);
std::vector<CheckResult> suite_oracle(int order = 6);
std::vector<CheckResult> suite_sbb(int order = 10);

// name in {theorem1, golden-table, products, oracle, sbb, all}; order <= 0
// picks each suite's default. Throws std::invalid_argument on unknown name.
std::vector<CheckResult> run_suite(const std::string& name, int order = 0);

}  // namespace phi

#endif

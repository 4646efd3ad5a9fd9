#ifndef PHI_IDENTIFY_HPP
#define PHI_IDENTIFY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "phi/series.hpp"

namespace phi {

struct BadConstantTerm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Result of the theta-product search. When found, the product of
// theta_h(b) over factors matches the input on all coefficients up to
// verified_order. not_found is exhaustive for the stated bounds.
struct IdentifyResult {
    bool found = false;
    std::vector<int> factors;  // nondecreasing, each >= 3
    int verified_order = 0;
    std::string to_json() const;
};

// Depth-first search over multisets {b_i}, 3 <= b_i <= b_max, at most
// max_factors entries. h_1 (zero) and h_2 (constant one) are excluded from
// the alphabet. Throws BadConstantTerm unless s starts with coefficient 1.
IdentifyResult identify_theta_product(const TruncatedSeries& s, int max_factors, int b_max);

// True iff s equals prod theta_h(b) over factors at s's order.
bool verify_product(const TruncatedSeries& s, const std::vector<int>& factors);

}  // namespace phi

#endif

#include "sl/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>

namespace sl {

namespace {

// Index under pi -> index under the identity order: bit i-1 of b carries
// a(x_{pi(i)}), which sits at bit pi(i)-1 of the identity index.
uint64_t to_identity_index(uint64_t b, const std::vector<int>& perm) {
    uint64_t out = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        out |= ((b >> i) & 1) << (perm[i] - 1);
    return out;
}

uint64_t count_switches(const truth_table& t, const std::vector<int>& perm,
                        uint64_t stop_above) {
    uint64_t count = 0;
    int prev = t.at(to_identity_index(0, perm));
    for (uint64_t b = 1; b < t.size(); ++b) {
        const int val = t.at(to_identity_index(b, perm));
        if (val != prev) {
            if (++count > stop_above)
                return count;
            prev = val;
        }
    }
    return count;
}

}  // namespace

uint64_t switches_under_order(const truth_table& t_identity, const var_order& pi) {
    if (t_identity.n() != pi.n())
        throw validation_error("switches_under_order: table and order disagree on n");
    return count_switches(t_identity, pi.perm(), t_identity.size());
}

order_search_result min_switches_over_orders(const truth_table& t_identity) {
    const int n = t_identity.n();
    if (n > max_search_vars)
        throw size_cap_error("min_switches_over_orders: n = " + std::to_string(n) +
                             " exceeds search cap " + std::to_string(max_search_vars));
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);

    order_search_result result{t_identity.size(), var_order::identity(n), 0};
    // Lexicographic enumeration: the first permutation attaining a new
    // minimum is automatically the lexicographically smallest argmin.
    do {
        const uint64_t count = count_switches(t_identity, perm, result.min_switches);
        if (count < result.min_switches) {
            result.min_switches = count;
            result.argmin_order = var_order(perm);
        }
        ++result.orders_examined;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

truth_table random_function(int n, uint64_t seed) {
    if (n < 1 || n > max_dense_vars)
        throw validation_error("random_function: n out of range");
    std::mt19937_64 engine(seed);
    const uint64_t size = uint64_t{1} << n;
    std::vector<uint8_t> bits(size);
    uint64_t word = 0;
    for (uint64_t b = 0; b < size; ++b) {
        if (b % 64 == 0)
            word = engine();
        bits[b] = static_cast<uint8_t>((word >> (b % 64)) & 1);
    }
    return truth_table(n, std::move(bits));
}

std::string csv_row(const order_search_result& r, const std::string& function_name,
                    uint64_t bound, bool bound_holds) {
    std::string order;
    for (int i = 1; i <= r.argmin_order.n(); ++i) {
        if (i > 1)
            order += '-';
        order += std::to_string(r.argmin_order.var_at(i));
    }
    return std::to_string(r.argmin_order.n()) + "," + function_name + "," +
           std::to_string(r.min_switches) + "," + order + "," +
           std::to_string(r.orders_examined) + "," + std::to_string(bound) + "," +
           (bound_holds ? "true" : "false");
}

}  // namespace sl

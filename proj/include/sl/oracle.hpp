#pragma once

#include <string>

#include "sl/types.hpp"

namespace sl {

struct order_search_result {
    uint64_t min_switches = 0;
    var_order argmin_order;  // lexicographically smallest permutation attaining the minimum
    uint64_t orders_examined = 0;
};

// Counts the positions b in {1..2^n-1} where the pi-indexed value sequence
// changes. t must be indexed under the identity order; equals
// |compile(table-under-pi, pi).switches|.
uint64_t switches_under_order(const truth_table& t_identity, const var_order& pi);

// Exact minimum switch count over all n! orders, by exhaustive scan in
// lexicographic permutation order. Rejects n > max_search_vars.
order_search_result min_switches_over_orders(const truth_table& t_identity);

// Deterministic random table: a std::mt19937_64 seeded with `seed` produces
// 64-bit words; entry b is bit (b mod 64) of word (b div 64), LSB first.
truth_table random_function(int n, uint64_t seed);

// CSV row: n,function,min_switches,argmin_order,orders_examined,bound,bound_holds
// The argmin order is hyphen-joined to keep the field comma-free.
std::string csv_row(const order_search_result& r, const std::string& function_name,
                    uint64_t bound, bool bound_holds);

}  // namespace sl

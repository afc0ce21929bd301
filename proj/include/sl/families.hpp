#pragma once

#include <functional>
#include <string>

#include "sl/types.hpp"

namespace sl {

// The two hard functions, defined for even n:
//   f1 = (x_1 & ... & x_{n/2}) | (!x_1 & ... & !x_n)
//   f2 = (x_{n/2+1} & ... & x_n) | (!x_1 & ... & !x_n)
enum class family { f1, f2 };

int f1_value(const assignment& a);
int f2_value(const assignment& a);

// Dense table of the family member under pi. Requires even n in [2, max_dense_vars].
truth_table family_table(family which, const var_order& pi);

// Predicate for the CLI names: f1, f2, f1-or-f2, not-f1-and-not-f2.
std::function<int(const assignment&)> named_function(const std::string& name, int n);

// An order whose compile of the family has at most two switches: the
// family's conjunction variables go to the most significant positions.
// Self-verifies by compiling and counting; throws if the count exceeds 2.
var_order good_order_for(family which, int n);

// The interleaved assignments e0(a_1), e1(a_1), ..., strictly increasing
// under pi and alternating between non-models and models of f1|f2. The
// extension half is the one holding pi's tie-break variable (the one at
// position 1, lowest weight); the opposite half is enumerated in pi's
// restricted order, skipping its all-one assignment. For n=2 the extension
// half minus the tie-break variable is empty, so the first entry can be the
// all-zero assignment and the alternation argument does not apply.
struct witness_sequence {
    var_order order;
    std::vector<assignment> entries;  // length 2*(2^(n/2)-1)
    int half_used;                    // 1 or 2: the half the extensions range over
};

witness_sequence build_witness_sequence(int n, const var_order& pi);

// 2^(n/2+1) - 3, the minimum switch count of f1|f2 under any order.
uint64_t lower_bound_switches(int n);

}  // namespace sl

#pragma once

#include "sl/types.hpp"

namespace sl {

// b(a) = sum over positions i of a(x_{pi(i)}) * 2^(i-1).
uint64_t index_of(const assignment& a, const var_order& pi);

// Exact inverse of index_of for the same order.
assignment assignment_of(uint64_t b, const var_order& pi);

// Scans the table once and records every index whose value differs from
// its predecessor. t must be indexed under pi.
switch_list compile(const truth_table& t, const var_order& pi);

// Dense expansion; rejects n > max_dense_vars.
truth_table decompile(const switch_list& s);

// first_value XOR parity of |{s in switches : s <= index_of(a)}|.
// Ordered search over the switch list, never a dense expansion.
int evaluate(const switch_list& s, const assignment& a);

// Flips first_value; the switch list and order are untouched.
switch_list negate(const switch_list& s);

enum class bool_op { op_and, op_or, op_xor };

int apply_op(bool_op op, int a, int b);

// Linear merge of the two switch sequences under a shared order. Rejects
// mismatched orders; callers must reorder explicitly first.
switch_list combine(const switch_list& a, const switch_list& b, bool_op op);

// Same function under a different order, via decompile/compile. Cost is
// exponential in n; rejects n > max_dense_vars.
switch_list reorder(const switch_list& s, const var_order& target);

bool is_consistent(const switch_list& s);
bool is_valid(const switch_list& s);

// Sums the lengths of the value-1 intervals delimited by the switches,
// linear in the number of switches.
uint64_t count_models(const switch_list& s);

// Structural equality; sound by canonicity for a fixed order. Rejects
// differing orders.
bool equivalent(const switch_list& a, const switch_list& b);

// n times the number of switches.
uint64_t size_of(const switch_list& s);

// Dense table of an arbitrary predicate under pi: bits[b] = f(assignment_of(b, pi)).
template <class F>
truth_table tabulate(F&& f, const var_order& pi) {
    if (pi.n() > max_dense_vars)
        throw size_cap_error("tabulate: n > " + std::to_string(max_dense_vars));
    std::vector<uint8_t> bits(uint64_t{1} << pi.n());
    for (uint64_t b = 0; b < bits.size(); ++b)
        bits[b] = static_cast<uint8_t>(f(assignment_of(b, pi)) & 1);
    return truth_table(pi.n(), std::move(bits));
}

}  // namespace sl

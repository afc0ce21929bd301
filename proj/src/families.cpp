#include "sl/families.hpp"

#include <cassert>
#include <numeric>

#include "sl/core.hpp"

namespace sl {

namespace {

void check_even_n(int n, int cap) {
    if (n < 2 || n > cap || n % 2 != 0)
        throw validation_error("family: n must be even and in [2, " + std::to_string(cap) +
                               "], got " + std::to_string(n));
}

bool all_zero(const assignment& a) {
    for (int v = 1; v <= a.n(); ++v)
        if (a.value(v))
            return false;
    return true;
}

bool half_all_one(const assignment& a, int from, int to) {
    for (int v = from; v <= to; ++v)
        if (!a.value(v))
            return false;
    return true;
}

}  // namespace

int f1_value(const assignment& a) {
    check_even_n(a.n(), max_vars);
    return (half_all_one(a, 1, a.n() / 2) || all_zero(a)) ? 1 : 0;
}

int f2_value(const assignment& a) {
    check_even_n(a.n(), max_vars);
    return (half_all_one(a, a.n() / 2 + 1, a.n()) || all_zero(a)) ? 1 : 0;
}

truth_table family_table(family which, const var_order& pi) {
    check_even_n(pi.n(), max_dense_vars);
    if (which == family::f1)
        return tabulate(f1_value, pi);
    return tabulate(f2_value, pi);
}

std::function<int(const assignment&)> named_function(const std::string& name, int n) {
    check_even_n(n, max_dense_vars);
    if (name == "f1")
        return f1_value;
    if (name == "f2")
        return f2_value;
    if (name == "f1-or-f2")
        return [](const assignment& a) { return f1_value(a) | f2_value(a); };
    if (name == "not-f1-and-not-f2")
        return [](const assignment& a) { return (1 - f1_value(a)) & (1 - f2_value(a)); };
    throw validation_error("unknown function name '" + name + "'");
}

var_order good_order_for(family which, int n) {
    check_even_n(n, max_dense_vars);
    const int half = n / 2;
    std::vector<int> perm;
    perm.reserve(static_cast<size_t>(n));
    if (which == family::f1) {
        // x_{n/2+1}..x_n low, x_1..x_{n/2} high
        for (int v = half + 1; v <= n; ++v)
            perm.push_back(v);
        for (int v = 1; v <= half; ++v)
            perm.push_back(v);
    } else {
        // identity: x_{n/2+1}..x_n already occupy the high positions
        for (int v = 1; v <= n; ++v)
            perm.push_back(v);
    }
    var_order order(std::move(perm));
    const switch_list compiled = compile(family_table(which, order), order);
    if (compiled.switches().size() > 2)
        throw std::logic_error("good_order_for: constructed order yields " +
                               std::to_string(compiled.switches().size()) + " switches");
    return order;
}

witness_sequence build_witness_sequence(int n, const var_order& pi) {
    check_even_n(n, max_vars);
    if (pi.n() != n)
        throw validation_error("witness_sequence: order has wrong n");
    const int half = n / 2;

    // The tie-break variable sits at the lowest-weight position; its half
    // is fixed to 1 elsewhere while the opposite half is enumerated.
    const int tie_var = pi.var_at(1);
    const bool tie_in_x2 = tie_var > half;
    const int enum_from = tie_in_x2 ? 1 : half + 1;
    const int enum_to = tie_in_x2 ? half : n;
    const int ext_from = tie_in_x2 ? half + 1 : 1;
    const int ext_to = tie_in_x2 ? n : half;

    // Enumeration half's variables by ascending position: bit j of the
    // counter is the value of the j-th least significant of them, which
    // realizes pi restricted to that half.
    std::vector<int> enum_vars;
    for (int pos = 1; pos <= n; ++pos) {
        const int v = pi.var_at(pos);
        if (v >= enum_from && v <= enum_to)
            enum_vars.push_back(v);
    }
    assert(static_cast<int>(enum_vars.size()) == half);

    witness_sequence ws{pi, {}, tie_in_x2 ? 2 : 1};
    const uint64_t all_one = (uint64_t{1} << half) - 1;
    ws.entries.reserve(2 * all_one);
    for (uint64_t k = 0; k < all_one; ++k) {
        assignment base(n);
        for (int v = ext_from; v <= ext_to; ++v)
            base.set(v, 1);
        base.set(tie_var, 0);
        for (int j = 0; j < half; ++j)
            base.set(enum_vars[j], static_cast<int>((k >> j) & 1));
        ws.entries.push_back(base);  // e0: tie-break variable stays 0
        base.set(tie_var, 1);
        ws.entries.push_back(base);  // e1
    }
    return ws;
}

uint64_t lower_bound_switches(int n) {
    check_even_n(n, max_vars);
    return (uint64_t{1} << (n / 2 + 1)) - 3;
}

}  // namespace sl

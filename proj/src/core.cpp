#include "sl/core.hpp"

#include <algorithm>
#include <cassert>

namespace sl {

var_order::var_order(std::vector<int> perm) : perm_(std::move(perm)) {
    const int n = static_cast<int>(perm_.size());
    if (n < 1 || n > max_vars)
        throw validation_error("var_order: n must be in [1, " + std::to_string(max_vars) +
                               "], got " + std::to_string(n));
    pos_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        const int v = perm_[i];
        if (v < 1 || v > n)
            throw validation_error("var_order: id " + std::to_string(v) + " out of range");
        if (pos_[v - 1] != 0)
            throw validation_error("var_order: duplicate id " + std::to_string(v));
        pos_[v - 1] = i + 1;
    }
}

var_order var_order::identity(int n) {
    std::vector<int> perm(static_cast<size_t>(n > 0 ? n : 0));
    for (int i = 0; i < n; ++i)
        perm[i] = i + 1;
    return var_order(std::move(perm));
}

assignment::assignment(int n) {
    if (n < 1 || n > max_vars)
        throw validation_error("assignment: n out of range");
    values_.assign(static_cast<size_t>(n), 0);
}

assignment::assignment(std::vector<uint8_t> values) : values_(std::move(values)) {
    if (values_.empty() || values_.size() > max_vars)
        throw validation_error("assignment: n out of range");
    for (uint8_t v : values_)
        if (v > 1)
            throw validation_error("assignment: values must be 0 or 1");
}

void assignment::set(int var, int val) {
    if (val != 0 && val != 1)
        throw validation_error("assignment: value must be 0 or 1");
    values_[var - 1] = static_cast<uint8_t>(val);
}

truth_table::truth_table(int n, std::vector<uint8_t> bits) : n_(n), bits_(std::move(bits)) {
    if (n < 1 || n > max_dense_vars)
        throw validation_error("truth_table: n must be in [1, " +
                               std::to_string(max_dense_vars) + "]");
    if (bits_.size() != (uint64_t{1} << n))
        throw validation_error("truth_table: expected 2^n entries");
    for (uint8_t b : bits_)
        if (b > 1)
            throw validation_error("truth_table: entries must be 0 or 1");
}

switch_list::switch_list(var_order order, int first_value, std::vector<uint64_t> switches)
    : order_(std::move(order)),
      first_value_(static_cast<uint8_t>(first_value)),
      switches_(std::move(switches)) {
    if (first_value != 0 && first_value != 1)
        throw validation_error("switch_list: first value must be 0 or 1");
    const uint64_t limit = uint64_t{1} << order_.n();
    for (size_t i = 0; i < switches_.size(); ++i) {
        if (switches_[i] < 1 || switches_[i] >= limit)
            throw validation_error("switch_list: switch " + std::to_string(switches_[i]) +
                                   " out of range");
        if (i > 0 && switches_[i] <= switches_[i - 1])
            throw validation_error("switch_list: switches must be strictly increasing");
    }
}

uint64_t index_of(const assignment& a, const var_order& pi) {
    if (a.n() != pi.n())
        throw validation_error("index_of: assignment has " + std::to_string(a.n()) +
                               " variables, order has " + std::to_string(pi.n()));
    uint64_t b = 0;
    for (int i = 1; i <= pi.n(); ++i)
        b |= static_cast<uint64_t>(a.value(pi.var_at(i))) << (i - 1);
    return b;
}

assignment assignment_of(uint64_t b, const var_order& pi) {
    const int n = pi.n();
    if (n < 63 && b >= (uint64_t{1} << n))
        throw validation_error("assignment_of: index out of range");
    assignment a(n);
    for (int i = 1; i <= n; ++i)
        a.set(pi.var_at(i), static_cast<int>((b >> (i - 1)) & 1));
    return a;
}

switch_list compile(const truth_table& t, const var_order& pi) {
    if (t.n() != pi.n())
        throw validation_error("compile: table and order disagree on n");
    std::vector<uint64_t> switches;
    for (uint64_t b = 1; b < t.size(); ++b)
        if (t.at(b) != t.at(b - 1))
            switches.push_back(b);
    return switch_list(pi, t.at(0), std::move(switches));
}

truth_table decompile(const switch_list& s) {
    if (s.n() > max_dense_vars)
        throw size_cap_error("decompile: n = " + std::to_string(s.n()) + " exceeds dense cap " +
                             std::to_string(max_dense_vars));
    std::vector<uint8_t> bits(uint64_t{1} << s.n());
    uint8_t val = static_cast<uint8_t>(s.first_value());
    uint64_t b = 0;
    for (uint64_t sw : s.switches()) {
        std::fill(bits.begin() + b, bits.begin() + sw, val);
        val ^= 1;
        b = sw;
    }
    std::fill(bits.begin() + b, bits.end(), val);
    return truth_table(s.n(), std::move(bits));
}

int evaluate(const switch_list& s, const assignment& a) {
    const uint64_t b = index_of(a, s.order());
    const auto& sw = s.switches();
    const auto k = std::upper_bound(sw.begin(), sw.end(), b) - sw.begin();
    return s.first_value() ^ static_cast<int>(k & 1);
}

switch_list negate(const switch_list& s) {
    return switch_list(s.order(), 1 - s.first_value(), s.switches());
}

int apply_op(bool_op op, int a, int b) {
    switch (op) {
        case bool_op::op_and: return a & b;
        case bool_op::op_or: return a | b;
        case bool_op::op_xor: return a ^ b;
    }
    assert(false);
    return 0;
}

switch_list combine(const switch_list& a, const switch_list& b, bool_op op) {
    if (!(a.order() == b.order()))
        throw order_mismatch_error(
            "combine: operands use different variable orders; reorder first");
    const auto& sa = a.switches();
    const auto& sb = b.switches();
    int va = a.first_value();
    int vb = b.first_value();
    int out = apply_op(op, va, vb);
    std::vector<uint64_t> switches;
    size_t i = 0, j = 0;
    while (i < sa.size() || j < sb.size()) {
        uint64_t next;
        if (j == sb.size() || (i < sa.size() && sa[i] <= sb[j]))
            next = sa[i];
        else
            next = sb[j];
        if (i < sa.size() && sa[i] == next) {
            va ^= 1;
            ++i;
        }
        if (j < sb.size() && sb[j] == next) {
            vb ^= 1;
            ++j;
        }
        const int nv = apply_op(op, va, vb);
        if (nv != out) {
            switches.push_back(next);
            out = nv;
        }
    }
    return switch_list(a.order(), apply_op(op, a.first_value(), b.first_value()),
                       std::move(switches));
}

switch_list reorder(const switch_list& s, const var_order& target) {
    if (s.n() != target.n())
        throw validation_error("reorder: target order has wrong n");
    if (s.n() > max_dense_vars)
        throw size_cap_error("reorder: n = " + std::to_string(s.n()) + " exceeds dense cap " +
                             std::to_string(max_dense_vars));
    if (s.order() == target)
        return s;
    const truth_table t = decompile(s);
    std::vector<uint8_t> bits(t.size());
    for (uint64_t b = 0; b < t.size(); ++b)
        bits[b] = static_cast<uint8_t>(t.at(index_of(assignment_of(b, target), s.order())));
    return compile(truth_table(s.n(), std::move(bits)), target);
}

bool is_consistent(const switch_list& s) {
    return s.first_value() == 1 || !s.switches().empty();
}

bool is_valid(const switch_list& s) {
    return s.first_value() == 1 && s.switches().empty();
}

uint64_t count_models(const switch_list& s) {
    const uint64_t end = uint64_t{1} << s.n();
    uint64_t total = 0;
    uint64_t prev = 0;
    int val = s.first_value();
    for (uint64_t sw : s.switches()) {
        if (val)
            total += sw - prev;
        val ^= 1;
        prev = sw;
    }
    if (val)
        total += end - prev;
    return total;
}

bool equivalent(const switch_list& a, const switch_list& b) {
    if (!(a.order() == b.order()))
        throw order_mismatch_error(
            "equivalent: operands use different variable orders; reorder first");
    return a.first_value() == b.first_value() && a.switches() == b.switches();
}

uint64_t size_of(const switch_list& s) {
    return static_cast<uint64_t>(s.n()) * s.switches().size();
}

}  // namespace sl

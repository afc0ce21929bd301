#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl {

// Error classes map 1:1 to CLI exit codes (see tools/slt.cpp).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct order_mismatch_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct size_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Switch indices must fit in a uint64_t.
inline constexpr int max_vars = 62;
// Cap for operations that expand a dense 2^n table.
inline constexpr int max_dense_vars = 20;
// Cap for exhaustive search over all n! variable orders.
inline constexpr int max_search_vars = 8;

// A permutation of the variable ids {1..n}. Position i (1-based) carries
// weight 2^(i-1) in the assignment-to-index encoding, so the variable at
// position 1 is the least significant and the one at position n the most
// significant.
class var_order {
  public:
    explicit var_order(std::vector<int> perm);

    static var_order identity(int n);

    int n() const { return static_cast<int>(perm_.size()); }
    // Variable id at 1-based position pos.
    int var_at(int pos) const { return perm_[pos - 1]; }
    // 1-based position of variable id var.
    int position_of(int var) const { return pos_[var - 1]; }
    const std::vector<int>& perm() const { return perm_; }

    bool operator==(const var_order& other) const { return perm_ == other.perm_; }

  private:
    std::vector<int> perm_;
    std::vector<int> pos_;
};

// A total assignment of {x_1..x_n} to {0,1}.
class assignment {
  public:
    explicit assignment(int n);
    explicit assignment(std::vector<uint8_t> values);

    int n() const { return static_cast<int>(values_.size()); }
    int value(int var) const { return values_[var - 1]; }
    void set(int var, int val);

    bool operator==(const assignment&) const = default;

  private:
    std::vector<uint8_t> values_;  // values_[v-1] is the value of x_v
};

// Dense 2^n value vector. bits[b] is f(b) where b is an assignment index
// under some fixed var_order; the table itself does not remember which.
class truth_table {
  public:
    truth_table(int n, std::vector<uint8_t> bits);

    int n() const { return n_; }
    uint64_t size() const { return uint64_t{1} << n_; }
    int at(uint64_t b) const { return bits_[b]; }
    void set(uint64_t b, int val) { bits_[b] = static_cast<uint8_t>(val); }
    const std::vector<uint8_t>& bits() const { return bits_; }

    bool operator==(const truth_table&) const = default;

  private:
    int n_;
    std::vector<uint8_t> bits_;
};

// Canonical representation of a Boolean function for a fixed order: the
// value at index 0 and the strictly increasing list of indices where the
// value changes from its predecessor.
class switch_list {
  public:
    switch_list(var_order order, int first_value, std::vector<uint64_t> switches);

    int n() const { return order_.n(); }
    const var_order& order() const { return order_; }
    int first_value() const { return first_value_; }
    const std::vector<uint64_t>& switches() const { return switches_; }

    bool operator==(const switch_list&) const = default;

  private:
    var_order order_;
    uint8_t first_value_;
    std::vector<uint64_t> switches_;
};

}  // namespace sl

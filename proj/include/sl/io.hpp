#pragma once

#include <iosfwd>
#include <string>

#include "sl/types.hpp"

namespace sl {

// Switch-list text format, one function per file:
//   n=<int>
//   order=<comma-separated ids, position 1 first>
//   f0=<0|1>
//   switches=<comma-separated increasing ints, empty allowed>
switch_list read_switch_list(std::istream& in);
void write_switch_list(std::ostream& out, const switch_list& s);

// Truth-table text format:
//   n=<int>
//   <2^n characters from {0,1}, index 0 first>
truth_table read_truth_table(std::istream& in);
void write_truth_table(std::ostream& out, const truth_table& t);

// "identity" or a comma-separated permutation such as "3,4,1,2".
var_order parse_order(const std::string& spec, int n);

// Comma-separated ids, position 1 first.
std::string format_order(const var_order& pi);

}  // namespace sl

#include "sl/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace sl {

namespace {

std::string expect_line(std::istream& in, int line_no) {
    std::string line;
    if (!std::getline(in, line))
        throw parse_error("line " + std::to_string(line_no) + ": unexpected end of file");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    return line;
}

std::string strip_key(const std::string& line, const std::string& key, int line_no) {
    const std::string prefix = key + "=";
    if (line.rfind(prefix, 0) != 0)
        throw parse_error("line " + std::to_string(line_no) + ": expected '" + prefix + "...'");
    return line.substr(prefix.size());
}

long long parse_int(const std::string& text, int line_no) {
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw parse_error("line " + std::to_string(line_no) + ": bad integer '" + text + "'");
    return value;
}

std::vector<long long> parse_int_list(const std::string& text, int line_no) {
    std::vector<long long> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_int(item, line_no));
    if (!text.empty() && text.back() == ',')
        throw parse_error("line " + std::to_string(line_no) + ": trailing comma");
    return out;
}

}  // namespace

switch_list read_switch_list(std::istream& in) {
    const long long n = parse_int(strip_key(expect_line(in, 1), "n", 1), 1);
    if (n < 1 || n > max_vars)
        throw parse_error("line 1: n out of range");

    const auto ids = parse_int_list(strip_key(expect_line(in, 2), "order", 2), 2);
    std::vector<int> perm;
    perm.reserve(ids.size());
    for (long long id : ids) {
        if (id < 1 || id > n)
            throw parse_error("line 2: variable id out of range");
        perm.push_back(static_cast<int>(id));
    }
    var_order order = [&] {
        try {
            return var_order(std::move(perm));
        } catch (const validation_error& e) {
            throw parse_error(std::string("line 2: ") + e.what());
        }
    }();
    if (order.n() != n)
        throw parse_error("line 2: order length does not match n");

    const long long f0 = parse_int(strip_key(expect_line(in, 3), "f0", 3), 3);
    if (f0 != 0 && f0 != 1)
        throw parse_error("line 3: f0 must be 0 or 1");

    const auto raw = parse_int_list(strip_key(expect_line(in, 4), "switches", 4), 4);
    std::vector<uint64_t> switches;
    switches.reserve(raw.size());
    for (long long s : raw) {
        if (s < 1)
            throw parse_error("line 4: switch out of range");
        switches.push_back(static_cast<uint64_t>(s));
    }
    try {
        return switch_list(std::move(order), static_cast<int>(f0), std::move(switches));
    } catch (const validation_error& e) {
        throw parse_error(std::string("line 4: ") + e.what());
    }
}

void write_switch_list(std::ostream& out, const switch_list& s) {
    out << "n=" << s.n() << '\n';
    out << "order=" << format_order(s.order()) << '\n';
    out << "f0=" << s.first_value() << '\n';
    out << "switches=";
    const auto& sw = s.switches();
    for (size_t i = 0; i < sw.size(); ++i) {
        if (i)
            out << ',';
        out << sw[i];
    }
    out << '\n';
}

truth_table read_truth_table(std::istream& in) {
    const long long n = parse_int(strip_key(expect_line(in, 1), "n", 1), 1);
    if (n < 1 || n > max_dense_vars)
        throw parse_error("line 1: n out of range for a dense table");
    const std::string row = expect_line(in, 2);
    if (row.size() != (uint64_t{1} << n))
        throw parse_error("line 2: expected " + std::to_string(uint64_t{1} << n) +
                          " characters, got " + std::to_string(row.size()));
    std::vector<uint8_t> bits(row.size());
    for (size_t i = 0; i < row.size(); ++i) {
        if (row[i] != '0' && row[i] != '1')
            throw parse_error("line 2: character at index " + std::to_string(i) +
                              " is not 0 or 1");
        bits[i] = static_cast<uint8_t>(row[i] - '0');
    }
    return truth_table(static_cast<int>(n), std::move(bits));
}

void write_truth_table(std::ostream& out, const truth_table& t) {
    out << "n=" << t.n() << '\n';
    for (uint64_t b = 0; b < t.size(); ++b)
        out << static_cast<char>('0' + t.at(b));
    out << '\n';
}

var_order parse_order(const std::string& spec, int n) {
    if (spec == "identity")
        return var_order::identity(n);
    const auto ids = [&] {
        try {
            return parse_int_list(spec, 1);
        } catch (const parse_error&) {
            throw validation_error("order: malformed permutation '" + spec + "'");
        }
    }();
    std::vector<int> perm;
    perm.reserve(ids.size());
    for (long long id : ids) {
        if (id < 1 || id > n)
            throw validation_error("order: variable id out of range");
        perm.push_back(static_cast<int>(id));
    }
    var_order order{std::move(perm)};
    if (order.n() != n)
        throw validation_error("order: expected " + std::to_string(n) + " ids");
    return order;
}

std::string format_order(const var_order& pi) {
    std::string out;
    for (int i = 1; i <= pi.n(); ++i) {
        if (i > 1)
            out += ',';
        out += std::to_string(pi.var_at(i));
    }
    return out;
}

}  // namespace sl

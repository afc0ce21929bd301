// slt: switch-list tool. Compile, transform and query switch-list
// representations of Boolean functions, and run the experiment suite.
//
// Exit codes: 0 success, 2 file parse error, 3 validation error,
// 4 order mismatch, 5 size cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sl/core.hpp"
#include "sl/families.hpp"
#include "sl/io.hpp"
#include "sl/oracle.hpp"

namespace {

constexpr int exit_parse_error = 2;
constexpr int exit_validation_error = 3;
constexpr int exit_order_mismatch = 4;
constexpr int exit_size_cap = 5;

sl::truth_table load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw sl::parse_error("cannot open '" + path + "'");
    return sl::read_truth_table(in);
}

sl::switch_list load_switch_list(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw sl::parse_error("cannot open '" + path + "'");
    return sl::read_switch_list(in);
}

// Writes to the path, or to stdout when path is "-".
void emit_switch_list(const std::string& path, const sl::switch_list& s) {
    if (path == "-") {
        sl::write_switch_list(std::cout, s);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw sl::validation_error("cannot write '" + path + "'");
    sl::write_switch_list(out, s);
}

std::vector<int> parse_n_list(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    if (out.empty())
        throw sl::validation_error("--n: empty list");
    return out;
}

std::string order_field(const sl::var_order& pi) {
    std::string out;
    for (int i = 1; i <= pi.n(); ++i) {
        if (i > 1)
            out += '-';
        out += std::to_string(pi.var_at(i));
    }
    return out;
}

class experiment_csv {
  public:
    experiment_csv() {
        std::cout << "n,function,order,switch_count,paper_bound,bound_holds,wall_time_ms\n";
    }

    void row(int n, const std::string& function, const std::string& order,
             uint64_t switch_count, uint64_t bound, bool bound_holds, double ms) {
        std::cout << n << ',' << function << ',' << order << ',' << switch_count << ','
                  << bound << ',' << (bound_holds ? "true" : "false") << ',' << ms << '\n';
    }

    void error_row(int n, const std::string& function, const std::string& message) {
        std::cerr << "experiment: n=" << n << " " << function << ": " << message << '\n';
        std::cout << n << ',' << function << ",error,0,0,false,0\n";
    }
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void run_observation1(experiment_csv& csv, const std::vector<int>& ns) {
    for (int n : ns) {
        for (auto [which, name] :
             {std::pair{sl::family::f1, "f1"}, std::pair{sl::family::f2, "f2"}}) {
            try {
                const auto start = std::chrono::steady_clock::now();
                const sl::var_order order = sl::good_order_for(which, n);
                const auto compiled = sl::compile(sl::family_table(which, order), order);
                const uint64_t count = compiled.switches().size();
                csv.row(n, name, order_field(order), count, 2, count <= 2,
                        elapsed_ms(start));
            } catch (const std::exception& e) {
                csv.error_row(n, name, e.what());
            }
        }
    }
}

void run_order_search(experiment_csv& csv, const std::vector<int>& ns,
                      const std::string& fn_name) {
    for (int n : ns) {
        try {
            const auto start = std::chrono::steady_clock::now();
            const auto table = sl::tabulate(sl::named_function(fn_name, n),
                                            sl::var_order::identity(n));
            const auto result = sl::min_switches_over_orders(table);
            const uint64_t bound = sl::lower_bound_switches(n);
            csv.row(n, fn_name, order_field(result.argmin_order), result.min_switches,
                    bound, result.min_switches >= bound, elapsed_ms(start));
        } catch (const std::exception& e) {
            csv.error_row(n, fn_name, e.what());
        }
    }
}

// Compiles !f1 and !f2 each under its own good order, reorders the second
// operand to the first's order, conjoins, and reports the switch counts.
void run_bottom_up_demo(experiment_csv& csv, const std::vector<int>& ns) {
    for (int n : ns) {
        try {
            const auto start = std::chrono::steady_clock::now();
            const sl::var_order order1 = sl::good_order_for(sl::family::f1, n);
            const sl::var_order order2 = sl::good_order_for(sl::family::f2, n);
            const auto not_f1 =
                sl::negate(sl::compile(sl::family_table(sl::family::f1, order1), order1));
            const auto not_f2 =
                sl::negate(sl::compile(sl::family_table(sl::family::f2, order2), order2));
            const uint64_t c1 = not_f1.switches().size();
            const uint64_t c2 = not_f2.switches().size();
            csv.row(n, "not-f1", order_field(order1), c1, 2, c1 <= 2, 0);
            csv.row(n, "not-f2", order_field(order2), c2, 2, c2 <= 2, 0);
            const auto conj =
                sl::combine(not_f1, sl::reorder(not_f2, order1), sl::bool_op::op_and);
            const uint64_t count = conj.switches().size();
            const uint64_t bound = sl::lower_bound_switches(n);
            csv.row(n, "not-f1-and-not-f2", order_field(order1), count, bound,
                    count >= bound, elapsed_ms(start));
        } catch (const std::exception& e) {
            csv.error_row(n, "not-f1-and-not-f2", e.what());
        }
    }
}

int dispatch(int argc, char** argv) {
    CLI::App app{"switch-list representations of Boolean functions"};
    app.require_subcommand(1);

    std::string table_file, file1, file2, sl_file;
    std::string order_spec = "identity";
    std::string op_name, query_name, experiment_name, n_spec;
    std::string output = "-";
    uint64_t seed = 0;

    auto* compile_cmd = app.add_subcommand("compile", "compile a truth table to a switch-list");
    compile_cmd->add_option("table", table_file, "truth-table file")->required();
    compile_cmd->add_option("--order", order_spec, "permutation or 'identity'");
    compile_cmd->add_option("--output", output, "switch-list file or '-'");

    auto* apply_cmd = app.add_subcommand("apply", "combine two switch-lists");
    apply_cmd->add_option("file1", file1)->required();
    apply_cmd->add_option("file2", file2)->required();
    apply_cmd->add_option("--op", op_name, "and|or|xor")->required();
    apply_cmd->add_option("--output", output, "switch-list file or '-'");

    auto* negate_cmd = app.add_subcommand("negate", "negate a switch-list");
    negate_cmd->add_option("file", sl_file)->required();
    negate_cmd->add_option("--output", output, "switch-list file or '-'");

    auto* reorder_cmd = app.add_subcommand("reorder", "re-express under another order");
    reorder_cmd->add_option("file", sl_file)->required();
    reorder_cmd->add_option("--order", order_spec, "target permutation or 'identity'")
        ->required();
    reorder_cmd->add_option("--output", output, "switch-list file or '-'");

    auto* query_cmd = app.add_subcommand("query", "query a switch-list");
    query_cmd->add_option("file", sl_file)->required();
    query_cmd->add_option("query", query_name, "consistent|valid|count")->required();

    auto* experiment_cmd = app.add_subcommand("experiment", "emit a CSV experiment report");
    experiment_cmd
        ->add_option("name", experiment_name,
                     "observation1|proposition1|theorem-conjunction|bottom-up-demo")
        ->required();
    experiment_cmd->add_option("--n", n_spec, "comma-separated variable counts")->required();
    experiment_cmd->add_option("--seed", seed,
                               "reserved for randomized experiments; unused by the four "
                               "named reproductions");

    CLI11_PARSE(app, argc, argv);

    if (compile_cmd->parsed()) {
        const sl::truth_table t = load_table(table_file);
        const sl::var_order pi = sl::parse_order(order_spec, t.n());
        const sl::switch_list s = sl::compile(t, pi);
        emit_switch_list(output, s);
        (output == "-" ? std::cerr : std::cout) << "size=" << sl::size_of(s) << '\n';
    } else if (apply_cmd->parsed()) {
        sl::bool_op op;
        if (op_name == "and")
            op = sl::bool_op::op_and;
        else if (op_name == "or")
            op = sl::bool_op::op_or;
        else if (op_name == "xor")
            op = sl::bool_op::op_xor;
        else
            throw sl::validation_error("--op: expected and|or|xor");
        emit_switch_list(output, sl::combine(load_switch_list(file1),
                                             load_switch_list(file2), op));
    } else if (negate_cmd->parsed()) {
        emit_switch_list(output, sl::negate(load_switch_list(sl_file)));
    } else if (reorder_cmd->parsed()) {
        const sl::switch_list s = load_switch_list(sl_file);
        emit_switch_list(output, sl::reorder(s, sl::parse_order(order_spec, s.n())));
    } else if (query_cmd->parsed()) {
        const sl::switch_list s = load_switch_list(sl_file);
        if (query_name == "consistent")
            std::cout << (sl::is_consistent(s) ? "true" : "false") << '\n';
        else if (query_name == "valid")
            std::cout << (sl::is_valid(s) ? "true" : "false") << '\n';
        else if (query_name == "count")
            std::cout << sl::count_models(s) << '\n';
        else
            throw sl::validation_error("query: expected consistent|valid|count");
    } else if (experiment_cmd->parsed()) {
        const std::vector<int> ns = parse_n_list(n_spec);
        experiment_csv csv;
        if (experiment_name == "observation1")
            run_observation1(csv, ns);
        else if (experiment_name == "proposition1")
            run_order_search(csv, ns, "f1-or-f2");
        else if (experiment_name == "theorem-conjunction")
            run_order_search(csv, ns, "not-f1-and-not-f2");
        else if (experiment_name == "bottom-up-demo")
            run_bottom_up_demo(csv, ns);
        else
            throw sl::validation_error("experiment: unknown name '" + experiment_name + "'");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const sl::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_parse_error;
    } catch (const sl::order_mismatch_error& e) {
        std::cerr << "order mismatch: " << e.what() << '\n';
        return exit_order_mismatch;
    } catch (const sl::size_cap_error& e) {
        std::cerr << "size cap: " << e.what() << '\n';
        return exit_size_cap;
    } catch (const sl::validation_error& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return exit_validation_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

#include "cli.hpp"

#include "cdes/bigint.hpp"
#include "cdes/descent_formula.hpp"
#include "cdes/descent_polynomial.hpp"
#include "cdes/descent_recursion.hpp"
#include "cdes/error.hpp"
#include "cdes/generating_tree.hpp"
#include "cdes/genocchi.hpp"
#include "cdes/perm_core.hpp"
#include "cdes/tableaux.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace cdes::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

struct GlobalOptions {
    Format format = Format::Text;
    unsigned threads = 1;
    int brute_cap = kDefaultBruteCap;
};

/**
 * One command's output. The same values are carried three ways; emit() picks
 * the one matching --format.
 */
struct Report {
    json query = json::object();
    json result;
    std::vector<std::string> text;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    int status = kSuccess;
};

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

void emit(const Report& report, Format format, std::ostream& out) {
    switch (format) {
    case Format::Text:
        for (const auto& line : report.text) out << line << '\n';
        break;
    case Format::Json:
        out << json{{"query", report.query}, {"result", report.result}}.dump() << '\n';
        break;
    case Format::Csv: {
        auto write_row = [&](const std::vector<std::string>& row) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
            out << '\n';
        };
        write_row(report.csv_header);
        for (const auto& row : report.csv_rows) write_row(row);
        break;
    }
    }
}

json set_json(const ValueSet& set) { return json(std::vector<int>(set.begin(), set.end())); }

std::vector<unsigned> parse_gaps(const std::string& text) {
    std::vector<unsigned> out;
    if (text.empty()) return out;
    std::string_view rest = text;
    while (true) {
        auto comma = rest.find(',');
        auto field = rest.substr(0, comma);
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw InvalidArgument("malformed gap entry '" + std::string(field) + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

// ---- count ----------------------------------------------------------------

const std::vector<std::string> kCountMethods = {"formula", "typed", "recursion", "tree", "brute"};

BigInt count_by(const std::string& method, int n, const ValueSet& set, const GlobalOptions& g) {
    if (!set.empty() && set.max() > n) {
        throw InvalidArgument("n = " + std::to_string(n) + " is smaller than max(S) = " + std::to_string(set.max()));
    }
    if (method == "formula") return cdes_formula(n, set);
    if (method == "typed") return cdes_formula_typed(n, set);
    if (method == "recursion") return cdes_recursive(n, set);
    if (method == "tree") {
        if (set.contains(1)) return 0;
        return tree_weight_sum(gap_vector(set).gaps);
    }
    if (method == "brute") return brute_cdes_count(n, set, {.cap = g.brute_cap, .threads = g.threads});
    throw InvalidArgument("unknown method '" + method + "'");
}

Report cmd_count(int n, const std::string& set_text, const std::string& method, bool all_methods,
                 const GlobalOptions& g) {
    const ValueSet set = ValueSet::parse(set_text);
    Report r;
    r.query = {{"command", "count"}, {"n", n}, {"set", set_json(set)}};

    if (!all_methods) {
        const BigInt value = count_by(method, n, set, g);
        r.query["method"] = method;
        r.result = to_decimal(value);
        r.text = {to_decimal(value)};
        r.csv_header = {"n", "set", "method", "count"};
        r.csv_rows = {{std::to_string(n), set.to_string(), method, to_decimal(value)}};
        return r;
    }

    r.query["method"] = "all";
    r.result = json::array();
    r.csv_header = {"n", "set", "method", "count"};
    std::optional<BigInt> first;
    bool agree = true;
    for (const auto& m : kCountMethods) {
        if (m == "brute" && n > g.brute_cap) continue;
        if (m == "tree" && set.size() > static_cast<std::size_t>(kDefaultTreeSumCap)) continue;
        const BigInt value = count_by(m, n, set, g);
        if (!first) first = value;
        agree = agree && value == *first;
        r.result.push_back({{"method", m}, {"count", to_decimal(value)}});
        r.text.push_back(m + " " + to_decimal(value));
        r.csv_rows.push_back({std::to_string(n), set.to_string(), m, to_decimal(value)});
    }
    if (!agree) {
        r.text.push_back("MISMATCH");
        r.status = kVerificationMismatch;
    }
    return r;
}

// ---- table ----------------------------------------------------------------

Report cmd_table(int n, const std::string& method, const GlobalOptions& g) {
    if (n < 1) throw InvalidArgument("n must be positive");
    CountTable table(n);
    if (method == "formula") {
        for (const auto& s : subsets_of_range(2, n)) table.set(s, cdes_formula(n, s));
    } else if (method == "insertion") {
        table = cdes_insertion_table(n);
    } else if (method == "brute") {
        table = brute_cdes_table(n, {.cap = g.brute_cap, .threads = g.threads});
    } else {
        throw InvalidArgument("unknown table method '" + method + "'");
    }

    auto sets = subsets_of_range(2, n);
    std::sort(sets.begin(), sets.end());

    Report r;
    r.query = {{"command", "table"}, {"n", n}, {"method", method}};
    r.result = json::array();
    r.csv_header = {"set", "count"};
    for (const auto& s : sets) {
        const auto count = to_decimal(table.at(s));
        r.result.push_back({{"set", set_json(s)}, {"count", count}});
        r.text.push_back(s.to_string() + " " + count);
        r.csv_rows.push_back({s.to_string(), count});
    }
    return r;
}

// ---- poly -----------------------------------------------------------------

Report cmd_poly(int n, std::optional<int> size) {
    SparsePolynomial p = size ? gnk(n, *size) : gn(n);
    Report r;
    r.query = {{"command", "poly"}, {"n", n}};
    if (size) r.query["size"] = *size;
    r.result = json::array();
    r.csv_header = {"coeff", "xvars", "ydeg"};
    for (const auto& [m, c] : p.terms()) {
        r.result.push_back({{"coeff", to_decimal(c)}, {"xvars", set_json(m.xvars)}, {"ydeg", m.ydeg}});
        r.csv_rows.push_back({to_decimal(c), m.xvars.to_string(), std::to_string(m.ydeg)});
    }
    r.text = {p.to_string()};
    return r;
}

// ---- tree -----------------------------------------------------------------

Report cmd_tree(const std::string& gaps_text, const std::string& set_text, bool use_set, const std::string& method,
                bool show) {
    WeightSequence d;
    if (use_set) {
        const ValueSet set = ValueSet::parse(set_text);
        d = gap_vector(set).gaps;
    } else {
        d = parse_gaps(gaps_text);
    }

    BigInt weight;
    if (method == "sum") {
        weight = tree_weight_sum(d);
    } else if (method == "traversal") {
        weight = tree_weight_traversal(d);
    } else {
        throw InvalidArgument("unknown tree method '" + method + "'");
    }

    Report r;
    r.query = {{"command", "tree"}, {"gaps", d}, {"method", method}};
    r.text = {to_decimal(weight)};
    r.csv_header = {"gaps", "weight"};
    std::string gap_list;
    for (std::size_t i = 0; i < d.size(); ++i) gap_list += (i ? "," : "") + std::to_string(d[i]);
    r.csv_rows = {{gap_list, to_decimal(weight)}};

    if (show) {
        std::stringstream dump;
        dump_tree(dump, build_tree(static_cast<int>(d.size())));
        std::vector<std::string> lines;
        for (std::string line; std::getline(dump, line);) lines.push_back(line);
        r.text.insert(r.text.end(), lines.begin(), lines.end());
        r.result = {{"weight", to_decimal(weight)}, {"tree", lines}};
    } else {
        r.result = to_decimal(weight);
    }
    return r;
}

// ---- tableaux -------------------------------------------------------------

Report cmd_tableaux(const std::string& shape_text, const std::string& method) {
    const PartitionShape shape = PartitionShape::parse(shape_text);
    const auto [n, labels] = shape_to_descent_set(shape);

    BigInt count;
    if (method == "formula") {
        count = count_tableaux_formula(shape);
    } else if (method == "typed") {
        count = count_tableaux_typed(shape);
    } else if (method == "brute") {
        count = brute_count_tableaux(shape);
    } else {
        throw InvalidArgument("unknown tableaux method '" + method + "'");
    }

    Report r;
    r.query = {{"command", "tableaux"}, {"shape", std::vector<int>(shape.parts().begin(), shape.parts().end())},
               {"method", method}, {"n", n}, {"descent_set", set_json(labels)}};
    r.result = to_decimal(count);
    r.text = {to_decimal(count)};
    r.csv_header = {"shape", "n", "descent_set", "count"};
    r.csv_rows = {{shape.to_string(), std::to_string(n), labels.to_string(), to_decimal(count)}};
    return r;
}

// ---- genocchi -------------------------------------------------------------

Report cmd_genocchi(int k, int n, bool brute, bool show_poly) {
    const BigInt value = genocchi_number(k, n);
    Report r;
    r.query = {{"command", "genocchi"}, {"k", k}, {"n", n}};
    r.csv_header = {"k", "n", "method", "value"};
    r.text = {to_decimal(value)};
    r.csv_rows = {{std::to_string(k), std::to_string(n), "gandhi", to_decimal(value)}};

    if (!brute && !show_poly) {
        r.result = to_decimal(value);
        return r;
    }

    r.result = {{"gandhi", to_decimal(value)}};
    if (show_poly) {
        const auto poly = gandhi_poly(k, n - 1).to_string();
        r.result["polynomial"] = poly;
        r.text.push_back("A_" + std::to_string(n - 1) + "(X) = " + poly);
    }
    if (brute) {
        // Permutations of [k(n-1)] realize G_{2n}^{(k)}.
        if (n < 2) throw InvalidArgument("--brute needs n >= 2");
        const BigInt count = brute_genocchi_perm_count(k, n - 1);
        r.result["brute"] = to_decimal(count);
        r.text.push_back("brute " + to_decimal(count));
        r.csv_rows.push_back({std::to_string(k), std::to_string(n), "brute", to_decimal(count)});
        if (count != value) {
            r.text.push_back("MISMATCH");
            r.status = kVerificationMismatch;
        }
    }
    return r;
}

// ---- verify ---------------------------------------------------------------

struct CheckResult {
    std::string name;
    int n;
    bool pass;
    std::string detail;
};

std::vector<CheckResult> run_checks(int max_n, const GlobalOptions& g) {
    std::vector<CheckResult> out;
    MemoCache cache;
    const BruteOptions brute{.cap = g.brute_cap, .threads = g.threads};

    for (int n = 1; n <= max_n; ++n) {
        const auto sets = subsets_of_range(2, n);
        const bool brute_ok = n <= g.brute_cap;
        CountTable formula(n);
        for (const auto& s : sets) formula.set(s, cdes_formula(n, s));

        auto compare = [&](const std::string& name, const std::function<BigInt(const ValueSet&)>& f) {
            std::size_t bad = 0;
            for (const auto& s : sets) bad += f(s) != formula.at(s);
            out.push_back({name, n, bad == 0, std::to_string(sets.size()) + " sets, " + std::to_string(bad) + " mismatches"});
        };

        compare("typed=formula", [&](const ValueSet& s) { return cdes_formula_typed(n, s); });
        compare("recursion=formula", [&](const ValueSet& s) { return cdes_recursive(n, s, &cache); });
        compare("tree=formula", [&](const ValueSet& s) { return tree_weight_sum(gap_vector(s).gaps); });

        const auto insertion = cdes_insertion_table(n);
        compare("insertion=formula", [&](const ValueSet& s) { return insertion.at(s); });

        const BigInt mass = formula.total();
        out.push_back({"mass", n, mass == factorial(static_cast<unsigned long>(n)), "sum = " + to_decimal(mass)});

        if (brute_ok) {
            const auto brute_table = brute_cdes_table(n, brute);
            compare("brute=formula", [&](const ValueSet& s) { return brute_table.at(s); });
            const auto nwexb = brute_nwexb_table(n, brute);
            out.push_back({"nwexb=cdes", n, nwexb == brute_table,
                           std::to_string(nwexb.entries().size()) + " bottom sets"});
        }

        if (n >= 2) {
            out.push_back({"singleton", n, formula.at({n}) == ipow(2, static_cast<unsigned long>(n - 1)) - 1,
                           "cdes({n}) = " + to_decimal(formula.at({n}))});

            const auto g_n = gn(n);
            bool poly_ok = g_n == polynomial_from_table(formula);
            for (const auto& [m, c] : g_n.terms()) poly_ok = poly_ok && m.ydeg == m.xvars.size();
            out.push_back({"poly=formula", n, poly_ok, std::to_string(g_n.terms().size()) + " terms"});

            std::size_t bad = 0;
            std::size_t checked = 0;
            for (const auto& shape : shapes_with_semiperimeter(n)) {
                const BigInt f = count_tableaux_formula(shape);
                bad += count_tableaux_typed(shape) != f;
                if (shape.boxes() <= kDefaultTableauBoxCap) {
                    bad += brute_count_tableaux(shape) != f;
                    ++checked;
                }
            }
            out.push_back({"tableaux", n, bad == 0,
                           std::to_string(shapes_with_semiperimeter(n).size()) + " shapes, " +
                               std::to_string(checked) + " brute-checked"});
        }
    }
    return out;
}

Report cmd_verify(int max_n, const GlobalOptions& g) {
    if (max_n < 1) throw InvalidArgument("--max-n must be positive");
    if (max_n > 16) throw CapExceeded("verify is limited to --max-n <= 16");
    const auto checks = run_checks(max_n, g);

    Report r;
    r.query = {{"command", "verify"}, {"max_n", max_n}, {"brute_cap", g.brute_cap}};
    r.result = json::array();
    r.csv_header = {"check", "n", "status", "detail"};
    std::size_t failed = 0;
    for (const auto& c : checks) {
        const std::string status = c.pass ? "PASS" : "FAIL";
        failed += !c.pass;
        r.result.push_back({{"check", c.name}, {"n", c.n}, {"pass", c.pass}, {"detail", c.detail}});
        r.text.push_back(status + " " + c.name + " n=" + std::to_string(c.n) + " (" + c.detail + ")");
        r.csv_rows.push_back({c.name, std::to_string(c.n), status, c.detail});
    }
    r.text.push_back("verify: " + std::to_string(checks.size()) + " checks, " + std::to_string(failed) + " failed");
    r.status = failed == 0 ? kSuccess : kVerificationMismatch;
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Count permutations by circular descent set"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--threads", g.threads, "Worker threads for exhaustive enumeration (0 = all cores)");
    app.add_option("--brute-cap", g.brute_cap, "Largest n allowed for exhaustive enumeration");

    std::function<Report()> action;

    int count_n = 0;
    std::string count_set;
    std::string count_method = "formula";
    bool all_methods = false;
    auto* count = app.add_subcommand("count", "Count permutations of [n] with a given circular descent set");
    count->add_option("--n", count_n)->required();
    count->add_option("--set", count_set, "Comma-separated ascending elements (empty for the empty set)")->required();
    count->add_option("--method", count_method)->check(CLI::IsMember(kCountMethods));
    count->add_flag("--all-methods", all_methods, "Run every applicable method and require agreement");
    count->callback([&] { action = [&] { return cmd_count(count_n, count_set, count_method, all_methods, g); }; });

    int table_n = 0;
    std::string table_method = "formula";
    auto* table = app.add_subcommand("table", "All descent sets of [2, n] with their counts");
    table->add_option("--n", table_n)->required();
    table->add_option("--method", table_method)->check(CLI::IsMember({"formula", "insertion", "brute"}));
    table->callback([&] { action = [&] { return cmd_table(table_n, table_method, g); }; });

    int poly_n = 0;
    std::optional<int> poly_size;
    auto* poly = app.add_subcommand("poly", "Circular descent polynomial g_n");
    poly->add_option("--n", poly_n)->required();
    poly->add_option("--size", poly_size, "Only the slice with k descents (y dropped)");
    poly->callback([&] { action = [&] { return cmd_poly(poly_n, poly_size); }; });

    std::string tree_gaps;
    std::string tree_set;
    std::string tree_method = "sum";
    bool tree_show = false;
    auto* tree = app.add_subcommand("tree", "Weight of the generating tree for a weight sequence");
    auto* gaps_opt = tree->add_option("--gaps", tree_gaps, "Comma-separated exponents d_1,...,d_k");
    auto* set_opt = tree->add_option("--set", tree_set, "Use the gap vector of this descent set");
    gaps_opt->excludes(set_opt);
    tree->add_option("--method", tree_method)->check(CLI::IsMember({"sum", "traversal"}));
    tree->add_flag("--show", tree_show, "Dump the tree, one node per line");
    tree->callback([&] {
        if (gaps_opt->count() == 0 && set_opt->count() == 0) throw CLI::ValidationError("tree needs --gaps or --set");
        action = [&, use_set = set_opt->count() > 0] {
            return cmd_tree(tree_gaps, tree_set, use_set, tree_method, tree_show);
        };
    });

    std::string shape;
    std::string tableaux_method = "formula";
    auto* tableaux = app.add_subcommand("tableaux", "Number of permutation tableaux of a shape");
    tableaux->add_option("--shape", shape, "Comma-separated weakly decreasing parts")->required();
    tableaux->add_option("--method", tableaux_method)->check(CLI::IsMember({"formula", "typed", "brute"}));
    tableaux->callback([&] { action = [&] { return cmd_tableaux(shape, tableaux_method); }; });

    int gk = 0;
    int gn_index = 0;
    bool g_brute = false;
    bool g_poly = false;
    auto* genocchi = app.add_subcommand("genocchi", "Generalized Genocchi number G_{2n}^{(k)}");
    genocchi->add_option("--k", gk)->required();
    genocchi->add_option("--n", gn_index)->required();
    genocchi->add_flag("--brute", g_brute, "Cross-check by counting permutations of [k(n-1)]");
    genocchi->add_flag("--poly", g_poly, "Also print the Gandhi polynomial A_{n-1}");
    genocchi->callback([&] { action = [&] { return cmd_genocchi(gk, gn_index, g_brute, g_poly); }; });

    int max_n = 8;
    auto* verify = app.add_subcommand("verify", "Cross-check every method up to max-n");
    verify->add_option("--max-n", max_n);
    verify->callback([&] { action = [&] { return cmd_verify(max_n, g); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kValidationError;
    }

    g.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;

    try {
        const Report report = action();
        emit(report, g.format, out);
        if (report.status == kVerificationMismatch) err << "error: methods disagree\n";
        return report.status;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
    }
    return kValidationError;
}

} // namespace cdes::cli

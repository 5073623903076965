#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cubicc/io.hpp"
#include "cubicc/oracle.hpp"

using namespace cubicc;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitSizeCap = 3;
constexpr int kExitOracleMismatch = 4;

std::string read_input(const std::string& file, const std::string& inline_text) {
    if (!inline_text.empty()) return inline_text;
    if (file == "-" || file.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Every representation funnels through a validated Tid.
Tid parse_as_tid(const std::string& repr, const std::string& text) {
    if (repr == "cc") {
        std::string trimmed = text;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        Cubic c;
        if (!trimmed.empty() && trimmed.front() == '{') {
            c = cubic_from_json(json::parse(trimmed));
        } else {
            c.c = parse_int_list(trimmed);
        }
        Tid t = phi(c);
        if (!is_valid_tid(t))
            throw std::invalid_argument("invalid cubic coordinate: " +
                                        describe_invalid_cubic(c));
        return t;
    }
    const json j = json::parse(text);
    if (repr == "tid") {
        Tid t = tid_from_json(j);
        return make_tid(t.u, t.v);
    }
    if (repr == "poset") {
        IntervalPoset p = poset_from_json(j);
        if (auto verdict = validate_closed(p); !verdict.ok())
            throw std::invalid_argument("invalid interval-poset: " + to_string(verdict));
        return chi_inverse(p);
    }
    if (repr == "interval") {
        TamariInterval iv = interval_from_json(j);
        if (!is_valid_interval(iv))
            throw std::invalid_argument("invalid interval: lower is not <=t upper");
        return make_tid(tree_to_tamari_diagram(iv.lower),
                        tree_to_dual_diagram(iv.upper));
    }
    throw std::invalid_argument("unsupported source representation: " + repr);
}

json render_from_tid(const std::string& repr, const Tid& t) {
    if (repr == "cc") return cubic_to_json(phi_inverse(t));
    if (repr == "tid") return tid_to_json(t);
    if (repr == "poset") return poset_to_json(chi(t));
    if (repr == "interval" || repr == "tree-pair") {
        const TamariInterval iv{tree_from_tamari_diagram(t.u),
                                tree_from_dual_diagram(t.v)};
        if (repr == "interval") return interval_to_json(iv);
        return json::array({tree_to_json(iv.lower), tree_to_json(iv.upper)});
    }
    throw std::invalid_argument("unsupported target representation: " + repr);
}

void write_output(const std::string& out_file, const std::string& payload) {
    if (out_file.empty() || out_file == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_file);
    if (!out) throw std::runtime_error("cannot write " + out_file);
    out << payload;
}

std::string sibling_edges_path(const std::string& path) {
    const size_t dot = path.find_last_of('.');
    if (dot == std::string::npos) return path + ".edges";
    return path.substr(0, dot) + ".edges" + path.substr(dot);
}

bool vertex_passes(const RealizationDocument::Vertex& v, const std::string& filter) {
    if (filter == "all") return true;
    if (filter == "synchronized") return v.synchronized;
    if (filter == "new") return v.is_new;
    if (filter == "minimal-cellular") return v.minimal_cellular;
    throw std::invalid_argument("unknown filter: " + filter);
}

int run_check(int n_max, int cap, std::ostream& out) {
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok) {
        out << (ok ? "  ok    " : "  FAIL  ") << name << "\n";
        all_ok = all_ok && ok;
    };

    for (const CountRow& row : check_counts(n_max, cap))
        report("counts " + to_string(row), row.ok);

    for (int n = 1; n <= std::min(n_max, 5); ++n) {
        const PosetInstance p = enumerate_cc(n, Execution::parallel, cap);
        report("box filter agrees with BFS, n=" + std::to_string(n),
               oracle::cc_by_box_filter(n) == p.elements);
    }

    for (int n = 1; n <= std::min(n_max, 4); ++n) {
        const auto posets = oracle::interval_posets_by_filter(n);
        std::set<IntervalPoset> image;
        for (const Tid& t : enumerate_tids(n)) image.insert(chi(t));
        report("chi image equals brute-force interval-posets, n=" + std::to_string(n),
               std::set<IntervalPoset>(posets.begin(), posets.end()) == image);
    }

    for (int n = 1; n <= std::min(n_max, 5); ++n) {
        const oracle::TamariClosure closure = oracle::tamari_order_by_closure(n);
        bool ok = true;
        for (size_t a = 0; a < closure.trees.size() && ok; ++a)
            for (size_t b = 0; b < closure.trees.size() && ok; ++b)
                ok = closure.order[a][b] == tamari_leq(closure.trees[a], closure.trees[b]);
        report("diagram order agrees with rotation closure, n=" + std::to_string(n), ok);
    }

    for (int n = 1; n <= std::min(n_max, 5); ++n) {
        bool ok = true;
        for (const Tid& t : enumerate_tids(n)) {
            if (!(chi_inverse(chi(t)) == t)) ok = false;
            if (!(phi(phi_inverse(t)) == t)) ok = false;
            if (!(psi(psi_inverse(phi_inverse(t))) == phi_inverse(t))) ok = false;
        }
        report("bijection roundtrips, n=" + std::to_string(n), ok);
    }

    out << (all_ok ? "OK" : "MISMATCH") << "\n";
    return all_ok ? 0 : kExitOracleMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cubic-coordinate toolkit for Tamari lattice intervals"};
    app.require_subcommand(1);
    int cap = kDefaultSizeCap;
    app.add_option("--cap", cap, "Size cap for enumeration commands");

    auto* convert = app.add_subcommand("convert", "Convert between representations");
    std::string from_repr, to_repr, input_file, inline_text, out_file;
    convert->add_option("--from", from_repr, "cc|tid|poset|interval")->required();
    convert->add_option("--to", to_repr, "cc|tid|poset|interval|tree-pair")->required();
    convert->add_option("--input", input_file, "Input file ('-' for stdin)");
    convert->add_option("--inline", inline_text, "Inline input text");
    convert->add_option("--out", out_file, "Output file (default stdout)");

    auto* compare = app.add_subcommand("compare", "Compare two cubic coordinates");
    std::string cc_a, cc_b;
    compare->add_option("c1", cc_a, "First coordinate, comma-separated")->required();
    compare->add_option("c2", cc_b, "Second coordinate")->required();

    auto* realize = app.add_subcommand("realize", "Export the cubic realization");
    int size = 3;
    std::string format = "json";
    realize->add_option("--size", size, "Size n")->required();
    realize->add_option("--format", format, "json|dot|csv");
    realize->add_option("--out", out_file, "Output file (default stdout)");

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate cubic coordinates");
    std::string filter = "all";
    bool count_only = false;
    enumerate->add_option("--size", size, "Size n")->required();
    enumerate->add_option("--filter", filter, "all|synchronized|new|minimal-cellular");
    enumerate->add_flag("--count-only", count_only, "Print only the count");

    auto* cells_cmd = app.add_subcommand("cells", "Enumerate cells with their gamma images");
    cells_cmd->add_option("--size", size, "Size n")->required();
    cells_cmd->add_flag("--count-only", count_only, "Print only the count");

    auto* check = app.add_subcommand("check", "Cross-validate against brute-force oracles");
    check->add_option("--size", size, "Largest size to check")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (convert->parsed()) {
            const std::string text = read_input(input_file, inline_text);
            const Tid tid = parse_as_tid(from_repr, text);
            write_output(out_file, render_from_tid(to_repr, tid).dump(2) + "\n");
        } else if (compare->parsed()) {
            const Cubic a{parse_int_list(cc_a)};
            const Cubic b{parse_int_list(cc_b)};
            if (!is_valid_cubic(a) || !is_valid_cubic(b))
                throw std::invalid_argument("invalid cubic coordinate");
            switch (compare_cc(a, b)) {
                case Order::less: std::cout << "LE\n"; break;
                case Order::greater: std::cout << "GE\n"; break;
                case Order::equal: std::cout << "EQ\n"; break;
                case Order::incomparable: std::cout << "INCOMPARABLE\n"; break;
            }
        } else if (realize->parsed()) {
            const RealizationDocument doc =
                build_realization(enumerate_cc(size, Execution::parallel, cap));
            if (format == "json") {
                write_output(out_file, realization_to_json(doc).dump(2) + "\n");
            } else if (format == "dot") {
                write_output(out_file, realization_to_dot(doc));
            } else if (format == "csv") {
                if (out_file.empty())
                    throw std::invalid_argument("csv format requires --out");
                const auto [vertices, edges] = realization_to_csv(doc);
                write_output(out_file, vertices);
                write_output(sibling_edges_path(out_file), edges);
            } else {
                throw std::invalid_argument("unknown format: " + format);
            }
        } else if (enumerate->parsed()) {
            const RealizationDocument doc =
                build_realization(enumerate_cc(size, Execution::parallel, cap));
            long long count = 0;
            for (const auto& v : doc.vertices) {
                if (!vertex_passes(v, filter)) continue;
                ++count;
                if (!count_only)
                    std::cout << cubic_to_json(Cubic{v.c}).dump() << "\n";
            }
            if (count_only) std::cout << count << "\n";
        } else if (cells_cmd->parsed()) {
            const std::vector<Cell> cells = enumerate_cells(size, cap);
            if (count_only) {
                std::cout << cells.size() << "\n";
            } else {
                for (const Cell& cell : cells)
                    std::cout << cell_to_json(cell).dump() << "\n";
            }
        } else if (check->parsed()) {
            return run_check(size, cap, std::cout);
        }
    } catch (const SizeCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSizeCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}

#include "cubicc/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cubicc {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int value = std::stoi(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size())
            throw std::invalid_argument("parse_int_list: bad token '" + item + "'");
        out.push_back(value);
    }
    return out;
}

std::string format_int_list(const std::vector<int>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

json tid_to_json(const Tid& t) {
    return json{{"n", t.size()}, {"u", t.u}, {"v", t.v}};
}

Tid tid_from_json(const json& j) {
    Tid t{j.at("u").get<Word>(), j.at("v").get<Word>()};
    if (j.contains("n") && j.at("n").get<int>() != t.size())
        throw std::invalid_argument("tid_from_json: n does not match word length");
    return t;
}

json cubic_to_json(const Cubic& c) {
    return json{{"n", c.size()}, {"c", c.c}};
}

Cubic cubic_from_json(const json& j) {
    Cubic c{j.at("c").get<std::vector<int>>()};
    if (j.contains("n") && j.at("n").get<int>() != c.size())
        throw std::invalid_argument("cubic_from_json: n does not match entry count");
    return c;
}

json poset_to_json(const IntervalPoset& p) {
    json pairs = json::array();
    for (const auto& [a, b] : p.relation_pairs()) pairs.push_back(json::array({a, b}));
    return json{{"n", p.size()}, {"relations", pairs}};
}

IntervalPoset poset_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    IntervalPoset p(n);
    for (const auto& pair : j.at("relations")) {
        const int a = pair.at(0).get<int>();
        const int b = pair.at(1).get<int>();
        if (a < 1 || a > n || b < 1 || b > n)
            throw std::invalid_argument("poset_from_json: vertex index out of range");
        if (a != b) p.set_less(a, b);
    }
    p.close_transitively();
    return p;
}

namespace {

json tree_node_to_json(const BinaryTree& t, int node) {
    if (node == BinaryTree::kNone) return nullptr;
    return json{{"l", tree_node_to_json(t, t.left(node))},
                {"r", tree_node_to_json(t, t.right(node))}};
}

int count_tree_nodes(const json& j) {
    if (j.is_null()) return 0;
    return 1 + count_tree_nodes(j.at("l")) + count_tree_nodes(j.at("r"));
}

// Infix indices are assigned left-to-right while rebuilding the shape.
int tree_node_from_json(const json& j, BinaryTree& t, int& next_index) {
    if (j.is_null()) return BinaryTree::kNone;
    const int left = tree_node_from_json(j.at("l"), t, next_index);
    const int node = ++next_index;
    const int right = tree_node_from_json(j.at("r"), t, next_index);
    t.set_left(node, left);
    t.set_right(node, right);
    return node;
}

}  // namespace

json tree_to_json(const BinaryTree& t) {
    return tree_node_to_json(t, t.root());
}

BinaryTree tree_from_json(const json& j) {
    const int n = count_tree_nodes(j);
    if (n == 0) throw std::invalid_argument("tree_from_json: empty tree");
    BinaryTree t(n);
    int next_index = 0;
    t.set_root(tree_node_from_json(j, t, next_index));
    return t;
}

json interval_to_json(const TamariInterval& iv) {
    return json{{"n", iv.size()},
                {"lower", tree_to_json(iv.lower)},
                {"upper", tree_to_json(iv.upper)}};
}

TamariInterval interval_from_json(const json& j) {
    TamariInterval iv{tree_from_json(j.at("lower")), tree_from_json(j.at("upper"))};
    if (iv.lower.size() != iv.upper.size())
        throw std::invalid_argument("interval_from_json: tree sizes differ");
    if (j.contains("n") && j.at("n").get<int>() != iv.size())
        throw std::invalid_argument("interval_from_json: n does not match tree size");
    return iv;
}

json cell_to_json(const Cell& cell) {
    return json{{"n", cell.size()},
                {"cmin", cell.c_min.c},
                {"cmax", cell.c_max.c},
                {"gamma", gamma_map(cell).c}};
}

RealizationDocument build_realization(const PosetInstance& p) {
    RealizationDocument doc;
    doc.n = p.n;
    for (size_t i = 0; i < p.elements.size(); ++i) {
        const Cubic& c = p.elements[i];
        RealizationDocument::Vertex v;
        v.id = static_cast<int>(i);
        v.c = c.c;
        v.synchronized = is_synchronized(c);
        v.is_new = is_new(phi(c));
        v.minimal_cellular = is_minimal_cellular(c);
        doc.vertices.push_back(std::move(v));
    }
    doc.edges = p.hasse;
    return doc;
}

json realization_to_json(const RealizationDocument& doc) {
    json vertices = json::array();
    for (const auto& v : doc.vertices) {
        vertices.push_back(json{{"id", v.id},
                                {"c", v.c},
                                {"synchronized", v.synchronized},
                                {"new", v.is_new},
                                {"minimal_cellular", v.minimal_cellular}});
    }
    json edges = json::array();
    for (const auto& [lo, hi] : doc.edges) edges.push_back(json::array({lo, hi}));
    return json{{"n", doc.n}, {"vertices", vertices}, {"edges", edges}};
}

std::string realization_to_dot(const RealizationDocument& doc) {
    std::ostringstream out;
    out << "digraph cc" << doc.n << " {\n  rankdir=BT;\n  node [shape=box];\n";
    std::map<int, std::vector<int>> by_rank;  // rank = sum of entries
    for (const auto& v : doc.vertices) {
        int sum = 0;
        for (int e : v.c) sum += e;
        by_rank[sum].push_back(v.id);
        out << "  v" << v.id << " [label=\"(" << format_int_list(v.c) << ")\"];\n";
    }
    for (const auto& [sum, ids] : by_rank) {
        out << "  { rank=same;";
        for (int id : ids) out << " v" << id << ";";
        out << " }\n";
    }
    for (const auto& [lo, hi] : doc.edges)
        out << "  v" << lo << " -> v" << hi << ";\n";
    out << "}\n";
    return out.str();
}

std::pair<std::string, std::string> realization_to_csv(const RealizationDocument& doc) {
    std::ostringstream vertices;
    vertices << "id";
    for (int i = 1; i <= doc.n - 1; ++i) vertices << ",c" << i;
    vertices << ",synchronized,new,minimal_cellular\n";
    for (const auto& v : doc.vertices) {
        vertices << v.id;
        for (int e : v.c) vertices << ',' << e;
        vertices << ',' << (v.synchronized ? 1 : 0) << ',' << (v.is_new ? 1 : 0)
                 << ',' << (v.minimal_cellular ? 1 : 0) << '\n';
    }
    std::ostringstream edges;
    edges << "lower,upper\n";
    for (const auto& [lo, hi] : doc.edges) edges << lo << ',' << hi << '\n';
    return {vertices.str(), edges.str()};
}

json hasse_to_json(const PosetInstance& p) {
    json nodes = json::array();
    for (size_t i = 0; i < p.elements.size(); ++i)
        nodes.push_back(json{{"id", static_cast<int>(i)}, {"c", p.elements[i].c}});
    json edges = json::array();
    for (const auto& [lo, hi] : p.hasse) edges.push_back(json::array({lo, hi}));
    return json{{"n", p.n}, {"nodes", nodes}, {"edges", edges}};
}

}  // namespace cubicc

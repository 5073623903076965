#ifndef CUBICC_IO_HPP
#define CUBICC_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cubicc/cells.hpp"
#include "cubicc/cubic.hpp"
#include "cubicc/diagrams.hpp"
#include "cubicc/interval_poset.hpp"
#include "cubicc/lattice.hpp"
#include "cubicc/trees.hpp"

namespace cubicc {

using nlohmann::json;

// Text form: comma-separated integers; the empty string is the empty
// tuple (size-1 cubic coordinate).
std::vector<int> parse_int_list(const std::string& text);
std::string format_int_list(const std::vector<int>& values);

// {"n": ..., "u": [...], "v": [...]}
json tid_to_json(const Tid& t);
Tid tid_from_json(const json& j);

// {"n": ..., "c": [...]}
json cubic_to_json(const Cubic& c);
Cubic cubic_from_json(const json& j);

// {"n": ..., "relations": [[a, b], ...]} with strict pairs a <| b,
// closure implied on input, emitted closed.
json poset_to_json(const IntervalPoset& p);
IntervalPoset poset_from_json(const json& j);

// {"l": <tree|null>, "r": <tree|null>}
json tree_to_json(const BinaryTree& t);
BinaryTree tree_from_json(const json& j);

// {"n": ..., "lower": <tree>, "upper": <tree>}
json interval_to_json(const TamariInterval& iv);
TamariInterval interval_from_json(const json& j);

// {"n": ..., "cmin": [...], "cmax": [...], "gamma": [...]}
json cell_to_json(const Cell& cell);

/// The cubic realization as export data: each vertex carries its space
/// coordinates and the synchronized / new / minimal-cellular flags,
/// edges are cover pairs by vertex id.
struct RealizationDocument {
    int n = 0;
    struct Vertex {
        int id = 0;
        std::vector<int> c;
        bool synchronized = false;
        bool is_new = false;
        bool minimal_cellular = false;
    };
    std::vector<Vertex> vertices;
    std::vector<std::pair<int, int>> edges;
};

RealizationDocument build_realization(const PosetInstance& p);

json realization_to_json(const RealizationDocument& doc);

/// DOT digraph, vertices grouped into ranks by entry sum.
std::string realization_to_dot(const RealizationDocument& doc);

/// CSV: one row per vertex (c_1..c_{n-1} then flags); edges go to a
/// sibling file, hence the pair of strings (vertices, edges).
std::pair<std::string, std::string> realization_to_csv(const RealizationDocument& doc);

/// {"n": ..., "nodes": [{"id": ..., "c": [...]}, ...], "edges": [[lo, hi], ...]}
json hasse_to_json(const PosetInstance& p);

}  // namespace cubicc

#endif

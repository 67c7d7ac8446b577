#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "menage/polymatrix.hpp"

namespace menage {

// One graph node: a gender word over {f, m} of length max(k-1, 2), plus a
// star flag marking the word's final pair as a close couple. Starred nodes
// always end in a mixed pair (spouses have opposite genders).
struct DeBruijnNode {
    std::string word;
    bool starred = false;

    std::string label() const { return starred ? word + "*" : word; }

    friend bool operator==(const DeBruijnNode&, const DeBruijnNode&) = default;
};

// Weighted de Bruijn graph for run-length bound k. Arc weights are single
// monomials y^{+-1} * z^{0 or 1}: the y degree tracks the male-female
// balance, the z degree the number of close couples. Node order is
// canonical: unstarred nodes first, words lexicographic with f < m.
struct DeBruijnGraph {
    int k = 0;
    std::vector<DeBruijnNode> nodes;
    PolyMatrix adjacency{1};

    /// Index of the node with the given label ("fm", "mf*", ...); -1 if absent.
    int node_index(std::string_view label) const;

    /// Simultaneous row/column permutation of the adjacency matrix into the
    /// order given by labels. Throws if a label is unknown.
    PolyMatrix adjacency_in_order(const std::vector<std::string>& labels) const;

    /// One line per arc, `<src> -> <dst> : <weight>`, sorted by canonical
    /// (src, dst) index.
    std::string dump() const;
};

/// Builds the graph for run-length bound k. Throws std::invalid_argument
/// when k < 2. For k = 2 the graph has 4 nodes; for k >= 3 it has
/// 3 * 2^(k-2) nodes.
DeBruijnGraph build_graph(int k);

}  // namespace menage

#include "menage/debruijn.hpp"

#include <algorithm>
#include <stdexcept>

namespace menage {

namespace {

bool has_run(std::string_view word, int k) {
    int run = 1;
    for (std::size_t i = 1; i < word.size(); ++i) {
        run = word[i] == word[i - 1] ? run + 1 : 1;
        if (run >= k) return true;
    }
    return false;
}

}  // namespace

int DeBruijnGraph::node_index(std::string_view label) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].label() == label) return static_cast<int>(i);
    return -1;
}

PolyMatrix DeBruijnGraph::adjacency_in_order(const std::vector<std::string>& labels) const {
    if (labels.size() != nodes.size())
        throw std::invalid_argument("adjacency_in_order: wrong label count");
    std::vector<int> perm;
    perm.reserve(labels.size());
    for (const std::string& label : labels) {
        int idx = node_index(label);
        if (idx < 0) throw std::invalid_argument("adjacency_in_order: unknown label " + label);
        perm.push_back(idx);
    }
    return adjacency.permuted(perm);
}

std::string DeBruijnGraph::dump() const {
    std::string out;
    const int n = static_cast<int>(nodes.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const LaurentPoly& w = adjacency.at(i, j);
            if (w.is_zero()) continue;
            out += nodes[i].label();
            out += " -> ";
            out += nodes[j].label();
            out += " : ";
            out += w.to_string();
            out += '\n';
        }
    return out;
}

DeBruijnGraph build_graph(int k) {
    if (k < 2) throw std::invalid_argument("build_graph: k must be at least 2");
    const int word_len = std::max(k - 1, 2);

    std::vector<DeBruijnNode> nodes;
    for (int bits = 0; bits < (1 << word_len); ++bits) {
        std::string word(word_len, 'f');
        for (int i = 0; i < word_len; ++i)
            if (bits & (1 << i)) word[i] = 'm';
        if (has_run(word, k)) continue;
        nodes.push_back(DeBruijnNode{word, false});
    }
    // Canonical order: unstarred block first, each block word-lexicographic.
    std::sort(nodes.begin(), nodes.end(),
              [](const DeBruijnNode& a, const DeBruijnNode& b) { return a.word < b.word; });
    const std::size_t unstarred = nodes.size();
    for (std::size_t i = 0; i < unstarred; ++i) {
        const std::string& w = nodes[i].word;
        if (w[w.size() - 1] != w[w.size() - 2]) nodes.push_back(DeBruijnNode{w, true});
    }

    DeBruijnGraph g;
    g.k = k;
    g.nodes = std::move(nodes);
    const int n = static_cast<int>(g.nodes.size());
    g.adjacency = PolyMatrix(n);

    for (int i = 0; i < n; ++i) {
        const DeBruijnNode& u = g.nodes[i];
        for (int j = 0; j < n; ++j) {
            const DeBruijnNode& v = g.nodes[j];
            if (u.starred && v.starred) continue;  // one person cannot be in two close couples
            const char appended = v.word.back();
            if (v.word.compare(0, v.word.size() - 1, u.word, 1, u.word.size() - 1) != 0)
                continue;
            if (has_run(u.word + appended, k)) continue;
            const std::int32_t ey = appended == 'm' ? 1 : -1;
            g.adjacency.at(i, j) = LaurentPoly::monomial(1, ey, v.starred ? 1 : 0, 0);
        }
    }
    return g;
}

}  // namespace menage

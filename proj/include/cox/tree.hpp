#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cox/errors.hpp"

namespace cox {

/// Labeled simple tree: vertices 1..n, undirected edges. The empty tree
/// (n = 0) is allowed as a degenerate value. Connectivity and acyclicity are
/// checked at construction, so every instance is a genuine tree.
class Tree {
  public:
    Tree() = default; // empty tree

    Tree(int n, std::vector<std::pair<int, int>> edges, std::vector<std::string> labels = {})
        : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
        validate();
        if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
            throw parameter_out_of_range("labels must be empty or one per vertex");
        for (auto& [u, v] : edges_)
            if (u > v)
                std::swap(u, v);
        std::sort(edges_.begin(), edges_.end());
    }

    int vertex_count() const { return n_; }
    bool is_empty() const { return n_ == 0; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Optional vertex names; the vertex id itself when none was given.
    std::string label_of(int v) const {
        if (!labels_.empty())
            return labels_[static_cast<size_t>(v - 1)];
        return std::to_string(v);
    }
    const std::vector<std::string>& labels() const { return labels_; }

    bool has_edge(int u, int v) const {
        if (u > v)
            std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
    }

    int degree_of(int v) const {
        int d = 0;
        for (const auto& [a, b] : edges_)
            d += (a == v) + (b == v);
        return d;
    }

    std::vector<std::vector<int>> adjacency_lists() const {
        std::vector<std::vector<int>> adj(static_cast<size_t>(n_) + 1);
        for (const auto& [u, v] : edges_) {
            adj[static_cast<size_t>(u)].push_back(v);
            adj[static_cast<size_t>(v)].push_back(u);
        }
        return adj;
    }

    std::vector<int> sorted_degree_sequence() const {
        std::vector<int> deg(static_cast<size_t>(n_), 0);
        for (const auto& [u, v] : edges_) {
            ++deg[static_cast<size_t>(u - 1)];
            ++deg[static_cast<size_t>(v - 1)];
        }
        std::sort(deg.begin(), deg.end());
        return deg;
    }

    /// Relabel with vertex i becoming perm[i-1] (perm is a permutation of 1..n).
    Tree relabeled(const std::vector<int>& perm) const {
        std::vector<std::pair<int, int>> e;
        e.reserve(edges_.size());
        for (const auto& [u, v] : edges_)
            e.emplace_back(perm[static_cast<size_t>(u - 1)], perm[static_cast<size_t>(v - 1)]);
        std::vector<std::string> names;
        if (!labels_.empty()) {
            names.resize(labels_.size());
            for (int v = 1; v <= n_; ++v)
                names[static_cast<size_t>(perm[static_cast<size_t>(v - 1)] - 1)] =
                    labels_[static_cast<size_t>(v - 1)];
        }
        return Tree(n_, std::move(e), std::move(names));
    }

    friend bool operator==(const Tree& a, const Tree& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }
    friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

  private:
    void validate() const {
        if (n_ < 0)
            throw parameter_out_of_range("negative vertex count");
        if (n_ == 0) {
            if (!edges_.empty())
                throw parameter_out_of_range("empty tree cannot have edges");
            return;
        }
        if (static_cast<int>(edges_.size()) != n_ - 1)
            throw parameter_out_of_range("a tree on " + std::to_string(n_) + " vertices needs " +
                                         std::to_string(n_ - 1) + " edges, got " +
                                         std::to_string(edges_.size()));
        std::set<std::pair<int, int>> seen;
        std::vector<std::vector<int>> adj(static_cast<size_t>(n_) + 1);
        for (auto [u, v] : edges_) {
            if (u < 1 || u > n_ || v < 1 || v > n_)
                throw bad_vertex_index("edge endpoint out of range");
            if (u == v)
                throw parameter_out_of_range("self-loop not allowed");
            if (u > v)
                std::swap(u, v);
            if (!seen.emplace(u, v).second)
                throw parameter_out_of_range("duplicate edge");
            adj[static_cast<size_t>(u)].push_back(v);
            adj[static_cast<size_t>(v)].push_back(u);
        }
        // |edges| = n-1 plus full reachability from vertex 1 = tree
        std::vector<char> vis(static_cast<size_t>(n_) + 1, 0);
        std::vector<int> stack{1};
        vis[1] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[static_cast<size_t>(u)]) {
                if (!vis[static_cast<size_t>(v)]) {
                    vis[static_cast<size_t>(v)] = 1;
                    ++reached;
                    stack.push_back(v);
                }
            }
        }
        if (reached != n_)
            throw parameter_out_of_range("graph is not connected");
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> labels_;
};

using Forest = std::vector<Tree>;

/// Path graph A_n with vertices 1-2-...-n; n = 0 gives the empty tree.
inline Tree path(int n) {
    if (n < 0)
        throw parameter_out_of_range("path length must be >= 0");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i)
        e.emplace_back(i, i + 1);
    return Tree(n, std::move(e));
}

/// D_n (n >= 4): chain 1-...-(n-2) with both n-1 and n attached to n-2.
inline Tree dynkin_D(int n) {
    if (n < 4)
        throw parameter_out_of_range("D_n requires n >= 4");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n - 2; ++i)
        e.emplace_back(i, i + 1);
    e.emplace_back(n - 2, n - 1);
    e.emplace_back(n - 2, n);
    return Tree(n, std::move(e));
}

/// E_n (n >= 4): chain 1-2-4-5-...-n with vertex 3 attached to vertex 4.
inline Tree dynkin_E(int n) {
    if (n < 4)
        throw parameter_out_of_range("E_n requires n >= 4");
    std::vector<std::pair<int, int>> e;
    e.emplace_back(1, 2);
    e.emplace_back(2, 4);
    e.emplace_back(3, 4);
    for (int i = 4; i < n; ++i)
        e.emplace_back(i, i + 1);
    return Tree(n, std::move(e));
}

/// ~D_n (n >= 4), on n+1 vertices: leaves 1,2 on vertex 3, chain
/// 3-4-...-(n-1), leaves n,n+1 on vertex n-1.
inline Tree euclidean_D(int n) {
    if (n < 4)
        throw parameter_out_of_range("~D_n requires n >= 4");
    std::vector<std::pair<int, int>> e;
    e.emplace_back(1, 3);
    e.emplace_back(2, 3);
    for (int i = 3; i < n - 1; ++i)
        e.emplace_back(i, i + 1);
    e.emplace_back(n - 1, n);
    e.emplace_back(n - 1, n + 1);
    return Tree(n + 1, std::move(e));
}

/// ~E_n for n in {6,7,8}; ~E_8 coincides with E_9.
inline Tree euclidean_E(int n) {
    if (n == 6) {
        return Tree(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {6, 7}});
    }
    if (n == 7) {
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i < 7; ++i)
            e.emplace_back(i, i + 1);
        e.emplace_back(4, 8);
        return Tree(8, std::move(e));
    }
    if (n == 8)
        return dynkin_E(9);
    throw parameter_out_of_range("~E_n requires n in {6,7,8}");
}

/// The pair (i, [p_1,...,p_k]) naming the tree S^(i)_{p_1,...,p_k}: a join
/// of i D-type arms followed by k-i A-type arms.
struct SalemSpec {
    int i = 0;
    std::vector<int> arms;

    int k() const { return static_cast<int>(arms.size()); }

    void validate() const {
        if (arms.empty())
            throw invalid_spec("at least one arm required");
        if (i < 0 || i > k())
            throw invalid_spec("i must lie in {0,...,k}");
        for (int j = 0; j < k(); ++j) {
            if (j < i && arms[static_cast<size_t>(j)] < 3)
                throw invalid_spec("D-type arm p_" + std::to_string(j + 1) + " must be >= 3");
            if (j >= i && arms[static_cast<size_t>(j)] < 0)
                throw invalid_spec("A-type arm p_" + std::to_string(j + 1) + " must be >= 0");
        }
    }

    friend bool operator==(const SalemSpec& a, const SalemSpec& b) {
        return a.i == b.i && a.arms == b.arms;
    }
    friend bool operator<(const SalemSpec& a, const SalemSpec& b) {
        return std::tie(a.i, a.arms) < std::tie(b.i, b.arms);
    }

    std::string to_string() const {
        std::string s = "S(" + std::to_string(i) + ";";
        for (int j = 0; j < k(); ++j) {
            if (j)
                s += ',';
            s += std::to_string(arms[static_cast<size_t>(j)]);
        }
        return s + ")";
    }
};

/// Build S^(i)_{p_1,...,p_k}: central vertex 1; arm j attaches at its vertex
/// v_{j,1}. An A-arm of length p is a path of p vertices; a D-arm is a chain
/// of p-2 vertices whose far end carries two extra leaves. A-arms of length
/// zero are simply absent.
inline Tree salem_tree(const SalemSpec& spec) {
    spec.validate();
    int n = 1 + std::accumulate(spec.arms.begin(), spec.arms.end(), 0);
    std::vector<std::pair<int, int>> e;
    int next = 2;
    for (int j = 0; j < spec.k(); ++j) {
        const int p = spec.arms[static_cast<size_t>(j)];
        if (p == 0)
            continue;
        if (j < spec.i) {
            // chain 1 - v1 - ... - v_{p-2}, fork tips v_{p-1}, v_p
            int first = next;
            e.emplace_back(1, first);
            for (int s = 1; s < p - 2; ++s)
                e.emplace_back(next + s - 1, next + s);
            int fork = first + p - 3;
            e.emplace_back(fork, fork + 1);
            e.emplace_back(fork, fork + 2);
            next += p;
        } else {
            e.emplace_back(1, next);
            for (int s = 1; s < p; ++s)
                e.emplace_back(next + s - 1, next + s);
            next += p;
        }
    }
    return Tree(n, std::move(e));
}

/// Join: new central vertex 1 adjacent to the chosen vertex of each part;
/// part vertices are shifted consecutively after the center.
inline Tree join(const std::vector<std::pair<Tree, int>>& parts) {
    if (parts.empty())
        throw invalid_spec("join requires at least one part");
    int n = 1;
    std::vector<std::pair<int, int>> e;
    for (const auto& [t, attach] : parts) {
        if (attach < 1 || attach > t.vertex_count())
            throw bad_vertex_index("attach vertex " + std::to_string(attach) +
                                   " not in a tree of size " + std::to_string(t.vertex_count()));
        const int offset = n;
        e.emplace_back(1, attach + offset);
        for (const auto& [u, v] : t.edges())
            e.emplace_back(u + offset, v + offset);
        n += t.vertex_count();
    }
    return Tree(n, std::move(e));
}

namespace detail {

/// Induced forest on a vertex subset, components relabeled 1..|C| in
/// ascending original order. original_ids[c][new-1] recovers the original.
inline Forest induced_forest(const Tree& t, const std::vector<int>& vertices,
                             std::vector<std::vector<int>>* original_ids = nullptr) {
    std::vector<char> in(static_cast<size_t>(t.vertex_count()) + 1, 0);
    for (int v : vertices)
        in[static_cast<size_t>(v)] = 1;
    auto adj = t.adjacency_lists();
    std::vector<char> done(static_cast<size_t>(t.vertex_count()) + 1, 0);
    Forest forest;
    if (original_ids)
        original_ids->clear();
    for (int root : vertices) {
        if (done[static_cast<size_t>(root)])
            continue;
        std::vector<int> comp{root};
        done[static_cast<size_t>(root)] = 1;
        for (size_t q = 0; q < comp.size(); ++q) {
            for (int w : adj[static_cast<size_t>(comp[q])]) {
                if (in[static_cast<size_t>(w)] && !done[static_cast<size_t>(w)]) {
                    done[static_cast<size_t>(w)] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        std::vector<int> newid(static_cast<size_t>(t.vertex_count()) + 1, 0);
        for (size_t s = 0; s < comp.size(); ++s)
            newid[static_cast<size_t>(comp[s])] = static_cast<int>(s) + 1;
        std::vector<std::pair<int, int>> ce;
        for (const auto& [u, v] : t.edges())
            if (in[static_cast<size_t>(u)] && in[static_cast<size_t>(v)] &&
                newid[static_cast<size_t>(u)] && newid[static_cast<size_t>(v)])
                ce.emplace_back(newid[static_cast<size_t>(u)], newid[static_cast<size_t>(v)]);
        forest.emplace_back(static_cast<int>(comp.size()), std::move(ce));
        if (original_ids)
            original_ids->push_back(std::move(comp));
    }
    return forest;
}

} // namespace detail

/// Result of removing a splitting edge (v1, v2): the side R containing v1,
/// the side S containing v2, and the induced subgraphs R~ = R - v1 and
/// S~ = S - v2. Removing an interior vertex can disconnect its side, so the
/// tilde pieces are forests. Original vertex ids are retained for each piece.
struct EdgeSplit {
    Tree R, S;
    Forest R_tilde, S_tilde;
    std::vector<int> R_vertices, S_vertices; // original ids, ascending
};

inline EdgeSplit split_edge(const Tree& t, int v1, int v2) {
    if (!t.has_edge(v1, v2))
        throw edge_not_found("edge (" + std::to_string(v1) + "," + std::to_string(v2) +
                             ") not in tree");
    auto adj = t.adjacency_lists();
    std::vector<char> side(static_cast<size_t>(t.vertex_count()) + 1, 0);
    std::vector<int> stack{v1};
    side[static_cast<size_t>(v1)] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<size_t>(u)]) {
            if ((u == v1 && w == v2) || (u == v2 && w == v1))
                continue;
            if (!side[static_cast<size_t>(w)]) {
                side[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    EdgeSplit out;
    std::vector<int> r_minus, s_minus;
    for (int v = 1; v <= t.vertex_count(); ++v) {
        if (side[static_cast<size_t>(v)]) {
            out.R_vertices.push_back(v);
            if (v != v1)
                r_minus.push_back(v);
        } else {
            out.S_vertices.push_back(v);
            if (v != v2)
                s_minus.push_back(v);
        }
    }
    Forest fr = detail::induced_forest(t, out.R_vertices);
    Forest fs = detail::induced_forest(t, out.S_vertices);
    out.R = fr.at(0);
    out.S = fs.at(0);
    out.R_tilde = detail::induced_forest(t, r_minus);
    out.S_tilde = detail::induced_forest(t, s_minus);
    return out;
}

/// Edge-list file: one "u v" pair per line, 1-based; blank lines and lines
/// starting with '#' are ignored.
inline Tree read_edge_list(std::istream& in) {
    int maxv = 0;
    std::vector<std::pair<int, int>> e;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find('#');
        if (pos != std::string::npos)
            line.resize(pos);
        std::istringstream ls(line);
        int u = 0, v = 0;
        if (!(ls >> u))
            continue; // blank
        if (!(ls >> v))
            throw syntax_error(lineno, "expected two vertex ids per line");
        std::string extra;
        if (ls >> extra)
            throw syntax_error(lineno, "trailing garbage '" + extra + "'");
        e.emplace_back(u, v);
        maxv = std::max({maxv, u, v});
    }
    return Tree(maxv, std::move(e));
}

inline Tree read_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open edge-list file: " + path);
    return read_edge_list(f);
}

} // namespace cox

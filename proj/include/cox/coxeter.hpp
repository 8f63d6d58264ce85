#pragma once

#include "cox/intmatrix.hpp"
#include "cox/intpoly.hpp"
#include "cox/tree.hpp"

namespace cox {

/// Symmetric 0/1 adjacency matrix with zero diagonal.
inline IntMatrix adjacency_matrix(const Tree& t) {
    if (t.is_empty())
        throw empty_tree();
    IntMatrix m(t.vertex_count());
    for (const auto& [u, v] : t.edges()) {
        m(u - 1, v - 1) = 1;
        m(v - 1, u - 1) = 1;
    }
    return m;
}

/// chi(t) = det(t*I - Ad), exact, monic of degree n.
inline IntPolynomial adjacency_char_poly(const Tree& t) {
    if (t.is_empty())
        throw empty_tree();
    return char_poly(adjacency_matrix(t));
}

/// Upper unitriangular Gram matrix: 1 on the diagonal, -1 at (i,j) for every
/// edge with i < j.
inline IntMatrix gram_matrix(const Tree& t) {
    if (t.is_empty())
        throw empty_tree();
    IntMatrix g = IntMatrix::identity(t.vertex_count());
    for (const auto& [u, v] : t.edges())
        g(u - 1, v - 1) = -1; // edges are stored with u < v
    return g;
}

/// Coxeter matrix -G * G^{-tr}, built from the exact integer inverse of the
/// unitriangular Gram matrix. det = (-1)^n.
inline IntMatrix coxeter_matrix(const Tree& t) {
    IntMatrix g = gram_matrix(t);
    return -(g * invert_unitriangular(g).transposed());
}

/// Coxeter polynomial det(t*id - Phi) via the Gram-matrix route; the empty
/// tree gives 1 by convention. Monic, self-reciprocal, constant term 1.
inline IntPolynomial coxeter_polynomial(const Tree& t) {
    if (t.is_empty())
        return IntPolynomial::one();
    return char_poly(coxeter_matrix(t));
}

inline IntPolynomial coxeter_polynomial(const Forest& f) {
    IntPolynomial p = IntPolynomial::one();
    for (const Tree& t : f)
        p *= coxeter_polynomial(t);
    return p;
}

/// The i-th reflection sigma_i as a matrix: row i holds a_ij - delta_ij,
/// every other row is the identity.
inline IntMatrix reflection_matrix(const Tree& t, int i) {
    if (i < 1 || i > t.vertex_count())
        throw bad_vertex_index("reflection index out of range");
    IntMatrix m = IntMatrix::identity(t.vertex_count());
    m(i - 1, i - 1) = -1;
    auto adj = t.adjacency_lists();
    for (int j : adj[static_cast<size_t>(i)])
        m(i - 1, j - 1) = 1;
    return m;
}

/// Characteristic polynomial of sigma_1 * sigma_2 * ... * sigma_n. Equals
/// coxeter_polynomial(t); kept as an independent route for cross-checking.
inline IntPolynomial coxeter_polynomial_via_reflections(const Tree& t) {
    if (t.is_empty())
        throw empty_tree();
    IntMatrix phi = reflection_matrix(t, 1);
    for (int i = 2; i <= t.vertex_count(); ++i)
        phi = phi * reflection_matrix(t, i);
    return char_poly(phi);
}

namespace detail {

inline IntPolynomial cox_via_split_tree(const Tree& t);

inline IntPolynomial cox_via_split_forest(const Forest& f) {
    IntPolynomial p = IntPolynomial::one();
    for (const Tree& t : f)
        p *= cox_via_split_tree(t);
    return p;
}

inline IntPolynomial cox_via_split_tree(const Tree& t) {
    if (t.is_empty())
        return IntPolynomial::one();
    if (t.vertex_count() == 1)
        return IntPolynomial{1, 1}; // cox_{A_1} = t + 1
    // deterministic choice: the edge at the smallest leaf
    int leaf = 0;
    for (int v = 1; v <= t.vertex_count(); ++v) {
        if (t.degree_of(v) == 1) {
            leaf = v;
            break;
        }
    }
    auto adj = t.adjacency_lists();
    int other = adj[static_cast<size_t>(leaf)].front();
    EdgeSplit es = split_edge(t, leaf, other);
    IntPolynomial r = cox_via_split_tree(es.R);
    IntPolynomial s = cox_via_split_tree(es.S);
    IntPolynomial rt = cox_via_split_forest(es.R_tilde);
    IntPolynomial st = cox_via_split_forest(es.S_tilde);
    IntPolynomial tpoly{0, 1};
    return r * s - tpoly * rt * st;
}

} // namespace detail

/// Coxeter polynomial by the splitting-edge product formula
/// cox_T = cox_R cox_S - t cox_R~ cox_S~, recursing at leaf edges.
inline IntPolynomial coxeter_polynomial_via_split(const Tree& t) {
    return detail::cox_via_split_tree(t);
}

/// Exact parity test chi(-t) = (-1)^n chi(t); holds for every bipartite
/// graph, in particular for all trees.
inline bool is_bipartite_symmetric_spectrum(const Tree& t) {
    if (t.is_empty())
        throw empty_tree();
    const IntPolynomial chi = adjacency_char_poly(t);
    const int n = t.vertex_count();
    for (int j = 0; j <= chi.degree(); ++j)
        if (chi[j] != 0 && ((n - j) % 2) != 0)
            return false;
    return true;
}

} // namespace cox

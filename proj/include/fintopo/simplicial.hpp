// Order complex, face poset, and the subdivision operator sd = F o O, with an
// independent barycentric subdivision for the cross-check O(sd X) = sd O(X).
// Complexes store the full simplex family; instances here are small and chain
// enumeration dominates anyway.

#pragma once

#include <string>
#include <vector>

#include "fintopo/poset.hpp"

namespace fintopo {

// Simplices are sorted vertex-index lists, closed under nonempty subsets and
// kept in canonical (size, lexicographic) order.
struct SimplicialComplex {
    std::vector<std::string> vertex_labels;
    std::vector<std::vector<int>> simplices;
    int vertex_count() const { return static_cast<int>(vertex_labels.size()); }
    std::size_t simplex_count() const { return simplices.size(); }
    int dimension() const;
};

// All nonempty chains of the poset as simplices.
SimplicialComplex order_complex(const FinitePoset& poset);

// Simplices ordered by proper inclusion. Element labels are brace-joined
// constituent labels, e.g. {a,b}; nested braces appear under iteration.
FinitePoset face_poset(const SimplicialComplex& complex);

// sd^k X = (F o O)^k X; sd^0 X = X. Sizes grow super-exponentially, so the
// chain count is checked against the guard first.
FinitePoset subdivide(const FinitePoset& poset, int k, std::size_t size_budget = 200000);

// Standard barycentric subdivision, built directly on the simplex family
// (vertices = simplices, simplices = chains under inclusion) rather than via
// face_poset/order_complex, so the subdivision identity is a real check.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex);

// Vertex-bijection isomorphism. Fast path: identical labeled complexes.
// Otherwise backtracking over vertices, limited to `size_limit` vertices.
bool complexes_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                          int size_limit = 24);

// Number of nonempty chains (= |sd X|), with early abort past the cap.
std::size_t chain_count(const FinitePoset& poset, std::size_t cap);

}  // namespace fintopo

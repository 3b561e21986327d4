#ifndef MICROCECH_NERVE_HPP
#define MICROCECH_NERVE_HPP

#include "microcech/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace mcech {

/* Combinatorial nerve of a finite cover: an abstract simplicial complex on
 * vertices 0..n-1, closed under subsets, with the vertex order fixing all
 * signs. Simplices of each dimension are kept in lexicographic order and
 * that order indexes cochains. */
class Nerve {
public:
    Nerve() = default;
    static Nerve from_facets(int vertices, std::vector<std::vector<int>> facets);

    int vertices() const { return vertices_; }
    int dim() const { return (int)simp_.size() - 1; }
    // number of k-simplices (0 outside range)
    int count(int k) const;
    const std::vector<std::vector<int>>& simplices(int k) const;
    // index of a sorted vertex set among the k-simplices, -1 if absent
    int index_of(const std::vector<int>& s) const;

    /* Matrix of the Cech differential C^k -> C^{k+1},
     * (dc)(s) = sum_i (-1)^i c(s minus i-th vertex). */
    IntMat coboundary_matrix(int k) const;

    int components() const;  // connected components via the 1-skeleton

    std::string to_json() const;
    static Nerve from_json(const std::string& text);

private:
    int vertices_ = 0;
    std::vector<std::vector<std::vector<int>>> simp_;   // simp_[k], lex sorted
    std::vector<std::map<std::vector<int>, int>> index_;
};

namespace models {
Nerve point();
Nerve circle(int arcs = 3);       // boundary of an n-gon
Nerve sphere();                   // boundary of the tetrahedron
Nerve torus();                    // 7-vertex triangulation
Nerve projective_plane();         // 6-vertex triangulation
}  // namespace models

}  // namespace mcech

#endif

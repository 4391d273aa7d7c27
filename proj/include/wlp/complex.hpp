#ifndef WLP_COMPLEX_HPP
#define WLP_COMPLEX_HPP

#include <cstdint>
#include <vector>

#include "wlp/graph.hpp"

namespace wlp {

// A face is a vertex subset; dim(F) = |F| - 1, so dim(empty) = -1.
using Face = VertexSet;

inline int face_dim(Face f) { return set_size(f) - 1; }

/// Lexicographic order on sorted vertex lists ({0,1,3} < {0,2}, and a
/// set precedes its proper supersets). All bases and facet lists use it.
bool face_lex_less(Face a, Face b);

using FVector = std::vector<std::int64_t>;  // f_0 .. f_d

// Simplicial complex given by its facets (an inclusion-maximal antichain).
// Lower faces are generated on demand. The constructor normalizes arbitrary
// face lists: deduplicates, drops faces contained in others, sorts.
class SimplicialComplex {
public:
  SimplicialComplex() = default;
  SimplicialComplex(int n, std::vector<Face> faces);

  int ground_set_size() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }

  /// Max facet dimension; -1 for the complex {empty}.
  int dimension() const { return dim_; }
  bool is_pure() const { return pure_; }

  bool contains(Face f) const;

  /// Faces of dimension i, lex-sorted. i must lie in [-1, dimension()].
  std::vector<Face> faces_of_dim(int i) const;

  FVector f_vector() const;

private:
  int n_ = 0;
  int dim_ = -1;
  bool pure_ = true;
  std::vector<Face> facets_;
};

/// Ind(G): facets are the maximal independent sets of G (Bron-Kerbosch
/// with pivoting on the complement graph).
SimplicialComplex independence_complex(const Graph& g);

struct RidgeIncidence {
  Face ridge;
  std::vector<int> facet_indices;  // positions in complex.facets()
};

/// Every (d-1)-face with the facets containing it. Requires a pure complex.
std::vector<RidgeIncidence> ridges(const SimplicialComplex& complex);

/// One vertex per facet, edges between facets sharing a ridge. Requires
/// a pure complex.
Graph dual_graph(const SimplicialComplex& complex);

/// Graph on the ground set whose edges are the 1-faces. For Ind(G) this
/// is the complement of G.
Graph one_skeleton(const SimplicialComplex& complex);

struct PseudoManifoldReport {
  bool is_pure = false;
  int dimension = -1;
  // Ridges lying in three or more facets (violations of the two-facet bound).
  std::vector<Face> ridge_violations;
  bool is_ridge_connected = false;
  // When disconnected: two facets with no ridge path between them.
  std::vector<Face> disconnect_witness;
  // Ridges lying in exactly one facet.
  std::vector<Face> boundary_ridges;
  Graph dual;
  bool dual_bipartite = false;

  bool is_pseudomanifold = false;  // pure && no violations && ridge-connected
  bool has_boundary = false;       // boundary_ridges nonempty
};

PseudoManifoldReport pseudo_manifold_report(const SimplicialComplex& complex);

bool is_pseudomanifold(const SimplicialComplex& complex);
bool has_boundary(const SimplicialComplex& complex);

}  // namespace wlp

#endif  // WLP_COMPLEX_HPP

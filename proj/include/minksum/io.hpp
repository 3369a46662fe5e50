#ifndef MINKSUM_IO_HPP
#define MINKSUM_IO_HPP

#include <string>

#include "minksum/lattice.hpp"

namespace minksum {

// LatticeFileV1: JSON with exact rationals as "num" / "num/den" strings,
// never floats.
//
// {
//   "format": "minksum-lattice",
//   "version": 1,
//   "dim": 3,
//   "label": "cuboid",
//   "vertices": [["0","0","0"], ["1","0","0"], ...],
//   "faces": [{"dim": 1, "vertices": [0,1], "interior_point": ["1/2","0","0"]}, ...],
//   "incidences": [[0, 8], ...]        // optional explicit arcs
// }
//
// "faces" lists the proper faces of dimension 1..top-1; the null face,
// the top (interior) face and the vertex layer are implicit. File ids for
// "incidences" are: vertex i -> i, j-th face entry -> |vertices| + j;
// arcs touching the null and top faces are always reconstructed. Without
// "incidences", arcs are rebuilt from vertex-set containment, which is
// unique for polytope lattices. Missing interior points are recomputed as
// centroids on load.

// Parses and (optionally) validates a LatticeFileV1 document. `context`
// names the source in error messages. Throws ParseError on malformed
// documents, ValidationFailure when the lattice is not a valid polytope.
Polytope parse_polytope_json(const std::string& text, const std::string& context,
                             bool validate = true);
std::string polytope_to_json(const Polytope& p);

Polytope load_polytope(const std::string& path, bool validate = true);
void save_polytope(const Polytope& p, const std::string& path);

// Standard OFF text for a full-dimensional 3-polytope: vertices as
// floating point triples, facets as CCW vertex rings seen from outside.
// A viewing export; exactness is not preserved.
std::string to_off(const Polytope& p);
void save_off(const Polytope& p, const std::string& path);

std::string read_file(const std::string& path);
// Writes via a temp file in the same directory plus rename, so an
// interrupted run never leaves a partial file.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace minksum

#endif

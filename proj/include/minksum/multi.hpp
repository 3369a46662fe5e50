#ifndef MINKSUM_MULTI_HPP
#define MINKSUM_MULTI_HPP

#include <string>
#include <vector>

#include "minksum/minkd.hpp"

namespace minksum {

// One facet of an n-way sum: a face per input slot plus the outward
// normal. For facet tuples the dimensions add up to d - 1.
struct FaceTuple {
    std::vector<int> ids;
    std::vector<int> dims;
    Vec normal;
};

// Stage 1 over n polytopes: fixes the facets of each input in turn and
// pairs them with the support vertices of all other inputs in the facet's
// outward direction.
std::vector<FaceTuple> multi_stage1(const std::vector<const Polytope*>& inputs,
                                    DegeneracyReport* collect = nullptr,
                                    MinkStats* stats = nullptr);

// Stage 2: enumerates all remaining dimension compositions (k_1,...,k_n)
// with sum d - 1, in lexicographic order, and keeps the tuples passing
// the joint-normal one-side test over every slot's superfaces.
std::vector<FaceTuple> multi_stage2(const std::vector<const Polytope*>& inputs,
                                    DegeneracyReport* collect = nullptr,
                                    MinkStats* stats = nullptr);

// Simultaneous Minkowski sum of n >= 1 convex polytopes. Equivalent to
// iterated pairwise sums but runs the three stages once over all inputs.
Polytope multi_minkowski_sum(const std::vector<const Polytope*>& inputs,
                             SumMode mode = SumMode::fast, MinkStats* stats = nullptr);

}  // namespace minksum

#endif

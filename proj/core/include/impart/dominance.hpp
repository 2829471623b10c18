#ifndef IMPART_DOMINANCE_HPP
#define IMPART_DOMINANCE_HPP

#include "impart/types.hpp"

namespace impart {

/// Linear-time dominance assignment. For k <= L each vector goes to the
/// bucket of its own dominant component (ties toward the smaller index).
/// For k > L vectors are first collapsed under the canonical directions of
/// the instance aggregate and assigned by the dominant component of the
/// collapsed image. Works for both measures.
SolveResult solve_dominance(const InstanceSpec& inst);

}  // namespace impart

#endif  // IMPART_DOMINANCE_HPP

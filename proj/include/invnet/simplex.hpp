#ifndef INVNET_SIMPLEX_HPP
#define INVNET_SIMPLEX_HPP

#include "invnet/model.hpp"

namespace invnet {

/// Exact reference LP solver: dense two-phase primal simplex with Bland's
/// rule. Intended for tiny problems (tens of variables) where it serves as an
/// independent oracle for the external backend. Rejects models with binaries.
Solution solve_reference(const Model& model);

}  // namespace invnet

#endif

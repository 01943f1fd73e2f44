#pragma once

#include "skein/braid.hpp"
#include "skein/colored.hpp"
#include "skein/qlaurent.hpp"

namespace skein {

/// Closure of b evaluated through the vector representation of U_q(gl(m|1)),
/// with sigma acting as q^{-1/(m-1)} times the super R-matrix and closures
/// weighted by the pivotal element. Agrees with psi_{m-1} of markov_eval.
QFraction supertrace_closure(const BraidWord& b, int m);

/// psi_{m-1}(H'(cl, first component)) as the scalar by which the diagram cut
/// open at top position 0 acts on the image of y_lambda. Works on the images
/// of the idempotents, so it reaches cables wider than the dense Hecke
/// ceiling.
QFraction supertrace_reduced(const ColoredLink& cl, int m);

}  // namespace skein

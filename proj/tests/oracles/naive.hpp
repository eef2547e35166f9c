#pragma once

#include "shadow/fo/prover.hpp"
#include "shadow/parser.hpp"

namespace oracle {

/// Reifies formulae as terms so that a belief becomes an ordinary atom
/// `Bel(agent, time, term)`. Adds congruence axioms for `Eq` over every
/// lifted unary predicate and over `Bel`, then runs the first-order prover.
/// This is the encoding shadowing exists to avoid.
shadow::fo::Result naive_prove(const shadow::Problem& problem);

shadow::Formula naive_formula(const shadow::Formula& f);

}  // namespace oracle

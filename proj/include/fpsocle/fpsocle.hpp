#pragma once

// Umbrella header: exact commutative algebra over prime fields, socle
// degrees of Frobenius powers, and the equivalence checker built on them.

#include "fp.hpp"
#include "ring.hpp"
#include "polynomial.hpp"
#include "parser.hpp"
#include "linalg.hpp"
#include "groebner.hpp"
#include "ideal.hpp"
#include "socle.hpp"
#include "betti.hpp"
#include "theorem.hpp"
#include "instance_gen.hpp"
#include "job.hpp"

#ifndef SECANTLAB_HPP
#define SECANTLAB_HPP

#include "secantlab/arith.hpp"
#include "secantlab/curves.hpp"
#include "secantlab/groebner.hpp"
#include "secantlab/homalg.hpp"
#include "secantlab/ideal_file.hpp"
#include "secantlab/ideal_ops.hpp"
#include "secantlab/oracle.hpp"
#include "secantlab/polynomial.hpp"

#endif  // SECANTLAB_HPP

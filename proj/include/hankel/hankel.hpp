#ifndef HANKEL_HANKEL_HPP
#define HANKEL_HANKEL_HPP

#include <hankel/errors.hpp>
#include <hankel/scalar.hpp>
#include <hankel/matrix.hpp>
#include <hankel/polynomial.hpp>
#include <hankel/sequence.hpp>
#include <hankel/hankel_core.hpp>
#include <hankel/hankel_poly.hpp>
#include <hankel/iohvidov.hpp>
#include <hankel/kronecker_rank.hpp>
#include <hankel/inverse_problem.hpp>
#include <hankel/measure_recovery.hpp>

#endif

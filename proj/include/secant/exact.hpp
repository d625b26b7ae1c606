#ifndef SECANT_EXACT_HPP
#define SECANT_EXACT_HPP

#include "secant/error.hpp"
#include "secant/exact/binary_form.hpp"
#include "secant/exact/linear_algebra.hpp"
#include "secant/exact/matrix.hpp"
#include "secant/exact/multipoly.hpp"
#include "secant/exact/pfaffian.hpp"
#include "secant/exact/random.hpp"
#include "secant/exact/rational.hpp"

#endif  // SECANT_EXACT_HPP

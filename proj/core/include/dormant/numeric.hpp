#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace dormant {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

}  // namespace dormant

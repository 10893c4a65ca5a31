#pragma once

#include "tpolar/errors.hpp"
#include "tpolar/prime_field.hpp"
#include "tpolar/monomial.hpp"
#include "tpolar/polynomial.hpp"
#include "tpolar/parser.hpp"
#include "tpolar/gcd.hpp"
#include "tpolar/groebner.hpp"
#include "tpolar/hilbert.hpp"
#include "tpolar/monomial_matrix.hpp"
#include "tpolar/maps.hpp"
#include "tpolar/classes.hpp"
#include "tpolar/curves.hpp"
#include "tpolar/constructions.hpp"
#include "tpolar/verify.hpp"

#ifndef CENQUOT_CENQUOT_HPP
#define CENQUOT_CENQUOT_HPP

// Exact centralizer computations for 2x2 matrices over factor rings R/I of
// the UFDs Z, F_p[x], Z[x] and F_p[x,y], with brute-force verification on
// finite quotients.

#include "cenquot/basics.hpp"
#include "cenquot/ring.hpp"
#include "cenquot/parse.hpp"
#include "cenquot/factor.hpp"
#include "cenquot/term_ideal.hpp"
#include "cenquot/lifting.hpp"
#include "cenquot/invert.hpp"
#include "cenquot/annihilator.hpp"
#include "cenquot/matrix.hpp"
#include "cenquot/imatrix.hpp"
#include "cenquot/centralizer_quotient.hpp"
#include "cenquot/oracle.hpp"
#include "cenquot/fixtures.hpp"

#endif

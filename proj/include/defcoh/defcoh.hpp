#ifndef DEFCOH_DEFCOH_HPP
#define DEFCOH_DEFCOH_HPP

#include "defcoh/algebra.hpp"
#include "defcoh/brackets.hpp"
#include "defcoh/cochain.hpp"
#include "defcoh/cohomology.hpp"
#include "defcoh/combinatorics.hpp"
#include "defcoh/comparisons.hpp"
#include "defcoh/deformations.hpp"
#include "defcoh/linalg.hpp"
#include "defcoh/representation.hpp"
#include "defcoh/scalar.hpp"

#endif // DEFCOH_DEFCOH_HPP

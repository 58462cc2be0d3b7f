#pragma once

#include "valkit/ake.hpp"
#include "valkit/bigint.hpp"
#include "valkit/error.hpp"
#include "valkit/expression.hpp"
#include "valkit/field.hpp"
#include "valkit/formula.hpp"
#include "valkit/forms.hpp"
#include "valkit/hahn.hpp"
#include "valkit/hensel.hpp"
#include "valkit/laurent.hpp"
#include "valkit/local_ring.hpp"
#include "valkit/padic.hpp"
#include "valkit/poly.hpp"
#include "valkit/poly_parse.hpp"
#include "valkit/pseudoconv.hpp"
#include "valkit/valuation.hpp"
#include "valkit/version.hpp"

#pragma once

#include "brieskorn/bigint.hpp"
#include "brieskorn/certify.hpp"
#include "brieskorn/check.hpp"
#include "brieskorn/counting.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/families.hpp"
#include "brieskorn/limits.hpp"
#include "brieskorn/polynomial.hpp"
#include "brieskorn/rational.hpp"
#include "brieskorn/reeb.hpp"
#include "brieskorn/topology.hpp"
#include "brieskorn/tuple.hpp"
#include "brieskorn/reproduction.hpp"

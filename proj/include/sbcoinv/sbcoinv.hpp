#pragma once

#include "rational.hpp"
#include "combinatorics.hpp"
#include "poly.hpp"
#include "superspace.hpp"
#include "linalg.hpp"
#include "verdict.hpp"
#include "coinvariants.hpp"
#include "pji.hpp"
#include "arrangements.hpp"
#include "report.hpp"
#include "suites.hpp"

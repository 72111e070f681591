#pragma once

#include "jumpstat/errors.hpp"
#include "jumpstat/genfunc.hpp"
#include "jumpstat/guess.hpp"
#include "jumpstat/linalg.hpp"
#include "jumpstat/moments.hpp"
#include "jumpstat/oracle.hpp"
#include "jumpstat/poly2.hpp"
#include "jumpstat/rational.hpp"
#include "jumpstat/rational_function.hpp"
#include "jumpstat/series.hpp"
#include "jumpstat/tree.hpp"

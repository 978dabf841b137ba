#pragma once

#include "mahlerzero/algebraic.hpp"
#include "mahlerzero/errors.hpp"
#include "mahlerzero/mahler.hpp"
#include "mahlerzero/modular_resultant.hpp"
#include "mahlerzero/parser.hpp"
#include "mahlerzero/poly.hpp"
#include "mahlerzero/rational.hpp"
#include "mahlerzero/resultant.hpp"
#include "mahlerzero/series.hpp"
#include "mahlerzero/zeroorder.hpp"

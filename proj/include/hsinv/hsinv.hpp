/// Umbrella header.
#pragma once

#include "cache.hpp"
#include "checks.hpp"
#include "classify.hpp"
#include "corpus.hpp"
#include "fixtures.hpp"
#include "groebner.hpp"
#include "ideal.hpp"
#include "koszul.hpp"
#include "matrix.hpp"
#include "mora.hpp"
#include "order.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "spectrum.hpp"
#include "spectrum_poly.hpp"

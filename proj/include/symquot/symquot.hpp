#pragma once

#include "apoly.hpp"
#include "bases.hpp"
#include "context.hpp"
#include "expr.hpp"
#include "grobner.hpp"
#include "io.hpp"
#include "partition.hpp"
#include "quotient.hpp"
#include "tableaux.hpp"

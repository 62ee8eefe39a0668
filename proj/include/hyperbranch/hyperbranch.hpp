#pragma once

#include "cache.hpp"
#include "chains.hpp"
#include "combinatorics.hpp"
#include "embedding.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "gram_schmidt.hpp"
#include "hob_characters.hpp"
#include "labels.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "reduction.hpp"
#include "report.hpp"
#include "serialize.hpp"
#include "sym_characters.hpp"
#include "tables.hpp"
#include "verify.hpp"

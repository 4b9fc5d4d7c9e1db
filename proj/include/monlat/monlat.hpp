#pragma once

#include "monlat/arith.hpp"
#include "monlat/normal_form.hpp"
#include "monlat/lattice.hpp"
#include "monlat/discriminant.hpp"
#include "monlat/isometry.hpp"
#include "monlat/word_search.hpp"
#include "monlat/mukai.hpp"
#include "monlat/monodromy.hpp"
#include "monlat/groupoid.hpp"
#include "monlat/json_io.hpp"

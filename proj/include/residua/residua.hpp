#pragma once

#include "residua/core.hpp"
#include "residua/corpus.hpp"
#include "residua/enumerate.hpp"
#include "residua/expr.hpp"
#include "residua/ideal_lattice.hpp"
#include "residua/ideals.hpp"
#include "residua/io.hpp"
#include "residua/iso.hpp"
#include "residua/lattice.hpp"
#include "residua/ordinal.hpp"
#include "residua/properties.hpp"
#include "residua/reports.hpp"
#include "residua/residuated.hpp"
#include "residua/ring.hpp"

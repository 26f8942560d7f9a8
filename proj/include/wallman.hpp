#pragma once

#include "wallman/bitset.hpp"
#include "wallman/certificates.hpp"
#include "wallman/duality.hpp"
#include "wallman/error.hpp"
#include "wallman/filters.hpp"
#include "wallman/generators.hpp"
#include "wallman/io.hpp"
#include "wallman/lattice.hpp"
#include "wallman/properties.hpp"
#include "wallman/space.hpp"

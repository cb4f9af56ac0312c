#pragma once

#include "dendri/doubling.hpp"
#include "dendri/error.hpp"
#include "dendri/fdalg.hpp"
#include "dendri/io.hpp"
#include "dendri/koszul.hpp"
#include "dendri/linalg.hpp"
#include "dendri/random.hpp"
#include "dendri/rational.hpp"
#include "dendri/successor.hpp"
#include "dendri/terms.hpp"
#include "dendri/varieties.hpp"

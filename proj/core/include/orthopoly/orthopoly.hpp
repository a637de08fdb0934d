#pragma once

#include "orthopoly/characterize.hpp"
#include "orthopoly/errors.hpp"
#include "orthopoly/hankel.hpp"
#include "orthopoly/moments.hpp"
#include "orthopoly/operators.hpp"
#include "orthopoly/poly.hpp"
#include "orthopoly/rational.hpp"

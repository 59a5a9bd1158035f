#pragma once

#include <synaptica/effect_algebra.hpp>
#include <synaptica/models.hpp>
#include <synaptica/order_unit_space.hpp>
#include <synaptica/polytope.hpp>
#include <synaptica/poset.hpp>
#include <synaptica/random.hpp>
#include <synaptica/rational.hpp>
#include <synaptica/real_function.hpp>
#include <synaptica/report.hpp>
#include <synaptica/state_space.hpp>
#include <synaptica/stone.hpp>
#include <synaptica/sym_matrix.hpp>
#include <synaptica/synaptic.hpp>
#include <synaptica/tolerance.hpp>

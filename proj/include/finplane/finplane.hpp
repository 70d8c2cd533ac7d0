#pragma once

#include "number_theory.hpp"
#include "error.hpp"
#include "field.hpp"
#include "hypothesis_j.hpp"
#include "plane.hpp"
#include "generic_plane.hpp"
#include "graph.hpp"
#include "embedding.hpp"
#include "frame.hpp"
#include "oracle.hpp"
#include "singer.hpp"
#include "cycles.hpp"
#include "wheelgear.hpp"
#include "sweep.hpp"

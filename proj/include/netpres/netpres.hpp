#pragma once

#include "netpres/diagram.hpp"
#include "netpres/diagram_io.hpp"
#include "netpres/euclid.hpp"
#include "netpres/geometry.hpp"
#include "netpres/lattice.hpp"
#include "netpres/numeric.hpp"
#include "netpres/portrait.hpp"
#include "netpres/render.hpp"
#include "netpres/twist.hpp"
#include "netpres/vec.hpp"

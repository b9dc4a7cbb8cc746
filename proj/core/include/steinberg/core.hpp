#pragma once

#include "steinberg/bijection.hpp"
#include "steinberg/errors.hpp"
#include "steinberg/insertion.hpp"
#include "steinberg/json_io.hpp"
#include "steinberg/oracle.hpp"
#include "steinberg/oracle_config.hpp"
#include "steinberg/orbit_catalog.hpp"
#include "steinberg/partial_permutation.hpp"
#include "steinberg/partition.hpp"
#include "steinberg/prime_field.hpp"
#include "steinberg/signed_diagram.hpp"
#include "steinberg/steinberg_maps.hpp"
#include "steinberg/tableau.hpp"

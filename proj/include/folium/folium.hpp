#pragma once

#include "folium/branches.hpp"
#include "folium/curve.hpp"
#include "folium/error.hpp"
#include "folium/field.hpp"
#include "folium/geometry.hpp"
#include "folium/io.hpp"
#include "folium/laws.hpp"
#include "folium/parametrize.hpp"
#include "folium/plot.hpp"
#include "folium/sampling.hpp"
#include "folium/verify.hpp"

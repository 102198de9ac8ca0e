#pragma once

#include "tableaux/algorithms.hpp"
#include "tableaux/core.hpp"
#include "tableaux/enumeration.hpp"
#include "tableaux/error.hpp"
#include "tableaux/io.hpp"
#include "tableaux/tableau.hpp"

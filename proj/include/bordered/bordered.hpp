#pragma once

#include "bordered/audit.hpp"
#include "bordered/construct.hpp"
#include "bordered/cycle_pattern.hpp"
#include "bordered/detect.hpp"
#include "bordered/error.hpp"
#include "bordered/extract.hpp"
#include "bordered/galois.hpp"
#include "bordered/io.hpp"
#include "bordered/ordered_graph.hpp"
#include "bordered/random.hpp"
#include "bordered/scaling.hpp"
#include "bordered/sidon.hpp"
#include "bordered/zigzag.hpp"

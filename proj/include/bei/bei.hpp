#pragma once

#include "bei/blocks.hpp"
#include "bei/cas_export.hpp"
#include "bei/census.hpp"
#include "bei/classify.hpp"
#include "bei/corpus.hpp"
#include "bei/cutsets.hpp"
#include "bei/edge_list.hpp"
#include "bei/errors.hpp"
#include "bei/graph.hpp"
#include "bei/graph6.hpp"
#include "bei/report.hpp"
#include "bei/samples.hpp"
#include "bei/structure.hpp"

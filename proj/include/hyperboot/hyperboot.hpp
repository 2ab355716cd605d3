#pragma once

#include "hyperboot/binomial.hpp"
#include "hyperboot/constructions.hpp"
#include "hyperboot/edge.hpp"
#include "hyperboot/engine.hpp"
#include "hyperboot/errors.hpp"
#include "hyperboot/hypergraph.hpp"
#include "hyperboot/io.hpp"
#include "hyperboot/trace.hpp"
#include "hyperboot/verify.hpp"

#pragma once

#include "mols/cliques.hpp"
#include "mols/error.hpp"
#include "mols/extend.hpp"
#include "mols/io.hpp"
#include "mols/latin.hpp"
#include "mols/net.hpp"
#include "mols/parallel.hpp"
#include "mols/point_set.hpp"
#include "mols/resolution.hpp"
#include "mols/scheme.hpp"
#include "mols/transversal.hpp"
#include "mols/verifier.hpp"

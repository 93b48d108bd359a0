#pragma once

#include "rings.hpp"
#include "multset.hpp"
#include "linalg.hpp"
#include "subspace.hpp"
#include "engine.hpp"
#include "egyptian.hpp"
#include "classify.hpp"
#include "oracle.hpp"

#pragma once

#include "stsp/catalog.hpp"
#include "stsp/error.hpp"
#include "stsp/esd.hpp"
#include "stsp/form_ideal.hpp"
#include "stsp/generators.hpp"
#include "stsp/hvector.hpp"
#include "stsp/index.hpp"
#include "stsp/matrix.hpp"
#include "stsp/relative.hpp"
#include "stsp/report.hpp"
#include "stsp/ring.hpp"
#include "stsp/rng.hpp"
#include "stsp/sampling.hpp"
#include "stsp/steinberg.hpp"
#include "stsp/syntax.hpp"
#include "stsp/unipotent.hpp"
#include "stsp/vdk.hpp"
#include "stsp/words.hpp"

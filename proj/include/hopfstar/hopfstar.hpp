#pragma once

// umbrella header

#include "hopfstar/scalar.hpp"
#include "hopfstar/matrix.hpp"
#include "hopfstar/report.hpp"
#include "hopfstar/hopf.hpp"
#include "hopfstar/module.hpp"
#include "hopfstar/conj.hpp"
#include "hopfstar/staralg.hpp"
#include "hopfstar/inner.hpp"
#include "hopfstar/braid.hpp"
#include "hopfstar/fixtures.hpp"
#include "hopfstar/io.hpp"

#pragma once

#include "ohg/error.hpp"
#include "ohg/core.hpp"
#include "ohg/walks.hpp"
#include "ohg/linalg.hpp"
#include "ohg/switching.hpp"
#include "ohg/balance.hpp"
#include "ohg/spectral.hpp"
#include "ohg/tensor.hpp"
#include "ohg/generate.hpp"
#include "ohg/io.hpp"
#include "ohg/battery.hpp"
#include "ohg/report.hpp"

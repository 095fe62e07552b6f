#pragma once

// Free-algebra arithmetic over exact rationals with a Z2 grading.

#include "parastat/element.hpp"
#include "parastat/error.hpp"
#include "parastat/format.hpp"
#include "parastat/generator.hpp"
#include "parastat/scalar.hpp"
#include "parastat/tensor.hpp"
#include "parastat/word.hpp"

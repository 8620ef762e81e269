#pragma once

#include "kanrew/completion.hpp"
#include "kanrew/errors.hpp"
#include "kanrew/interchange.hpp"
#include "kanrew/language.hpp"
#include "kanrew/ordering.hpp"
#include "kanrew/presentation.hpp"
#include "kanrew/regex.hpp"
#include "kanrew/rewrite.hpp"
#include "kanrew/tabulate.hpp"

#pragma once

#include "sexa/errors.hpp"
#include "sexa/core.hpp"
#include "sexa/regular.hpp"
#include "sexa/translit.hpp"
#include "sexa/tables.hpp"

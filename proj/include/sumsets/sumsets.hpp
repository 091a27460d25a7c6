#pragma once

// Umbrella header.

#include "sumsets/cli.hpp"

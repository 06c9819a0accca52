#pragma once

#include "forge/models.hpp"

// The structure-constant builders shared across the test suites live with
// the library so the builtin fixture documents can use them too.

namespace forge::fixtures {

using namespace forge::models;

}  // namespace forge::fixtures

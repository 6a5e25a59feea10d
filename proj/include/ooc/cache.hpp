#pragma once

#include <functional>
#include <optional>
#include <string>

#include "ooc/model.hpp"

namespace ooc {
namespace cache {

std::string dir();  // OOC_CACHE_DIR env var overrides the repo default

// Loads a cached object if present (verifying it), else builds it with the
// supplied function and stores the result. Slugs are content addresses:
// kind-type-modulus for designs, role-m-r-n for codes.
DesignObject design(const std::string& slug, const std::function<DesignObject()>& build);
OocCode code(const std::string& slug, const std::function<OocCode()>& build);

}  // namespace cache
}  // namespace ooc

#include "ooc/cache.hpp"

#include <cstdlib>
#include <filesystem>

#include "ooc/io.hpp"
#include "ooc/verify.hpp"

namespace ooc {
namespace cache {

std::string dir() {
  if (const char* env = std::getenv("OOC_CACHE_DIR")) return env;
#ifdef OOC_CACHE_DIR
  return OOC_CACHE_DIR;
#else
  return "cache";
#endif
}

namespace {

std::string path_for(const std::string& slug, const char* ext) {
  return dir() + "/" + slug + ext;
}

void ensure_dir() {
  std::error_code ec;
  std::filesystem::create_directories(dir(), ec);
}

}  // namespace

DesignObject design(const std::string& slug, const std::function<DesignObject()>& build) {
  std::string p = path_for(slug, ".design");
  if (std::filesystem::exists(p)) {
    DesignObject d = parse_design(read_file(p));
    require_verified(d, "cached design " + slug);
    d.prov = {"ingredient:" + slug, {}};
    return d;
  }
  DesignObject d = build();
  require_verified(d, "built design " + slug);
  ensure_dir();
  write_file(p, export_design(d));
  d.prov = {"ingredient:" + slug, std::move(d.prov.children)};
  return d;
}

OocCode code(const std::string& slug, const std::function<OocCode()>& build) {
  std::string p = path_for(slug, ".ooc");
  if (std::filesystem::exists(p)) {
    OocCode c = parse_code(read_file(p));
    require_verified(c, "cached code " + slug);
    c.prov = {"ingredient:" + slug, {}};
    return c;
  }
  OocCode c = build();
  require_verified(c, "built code " + slug);
  ensure_dir();
  write_file(p, export_code(c));
  c.prov = {"ingredient:" + slug, std::move(c.prov.children)};
  return c;
}

}  // namespace cache
}  // namespace ooc

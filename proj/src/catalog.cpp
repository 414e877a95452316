#include "mero/catalog.hpp"

#include <stdexcept>

namespace mero {

namespace {

CatalogEntry entry(std::string name, std::string_view text, bool smooth) {
  return {std::move(name), parse_function_file(text), smooth};
}

}  // namespace

const std::vector<CatalogEntry>& regression_catalog() {
  static const std::vector<CatalogEntry> catalog{
      entry("quartic-over-quadratic",
            "disk 0 0 2\n"
            "expr (2*z^4 - z^3 - 8*z + 8)/(2*z^2 - 3*z + 1)\n",
            true),
      // The original tower exp(exp(24z^2+89z+711)) overflows doubles; the
      // inner polynomial is divided by 1000, which keeps the maximizer at z = 1.
      entry("double-exp-rescaled",
            "disk 0 0 1\n"
            "expr exp(exp(0.024*z^2 + 0.089*z + 0.711)) + (720*z^2 - 465*z + 71)/(54*z^3 - 51*z^2 + 14*z - 1)\n"
            "rescaled exp(exp(24*z^2 + 89*z + 711)) evaluated as exp(exp(0.024*z^2 + 0.089*z + 0.711))\n",
            true),
      entry("septic-over-quintic",
            "disk 0 0 2\n"
            "expr (z^7 + z^5 - z^3 + z^2 - z + 2)/(z^5 - z + 1)\n",
            false),
      entry("exp-quotient",
            "disk 0 0 1\n"
            "expr exp(pi*i*z)/(exp(pi*i*z) - 1)\n"
            "pole 0 0 2\n",
            false),
      entry("cubic-over-square",
            "disk 0 0 0.5\n"
            "expr ((z + 1)*(z^2 + 1))/z^2\n",
            true),
      entry("sine-over-square",
            "disk 1 0 1\n"
            "expr sin(z - 1)/(z - 1)^2\n"
            "pole 1 0 2\n",
            false),
  };
  return catalog;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : regression_catalog())
    if (e.name == name) return e;
  throw std::out_of_range("no catalog entry " + std::string(name));
}

}  // namespace mero

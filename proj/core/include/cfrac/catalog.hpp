#pragma once

#include <string>
#include <vector>

#include "cfrac/cf.hpp"

namespace cfrac {

struct CatalogEntry {
  std::string name;
  std::string space;  // "division algebra" or "iwasawa"
  std::string summary;
};

// Every named algorithm, including alpha(a) as a template entry.
std::vector<CatalogEntry> catalog_entries();

bool is_iwasawa_name(const std::string& name);

// regular, alpha(a), hurwitz-A, hurwitz-J, hurwitz-J-rotated, hurwitz-shifted,
// chevron, r3-box, quat-hurwitz, quat-gausenstein, quat-third,
// quat-lipschitz, quat-hurwitz-1pi, oct-cayley, oct-cayley-1pe1.
// alpha takes a rational in [0, 1), e.g. "alpha(1/2)" or "alpha(0.3)".
CFAlgorithm catalog_algorithm(const std::string& name);

// Inline algorithm "algebra=C;inversion=standard;order=Zi;domain=box:-1/2:1/2"
// with domain one of dirichlet, chevron, box:lo:hi (unit frame of the order's span).
CFAlgorithm custom_algorithm(const std::string& text);

// Catalog name or inline algorithm (contains '=').
CFAlgorithm resolve_algorithm(const std::string& name_or_inline);

// name, dimension and basis rows of every builtin order, one order per block.
std::string order_catalog_text();

}  // namespace cfrac

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "walg/lie.hpp"

namespace walg {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses an algebra document; grading is computed from the triple's H.
// Throws InputError naming the offending field.
LieSuperalgebra parse_algebra(const std::string& text, const std::string& source = "<input>");
std::string serialize_algebra(const LieSuperalgebra& g);

struct CatalogEntry {
  std::string name;
  std::string triple_kind;  // "sl2" or "osp"
  std::string notes;
  const char* text;
};

const std::vector<CatalogEntry>& catalog();
// Catalog name or file path; validates algebra and triple, throws InputError.
LieSuperalgebra load_algebra(const std::string& name_or_path);

}  // namespace walg

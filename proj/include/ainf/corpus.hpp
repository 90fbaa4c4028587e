#pragma once

#include <string>
#include <vector>

#include "ainf/document.hpp"

namespace ainf {

/// Names of the shipped examples, positive documents first, then the neg-* controls.
std::vector<std::string> builtin_names();

/// Every shipped example, in builtin_names() order.
std::vector<AlgebraDocument> builtin_corpus();

/// Builds just the named document; throws std::out_of_range.
AlgebraDocument builtin_document(const std::string& name);

}  // namespace ainf

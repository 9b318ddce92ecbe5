#pragma once

#include <memory>
#include <string>
#include <vector>

#include "equisym/group.hpp"

namespace equisym {

// Group spec grammar: "C:n", "D:n", "file:PATH#NAME" (#NAME optional when
// the file holds a single group).
Group build_group(const std::string& spec);

// Catalog file: a JSON object or array of objects of the form
//   {"name": str, "order": n, "table": [[int;n];n],
//    "generators": [int], "element_names": [str] (optional)}
std::vector<Group> load_catalog(const std::string& path);

// Element literals. Built-ins accept products of atoms: "1", "s", "r",
// "r^k", "t", "t^k" (negative exponents allowed), e.g. "sr^2", "rs".
// Any group accepts "#k" indices; external groups also accept their
// declared element names.
Elem parse_element(const Group& g, const std::string& text);
const std::string& element_name(const Group& g, Elem x);

}  // namespace equisym

// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "reldb/database.hpp"

namespace hy {

// A polynomial system file: "load", "var" and "ranking" directives, then one
// polynomial or equation per line. "[NAME]" refers to a loaded relation.
struct PolySystem {
  std::string file;
  Database db;
  std::vector<Polynomial> gens;
  std::vector<int> lines;
  std::vector<std::string> ranking;
};

PolySystem parse_poly_system(const std::string& text, const std::string& file);
PolySystem load_poly_system(const std::string& path);

}  // namespace hy

// Copyright 2026 The huygens authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "reldb/database.hpp"

namespace hy::test {

inline std::string data(const std::string& f) { return std::string(HY_DATA_DIR) + "/" + f; }

// All shipped relation files in one database.
inline const Database& shipped() {
  static const Database db = [] {
    Database d;
    for (const char* f : {"np_field_equations.rel", "np_commutators.rel", "gauge_typeIII.rel", "paper_section2.rel"})
      load_file(d, data(f));
    return d;
  }();
  return db;
}

inline Polynomial V(const char* name) { return Polynomial::var(name); }

}  // namespace hy::test

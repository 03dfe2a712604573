#pragma once

#include <map>
#include <string>

#include "mfk/catalog.hpp"

namespace mfk {

enum class ExportFormat { Text, Json, Tex };

/// Deterministic export payloads keyed by bundle name:
///   appendix_E6, appendix_E7, appendix_E8  -- the E-series tables
///   gsv_D                                  -- GSV D matrices, 4 <= n <= 8
///   uf2                                    -- W, Xi, coefficient matrix
/// Text payloads are the golden-file format; no timestamps anywhere.
std::map<std::string, std::string> export_bundle(ExportFormat fmt);

std::string export_one(const std::string& name, ExportFormat fmt);

/// TeX rendering of a matrix (bmatrix environment).
std::string matrix_tex(const PolyMatrix& m);
std::string poly_tex(const Poly& p);

}  // namespace mfk

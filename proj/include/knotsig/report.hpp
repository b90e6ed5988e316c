#pragma once

#include "knotsig/execution.hpp"
#include "knotsig/qjump.hpp"
#include "knotsig/torus.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace knotsig {

/// Catalog JSON: array of {"name", "braid", "delta"?, "p"?}. Polynomials may
/// be coefficient arrays or strings. Each record is cross-validated.
/// Errors name the record index and field.
std::vector<KnotRecord> parse_catalog(std::string_view json_text);
std::vector<KnotRecord> load_catalog(const std::string& path);
std::string catalog_json(const std::vector<KnotRecord>& records);

/// check_conjecture plus the skein jump at every simple root.
KnotReport check_record(const KnotRecord& rec, Precision prec = {});

struct CatalogReport {
    std::vector<KnotReport> knots;
    bool ok() const;
};

CatalogReport check_catalog(const std::vector<KnotRecord>& records, Execution exec = Execution::parallel,
                            Precision prec = {});

std::string to_tsv(const CatalogReport& rep);
std::string to_json(const CatalogReport& rep);
std::string to_tsv(const std::vector<TorusReport>& sweep);
std::string to_json(const std::vector<TorusReport>& sweep);

/// Root turn for display: exact fraction when rational, else 20 digits.
std::string display_turn(const AlgebraicRoot& r, Precision prec = {});

}  // namespace knotsig

#pragma once

#include <string>
#include <vector>

#include "stsp/form_ideal.hpp"
#include "stsp/report.hpp"

namespace stsp {

struct CatalogEntryInfo {
  std::string id;
  /// Needs Gamma = I.
  bool maximal_only;
  std::string statement;
};

/// Every identity the catalog knows, in run order.
const std::vector<CatalogEntryInfo>& identity_catalog();

/// For each selected entry, `trials` hypothesis-satisfying bindings; both
/// sides are built as relative words and their images compared. Rows whose
/// two sides lie in one unipotent radical with admissible parameters are
/// tagged exact. Entries needing Gamma = I produce a single skip row when
/// Gamma is smaller. The two sign-ambiguous entries also emit a
/// `<id>/sign` row comparing both candidate signs on the same draws.
///
/// `filter` selects entries by id; empty means all. Unknown ids throw ConfigError.
Report verify_identity_catalog(const FormIdeal& form, int rank, const SuiteOptions& options,
                               const std::vector<std::string>& filter = {});

}  // namespace stsp

// Report builders behind the CLI subcommands. Everything the CLI prints comes
// from these JSON documents; human output is a rendering of the same data.
#pragma once

#include <map>
#include <optional>

#include "divstab/catalog.hpp"
#include "divstab/json_io.hpp"
#include "divstab/weights.hpp"

namespace divstab {

struct SliceQuery {
  int ray;
  Rational x;
};

Json toric_report(const ToricFano& fan, const std::optional<SliceQuery>& slice = std::nullopt);

struct DfQuery {
  int r;
  Rational Kn;
};

// Throws invalid_sequence_error when the sequence fails validation; the
// thrown report is also available via validation_report_json.
Json modelseq_report(const ModelSequence& seq, const std::optional<DfQuery>& df = std::nullopt);
Json validation_report_json(const ValidationReport& report);

Json okounkov_report(const Polytope& body, const std::optional<RatVector>& moment_dir = std::nullopt);

Json weights_report(const ToricFano& fan, int ray, int r,
                    std::optional<long long> kmax = std::nullopt,
                    std::optional<long long> step = std::nullopt);

Json curve_blowup_report(const CurveBlowupParams& params);

// Flat name -> value map used to compare a catalog entry's expected values
// against the corresponding command output.
std::map<std::string, std::string> report_values(const CatalogEntry& entry);

}  // namespace divstab

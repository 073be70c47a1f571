// SPDX-License-Identifier: MIT
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "leja/bounds.hpp"
#include "leja/compact_set.hpp"
#include "leja/keylemma.hpp"
#include "leja/leja.hpp"

namespace leja {

using Json = nlohmann::ordered_json;

/// Shortest round-trip-safe text: %.17g, with inf/-inf/nan spelled out.
[[nodiscard]] std::string fmt_num(double v);

/// `{"intervals": [[lo, hi], ...]}` or `{"cantor": {"depth": d, "ratio": r}}`.
[[nodiscard]] CompactSet parse_set_spec(const Json& j);
[[nodiscard]] CompactSet parse_set_spec(const std::string& text);
[[nodiscard]] Json set_to_json(const CompactSet& k);

/// Numbers go through fmt_num so non-finite values survive as strings.
[[nodiscard]] Json num_json(double v);

void write_sequence_csv(std::ostream& os, const PointSequence& seq);
[[nodiscard]] Json sequence_to_json(const PointSequence& seq);

void write_profile_csv(std::ostream& os, const std::vector<std::pair<double, double>>& profile);

void write_bound_csv(std::ostream& os, const BoundReport& rep);
[[nodiscard]] Json bound_to_json(const BoundReport& rep);

[[nodiscard]] Json instance_to_json(const ITauInstance& inst);
[[nodiscard]] ITauInstance instance_from_json(const Json& j);
/// Either an array of instances or `{"instances": [...]}`.
[[nodiscard]] std::vector<ITauInstance> instances_from_json(const Json& j);
[[nodiscard]] Json itau_result_to_json(const ITauResult& r);

/// Reads a whole file; throws ValidationError when it cannot be opened.
[[nodiscard]] std::string read_file(const std::string& path);

}  // namespace leja

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "holext/boundary_fn.hpp"
#include "holext/extend_test.hpp"
#include "holext/oracle.hpp"
#include "holext/witness.hpp"

namespace holext {

using nlohmann::json;

[[nodiscard]] json complex_to_json(cplx c);
/// Reads a [re, im] pair; Schema error otherwise.
[[nodiscard]] cplx complex_from_json(const json& j);

[[nodiscard]] json polynomial_to_json(const ComplexPolynomial& p);
[[nodiscard]] ComplexPolynomial polynomial_from_json(const json& j);

/// {"n": N, "values": [[re, im], ...], "label": ...}
[[nodiscard]] json samples_to_json(const BoundarySamples& s, const std::optional<std::string>& label = std::nullopt);
[[nodiscard]] BoundarySamples samples_from_json(const json& j);

[[nodiscard]] BoundarySamples load_samples(const std::filesystem::path& path);
void save_samples(const std::filesystem::path& path, const BoundarySamples& s,
                  const std::optional<std::string>& label = std::nullopt);

[[nodiscard]] json verdict_to_json(const Verdict& v);
[[nodiscard]] json certificate_to_json(const WitnessCertificate& c);
[[nodiscard]] WitnessCertificate certificate_from_json(const json& j);
[[nodiscard]] json campaign_to_json(const CampaignReport& r);

}  // namespace holext

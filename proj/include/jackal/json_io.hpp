#pragma once

#include <filesystem>

#include <json.hpp>

#include "jackal/symfunc.hpp"

namespace jackal {

// {"den": d, "coeffs": [c0, c1, ...]} encoding (1/d) * sum c_k alpha^k with
// integer c_k, d >= 1 minimal. Integers that do not fit in int64 are emitted
// as decimal strings; the reader accepts both forms.
nlohmann::json alpha_poly_to_json(const AlphaPoly& p);
AlphaPoly alpha_poly_from_json(const nlohmann::json& j);

nlohmann::json partition_to_json(const Partition& lam);
Partition partition_from_json(const nlohmann::json& j);

// {"basis":"m","degree":n,"terms":[{"partition":[...],"coeff":<poly>},...]},
// terms in reverse-lex order. Coefficients must be polynomials in alpha;
// throws std::domain_error otherwise.
nlohmann::json symfunc_to_json(const SymFuncM& f);
SymFuncM symfunc_from_json(const nlohmann::json& j);

// Write-then-rename so readers never observe a partial file.
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace jackal

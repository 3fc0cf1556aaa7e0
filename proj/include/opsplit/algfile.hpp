#pragma once

#include <nlohmann/json_fwd.hpp>

#include "opsplit/bilinear_form.hpp"
#include "opsplit/representation.hpp"

namespace opsplit {

// On-disk document: one algebra with optional named forms and representations.
// Operations are sparse [i, j, k, coeff] triplet lists; forms and rep
// matrices are dense. Omitted tensor entries are zero; duplicates are errors.
struct AlgebraFile {
    Algebra algebra;
    std::map<std::string, BilinForm> forms;
    std::map<std::string, RepTriple> reps;
};

nlohmann::json to_json(const AlgebraFile& f);
AlgebraFile algebra_file_from_json(const nlohmann::json& j);

AlgebraFile load_algebra_file(const std::string& path);
void save_algebra_file(const std::string& path, const AlgebraFile& f);

std::string matrix_to_string(const Matrix& m);

} // namespace opsplit

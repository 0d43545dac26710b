#ifndef QALG_IO_HPP
#define QALG_IO_HPP

#include "qalg/keel.hpp"
#include "qalg/koszul.hpp"
#include "qalg/matrix.hpp"

#include <json.hpp>

#include <string>

namespace qalg {

// Presentation files carry coefficients as exact rational strings; keys are
// emitted sorted so repeated runs are byte-identical.
nlohmann::json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

Presentation load_presentation(const std::string& path);
void save_presentation(const Presentation& p, const std::string& path);

nlohmann::json report_to_json(const KoszulReport& rep, KoszulVerdict verdict);

// Change-of-variables files: an array of rows of rational strings.
MatrixQ matrix_from_json(const nlohmann::json& j);
MatrixQ load_matrix(const std::string& path);

std::string dump_json(const nlohmann::json& j);
void save_json(const nlohmann::json& j, const std::string& path);

}  // namespace qalg

#endif

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "behmm/channel.hpp"
#include "behmm/model.hpp"
#include "behmm/word.hpp"

namespace behmm {

// Ordered so that serialized reports and models have a fixed field order.
using Json = nlohmann::ordered_json;

// Complex entries travel as [re, im]; plain numbers are accepted on input as re.
Json complex_matrix_to_json(const ComplexMatrix& m);
ComplexMatrix complex_matrix_from_json(const Json& j, const std::string& field);

HiddenModel model_from_json(const Json& j);
Json model_to_json(const HiddenModel& model);
HiddenModel load_model(const std::string& path);

Json channel_to_json(const QuantumChannelMap& ch);

enum class QueryKind { validate, joint, hidden, recurrence, diagonal };

struct QueryFile {
  QueryKind kind = QueryKind::validate;
  std::optional<OperatorWord> operator_word;
  std::optional<HiddenWord> hidden_word;
  std::optional<DiagonalWord> diagonal_word;
  std::optional<ComplexMatrix> projection;
  int horizon = 20;
  double tol = 1e-8;
  bool oracle = false;
};

QueryFile query_from_json(const Json& j);
QueryFile load_query(const std::string& path);

// Dispatches the query against the model and assembles the report. The "ok" field of a
// validate report is false when any channel fails its axioms; everything else reports
// through thrown errors.
Json run_query(const HiddenModel& model, const QueryFile& q);

// Human-readable rendering of a report; "structured" is the JSON itself.
std::string render_table(const Json& report);

std::string read_text_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& path);

}  // namespace behmm

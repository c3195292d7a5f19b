#include "behmm/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "behmm/classical.hpp"
#include "behmm/entangled.hpp"
#include "behmm/joint_expectation.hpp"
#include "behmm/recurrence.hpp"

namespace behmm {

namespace {

const Json& require_field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object with field '" + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

double number_from(const Json& v, const std::string& field) {
  if (!v.is_number()) throw ParseError("field '" + field + "' must be a number");
  return v.get<double>();
}

int integer_from(const Json& v, const std::string& field) {
  if (!v.is_number_integer()) throw ParseError("field '" + field + "' must be an integer");
  return v.get<int>();
}

Complex complex_from_json(const Json& v, const std::string& field) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Complex(v[0].get<double>(), v[1].get<double>());
  throw ParseError("field '" + field + "' must hold numbers or [re, im] pairs");
}

RealVector real_vector_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw ParseError("field '" + field + "' must be a nonempty array");
  RealVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = number_from(j[i], field + "[" + std::to_string(i) + "]");
  return v;
}

RealMatrix real_matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw ParseError("field '" + field + "' must be a nonempty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  RealMatrix m;
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    const std::string row_name = field + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.empty()) throw ParseError(row_name + " must be a nonempty array");
    if (i == 0) {
      cols = row.size();
      m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    } else if (row.size() != cols) {
      throw ParseError(row_name + " has length " + std::to_string(row.size()) + ", expected " +
                       std::to_string(cols));
    }
    for (std::size_t k = 0; k < cols; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          number_from(row[k], row_name + "[" + std::to_string(k) + "]");
  }
  return m;
}

Json real_matrix_to_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json complex_to_json(const Complex& v) { return Json::array({v.real(), v.imag()}); }

Json validation_to_json(const ValidationReport& r) {
  return Json{{"cp", r.cp},
              {"unital", r.unital},
              {"min_choi_eigenvalue", r.min_choi_eigenvalue},
              {"unitality_defect", r.unitality_defect}};
}

}  // namespace

Json complex_matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix complex_matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw ParseError("field '" + field + "' must be a nonempty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  ComplexMatrix m;
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    const std::string row_name = field + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.empty()) throw ParseError(row_name + " must be a nonempty array");
    if (i == 0) {
      cols = row.size();
      m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    } else if (row.size() != cols) {
      throw ParseError(row_name + " has length " + std::to_string(row.size()) + ", expected " +
                       std::to_string(cols));
    }
    for (std::size_t k = 0; k < cols; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          complex_from_json(row[k], row_name + "[" + std::to_string(k) + "]");
  }
  return m;
}

HiddenModel model_from_json(const Json& j) {
  const int d = integer_from(require_field(j, "d", "model"), "d");
  if (d < 1 || d > max_dim)
    throw ValidationError("field 'd' = " + std::to_string(d) + " outside [1, " +
                          std::to_string(max_dim) + "]");
  RealVector pi = real_vector_from_json(require_field(j, "pi", "model"), "pi");
  if (pi.size() != d)
    throw ValidationError("field 'pi' has length " + std::to_string(pi.size()) + ", expected d = " +
                          std::to_string(d));
  RealMatrix pi_matrix = real_matrix_from_json(require_field(j, "Pi", "model"), "Pi");
  if (pi_matrix.rows() != d || pi_matrix.cols() != d)
    throw ValidationError("field 'Pi' is " + std::to_string(pi_matrix.rows()) + "x" +
                          std::to_string(pi_matrix.cols()) + ", expected " + std::to_string(d) + "x" +
                          std::to_string(d));
  RealMatrix q_matrix = real_matrix_from_json(require_field(j, "Q", "model"), "Q");
  if (q_matrix.rows() != d || q_matrix.cols() != d)
    throw ValidationError("field 'Q' is " + std::to_string(q_matrix.rows()) + "x" +
                          std::to_string(q_matrix.cols()) + ", expected " + std::to_string(d) + "x" +
                          std::to_string(d));
  StochasticMatrix transition = StochasticMatrix::make(std::move(pi_matrix), "Pi");
  StochasticMatrix emission = StochasticMatrix::make(std::move(q_matrix), "Q");
  if (j.contains("W0")) {
    ComplexMatrix w0 = complex_matrix_from_json(j.at("W0"), "W0");
    return HiddenModel::make(std::move(pi), std::move(transition), std::move(emission), std::move(w0));
  }
  return HiddenModel::make(std::move(pi), std::move(transition), std::move(emission));
}

Json model_to_json(const HiddenModel& model) {
  Json j;
  j["d"] = model.dim();
  Json pi = Json::array();
  for (Eigen::Index i = 0; i < model.pi().size(); ++i) pi.push_back(model.pi()(i));
  j["pi"] = std::move(pi);
  j["Pi"] = real_matrix_to_json(model.transition().entries());
  j["Q"] = real_matrix_to_json(model.emission().entries());
  if (model.has_custom_initial_state()) j["W0"] = complex_matrix_to_json(model.initial_state());
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json_text(const std::string& text, const std::string& path) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

HiddenModel load_model(const std::string& path) {
  return model_from_json(parse_json_text(read_text_file(path), path));
}

Json channel_to_json(const QuantumChannelMap& ch) {
  return Json{{"out_dim", ch.out_dim()},
              {"in_dim", ch.in_dim()},
              {"choi", complex_matrix_to_json(ch.choi())}};
}

QueryFile query_from_json(const Json& j) {
  QueryFile q;
  const Json& kind = require_field(j, "kind", "query");
  if (!kind.is_string()) throw ParseError("field 'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "validate") q.kind = QueryKind::validate;
  else if (k == "joint") q.kind = QueryKind::joint;
  else if (k == "hidden") q.kind = QueryKind::hidden;
  else if (k == "recurrence") q.kind = QueryKind::recurrence;
  else if (k == "diagonal") q.kind = QueryKind::diagonal;
  else
    throw ParseError("field 'kind' must be one of validate, joint, hidden, recurrence, diagonal; got '" +
                     k + "'");

  if (j.contains("horizon")) {
    q.horizon = integer_from(j.at("horizon"), "horizon");
    if (q.horizon < 1) throw ValidationError("field 'horizon' must be >= 1, got " + std::to_string(q.horizon));
  }
  if (j.contains("tol")) {
    q.tol = number_from(j.at("tol"), "tol");
    if (!(q.tol > 0.0)) throw ValidationError("field 'tol' must be positive");
  }
  if (j.contains("oracle")) {
    const Json& o = j.at("oracle");
    if (!o.is_boolean()) throw ParseError("field 'oracle' must be a boolean");
    q.oracle = o.get<bool>();
  }

  switch (q.kind) {
    case QueryKind::joint: {
      const Json& word = require_field(j, "word", "joint query");
      if (!word.is_array() || word.empty())
        throw ParseError("field 'word' must be a nonempty array of [a, b] pairs");
      OperatorWord w;
      for (std::size_t m = 0; m < word.size(); ++m) {
        const std::string name = "word[" + std::to_string(m) + "]";
        if (!word[m].is_array() || word[m].size() != 2)
          throw ParseError(name + " must be an [a, b] pair of matrices");
        w.pairs.emplace_back(complex_matrix_from_json(word[m][0], name + "[0]"),
                             complex_matrix_from_json(word[m][1], name + "[1]"));
      }
      q.operator_word = std::move(w);
      break;
    }
    case QueryKind::hidden: {
      const Json& word = require_field(j, "word", "hidden query");
      if (!word.is_array() || word.empty())
        throw ParseError("field 'word' must be a nonempty array of matrices");
      HiddenWord w;
      for (std::size_t m = 0; m < word.size(); ++m)
        w.factors.push_back(complex_matrix_from_json(word[m], "word[" + std::to_string(m) + "]"));
      q.hidden_word = std::move(w);
      break;
    }
    case QueryKind::diagonal: {
      const Json& word = require_field(j, "word", "diagonal query");
      if (!word.is_array() || word.empty())
        throw ParseError("field 'word' must be a nonempty array of state indices");
      DiagonalWord w;
      for (std::size_t m = 0; m < word.size(); ++m)
        w.indices.push_back(integer_from(word[m], "word[" + std::to_string(m) + "]"));
      q.diagonal_word = std::move(w);
      break;
    }
    case QueryKind::recurrence:
      q.projection = complex_matrix_from_json(require_field(j, "projection", "recurrence query"),
                                              "projection");
      break;
    case QueryKind::validate:
      break;
  }
  return q;
}

QueryFile load_query(const std::string& path) {
  return query_from_json(parse_json_text(read_text_file(path), path));
}

Json run_query(const HiddenModel& model, const QueryFile& q) {
  switch (q.kind) {
    case QueryKind::validate: {
      Json channels;
      bool ok = true;
      const std::pair<const char*, PairMapKind> items[] = {
          {"transition", PairMapKind::H},
          {"emission", PairMapKind::HO},
          {"underlying", PairMapKind::O_underlying},
      };
      for (const auto& [name, which] : items) {
        const ValidationReport r = validate_channel(channel_from_pair_map(model, which));
        channels[name] = validation_to_json(r);
        ok = ok && r.cp && r.unital;
      }
      return Json{{"kind", "validate"}, {"d", model.dim()}, {"channels", channels}, {"ok", ok}};
    }
    case QueryKind::joint: {
      if (!q.operator_word) throw ValidationError("joint query requires field 'word'");
      const Complex value = joint_expectation_bi(model, *q.operator_word);
      Json report{{"kind", "joint"},
                  {"word_length", q.operator_word->pairs.size()},
                  {"value", complex_to_json(value)}};
      if (q.oracle) {
        const Complex oracle = joint_expectation_oracle(model, *q.operator_word);
        report["oracle_value"] = complex_to_json(oracle);
        report["difference"] = std::abs(value - oracle);
      }
      return report;
    }
    case QueryKind::hidden: {
      if (!q.hidden_word) throw ValidationError("hidden query requires field 'word'");
      const QuantumChannelMap ch = channel_from_pair_map(model, PairMapKind::H);
      const Complex value = hidden_expectation(model.initial_state(), ch, *q.hidden_word);
      return Json{{"kind", "hidden"},
                  {"word_length", q.hidden_word->factors.size()},
                  {"value", complex_to_json(value)}};
    }
    case QueryKind::recurrence: {
      if (!q.projection) throw ValidationError("recurrence query requires field 'projection'");
      const Projection e = Projection::make(*q.projection);
      const RecurrenceReport rec = phi_recurrence_report(model, e, q.horizon);
      const QuantumChannelMap ch = channel_from_pair_map(model, PairMapKind::O_underlying);
      const ERecurrenceResult er = e_recurrence_check(ch, e, q.horizon, q.tol);
      const AccessibilityScan acc = complete_accessibility(ch, e, q.horizon, q.tol);
      Json report{{"kind", "recurrence"}, {"horizon", q.horizon}, {"tol", q.tol}};
      report["q"] = rec.q;
      report["q_threshold"] = rec.q_threshold;
      report["bound_certified"] = rec.bound_certified;
      report["phi_e"] = rec.phi_e;
      report["verdict"] = to_string(rec.verdict);
      report["residual_sequence"] = rec.residual_sequence;
      report["bound_violation"] = rec.bound_violation;
      report["tail_bound"] = rec.tail_bound ? Json(*rec.tail_bound) : Json(nullptr);
      report["partition_defect"] = rec.partition_defect;
      report["e_recurrence"] =
          Json{{"lhs", er.lhs}, {"residual", er.residual}, {"satisfied", er.satisfied}};
      report["complete_accessibility"] =
          Json{{"accessible", acc.accessible}, {"residual_norms", acc.residual_norms}};
      return report;
    }
    case QueryKind::diagonal: {
      if (!q.diagonal_word) throw ValidationError("diagonal query requires field 'word'");
      const DiagonalRestriction r = diagonal_restriction_check(model, *q.diagonal_word);
      return Json{{"kind", "diagonal"},
                  {"indices", q.diagonal_word->indices},
                  {"quantum", r.quantum},
                  {"classical", r.classical},
                  {"defect", r.defect}};
    }
  }
  throw ValidationError("unknown query kind");
}

namespace {

void render_node(std::string& out, const std::string& key, const Json& value, int indent) {
  out.append(static_cast<std::size_t>(indent), ' ');
  out += key;
  if (value.is_object()) {
    out += ":\n";
    for (const auto& [k, v] : value.items()) render_node(out, k, v, indent + 2);
    return;
  }
  out += ": ";
  if (value.is_string()) out += value.get<std::string>();
  else out += value.dump();
  out += "\n";
}

}  // namespace

std::string render_table(const Json& report) {
  std::string out;
  if (report.is_object()) {
    for (const auto& [k, v] : report.items()) render_node(out, k, v, 0);
  } else {
    out += report.dump();
    out += "\n";
  }
  return out;
}

}  // namespace behmm

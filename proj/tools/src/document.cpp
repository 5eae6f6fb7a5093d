#include "thetanull/cli/document.hpp"

#include <json.hpp>

namespace thetanull::cli {

namespace {

using Json = nlohmann::ordered_json;

double number_at(const Json& j, const std::string& field) {
  if (!j.is_number()) throw DocumentError(field + ": expected a number");
  return j.get<double>();
}

Json complex_json(Complex c) { return Json{{"re", c.real()}, {"im", c.imag()}}; }

Json options_json(const DocumentOptions& o) {
  Json out = Json::object();
  if (o.target_eps) out["target_eps"] = *o.target_eps;
  if (o.vanish_tol) out["vanish_tol"] = *o.vanish_tol;
  if (o.rank_tol) out["rank_tol"] = *o.rank_tol;
  return out;
}

Json input_json(const InputDocument& doc) {
  Json tau = Json::array();
  for (Eigen::Index i = 0; i < doc.tau.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < doc.tau.cols(); ++j) row.push_back(complex_json(doc.tau(i, j)));
    tau.push_back(std::move(row));
  }
  Json out;
  out["genus"] = doc.genus;
  out["tau"] = std::move(tau);
  out["options"] = options_json(doc.options);
  return out;
}

}  // namespace

InputDocument parse_input(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DocumentError("document: expected an object");

  InputDocument doc;
  if (!j.contains("genus") || !j["genus"].is_number_integer()) throw DocumentError("genus: expected an integer");
  doc.genus = j["genus"].get<int>();
  if (doc.genus < 1 || doc.genus > kMaxGenus) {
    throw DocumentError("genus: must lie in 1.." + std::to_string(kMaxGenus));
  }

  if (!j.contains("tau") || !j["tau"].is_array()) throw DocumentError("tau: expected an array of rows");
  const Json& rows = j["tau"];
  if (static_cast<int>(rows.size()) != doc.genus) {
    throw DocumentError("tau: expected " + std::to_string(doc.genus) + " rows, got " + std::to_string(rows.size()));
  }
  doc.tau.resize(doc.genus, doc.genus);
  for (int r = 0; r < doc.genus; ++r) {
    const std::string row_field = "tau[" + std::to_string(r) + "]";
    const Json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != doc.genus) {
      throw DocumentError(row_field + ": expected " + std::to_string(doc.genus) + " entries");
    }
    for (int c = 0; c < doc.genus; ++c) {
      const std::string field = row_field + "[" + std::to_string(c) + "]";
      const Json& entry = row[c];
      if (!entry.is_object() || !entry.contains("re") || !entry.contains("im")) {
        throw DocumentError(field + ": expected {\"re\": .., \"im\": ..}");
      }
      doc.tau(r, c) = Complex(number_at(entry["re"], field + ".re"), number_at(entry["im"], field + ".im"));
    }
  }

  if (j.contains("options")) {
    const Json& o = j["options"];
    if (!o.is_object()) throw DocumentError("options: expected an object");
    for (const auto& [key, value] : o.items()) {
      const double v = number_at(value, "options." + key);
      if (key == "target_eps") {
        doc.options.target_eps = v;
      } else if (key == "vanish_tol") {
        doc.options.vanish_tol = v;
      } else if (key == "rank_tol") {
        doc.options.rank_tol = v;
      } else {
        throw DocumentError("options." + key + ": unknown option");
      }
    }
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "genus" && key != "tau" && key != "options") throw DocumentError(key + ": unknown field");
  }
  return doc;
}

std::string serialize_input(const InputDocument& doc) { return input_json(doc).dump(2) + "\n"; }

SiegelPoint to_siegel(const InputDocument& doc) { return SiegelPoint::validate(doc.genus, doc.tau); }

std::string render_report(const InputDocument& doc, const EffectiveSettings& settings, const StrataReport& report) {
  Json out;
  out["input"] = input_json(doc);
  out["settings"] = Json{
      {"target_eps", settings.target_eps}, {"vanish_tol", settings.vanish_tol}, {"rank_tol", settings.rank_tol}};

  Json vanishing = Json::array();
  for (std::size_t i = 0; i < report.vanishing.size(); ++i) {
    const VanishingChar& v = report.vanishing[i];
    Json entry;
    entry["char"] = v.ch.to_string();
    entry["value"] = complex_json(v.value.value);
    entry["err"] = v.value.err;
    Json sv = Json::array();
    if (i < report.per_char_rank.size()) {
      const CharRank& r = report.per_char_rank[i];
      for (Eigen::Index k = 0; k < r.singular_values.size(); ++k) sv.push_back(r.singular_values(k));
      entry["singular_values"] = std::move(sv);
      entry["rank"] = r.rank;
    }
    vanishing.push_back(std::move(entry));
  }
  out["vanishing"] = std::move(vanishing);
  out["stratum"] = report.stratum ? Json(*report.stratum) : Json(nullptr);
  out["verdict"] = report.verdict_g4 ? Json(std::string(to_string(*report.verdict_g4))) : Json(nullptr);
  out["certificates"] = Json{{"max_eval_err", report.max_eval_err}};
  return out.dump(2) + "\n";
}

}  // namespace thetanull::cli

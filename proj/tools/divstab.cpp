// divstab: decide divisorial (semi)stability of Fano varieties from fan,
// model-sequence or Okounkov-body data, with exact rational output.
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "divstab/reports.hpp"

namespace {

using divstab::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNotFano = 3;
constexpr int kExitFit = 4;

struct InputSelector {
  std::string catalog_id;
  std::string path;

  Json load(const std::string& expected_kind) const {
    if (!catalog_id.empty()) {
      const auto entry = divstab::load_catalog_entry(catalog_id);
      if (entry.kind != expected_kind)
        throw divstab::parse_error("catalog entry '" + catalog_id + "' has kind '" +
                                   entry.kind + "', expected '" + expected_kind + "'");
      return entry.payload;
    }
    if (path.empty()) throw divstab::parse_error("provide an input file or --catalog ID");
    return divstab::read_json_file(path);
  }
};

void add_input_options(CLI::App* cmd, InputSelector& sel) {
  cmd->add_option("input", sel.path, "input JSON path");
  cmd->add_option("--catalog", sel.catalog_id, "bundled catalog id");
}

void emit(const Json& report, bool json_output) {
  if (json_output) {
    std::cout << divstab::canonical_dump(report);
    return;
  }
  // human rendering of the same document
  if (report.contains("name") && report.at("name").is_string() &&
      !report.at("name").get<std::string>().empty())
    std::cout << report.at("name").get<std::string>() << "\n";
  for (const char* key : {"verdict", "volume", "anticanonical_degree", "b1", "tau", "xi",
                          "eta_over_3", "comparison", "df_comparison", "obstruction"}) {
    if (report.contains(key)) {
      const auto& v = report.at(key);
      std::cout << "  " << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                << "\n";
    }
  }
  if (report.contains("barycenter")) {
    std::string bc;
    for (const auto& c : report.at("barycenter")) {
      if (!bc.empty()) bc += ',';
      bc += c.get<std::string>();
    }
    std::cout << "  barycenter: " << bc << "\n";
  }
  if (report.contains("eta"))
    std::cout << "  eta: " << report.at("eta").dump() << "\n";
  if (report.contains("witness_ray") && !report.at("witness_ray").is_null())
    std::cout << "  witness_ray: " << report.at("witness_ray").get<int>() << "\n";
  if (report.contains("per_ray")) {
    for (const auto& r : report.at("per_ray"))
      std::cout << "  ray " << r.at("ray").get<int>() << ": tau="
                << r.at("tau").get<std::string>() << " eta=" << r.at("eta").get<std::string>()
                << "\n";
  }
  if (report.contains("slice"))
    std::cout << "  slice volume at x=" << report.at("slice").at("x").get<std::string>()
              << ": " << report.at("slice").at("volume").get<std::string>() << "\n";
  if (report.contains("eta_from_weights"))
    std::cout << "  eta_from_weights: " << report.at("eta_from_weights").get<std::string>()
              << " (toric: " << report.at("toric_eta").get<std::string>() << ")\n";
  if (report.contains("df_from_weights"))
    std::cout << "  df_from_weights: " << report.at("df_from_weights").get<std::string>()
              << " (eta route: " << report.at("df_from_eta").get<std::string>() << ")\n";
  if (report.contains("moment"))
    std::cout << "  moment along " << report.at("moment").at("direction").dump() << ": "
              << report.at("moment").at("value").get<std::string>() << "\n";
}

int emit_error(const std::string& type, const std::string& message, int code) {
  Json err;
  err["error"]["type"] = type;
  err["error"]["message"] = message;
  std::cout << divstab::canonical_dump(err);
  std::cerr << "error: " << message << "\n";
  return code;
}

divstab::RatVector parse_vector_flag(const std::string& text) {
  std::vector<divstab::Rational> coords;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const std::string tok =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    coords.push_back(divstab::Rational::parse(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return divstab::RatVector(std::move(coords));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divisorial stability of Fano varieties, exactly"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_output = false;
  app.add_flag("--json", json_output, "machine-readable JSON output");

  InputSelector toric_in, seq_in, ok_in, w_in;
  int ray = -1;
  std::string at_text, moment_text;
  int df_r = 0;
  std::string kn_text;
  int w_ray = 0, w_r = 1;
  long long kmax = 0, step = 0;

  auto* toric = app.add_subcommand("toric", "stability verdict from fan rays");
  add_input_options(toric, toric_in);
  toric->add_option("--ray", ray, "ray index for a slice-volume query");
  toric->add_option("--at", at_text, "slice parameter x (rational)");

  auto* modelseq = app.add_subcommand("modelseq", "eta from ample-model-sequence data");
  add_input_options(modelseq, seq_in);
  modelseq->add_option("--r", df_r, "Cartier multiple for the DF value");
  modelseq->add_option("--kn", kn_text, "anticanonical degree ((-K_X)^n), rational");

  auto* okounkov = app.add_subcommand("okounkov", "Okounkov-body barycenter test");
  add_input_options(okounkov, ok_in);
  okounkov->add_option("--moment", moment_text, "also report the moment along this vector");

  auto* weights = app.add_subcommand("weights", "brute-force section-count verification");
  add_input_options(weights, w_in);
  weights->add_option("--ray", w_ray, "ray index")->required();
  weights->add_option("--r", w_r, "Cartier multiple r");
  weights->add_option("--kmax", kmax, "sample every admissible k up to this bound");
  weights->add_option("--step", step, "override the sampling stride");

  CLI11_PARSE(app, argc, argv);

  try {
    if (toric->parsed()) {
      const auto fan = divstab::fan_from_json(toric_in.load("fan"));
      std::optional<divstab::SliceQuery> slice;
      if (!at_text.empty()) {
        if (ray < 0) throw divstab::parse_error("--at needs --ray");
        slice = divstab::SliceQuery{ray, divstab::Rational::parse(at_text)};
      }
      emit(divstab::toric_report(fan, slice), json_output);
    } else if (modelseq->parsed()) {
      // catalog entries may be sequences or curve-blowup parameter sets;
      // files are told apart by their fields
      Json payload;
      if (!seq_in.catalog_id.empty()) {
        const auto entry = divstab::load_catalog_entry(seq_in.catalog_id);
        if (entry.kind != "sequence" && entry.kind != "curve_blowup_params")
          throw divstab::parse_error("catalog entry '" + seq_in.catalog_id +
                                     "' is not model-sequence data");
        payload = entry.payload;
      } else if (!seq_in.path.empty()) {
        payload = divstab::read_json_file(seq_in.path);
      } else {
        throw divstab::parse_error("provide an input file or --catalog ID");
      }
      if (payload.contains("H3")) {
        emit(divstab::curve_blowup_report(divstab::curve_params_from_json(payload)),
             json_output);
      } else {
        const auto seq = divstab::sequence_from_json(payload);
        std::optional<divstab::DfQuery> df;
        if (df_r > 0 && !kn_text.empty())
          df = divstab::DfQuery{df_r, divstab::Rational::parse(kn_text)};
        if (!seq.valid()) {
          Json rep;
          rep["validation"] = divstab::validation_report_json(seq.validation());
          std::cout << divstab::canonical_dump(rep);
          std::string msg;
          for (const auto& v : seq.validation().violations)
            msg += (msg.empty() ? "" : "; ") + v.message;
          std::cerr << "invalid sequence: " << msg << "\n";
          return kExitInput;
        }
        emit(divstab::modelseq_report(seq, df), json_output);
      }
    } else if (okounkov->parsed()) {
      const auto body = divstab::polytope_from_json(ok_in.load("okounkov_body"));
      std::optional<divstab::RatVector> dir;
      if (!moment_text.empty()) dir = parse_vector_flag(moment_text);
      emit(divstab::okounkov_report(body, dir), json_output);
    } else if (weights->parsed()) {
      const auto fan = divstab::fan_from_json(w_in.load("fan"));
      emit(divstab::weights_report(fan, w_ray, w_r,
                                   kmax > 0 ? std::optional<long long>(kmax) : std::nullopt,
                                   step > 0 ? std::optional<long long>(step) : std::nullopt),
           json_output);
    }
  } catch (const divstab::not_fano_error& e) {
    return emit_error("not_fano", e.what(), kExitNotFano);
  } catch (const divstab::fit_error& e) {
    return emit_error("fit_mismatch",
                      std::string(e.what()) + " (suggested stride: " +
                          std::to_string(e.suggested_step()) + ")",
                      kExitFit);
  } catch (const divstab::invalid_sequence_error& e) {
    return emit_error("invalid_sequence", e.what(), kExitInput);
  } catch (const divstab::error& e) {
    return emit_error("input", e.what(), kExitInput);
  }
  return kExitOk;
}

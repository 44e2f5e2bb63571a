#include "divstab/reports.hpp"

namespace divstab {

Json toric_report(const ToricFano& fan, const std::optional<SliceQuery>& slice) {
  const ToricStabilityReport rep = semistability_verdict(fan);
  Json j;
  j["name"] = fan.name;
  j["dim"] = fan.dim;
  j["volume"] = rational_to_json(rep.volume);
  j["anticanonical_degree"] = rational_to_json(rep.volume * Rational(factorial(fan.dim)));
  j["barycenter"] = vector_to_json(rep.barycenter);
  j["verdict"] = to_string(rep.verdict);
  if (rep.witness_ray)
    j["witness_ray"] = *rep.witness_ray;
  else
    j["witness_ray"] = nullptr;
  Json per_ray = Json::array();
  for (const auto& rs : rep.per_ray) {
    Json r;
    r["ray"] = rs.ray_index;
    Json rv = Json::array();
    for (long long c : fan.rays[static_cast<size_t>(rs.ray_index)]) rv.push_back(c);
    r["ray_vector"] = std::move(rv);
    r["tau"] = rational_to_json(rs.tau);
    r["eta"] = rational_to_json(rs.eta);
    per_ray.push_back(std::move(r));
  }
  j["per_ray"] = std::move(per_ray);
  if (slice) {
    Json s;
    s["ray"] = slice->ray;
    s["x"] = rational_to_json(slice->x);
    s["volume"] = rational_to_json(toric_volume_at(fan, slice->ray, slice->x));
    j["slice"] = std::move(s);
  }
  return j;
}

Json validation_report_json(const ValidationReport& report) {
  Json j;
  j["valid"] = report.valid();
  Json v = Json::array();
  for (const auto& issue : report.violations) {
    Json i;
    i["segment"] = issue.segment;
    i["message"] = issue.message;
    v.push_back(std::move(i));
  }
  j["violations"] = std::move(v);
  return j;
}

Json modelseq_report(const ModelSequence& seq, const std::optional<DfQuery>& df) {
  Json j;
  j["n"] = seq.n();
  j["validation"] = validation_report_json(seq.validation());
  if (!seq.valid()) {
    std::string msg = "invalid sequence:";
    for (const auto& v : seq.validation().violations)
      msg += " [segment " + std::to_string(v.segment) + "] " + v.message + ";";
    throw invalid_sequence_error(msg);
  }
  const Rational eta_int = seq.eta_intersection();
  const Rational eta_vol = seq.eta_volume();
  Json eta;
  eta["intersection"] = rational_to_json(eta_int);
  eta["volume"] = rational_to_json(eta_vol);
  eta["agree"] = (eta_int == eta_vol);
  j["eta"] = std::move(eta);
  j["xi"] = rational_to_json(seq.slope_xi());
  j["tau"] = rational_to_json(seq.tau());
  if (eta_int.sign() > 0)
    j["verdict"] = "stable";
  else if (eta_int.sign() == 0)
    j["verdict"] = "semistable-not-stable";
  else
    j["verdict"] = "not-semistable";
  if (df) {
    Json d;
    d["r"] = df->r;
    d["kn"] = rational_to_json(df->Kn);
    d["value"] = rational_to_json(df_from_eta(eta_int, seq.n(), df->r, df->Kn));
    j["df"] = std::move(d);
  }
  return j;
}

Json okounkov_report(const Polytope& body, const std::optional<RatVector>& moment_dir) {
  const OkounkovReport rep = okounkov_barycenter_verdict(body);
  Json j;
  j["dim"] = body.dim();
  j["volume"] = rational_to_json(volume(body));
  j["barycenter"] = vector_to_json(rep.barycenter);
  j["b1"] = rational_to_json(rep.b1);
  j["obstruction"] = to_string(rep.obstruction);
  if (moment_dir) {
    Json m;
    m["direction"] = vector_to_json(*moment_dir);
    m["value"] = rational_to_json(moment(body, *moment_dir));
    j["moment"] = std::move(m);
  }
  return j;
}

Json weights_report(const ToricFano& fan, int ray, int r, std::optional<long long> kmax,
                    std::optional<long long> step) {
  WeightSeries series;
  const long long stride = step.value_or(default_step(fan, ray, r));
  if (stride < 1) throw precondition_error("stride must be positive");
  if (kmax) {
    std::vector<long long> ks;
    for (long long k = stride; k <= *kmax; k += stride) ks.push_back(k);
    if (static_cast<int>(ks.size()) < fan.dim + 3)
      throw precondition_error("kmax admits fewer than n+3 samples at stride " +
                               std::to_string(stride));
    series = weight_series(fan, ray, r, std::move(ks));
  } else {
    std::vector<long long> ks;
    for (int i = 1; i <= fan.dim + 3; ++i) ks.push_back(stride * i);
    series = weight_series(fan, ray, r, std::move(ks));
  }
  Json j;
  j["name"] = fan.name;
  j["ray"] = ray;
  j["r"] = r;
  j["tau"] = rational_to_json(series.tau);
  Json ks = Json::array(), fv = Json::array(), wv = Json::array();
  for (size_t i = 0; i < series.ks.size(); ++i) {
    ks.push_back(series.ks[i]);
    fv.push_back(series.f_values[i].str());
    wv.push_back(series.w_values[i].str());
  }
  j["ks"] = std::move(ks);
  j["f_values"] = std::move(fv);
  j["w_values"] = std::move(wv);
  auto poly_json = [](const RatPolynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
  };
  j["fitted_f"] = poly_json(series.fitted_f);
  j["fitted_w"] = poly_json(series.fitted_w);

  const Rational eta_w = eta_from_weights(series);
  const Rational eta_t = toric_eta(fan, ray);
  j["eta_from_weights"] = rational_to_json(eta_w);
  j["toric_eta"] = rational_to_json(eta_t);
  j["comparison"] = (eta_w == eta_t) ? "AGREE" : "DISAGREE";

  const Rational Kn =
      volume(build_anticanonical_polytope(fan)) * Rational(factorial(fan.dim));
  const Rational df_w = df_from_weights(series, Kn);
  const Rational df_e = df_from_eta(eta_w, fan.dim, r, Kn);
  j["kn"] = rational_to_json(Kn);
  j["df_from_weights"] = rational_to_json(df_w);
  j["df_from_eta"] = rational_to_json(df_e);
  j["df_comparison"] = (df_w == df_e) ? "AGREE" : "DISAGREE";
  return j;
}

Json curve_blowup_report(const CurveBlowupParams& params) {
  Json j;
  j["params"] = curve_params_to_json(params);
  const Rational eta3 = eta_curve_blowup_3fold(params);
  j["eta_over_3"] = rational_to_json(eta3);
  j["eta"] = rational_to_json(eta3 * Rational(3));
  if (eta3.sign() > 0)
    j["verdict"] = "stable";
  else if (eta3.sign() == 0)
    j["verdict"] = "semistable-not-stable";
  else
    j["verdict"] = "not-semistable";
  return j;
}

std::map<std::string, std::string> report_values(const CatalogEntry& entry) {
  std::map<std::string, std::string> values;
  if (entry.kind == "fan") {
    const ToricFano fan = fan_from_json(entry.payload);
    const Json j = toric_report(fan);
    values["volume"] = j.at("volume").get<std::string>();
    values["anticanonical_degree"] = j.at("anticanonical_degree").get<std::string>();
    std::string bc;
    for (const auto& c : j.at("barycenter")) {
      if (!bc.empty()) bc += ',';
      bc += c.get<std::string>();
    }
    values["barycenter"] = bc;
    values["verdict"] = j.at("verdict").get<std::string>();
    if (!j.at("witness_ray").is_null())
      values["witness_ray"] = std::to_string(j.at("witness_ray").get<int>());
    for (const auto& r : j.at("per_ray")) {
      const std::string suffix = "_ray" + std::to_string(r.at("ray").get<int>());
      values["tau" + suffix] = r.at("tau").get<std::string>();
      values["eta" + suffix] = r.at("eta").get<std::string>();
    }
  } else if (entry.kind == "sequence") {
    const ModelSequence seq = sequence_from_json(entry.payload);
    const Json j = modelseq_report(seq);
    values["eta"] = j.at("eta").at("intersection").get<std::string>();
    values["xi"] = j.at("xi").get<std::string>();
    values["tau"] = j.at("tau").get<std::string>();
    values["verdict"] = j.at("verdict").get<std::string>();
  } else if (entry.kind == "okounkov_body") {
    const Polytope body = polytope_from_json(entry.payload);
    const Json j = okounkov_report(body);
    values["b1"] = j.at("b1").get<std::string>();
    std::string bc;
    for (const auto& c : j.at("barycenter")) {
      if (!bc.empty()) bc += ',';
      bc += c.get<std::string>();
    }
    values["barycenter"] = bc;
    values["obstruction"] = j.at("obstruction").get<std::string>();
    values["volume"] = j.at("volume").get<std::string>();
  } else if (entry.kind == "curve_blowup_params") {
    const Json j = curve_blowup_report(curve_params_from_json(entry.payload));
    values["eta_over_3"] = j.at("eta_over_3").get<std::string>();
    values["verdict"] = j.at("verdict").get<std::string>();
  } else {
    throw parse_error("unknown catalog kind '" + entry.kind + "'");
  }
  return values;
}

}  // namespace divstab

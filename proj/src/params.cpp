#include "memstab/params.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace memstab {

ModelParams params_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open parameter file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed parameter file " + path + ": " + e.what());
  }
  ModelParams p;
  p.eta = j.at("eta").get<double>();
  p.alpha = j.at("alpha").get<double>();
  p.delta = j.at("delta").get<int>();
  p.beta = j.at("beta").get<double>();
  p.gamma = j.at("gamma").get<double>();
  p.kappa = j.at("kappa").get<double>();
  p.lambda = j.at("lambda").get<double>();
  if (j.contains("nu")) p.nu = j.at("nu").get<double>();
  p.validate();
  return p;
}

std::string params_to_json(const ModelParams& p) {
  nlohmann::json j;
  j["eta"] = p.eta;
  j["alpha"] = p.alpha;
  j["delta"] = p.delta;
  j["beta"] = p.beta;
  j["gamma"] = p.gamma;
  j["kappa"] = p.kappa;
  j["lambda"] = p.lambda;
  j["nu"] = p.nu;
  return j.dump();
}

}  // namespace memstab

// Copyright 2026 The rsplfr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rsplfr/config.h"

#include <fstream>
#include <sstream>

#include "rsplfr/error.h"
#include "rsplfr/pda.h"

namespace rsplfr {
namespace {

[[noreturn]] void Invalid(const std::string& what) { throw Error(ErrorCode::kConfigInvalid, what); }

nlohmann::json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) Invalid("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, path.string() + ": " + e.what());
  }
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) Invalid("cannot open " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <typename T>
std::optional<T> Opt(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

MdsCode BuildCode(const nlohmann::json& j, const Field& field, std::size_t L, std::size_t H,
                  MdsValidation validation) {
  const bool vandermonde = Opt<bool>(j, "vandermonde").value_or(!j.contains("G"));
  if (vandermonde) {
    if (j.contains("G")) Invalid("give either \"G\" or \"vandermonde\": true, not both");
    return MdsCode::Vandermonde(L, H, field);
  }
  if (validation == MdsValidation::kExhaustive && ColumnSubsetCount(L, H) > kMaxValidatedSubsets) {
    Invalid("checking every " + std::to_string(L) + "-column minor of G needs " +
            std::to_string(ColumnSubsetCount(L, H)) +
            " determinants; use \"vandermonde\": true or --skip-validation");
  }
  const auto rows = j.at("G").get<std::vector<std::vector<Symbol>>>();
  MdsCode code = MdsCode::FromGenerator(Matrix::FromRows(field, rows), validation);
  if (code.L() != L || code.H() != H) {
    Invalid("G is " + std::to_string(code.L()) + "x" + std::to_string(code.H()) +
            ", expected L x H = " + std::to_string(L) + "x" + std::to_string(H));
  }
  return code;
}

RunSpec ParseRunConfigImpl(const nlohmann::json& j, const std::filesystem::path& base_dir,
                           MdsValidation validation) {
  if (!j.is_object()) Invalid("run config must be a JSON object");
  for (const char* key : {"N", "L", "H", "q"}) {
    if (!j.contains(key)) Invalid(std::string("run config is missing \"") + key + "\"");
  }
  const auto N = j.at("N").get<std::size_t>();
  const auto L = j.at("L").get<std::size_t>();
  const auto H = j.at("H").get<std::size_t>();
  const Field field = Field::Create(j.at("q").get<std::uint32_t>());
  if (L == 0 || L > H) Invalid("need 1 <= L <= H");

  std::optional<Pda> pda;
  if (j.contains("pda_file")) {
    if (j.contains("t")) Invalid("give either \"t\" or \"pda_file\", not both");
    const std::filesystem::path file = base_dir / j.at("pda_file").get<std::string>();
    pda = ParsePdaText(ReadTextFile(file));
    if (auto K = Opt<int>(j, "K"); K && *K != pda->K()) {
      Invalid("K=" + std::to_string(*K) + " but the PDA file has " + std::to_string(pda->K()) +
              " columns");
    }
  } else {
    if (!j.contains("K") || !j.contains("t")) Invalid("run config needs \"K\" and \"t\" or a \"pda_file\"");
    pda = Pda::Man(j.at("K").get<int>(), j.at("t").get<int>());
  }

  MdsCode code = BuildCode(j, field, L, H, validation);
  const Variant variant = ParseVariant(Opt<std::string>(j, "variant").value_or("LSP"));
  SchemeConfig config(N, std::move(*pda), std::move(code), variant,
                      Opt<std::size_t>(j, "B").value_or(0), Opt<std::uint64_t>(j, "seed").value_or(0));

  RunSpec spec{std::move(config), std::nullopt};
  if (j.contains("demands")) {
    auto demands = j.at("demands").get<std::vector<Demand>>();
    if (demands.size() != spec.config.K()) {
      throw Error(ErrorCode::kDemandInvalid, "\"demands\" needs one vector per user (K=" +
                                                 std::to_string(spec.config.K()) + ")");
    }
    for (const auto& d : demands) ValidateDemand(spec.config, d);
    spec.demands = std::move(demands);
  }
  return spec;
}

}  // namespace

RunSpec ParseRunConfig(const nlohmann::json& j, const std::filesystem::path& base_dir,
                       MdsValidation validation) {
  try {
    return ParseRunConfigImpl(j, base_dir, validation);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("run config: ") + e.what());
  }
}

RunSpec LoadRunConfig(const std::filesystem::path& path, MdsValidation validation) {
  return ParseRunConfig(ReadJsonFile(path), path.parent_path(), validation);
}

Scenario ParseScenario(const nlohmann::json& j, const std::filesystem::path& base_dir,
                       MdsValidation validation) {
  Scenario s = MakeScenario(ParseRunConfig(j, base_dir, validation));
  try {
    auto to_zero_based = [](std::vector<std::size_t> v, const char* what) {
      for (auto& x : v) {
        if (x == 0) Invalid(std::string(what) + " are numbered from 1");
        --x;
      }
      return v;
    };
    if (j.contains("availability")) {
      const auto& a = j.at("availability");
      if (a.is_array()) {
        for (std::size_t k = 0; k < a.size(); ++k) {
          s.availability[k] = to_zero_based(a[k].get<std::vector<std::size_t>>(), "servers");
        }
      } else if (a.is_object()) {
        for (const auto& [user, servers] : a.items()) {
          const std::size_t k = std::stoul(user);
          if (k == 0) Invalid("users are numbered from 1");
          s.availability[k - 1] = to_zero_based(servers.get<std::vector<std::size_t>>(), "servers");
        }
      } else {
        Invalid("\"availability\" must be an array or an object");
      }
    }
    if (j.contains("adversary")) {
      const auto& adv = j.at("adversary");
      s.wiretap = Opt<bool>(adv, "wiretap").value_or(false);
      s.colluding_servers = Opt<bool>(adv, "colluding_servers").value_or(false);
      if (adv.contains("colluding_users")) {
        s.colluding_users =
            to_zero_based(adv.at("colluding_users").get<std::vector<std::size_t>>(), "users");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("scenario: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorCode::kParseError, std::string("scenario: ") + e.what());
  }
  return s;
}

Scenario LoadScenario(const std::filesystem::path& path, MdsValidation validation) {
  return ParseScenario(ReadJsonFile(path), path.parent_path(), validation);
}

RunSpec RunPreset(std::string_view name) {
  using nlohmann::json;
  if (name == "toy") {
    return ParseRunConfig(json{{"N", 4}, {"K", 3}, {"L", 2}, {"H", 3}, {"q", 2}, {"t", 1},
                               {"G", {{1, 0, 1}, {0, 1, 1}}}, {"variant", "LSP"}, {"B", 6}});
  }
  const json micro = {{"N", 2}, {"K", 2}, {"L", 1}, {"H", 2}, {"q", 2},
                      {"t", 1}, {"G", {{1, 1}}}, {"B", 2}};
  auto with = [&micro](const char* variant, int q) {
    json j = micro;
    j["variant"] = variant;
    j["q"] = q;
    return ParseRunConfig(j);
  };
  if (name == "micro-lsp") return with("LSP", 2);
  if (name == "micro-lp") return with("LP", 2);
  if (name == "micro-fp") return with("FP", 3);
  if (name == "micro-l") return with("L", 2);
  Invalid("unknown preset '" + std::string(name) + "' (expected one of toy, micro-lsp, micro-lp, "
          "micro-fp, micro-l, fig2a, fig2b, fig2c)");
}

std::vector<std::string> RunPresetNames() {
  return {"toy", "micro-lsp", "micro-lp", "micro-fp", "micro-l"};
}

std::optional<TradeoffParameters> TradeoffPreset(std::string_view name) {
  const auto sets = Fig2ParameterSets();
  if (name == "fig2a") return sets[0];
  if (name == "fig2b") return sets[1];
  if (name == "fig2c") return sets[2];
  return std::nullopt;
}

std::vector<Demand> ResolveDemands(const RunSpec& spec) {
  if (spec.demands) return *spec.demands;
  Rng rng(spec.config.seed());
  (void)DrawRandomness(spec.config, rng);
  (void)Library::Random(spec.config, rng);
  return RandomDemands(spec.config, rng);
}

Scenario MakeScenario(const RunSpec& spec) {
  return Scenario{spec.config, ResolveDemands(spec), {}, false, {}, false};
}

nlohmann::json RunConfigToJson(const SchemeConfig& config,
                               const std::optional<std::vector<Demand>>& demands) {
  nlohmann::json j = {{"N", config.N()},
                      {"L", config.L()},
                      {"H", config.H()},
                      {"q", config.field().q()},
                      {"G", config.code().generator().ToRows()},
                      {"variant", VariantName(config.variant())},
                      {"B", config.B()},
                      {"seed", config.seed()}};
  j["K"] = config.K();
  if (config.pda().man_t()) j["t"] = *config.pda().man_t();
  if (demands) j["demands"] = *demands;
  return j;
}

}  // namespace rsplfr

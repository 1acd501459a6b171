#include "pmean/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "pmean/common.hpp"

namespace pmean {
namespace {

using nlohmann::json;

std::vector<double> doubles(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw InvalidArgument(std::string("valuation needs an array field '") + key + "'");
  }
  std::vector<double> out;
  for (const json& x : j.at(key)) {
    if (!x.is_number()) throw InvalidArgument(std::string("'") + key + "' must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

Valuation parse_valuation(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw InvalidArgument("valuation needs a string field 'type'");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "additive") return Valuation::additive(doubles(j, "weights"));
  if (type == "budget_additive") {
    if (!j.contains("cap") || !j.at("cap").is_number()) {
      throw InvalidArgument("budget_additive valuation needs a numeric 'cap'");
    }
    return Valuation::budget_additive(doubles(j, "weights"), j.at("cap").get<double>());
  }
  if (type == "xos") {
    if (!j.contains("clauses") || !j.at("clauses").is_array()) {
      throw InvalidArgument("xos valuation needs an array field 'clauses'");
    }
    std::vector<std::vector<double>> clauses;
    for (const json& c : j.at("clauses")) {
      if (!c.is_array()) throw InvalidArgument("xos clauses must be arrays of numbers");
      json wrapper = {{"w", c}};
      clauses.push_back(doubles(wrapper, "w"));
    }
    return Valuation::xos(std::move(clauses));
  }
  if (type == "explicit") return Valuation::explicit_table(doubles(j, "table"));
  throw InvalidArgument("unknown valuation type '" + type + "'");
}

}  // namespace

Instance parse_instance(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer() ||
      j.at("n").get<long long>() < 1) {
    throw InvalidArgument("instance needs a positive integer field 'n'");
  }
  if (!j.contains("valuation")) throw InvalidArgument("instance needs a 'valuation' object");
  return Instance(j.at("n").get<unsigned>(), parse_valuation(j.at("valuation")));
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open instance file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_instance(text.str());
}

std::string instance_to_json(const Instance& inst) {
  json v;
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Additive>) {
          v = {{"type", "additive"}, {"weights", f.weights}};
        } else if constexpr (std::is_same_v<F, BudgetAdditive>) {
          v = {{"type", "budget_additive"}, {"weights", f.weights}, {"cap", f.cap}};
        } else if constexpr (std::is_same_v<F, Xos>) {
          v = {{"type", "xos"}, {"clauses", f.clauses}};
        } else {
          v = {{"type", "explicit"}, {"table", f.values}};
        }
      },
      inst.valuation().family());
  json out = {{"n", inst.num_agents()}, {"valuation", std::move(v)}};
  return out.dump();
}

}  // namespace pmean

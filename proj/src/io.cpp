#include "ditree/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace ditree {
namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& where, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  if (!obj.is_object()) throw FormatError(where + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (!required.contains(key) && !optional.contains(key)) {
      throw FormatError(where + ": unknown field \"" + key + "\"");
    }
  }
  for (const std::string& key : required) {
    if (!obj.contains(key)) throw FormatError(where + ": missing field \"" + key + "\"");
  }
}

std::string id_field(const json& v, const std::string& where) {
  if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) {
    return std::to_string(v.get<long long>());
  }
  if (v.is_string() && !v.get<std::string>().empty()) return v.get<std::string>();
  throw FormatError(where + ": expected a nonnegative integer or nonempty string id");
}

double number_field(const json& obj, const std::string& key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number()) throw FormatError(where + "." + key + ": expected a number");
  return v.get<double>();
}

json id_value(const std::string& label) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), value);
  if (ec == std::errc() && ptr == label.data() + label.size() && value >= 0 && std::to_string(value) == label) {
    return value;
  }
  return label;
}

}  // namespace

TreeInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  require_keys(doc, "instance", {"root", "edges", "params"}, {"child_order"});

  RawInstance raw;
  raw.root = id_field(doc.at("root"), "root");
  if (doc.contains("child_order")) {
    const json& order = doc.at("child_order");
    if (order == "ascending") {
      raw.order = ChildOrder::kAscending;
    } else if (order == "as_listed") {
      raw.order = ChildOrder::kAsListed;
    } else {
      throw FormatError("child_order: expected \"ascending\" or \"as_listed\"");
    }
  }

  const json& edges = doc.at("edges");
  if (!edges.is_array()) throw FormatError("edges: expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    require_keys(e, where, {"child", "parent", "w", "u", "c", "r"});
    RawEdge edge;
    edge.child = id_field(e.at("child"), where + ".child");
    edge.parent = id_field(e.at("parent"), where + ".parent");
    edge.w = number_field(e, "w", where);
    edge.u = number_field(e, "u", where);
    edge.c = number_field(e, "c", where);
    edge.r = number_field(e, "r", where);
    raw.edges.push_back(std::move(edge));
  }

  const json& params = doc.at("params");
  require_keys(params, "params", {"M", "K", "N"}, {"D"});
  raw.params.M = number_field(params, "M", "params");
  raw.params.K = number_field(params, "K", "params");
  const double N = number_field(params, "N", "params");
  if (std::floor(N) != N || N < 0 || N > 1e9) throw FormatError("params.N: expected a nonnegative integer");
  raw.params.N = static_cast<int>(N);
  if (params.contains("D")) raw.params.D = number_field(params, "D", "params");

  try {
    return build_instance(raw);
  } catch (const InstanceError& e) {
    throw FormatError(std::string("invalid instance: ") + e.what());
  }
}

TreeInstance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

json instance_to_json(const TreeInstance& inst) {
  json edges = json::array();
  for (EdgeId e = 1; e <= inst.edge_count(); ++e) {
    edges.push_back({{"child", id_value(inst.label(e))},
                     {"parent", id_value(inst.label(inst.parent(e)))},
                     {"w", inst.w(e)},
                     {"u", inst.u(e)},
                     {"c", inst.c(e)},
                     {"r", inst.r(e)}});
  }
  const Params& p = inst.params();
  return {{"root", id_value(inst.label(kRoot))},
          {"edges", std::move(edges)},
          {"params", {{"M", p.M}, {"K", p.K}, {"N", p.N}, {"D", p.D}}}};
}

void write_instance(const TreeInstance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << instance_to_json(inst).dump(2) << '\n';
}

json report_to_json(const TreeInstance& inst, const SolveReport& report, std::string_view problem) {
  json upgrades = json::array();
  for (EdgeId e : report.plan.upgraded) upgrades.push_back(id_value(inst.label(e)));
  json weights = json::array();
  if (!report.plan.weights.empty()) {
    for (EdgeId e = 1; e <= inst.edge_count(); ++e) {
      weights.push_back({{"edge", id_value(inst.label(e))}, {"w_hat", report.plan.weights[e]}});
    }
  }
  json out = {{"problem", problem},
              {"status", to_string(report.status)},
              {"objective", report.objective},
              {"min_path", report.min_path},
              {"upgrades", std::move(upgrades)},
              {"weights", std::move(weights)},
              {"detail", report.detail},
              {"trace_length", report.trace.size()},
              {"cit_calls", report.cit_calls},
              {"dit_calls", report.dit_calls},
              {"wall_time_s", report.wall_seconds}};
  if (report.lambda_star) out["lambda_star"] = *report.lambda_star;
  if (report.k_star) out["k_star"] = *report.k_star;
  if (report.witness_leaf) out["witness_leaf"] = id_value(inst.label(*report.witness_leaf));
  if (report.fallback_used) out["fallback_used"] = true;
  return out;
}

}  // namespace ditree

#include "brplan/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>
#include <utility>

namespace brplan {

using nlohmann::json;

namespace {

double require_number(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw std::invalid_argument("parse: missing or non-numeric \"" + std::string(key) +
                                "\" at " + where);
  }
  return j.at(key).get<double>();
}

std::string require_string(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw std::invalid_argument("parse: missing or non-string \"" + std::string(key) +
                                "\" at " + where);
  }
  return j.at(key).get<std::string>();
}

void parse_node(const json& j, TreeBuilder& b, std::int32_t at, const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument("parse: node at " + where + " is not an object");
  if (!j.contains("edges")) {
    // Leaf; "f" optional, the unrepresented future defaults to 0.
    if (j.contains("f")) b.set_terminal_value(at, require_number(j, "f", where));
    return;
  }
  b.set_alpha(at, require_number(j, "alpha", where));
  const json& edges = j.at("edges");
  if (!edges.is_array() || edges.empty()) {
    throw std::invalid_argument("parse: \"edges\" at " + where + " must be a nonempty array");
  }
  for (const json& e : edges) {
    const std::string label = require_string(e, "x", where);
    const std::string child_where = where == "root" ? label : where + "/" + label;
    const double q = require_number(e, "q", child_where);
    const double r = e.contains("r") ? require_number(e, "r", child_where) : 0.0;
    if (!e.contains("child")) {
      throw std::invalid_argument("parse: edge at " + child_where + " has no \"child\"");
    }
    const std::int32_t child = b.add_edge(at, label, q, r);
    parse_node(e.at("child"), b, child, child_where);
  }
}

json node_to_json(const DecisionTree& t, std::int32_t ni) {
  const TreeNode& n = t.node(ni);
  json j = json::object();
  if (n.is_leaf()) {
    j["f"] = n.terminal_value;
    return j;
  }
  j["alpha"] = n.alpha;
  json edges = json::array();
  for (const TreeEdge& e : n.edges) {
    json je = json::object();
    je["x"] = e.label;
    je["q"] = e.prior;
    je["r"] = e.reward;
    je["child"] = node_to_json(t, e.child);
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  try {
    return json::parse(in);  // parse errors carry byte positions
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

bool looks_like_problem(const json& doc) { return doc.is_object() && doc.contains("outcomes"); }

SingleStepProblem parse_problem_json(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("parse: problem document is not an object");
  const double alpha = require_number(doc, "alpha", "problem");
  if (!doc.contains("outcomes") || !doc.at("outcomes").is_array() || doc.at("outcomes").empty()) {
    throw std::invalid_argument("parse: problem needs a nonempty \"outcomes\" array");
  }

  Labels labels;
  std::vector<double> prior;
  std::vector<double> utility;
  for (const json& o : doc.at("outcomes")) {
    labels.push_back(require_string(o, "id", "outcomes"));
    prior.push_back(require_number(o, "q", "outcome '" + labels.back() + "'"));
    utility.push_back(require_number(o, "u", "outcome '" + labels.back() + "'"));
  }
  std::optional<double> target;
  if (doc.contains("target")) target = require_number(doc, "target", "problem");

  SingleStepProblem p =
      make_problem(alpha, std::move(prior), std::move(utility), target,
                   make_labels(std::move(labels)));
  validate_problem(p);
  return p;
}

SingleStepProblem parse_problem_file(const std::filesystem::path& path) {
  return parse_problem_json(load_json_file(path));
}

json problem_to_json(const SingleStepProblem& p) {
  json doc = json::object();
  doc["alpha"] = p.alpha;
  if (p.target) doc["target"] = *p.target;
  json outcomes = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json o = json::object();
    o["id"] = (*p.outcomes)[i];
    o["q"] = p.prior[i];
    o["u"] = p.utility[i];
    outcomes.push_back(std::move(o));
  }
  doc["outcomes"] = std::move(outcomes);
  return doc;
}

DecisionTree parse_tree_json(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("parse: tree document is not an object");
  if (!doc.contains("horizon") || !doc.at("horizon").is_number_integer()) {
    throw std::invalid_argument("parse: tree needs an integer \"horizon\"");
  }
  const auto horizon = doc.at("horizon").get<std::int32_t>();
  if (!doc.contains("root")) throw std::invalid_argument("parse: tree needs a \"root\" node");

  TreeBuilder b(horizon);
  parse_node(doc.at("root"), b, b.root(), "root");
  return b.finish();
}

DecisionTree parse_tree_file(const std::filesystem::path& path) {
  return parse_tree_json(load_json_file(path));
}

json tree_to_json(const DecisionTree& t) {
  json doc = json::object();
  doc["horizon"] = t.horizon();
  doc["root"] = node_to_json(t, DecisionTree::root());
  return doc;
}

std::string format_number(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  if (res.ec != std::errc()) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf, res.ptr);
}

}  // namespace brplan

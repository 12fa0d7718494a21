#ifndef BRPLAN_IO_HPP
#define BRPLAN_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "brplan/problem.hpp"
#include "brplan/tree.hpp"

namespace brplan {

/// Problem document:
///   {"alpha": real, "target": real?, "outcomes": [{"id": str, "q": real, "u": real}]}
SingleStepProblem parse_problem_json(const nlohmann::json& doc);
SingleStepProblem parse_problem_file(const std::filesystem::path& path);
nlohmann::json problem_to_json(const SingleStepProblem& p);

/// Tree document:
///   {"horizon": int, "root": NODE}
///   NODE = {"alpha": real, "edges": [{"x": str, "q": real, "r": real, "child": NODE|LEAF}]}
///   LEAF = {"f": real}  ("f" optional, defaults to 0)
DecisionTree parse_tree_json(const nlohmann::json& doc);
DecisionTree parse_tree_file(const std::filesystem::path& path);
nlohmann::json tree_to_json(const DecisionTree& t);

/// Locale-independent decimal rendering with 12 significant digits (shortest
/// form), used for every number that reaches a CSV file.
std::string format_number(double v);

/// True if the document looks like a problem file rather than a tree file.
bool looks_like_problem(const nlohmann::json& doc);

nlohmann::json load_json_file(const std::filesystem::path& path);

}  // namespace brplan

#endif  // BRPLAN_IO_HPP

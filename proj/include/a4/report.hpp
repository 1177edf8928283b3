// Output documents for the command-line front end and the computations
// behind each subcommand.
#pragma once

#include "a4/exact.hpp"
#include "a4/fan_d4.hpp"
#include "a4/intersection.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace a4 {

using Json = nlohmann::ordered_json;

struct NamedValue {
  std::string name;
  Rational value;
  std::string note;
};

struct OutputDocument {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<NamedValue> results;
  Json data = Json::object();
  std::vector<std::string> notes;

  const NamedValue* find(const std::string& name) const;
};

/// {"numerator": "...", "denominator": "..."}; never a float.
Json rational_to_json(const Rational& r);
/// Throws std::invalid_argument on a malformed object.
Rational rational_from_json(const Json& j);

/// Keys in fixed order. A "generated_at" UTC timestamp is added unless
/// `reproducible` is set.
Json to_json(const OutputDocument& doc, bool reproducible);
std::string to_text(const OutputDocument& doc);

/// Monomial grammar: factor ('*' factor)*, factor = ('E' | 'D' k) ['^' exp],
/// 1 <= k < ray_count, whitespace ignored, repeated factors multiply.
/// Throws UsageError on bad syntax or a total degree other than `degree`.
DivisorMonomial parse_monomial(const std::string& text, std::size_t ray_count, unsigned degree);

/// Lazily built shared state: the star fan, its stabilizer, the solved
/// linear system and the recursive evaluator.
class Session {
 public:
  explicit Session(IntMatrix basis = default_root_basis()) : basis_(std::move(basis)) {}

  const StarFan& star();
  const Stabilizer& stabilizer();
  const IntersectionEngine& engine();
  RecursiveEvaluator& evaluator();

 private:
  IntMatrix basis_;
  std::optional<StarFan> star_;
  std::optional<Stabilizer> stabilizer_;
  std::optional<IntersectionEngine> engine_;
  std::optional<RecursiveEvaluator> evaluator_;
};

OutputDocument fan_report(Session& session);

/// `expr` is "e10" or a monomial. Reports the linear-system value, the
/// recursive value and whether they agree; for E^10 also the moduli-space
/// value divided by the stabilizer order.
OutputDocument intersection_report(Session& session, const std::string& expr);

enum class Basis { LFE, Geometric };

struct TablesOptions {
  unsigned genus = 4;
  bool stack = false;
  bool signed_bernoulli = false;
  Basis basis = Basis::LFE;
};

/// `which` is igusa, voronoi or ltop. Throws UsageError otherwise.
OutputDocument tables_report(Session& session, const std::string& which, const TablesOptions& options);

}  // namespace a4

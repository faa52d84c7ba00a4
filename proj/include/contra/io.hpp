#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "contra/contramodule.hpp"
#include "contra/functors.hpp"
#include "contra/sl2.hpp"

namespace contra {

using json = nlohmann::json;

/// Input does not match a schema; pointer locates the offending field.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : std::runtime_error(pointer + ": " + message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// Parsing context: the field used when an input does not name one.
struct ParseContext {
  std::optional<Field> field;
};

json to_json(const Field& f);
Field field_from_json(const json& j, const std::string& ptr);

json to_json(const Mat& m);
Mat mat_from_json(const json& j, const Field& f, const std::string& ptr);

json to_json(const Coalgebra& c);
CoalgebraPtr coalgebra_from_json(const json& j, const ParseContext& ctx, const std::string& ptr);

json to_json(const Comodule& m);
Comodule comodule_from_json(const json& j, const ParseContext& ctx, const std::string& ptr);

json to_json(const Contramodule& b);
Contramodule contramodule_from_json(const json& j, const ParseContext& ctx, const std::string& ptr);

json to_json(const CoalgebraMorphism& rho);
CoalgebraMorphism morphism_from_json(const json& j, const ParseContext& ctx, const std::string& ptr);

ContraSES ses_from_json(const json& j, const ParseContext& ctx, const std::string& ptr);

json to_json(const Verdict& v);

}  // namespace contra

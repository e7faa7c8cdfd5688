#pragma once

#include "kinsila/cli/input.hpp"

#include <cstdlib>

namespace kinsila::cli {

enum ExitCode : int { Classified = 0, ValidationFailure = 1, ParseError = 2, Fault = 3 };

/// Nonzero coordinates of v, keyed by basis label in basis order.
inline Json vector_json(const LieAlgebra& L, const Vec& v) {
  Json out = Json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!la::is_zero(v[k])) out[L.labels()[k]] = la::to_string(v[k]);
  return out;
}

inline Json matrix_json(const la::Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(la::to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json subspace_json(const LieAlgebra& L, const la::Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) {
    if (s.ambient_dim() == L.dim()) {
      basis.push_back(vector_json(L, v));
    } else {
      Json plain = Json::array();
      for (const auto& x : v) plain.push_back(la::to_string(x));
      basis.push_back(std::move(plain));
    }
  }
  return {{"dim", s.dim()}, {"basis", std::move(basis)}};
}

inline Json certificate_json(const LieAlgebra& L, const kin::Certificate& c) {
  Json value = std::visit(
      [&](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, la::Subspace>) return {{"subspace", subspace_json(L, v)}};
        else if constexpr (std::is_same_v<T, la::Mat>) return {{"matrix", matrix_json(v)}};
        else if constexpr (std::is_same_v<T, Rational>) return {{"rational", la::to_string(v)}};
        else return {{"text", v}};
      },
      c.value);
  return {{"name", c.name}, {"claim", c.claim}, {"holds", c.holds}, {"value", std::move(value)}};
}

/// Sign of mu when A^2 = mu id, as "+" or "-".
inline Json mu_sign(const kin::SymplecticData& sd) {
  if (sd.z_action != kin::ZAction::Semisimple) return nullptr;
  const la::Mat a2 = sd.a * sd.a;
  const Rational mu = a2.rows() ? a2(0, 0) : Rational(0);
  if (a2 != mu * la::Mat::identity(a2.rows()) || la::is_zero(mu)) return nullptr;
  return sgn(mu) > 0 ? "+" : "-";
}

struct Outcome {
  Json report;
  int exit_code = Classified;
};

namespace detail {

inline Json skeleton(const std::string& name, const std::vector<std::string>& basis, const catalog::Roles& roles) {
  Json r;
  r["name"] = name;
  r["dim"] = basis.size();
  r["basis"] = basis;
  r["roles"] = {{"Z", roles.z}, {"s", roles.s}, {"P", roles.p}};
  r["validation"] = nullptr;
  r["sigma_check"] = nullptr;
  r["omega"] = nullptr;
  r["z_action"] = nullptr;
  r["transvection"] = nullptr;
  r["label"] = nullptr;
  r["decomposability"] = nullptr;
  r["certificates"] = Json::array();
  r["warnings"] = Json::array();
  r["fault"] = nullptr;
  return r;
}

inline Json item_json(std::string_view code, std::string_view check, std::string_view status, const std::string& detail) {
  return {{"code", code}, {"check", check}, {"status", status}, {"detail", detail}};
}

inline constexpr std::string_view kJacobiCode = "NOT_A_LIE_ALGEBRA";
inline constexpr std::string_view kJacobiCheck = "the brackets satisfy antisymmetry and the Jacobi identity";

}  // namespace detail

/// Validation and classification of a Lie algebra with roles, as a report.
inline Outcome run_pipeline(const std::string& name, std::shared_ptr<const LieAlgebra> algebra,
                            const catalog::Roles& roles) {
  const LieAlgebra& L = *algebra;
  Outcome out{detail::skeleton(name, L.labels(), roles), Classified};
  Json& r = out.report;

  const auto sub = [&](const std::vector<std::string>& labels) { return catalog::role_subspace(L, labels); };
  const kin::Validation v = kin::validate(algebra, sub(roles.z), sub(roles.s), sub(roles.p));
  Json items = Json::array();
  items.push_back(detail::item_json(detail::kJacobiCode, detail::kJacobiCheck, "pass", ""));
  for (const auto& it : v.items)
    items.push_back(detail::item_json(kin::to_string(it.code), it.check, kin::to_string(it.status), it.detail));
  r["validation"] = {{"ok", v.ok()},
                     {"failure", v.failure ? Json(kin::to_string(*v.failure)) : Json(nullptr)},
                     {"items", std::move(items)}};
  if (!v.ok()) {
    out.exit_code = ValidationFailure;
    return out;
  }

  const kin::KinTriple& t = *v.triple;
  try {
    const kin::ClassificationReport c = kin::classify(t);
    r["sigma_check"] = {{"automorphism", c.involution.automorphism},
                        {"involutive", c.involution.involutive},
                        {"eigenspace_brackets", c.involution.inclusions}};
    const auto& sd = c.symplectic;
    r["omega"] = {{"p_basis", subspace_json(L, t.p)["basis"]},
                  {"matrix", matrix_json(sd.omega)},
                  {"rank", la::rank(sd.omega)},
                  {"radical_dim", sd.radical.dim()}};
    r["z_action"] = {{"type", kin::to_string(sd.z_action)},
                     {"mu_sign", mu_sign(sd)},
                     {"squares_to_zero", sd.a_squared_zero}};
    r["transvection"] = {{"pp_dim", c.transvection.pp.dim()},
                         {"n_dim", c.transvection.n.dim()},
                         {"holonomy_dim", c.transvection.holonomy_dim},
                         {"flat", c.transvection.flat},
                         {"solvable", c.transvection.solvable}};
    r["label"] = kin::to_string(c.label);
    r["decomposability"] = c.decomposability.empty() ? Json(nullptr) : Json(c.decomposability);
    for (const auto& cert : c.certificates) r["certificates"].push_back(certificate_json(L, cert));
    r["warnings"] = c.warnings;
  } catch (const TheoremViolation& e) {
    r["fault"] = {{"theorem", e.theorem()}, {"certificate", e.certificate()}};
    out.exit_code = Fault;
  }
  return out;
}

/// Builds the algebra from a parsed document and runs the pipeline. Brackets
/// that do not define a Lie algebra are a validation failure.
inline Outcome run_document(const InputDocument& doc) {
  std::shared_ptr<const LieAlgebra> algebra;
  try {
    algebra = std::make_shared<const LieAlgebra>(doc.basis, structure_constants(doc));
  } catch (const InvalidLieAlgebra& e) {
    Outcome out{detail::skeleton(doc.name, doc.basis, doc.roles), ValidationFailure};
    Json items = Json::array();
    items.push_back(detail::item_json(detail::kJacobiCode, detail::kJacobiCheck, "fail", e.what()));
    out.report["validation"] = {{"ok", false}, {"failure", detail::kJacobiCode}, {"items", std::move(items)}};
    return out;
  }
  return run_pipeline(doc.name, std::move(algebra), doc.roles);
}

inline bool color_allowed() {
  const char* v = std::getenv("NO_COLOR");
  return v == nullptr || *v == '\0';
}

/// Human-readable rendering of a report.
inline std::string render_text(const Json& r, bool color) {
  auto paint = [&](std::string_view code, const std::string& s) {
    return color ? "\x1b[" + std::string(code) + "m" + s + "\x1b[0m" : s;
  };
  auto status = [&](const std::string& s) {
    if (s == "pass" || s == "holds") return paint("32", s);
    if (s == "fail" || s == "fails") return paint("31", s);
    return paint("2", s);
  };
  auto yes = [](const Json& b) { return b.get<bool>() ? std::string("yes") : std::string("no"); };
  auto count = [](const Json& b) { return std::to_string(b.get<std::size_t>()); };

  std::string out = paint("1", r["name"].get<std::string>()) + " (dim " + count(r["dim"]) + ")\n";
  const Json& v = r["validation"];
  out += "validation: " + std::string(v["ok"].get<bool>() ? paint("32", "ok") : paint("31", "failed")) + "\n";
  for (const auto& it : v["items"]) {
    out += "  [" + status(it["status"].get<std::string>()) + "] " + it["code"].get<std::string>() + "  " +
           it["check"].get<std::string>();
    if (!it["detail"].get<std::string>().empty()) out += " (" + it["detail"].get<std::string>() + ")";
    out += "\n";
  }
  if (!r["sigma_check"].is_null()) {
    const Json& s = r["sigma_check"];
    out += "sigma: automorphism " + yes(s["automorphism"]) + ", involutive " + yes(s["involutive"]) +
           ", eigenspace brackets " + yes(s["eigenspace_brackets"]) + "\n";
  }
  if (!r["omega"].is_null())
    out += "omega: rank " + count(r["omega"]["rank"]) + ", radical dim " + count(r["omega"]["radical_dim"]) + "\n";
  if (!r["z_action"].is_null()) {
    out += "z-action: " + r["z_action"]["type"].get<std::string>();
    if (!r["z_action"]["mu_sign"].is_null()) out += ", mu " + r["z_action"]["mu_sign"].get<std::string>();
    out += "\n";
  }
  if (!r["transvection"].is_null()) {
    const Json& t = r["transvection"];
    out += "transvection: dim [P,P] " + count(t["pp_dim"]) + ", dim n " + count(t["n_dim"]) + ", holonomy " +
           count(t["holonomy_dim"]) + (t["solvable"].get<bool>() ? ", solvable" : "") + "\n";
  }
  if (!r["label"].is_null()) out += "label: " + paint("1", r["label"].get<std::string>()) + "\n";
  if (!r["decomposability"].is_null()) out += "decomposability: " + r["decomposability"].get<std::string>() + "\n";
  if (!r["certificates"].empty()) {
    out += "certificates:\n";
    for (const auto& c : r["certificates"]) {
      out += "  [" + status(c["holds"].get<bool>() ? "holds" : "fails") + "] " + c["name"].get<std::string>() + ": " +
             c["claim"].get<std::string>();
      const Json& val = c["value"];
      if (val.contains("subspace")) out += " (dim " + count(val["subspace"]["dim"]) + ")";
      else if (val.contains("rational")) out += " (" + val["rational"].get<std::string>() + ")";
      else if (val.contains("text")) out += " (" + val["text"].get<std::string>() + ")";
      out += "\n";
    }
  }
  for (const auto& w : r["warnings"]) out += paint("33", "warning: ") + w.get<std::string>() + "\n";
  if (!r["fault"].is_null())
    out += paint("31", "FAULT: ") + r["fault"]["theorem"].get<std::string>() + ": " +
           r["fault"]["certificate"].get<std::string>() + "\n";
  return out;
}

}  // namespace kinsila::cli

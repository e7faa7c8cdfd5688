#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace kinsila::kin {

enum class Label {
  FlatRadEqualsP,
  FlatHeisenberg,
  FlatOther,
  ThreeGradedParaKahler,
  PseudoKahler,
  PoincareType,
  Unclassified,
};

inline constexpr std::array<Label, 7> all_labels{Label::FlatRadEqualsP,        Label::FlatHeisenberg,
                                                 Label::FlatOther,             Label::ThreeGradedParaKahler,
                                                 Label::PseudoKahler,          Label::PoincareType,
                                                 Label::Unclassified};

constexpr std::string_view to_string(Label l) {
  switch (l) {
    case Label::FlatRadEqualsP: return "flat-rad-equals-P";
    case Label::FlatHeisenberg: return "flat-heisenberg";
    case Label::FlatOther: return "flat-other";
    case Label::ThreeGradedParaKahler: return "three-graded-para-kahler";
    case Label::PseudoKahler: return "pseudo-kahler";
    case Label::PoincareType: return "poincare-type";
    case Label::Unclassified: return "unclassified";
  }
  return "unclassified";
}

inline std::optional<Label> parse_label(std::string_view s) {
  for (Label l : all_labels)
    if (to_string(l) == s) return l;
  return std::nullopt;
}

/// Validation failure codes, in the order the checks run.
enum class Failure {
  ZNotLine,
  ShapeMismatch,
  NotDirectSum,
  SNotSubalgebra,
  ZNotCentralizing,
  PNotSStable,
  PNotTwoCopies,
  VNotSimple,
  VNotFaithful,
  WedgeConditionFails,
  NoInvariantForm,
};

constexpr std::string_view to_string(Failure f) {
  switch (f) {
    case Failure::ZNotLine: return "Z_NOT_LINE";
    case Failure::ShapeMismatch: return "SHAPE_MISMATCH";
    case Failure::NotDirectSum: return "NOT_DIRECT_SUM";
    case Failure::SNotSubalgebra: return "S_NOT_SUBALGEBRA";
    case Failure::ZNotCentralizing: return "Z_NOT_CENTRALIZING";
    case Failure::PNotSStable: return "P_NOT_S_STABLE";
    case Failure::PNotTwoCopies: return "P_NOT_TWO_COPIES";
    case Failure::VNotSimple: return "V_NOT_SIMPLE";
    case Failure::VNotFaithful: return "V_NOT_FAITHFUL";
    case Failure::WedgeConditionFails: return "WEDGE_CONDITION_FAILS";
    case Failure::NoInvariantForm: return "NO_INVARIANT_FORM";
  }
  return "UNKNOWN";
}

}  // namespace kinsila::kin

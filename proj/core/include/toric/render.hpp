#pragma once

#include "toric/classifier.hpp"

#include <map>
#include <string>

namespace toric {

struct RenderStyle {
  std::map<VerdictClass, std::string> fill{
      {VerdictClass::DisplaceableProbe, "#D9D9D9"},
      {VerdictClass::DisplaceableSymmetricExt, "#A6A6A6"},
      {VerdictClass::DisplaceableFlaggedExt, "#A6A6A6"},
      {VerdictClass::NondispCertified, "#595959"},
      {VerdictClass::NondispCandidate, "url(#hatch)"},
      {VerdictClass::Unknown, "#FFFFFF"},
      {VerdictClass::Exterior, "none"},
  };
  double scale = 40;  // pixels per unit
  bool legend = true;
};

// One rect per cell (centred on the cell point), the polygon outline clipped to the
// padded bbox, and an optional legend. Output depends only on the inputs.
std::string emit_svg(const ClassificationGrid& g, const RenderStyle& style = {});

}  // namespace toric

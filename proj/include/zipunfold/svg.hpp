#pragma once

#include <string>

#include "zipunfold/foldverify.hpp"

namespace zipunfold {

/// 100 px per unit edge length.
inline constexpr double kSvgScale = 100.0;

/// Net layout: faces, boundary, and the two path endpoints marked.
std::string net_svg(const Net& n);

/// Target outline with every facet image drawn on top (translucent, so the
/// two layers show as darker fill).
std::string fold_svg(const FoldSpec& f);

}  // namespace zipunfold

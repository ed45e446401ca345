#pragma once

#include <string>

#include "blc/ast.hpp"

namespace blc {

// Canonical style is parenthesis-minimal and reparses to an alpha-equal
// object. Compact drops the cosmetic whitespace.
enum class Style { Canonical, Compact };

std::string show(const TyPtr& t, Style style = Style::Canonical);
std::string show(const BlcPtr& d, Style style = Style::Canonical);
std::string show(const DcPtr& d, Style style = Style::Canonical);

}  // namespace blc

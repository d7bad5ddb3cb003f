#pragma once

// JSON form of derivations: {"format": 1, "kind", "nominals", "derivation"}
// where each node is {rule, payload, conclusion, premises}. Terms are stored
// in concrete syntax, so reading needs the module that declares their
// types and constants. Writing what was read reproduces the same bytes.

#include <stdexcept>
#include <string>
#include <string_view>

#include "lg/folnb.hpp"
#include "lg/syntax.hpp"

namespace lg {

inline constexpr int kFormatVersion = 1;

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string deriv_to_json(const Deriv& d);
Deriv deriv_from_json(const Module& m, std::string_view text);

std::string fderiv_to_json(const FDeriv& d);
FDeriv fderiv_from_json(const Module& m, std::string_view text);

}  // namespace lg

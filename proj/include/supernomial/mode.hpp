#pragma once

#include <stdexcept>
#include <string>

namespace supernomial {

// Which supernomial family: products of complete (symmetric) or elementary
// (antisymmetric) symmetric functions.
enum class Mode { symmetric, antisymmetric };

inline std::string to_string(Mode mode) { return mode == Mode::symmetric ? "sym" : "anti"; }

inline Mode parse_mode(const std::string& text) {
  if (text == "sym" || text == "symmetric")
    return Mode::symmetric;
  if (text == "anti" || text == "antisymmetric")
    return Mode::antisymmetric;
  throw std::invalid_argument("unknown mode '" + text + "' (expected sym or anti)");
}

} // namespace supernomial

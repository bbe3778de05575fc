#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace tpcheck {

/// Three-valued truth, ordered False < Unknown < True.
enum class Tri : std::uint8_t { False = 0, Unknown = 1, True = 2 };

constexpr Tri comp(Tri v) noexcept {
  switch (v) {
    case Tri::False: return Tri::True;
    case Tri::True: return Tri::False;
    case Tri::Unknown: return Tri::Unknown;
  }
  return Tri::Unknown;
}

constexpr Tri tri_min(Tri a, Tri b) noexcept { return a < b ? a : b; }
constexpr Tri tri_max(Tri a, Tri b) noexcept { return a < b ? b : a; }

constexpr Tri to_tri(bool b) noexcept { return b ? Tri::True : Tri::False; }

/// Text form used by every file format: T, F or ?.
constexpr char tri_char(Tri v) noexcept {
  switch (v) {
    case Tri::False: return 'F';
    case Tri::True: return 'T';
    case Tri::Unknown: return '?';
  }
  return '?';
}

constexpr std::optional<Tri> tri_from_text(std::string_view s) noexcept {
  if (s == "T") return Tri::True;
  if (s == "F") return Tri::False;
  if (s == "?") return Tri::Unknown;
  return std::nullopt;
}

}  // namespace tpcheck

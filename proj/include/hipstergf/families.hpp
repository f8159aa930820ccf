#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace hipstergf {

/// The three tree families supported by the library.
enum class FamilyId {
  BinaryPlane,         // <=2 children, single child marked left or right
  PlaneOneTwo,         // <=2 ordered children, no marks
  ColoredRightBinary,  // binary with every right edge colored blue or red
};

/// Which series a functional equation produces: the exact hipster series, or
/// the upper/lower bounding series obtained by swapping the substituted term.
enum class BoundKind { Exact, Upper, Lower };

inline constexpr std::array<FamilyId, 3> kAllFamilies = {
    FamilyId::BinaryPlane, FamilyId::PlaneOneTwo, FamilyId::ColoredRightBinary};

std::string_view family_name(FamilyId family);  // "binary" / "one2" / "colored"
std::optional<FamilyId> parse_family(std::string_view name);
std::string_view bound_name(BoundKind kind);

}  // namespace hipstergf

#include "hipstergf/families.hpp"

namespace hipstergf {

std::string_view family_name(FamilyId family) {
  switch (family) {
    case FamilyId::BinaryPlane:
      return "binary";
    case FamilyId::PlaneOneTwo:
      return "one2";
    case FamilyId::ColoredRightBinary:
      return "colored";
  }
  return "?";
}

std::optional<FamilyId> parse_family(std::string_view name) {
  for (FamilyId f : kAllFamilies) {
    if (name == family_name(f)) return f;
  }
  return std::nullopt;
}

std::string_view bound_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::Exact:
      return "exact";
    case BoundKind::Upper:
      return "upper";
    case BoundKind::Lower:
      return "lower";
  }
  return "?";
}

}  // namespace hipstergf

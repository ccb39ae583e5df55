#pragma once

#include <compare>
#include <cstdint>

namespace streamcert {

using Node = std::int32_t;

struct Arc {
  Node from = 0;
  Node to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

enum class CertKind { kNode, kArc };
enum class BranchingKind { kOut, kIn };

}  // namespace streamcert

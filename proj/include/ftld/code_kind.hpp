#pragma once

#include <array>
#include <optional>
#include <string>

namespace ftld {

/// The four detection-code flavors handled by this library, ordered by the
/// fault they tolerate: none, one detector removed, one false negative, one
/// arbitrary single report error.
enum class CodeKind { LD, RED, DET, ERR };

inline constexpr std::array<CodeKind, 4> all_code_kinds = {CodeKind::LD, CodeKind::RED,
                                                           CodeKind::DET, CodeKind::ERR};

/// Minimum domination each kind forces on every vertex (property i of the
/// respective characterization).
constexpr int k_min(CodeKind kind) {
    switch (kind) {
        case CodeKind::LD: return 1;
        case CodeKind::RED: return 2;
        case CodeKind::DET: return 2;
        case CodeKind::ERR: return 3;
    }
    return 0;
}

constexpr const char* code_kind_name(CodeKind kind) {
    switch (kind) {
        case CodeKind::LD: return "LD";
        case CodeKind::RED: return "RED";
        case CodeKind::DET: return "DET";
        case CodeKind::ERR: return "ERR";
    }
    return "?";
}

inline std::optional<CodeKind> parse_code_kind(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "ld") return CodeKind::LD;
    if (s == "red") return CodeKind::RED;
    if (s == "det") return CodeKind::DET;
    if (s == "err") return CodeKind::ERR;
    return std::nullopt;
}

} // namespace ftld

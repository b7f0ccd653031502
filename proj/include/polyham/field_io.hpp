#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "polyham/fields.hpp"
#include "polyham/phase.hpp"

namespace polyham {

// MTHF v1: one line of JSON
//   {"magic":"MTHF","version":1,"p":..,"m":..,"periods":[..],
//    "resolution":[..],"real":true}
// optionally carrying "layout":{"n":..,"p":..} for phase fields, then a
// newline, then the samples as 64-bit little-endian IEEE floats, row-major
// in the declared axis order with the m components innermost. Round trips
// are bit exact.
struct MthfField {
    GridField field;
    std::optional<PhaseLayout> layout;
};

void write_mthf(std::ostream& os, const GridField& field,
                const std::optional<PhaseLayout>& layout = std::nullopt);
void write_mthf(const std::filesystem::path& path, const GridField& field,
                const std::optional<PhaseLayout>& layout = std::nullopt);

MthfField read_mthf(std::istream& is);
MthfField read_mthf(const std::filesystem::path& path);

} // namespace polyham

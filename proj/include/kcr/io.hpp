#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "kcr/graph.hpp"
#include "kcr/hardness.hpp"
#include "kcr/oracle.hpp"

namespace kcr::io {

/// Parse failure of one of the JSON file formats.
class FormatError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// "kcr-instance" version 1. The congestion field may be omitted, e.g. when
/// a solver derives it from an offset.
struct InstanceFile {
    Digraph graph;
    std::vector<Demand> demands;
    std::optional<std::uint32_t> congestion;

    /// Throws InvalidInput if congestion is absent.
    Instance instance() const;

    friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

InstanceFile from_instance(const Instance& inst);

// Serializers emit a fixed key order and layout, so equal values always
// produce identical bytes.
std::string serialize_instance(const InstanceFile& f);
std::string serialize_witness(const RoutingWitness& w);
std::string serialize_psi(const PsiInstance& p);
/// "kcr-hard-map": parameters, edge order, and per-vertex / per-demand roles.
std::string serialize_hard_map(const HardInstance& hi);

InstanceFile parse_instance(std::string_view text);
RoutingWitness parse_witness(std::string_view text);
PsiInstance parse_psi(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace kcr::io

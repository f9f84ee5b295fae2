#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colourbench/graph.hpp"

namespace colourbench {

/// The colouring discipline. Each kind strictly refines the previous one:
/// injective => star => acyclic => proper.
enum class PropertyKind { proper, acyclic, star, injective };

std::string_view to_string(PropertyKind p);
std::optional<PropertyKind> parse_property(std::string_view text);

/// Total map vertex -> colour, colours 0-based. Display code may shift to 1-based.
class Colouring {
public:
    Colouring() = default;
    explicit Colouring(std::vector<int> colours) : colours_(std::move(colours)) {}
    explicit Colouring(int n, int fill = 0) : colours_(static_cast<std::size_t>(n), fill) {}

    int size() const noexcept { return static_cast<int>(colours_.size()); }
    int operator[](Vertex v) const { return colours_.at(static_cast<std::size_t>(v)); }
    int& operator[](Vertex v) { return colours_.at(static_cast<std::size_t>(v)); }
    const std::vector<int>& values() const noexcept { return colours_; }

    /// 1 + largest colour used; 0 for the empty colouring.
    int num_colours() const;
    /// Number of distinct colours that actually occur.
    int distinct_colours() const;
    /// Colour classes indexed by colour (empty classes kept).
    std::vector<std::vector<Vertex>> classes() const;

    friend bool operator==(const Colouring&, const Colouring&) = default;

private:
    std::vector<int> colours_;
};

/// Total map edge id -> colour.
class EdgeColouring {
public:
    EdgeColouring() = default;
    explicit EdgeColouring(std::vector<int> colours) : colours_(std::move(colours)) {}

    int size() const noexcept { return static_cast<int>(colours_.size()); }
    int operator[](int id) const { return colours_.at(static_cast<std::size_t>(id)); }
    const std::vector<int>& values() const noexcept { return colours_; }
    /// Same colours read as a colouring of the line graph.
    Colouring as_vertex_colouring() const { return Colouring(colours_); }

    friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

private:
    std::vector<int> colours_;
};

}  // namespace colourbench

#include "colourbench/colouring.hpp"

#include <algorithm>

namespace colourbench {

std::string_view to_string(PropertyKind p)
{
    switch (p) {
    case PropertyKind::proper: return "proper";
    case PropertyKind::acyclic: return "acyclic";
    case PropertyKind::star: return "star";
    case PropertyKind::injective: return "injective";
    }
    return "?";
}

std::optional<PropertyKind> parse_property(std::string_view text)
{
    if (text == "proper") return PropertyKind::proper;
    if (text == "acyclic") return PropertyKind::acyclic;
    if (text == "star") return PropertyKind::star;
    if (text == "injective") return PropertyKind::injective;
    return std::nullopt;
}

int Colouring::num_colours() const
{
    int best = -1;
    for (int c : colours_) best = std::max(best, c);
    return best + 1;
}

int Colouring::distinct_colours() const
{
    std::vector<int> sorted = colours_;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::vector<std::vector<Vertex>> Colouring::classes() const
{
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(num_colours()));
    for (std::size_t v = 0; v < colours_.size(); ++v)
        out[static_cast<std::size_t>(colours_[v])].push_back(static_cast<Vertex>(v));
    return out;
}

}  // namespace colourbench

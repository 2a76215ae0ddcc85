#pragma once

#include <sstream>
#include <string>

#include "rowprod/embedding.hpp"
#include "rowprod/product.hpp"

namespace rowprod::svg {

/// Rendering knobs. Host cells are laid out on a fixed lattice: the row index
/// runs along x and the host vertex index along y, so path and caterpillar
/// hosts read left to right. Vertex fill is chosen by the guest tag's prefix
/// (the part before ':'), falling back to default_color.
struct RenderSpec {
    int cell = 28;
    int radius = 6;
    bool show_grid = true;
    bool dash_diagonals = true;
    std::map<std::string, std::string> role_colors;
    std::string default_color = "#4477aa";
};

namespace detail {

inline std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

}  // namespace detail

inline std::string render_svg(const Embedding& e, const RenderSpec& spec = {}) {
    validate(e.host);
    if (e.map.size() != static_cast<std::size_t>(e.guest.n))
        throw std::invalid_argument("render_svg: map not total on guest vertices");
    Graph host = materialize_host(e.host);
    const int margin = spec.cell;
    auto px = [&](int row) { return margin + row * spec.cell; };
    auto py = [&](int h) { return margin + h * spec.cell; };
    const int width = 2 * margin + (e.host.rows - 1) * spec.cell;
    const int height = 2 * margin + (host.n - 1) * spec.cell;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (spec.show_grid) {
        out << "<g fill=\"#dddddd\">\n";
        for (int h = 0; h < host.n; ++h)
            for (int r = 0; r < e.host.rows; ++r)
                out << "<circle cx=\"" << px(r) << "\" cy=\"" << py(h) << "\" r=\"1.5\"/>\n";
        out << "</g>\n";
    }

    out << "<g stroke=\"#333333\" stroke-width=\"1.5\">\n";
    for (auto [u, v] : e.guest.edges) {
        const Cell &cu = e.map[u], &cv = e.map[v];
        bool diagonal = cu.h != cv.h && cu.row != cv.row;
        out << "<line x1=\"" << px(cu.row) << "\" y1=\"" << py(cu.h) << "\" x2=\"" << px(cv.row)
            << "\" y2=\"" << py(cv.h) << '"';
        if (diagonal && spec.dash_diagonals) out << " stroke-dasharray=\"4 2\"";
        out << "/>\n";
    }
    out << "</g>\n";

    for (int v = 0; v < e.guest.n; ++v) {
        std::string color = spec.default_color;
        std::string tag;
        auto it = e.guest.vtag.find(v);
        if (it != e.guest.vtag.end()) {
            tag = it->second;
            auto cit = spec.role_colors.find(tag.substr(0, tag.find(':')));
            if (cit != spec.role_colors.end()) color = cit->second;
        }
        out << "<circle cx=\"" << px(e.map[v].row) << "\" cy=\"" << py(e.map[v].h) << "\" r=\""
            << spec.radius << "\" fill=\"" << color << "\" stroke=\"#222222\">";
        out << "<title>" << v;
        if (!tag.empty()) out << ' ' << detail::escape(tag);
        out << "</title></circle>\n";
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace rowprod::svg

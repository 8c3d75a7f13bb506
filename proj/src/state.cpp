#include "jsi/state.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace jsi {

RealMap gaussian_jsa(const FrequencyGrid& grid, double sigma_signal_nm, double sigma_idler_nm) {
    if (!(sigma_signal_nm > 0.0) || !(sigma_idler_nm > 0.0))
        throw std::invalid_argument("gaussian_jsa: sigmas must be positive");
    RealMap out(grid.n_signal, grid.n_idler);
    for (int u = 0; u < grid.n_signal; ++u) {
        const double xs = grid.wavelength_offset_signal_nm(u) / sigma_signal_nm;
        for (int v = 0; v < grid.n_idler; ++v) {
            const double xi = grid.wavelength_offset_idler_nm(v) / sigma_idler_nm;
            out(u, v) = std::exp(-0.5 * (xs * xs + xi * xi));
        }
    }
    return out;
}

RealMap polynomial_jsp(const FrequencyGrid& grid, const std::vector<PolyTerm>& coeffs) {
    for (const PolyTerm& t : coeffs)
        if (t.power_signal < 0 || t.power_idler < 0)
            throw std::invalid_argument("polynomial_jsp: powers must be >= 0");
    RealMap out(grid.n_signal, grid.n_idler, 0.0);
    for (int u = 0; u < grid.n_signal; ++u) {
        const double xs = grid.wavelength_offset_signal_nm(u);
        for (int v = 0; v < grid.n_idler; ++v) {
            const double xi = grid.wavelength_offset_idler_nm(v);
            double phi = 0.0;
            for (const PolyTerm& t : coeffs)
                phi += t.coeff * std::pow(xs, t.power_signal) * std::pow(xi, t.power_idler);
            out(u, v) = phi;
        }
    }
    return out;
}

RealMap phase_from_image(const GrayImage& image, const FrequencyGrid& grid, double scale_rad) {
    if (image.width <= 0 || image.height <= 0) throw ImageError("phase_from_image: empty image");
    std::uint8_t lo = 255, hi = 0;
    for (std::uint8_t p : image.pixels) {
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    RealMap out(grid.n_signal, grid.n_idler, 0.0);
    if (hi == lo) {
        std::cerr << "phase_from_image: image has zero dynamic range, phase set to 0 everywhere\n";
        return out;
    }
    if (scale_rad == 0.0) return out;
    const double span = static_cast<double>(hi - lo);
    for (int u = 0; u < grid.n_signal; ++u) {
        // nearest-neighbor: sample the source pixel whose center is closest
        const int src_r = std::min(image.height - 1, static_cast<int>((u + 0.5) * image.height / grid.n_signal));
        for (int v = 0; v < grid.n_idler; ++v) {
            const int src_c = std::min(image.width - 1, static_cast<int>((v + 0.5) * image.width / grid.n_idler));
            out(u, v) = scale_rad * (image.at(src_r, src_c) - lo) / span;
        }
    }
    return out;
}

RealMap phase_from_image(const std::string& png_path, const FrequencyGrid& grid, double scale_rad) {
    return phase_from_image(read_png_gray(png_path), grid, scale_rad);
}

StateSpec default_state_spec() {
    StateSpec s;
    s.n = 32;
    s.center_nm = 820.0;
    s.span_nm = 10.0;
    s.jsa = GaussianJsaSpec{1.5, 1.5};
    // cross-correlated phase plus mild curvature; amplitudes stay uncorrelated
    s.jsp = PolynomialJspSpec{{{1, 1, 0.85}, {2, 0, 0.12}, {0, 2, 0.18}}};
    return s;
}

ComplexField build_truth(const StateSpec& spec) {
    const FrequencyGrid grid = spec.grid();
    const RealMap amp = gaussian_jsa(grid, spec.jsa.sigma_s_nm, spec.jsa.sigma_i_nm);
    RealMap phase;
    if (const auto* poly = std::get_if<PolynomialJspSpec>(&spec.jsp))
        phase = polynomial_jsp(grid, poly->coeffs);
    else {
        const auto& img = std::get<ImageJspSpec>(spec.jsp);
        phase = phase_from_image(img.path, grid, img.scale_rad);
    }
    return assemble_field(grid, amp, phase);
}

namespace {

using nlohmann::json;

json jsp_to_json(const StateSpec& spec) {
    if (const auto* poly = std::get_if<PolynomialJspSpec>(&spec.jsp)) {
        json coeffs = json::array();
        for (const PolyTerm& t : poly->coeffs)
            coeffs.push_back({{"p", t.power_signal}, {"q", t.power_idler}, {"c", t.coeff}});
        return {{"type", "polynomial"}, {"coeffs", coeffs}};
    }
    const auto& img = std::get<ImageJspSpec>(spec.jsp);
    return {{"type", "image"}, {"path", img.path}, {"scale_rad", img.scale_rad}};
}

}  // namespace

StateSpec state_spec_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("state spec: invalid JSON: ") + e.what());
    }
    try {
        StateSpec s;
        const json& g = j.at("grid");
        s.n = g.at("n").get<int>();
        s.center_nm = g.at("center_nm").get<double>();
        s.span_nm = g.at("span_nm").get<double>();
        const json& jsa = j.at("jsa");
        if (jsa.at("type").get<std::string>() != "gaussian")
            throw std::invalid_argument("state spec: unknown jsa type");
        s.jsa.sigma_s_nm = jsa.at("sigma_s").get<double>();
        s.jsa.sigma_i_nm = jsa.at("sigma_i").get<double>();
        const json& jsp = j.at("jsp");
        const std::string type = jsp.at("type").get<std::string>();
        if (type == "polynomial") {
            PolynomialJspSpec poly;
            for (const json& t : jsp.at("coeffs"))
                poly.coeffs.push_back({t.at("p").get<int>(), t.at("q").get<int>(), t.at("c").get<double>()});
            s.jsp = poly;
        } else if (type == "image") {
            s.jsp = ImageJspSpec{jsp.at("path").get<std::string>(), jsp.at("scale_rad").get<double>()};
        } else {
            throw std::invalid_argument("state spec: unknown jsp type '" + type + "'");
        }
        return s;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("state spec: missing or mistyped field: ") + e.what());
    }
}

std::string state_spec_to_json_text(const StateSpec& spec) {
    json j = {
        {"grid", {{"n", spec.n}, {"center_nm", spec.center_nm}, {"span_nm", spec.span_nm}}},
        {"jsa", {{"type", "gaussian"}, {"sigma_s", spec.jsa.sigma_s_nm}, {"sigma_i", spec.jsa.sigma_i_nm}}},
        {"jsp", jsp_to_json(spec)},
    };
    return j.dump(2);
}

StateSpec load_state_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("state spec: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return state_spec_from_json_text(ss.str());
}

}  // namespace jsi

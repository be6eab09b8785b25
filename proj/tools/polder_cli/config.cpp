#include "config.hpp"

#include <cctype>
#include <stdexcept>

#include "format.hpp"
#include "polder/units.hpp"

namespace polder::cli {

std::vector<double> GridSpec::points() const {
  std::vector<double> p;
  p.reserve(count);
  if (count == 1) {
    p.push_back(start);
    return p;
  }
  const double step = (stop - start) / (count - 1);
  for (int i = 0; i < count; ++i) p.push_back(start + i * step);
  return p;
}

namespace {

double parse_number(const std::string& text, std::size_t* consumed) {
  try {
    return std::stod(text, consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse number from '" + text + "'");
  }
}

}  // namespace

double parse_angle(const std::string& text) {
  std::size_t pos = 0;
  const double v = parse_number(text, &pos);
  std::string suffix = text.substr(pos);
  while (!suffix.empty() && std::isspace(static_cast<unsigned char>(suffix.front())))
    suffix.erase(suffix.begin());
  if (suffix.empty() || suffix == "deg") return deg_to_rad(v);
  if (suffix == "rad") return v;
  throw std::invalid_argument("angle '" + text + "': unknown suffix '" + suffix + "'");
}

GridSpec parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) {
    std::size_t pos = 0;
    const double v = parse_number(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("grid '" + text + "': trailing characters");
    return {v, v, 1};
  }
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw std::invalid_argument("grid '" + text + "': expected start:stop:count");
  GridSpec g;
  std::size_t pos = 0;
  g.start = parse_number(text.substr(0, c1), &pos);
  g.stop = parse_number(text.substr(c1 + 1, c2 - c1 - 1), &pos);
  const std::string count_text = text.substr(c2 + 1);
  g.count = static_cast<int>(parse_number(count_text, &pos));
  if (pos != count_text.size())
    throw std::invalid_argument("grid '" + text + "': trailing characters");
  if (g.count < 1) throw std::invalid_argument("grid '" + text + "': count must be at least 1");
  if (g.count == 1 && g.start != g.stop)
    throw std::invalid_argument("grid '" + text + "': count 1 needs start == stop");
  return g;
}

std::vector<double> parse_angle_list(const std::string& text) {
  std::vector<double> out;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const auto comma = text.find(',', begin);
    const std::string item =
        text.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
    if (item.empty()) throw std::invalid_argument("empty entry in angle list");
    out.push_back(parse_angle(item));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty angle list");
  return out;
}

void validate(const RunConfig& cfg) {
  if (!(cfg.a > 0.0)) throw std::invalid_argument("radius a must be positive");
  if (cfg.geometry == "disc" && !(cfg.b > 1.0))
    throw std::invalid_argument("disc outer radius b must exceed 1 (units of a)");
  if (cfg.geometry != "ring" && cfg.geometry != "disc" && cfg.geometry != "plate")
    throw std::invalid_argument("geometry must be ring, disc or plate");
  if (cfg.pol != "radial" && cfg.pol != "axial" && cfg.pol != "tangential" && cfg.pol != "iso" &&
      cfg.pol != "mixed")
    throw std::invalid_argument("pol must be radial, axial, tangential, iso or mixed");
  if (cfg.kernel != "cp" && cfg.kernel != "london")
    throw std::invalid_argument("kernel must be cp or london");
  if (cfg.source != "closed" && cfg.source != "oracle" && cfg.source != "both")
    throw std::invalid_argument("source must be closed, oracle or both");
  if (cfg.format != "csv" && cfg.format != "json")
    throw std::invalid_argument("format must be csv or json");
  if (cfg.ev && !(cfg.a > 0.0)) throw std::invalid_argument("eV output needs a radius in nm");
  if (!(cfg.quad.rel_tol > 0.0) || !(cfg.quad.abs_tol >= 0.0))
    throw std::invalid_argument("quadrature tolerances must be positive");
  if (cfg.quad.max_subdivisions < 1)
    throw std::invalid_argument("max subdivisions must be at least 1");
  if (!(cfg.u_max > 0.0)) throw std::invalid_argument("search window must be positive");
  if (cfg.engage != "torsion-free" && cfg.engage != "force-equilibrium")
    throw std::invalid_argument("engage must be torsion-free or force-equilibrium");
}

std::string canonical_config(const RunConfig& cfg) {
  JsonWriter w;
  w.begin_object();
  w.kv("command", cfg.command);
  w.kv("geometry", cfg.geometry);
  w.kv("a", cfg.a);
  if (cfg.geometry == "disc") w.kv("b", cfg.b);
  w.kv("pol", cfg.pol);
  if (cfg.pol == "mixed") {
    w.kv("comp_z", cfg.comp_z);
    w.kv("comp_rho", cfg.comp_rho);
    w.kv("comp_phi", cfg.comp_phi);
  }
  w.kv("alpha1", cfg.alpha1);
  w.kv("alpha2", cfg.alpha2);
  w.kv("alpha3", cfg.alpha3);
  w.kv("theta_rad", cfg.theta);
  w.kv("beta_rad", cfg.beta);
  w.kv("phi_s_rad", cfg.phi_s);
  w.key("h_grid").begin_array().value(cfg.h_grid.start).value(cfg.h_grid.stop)
      .value(cfg.h_grid.count).end_array();
  w.key("theta_list_rad").begin_array();
  for (double t : cfg.theta_list) w.value(t);
  w.end_array();
  w.kv("kernel", cfg.kernel);
  w.kv("rel_tol", cfg.quad.rel_tol);
  w.kv("abs_tol", cfg.quad.abs_tol);
  w.kv("max_subdivisions", cfg.quad.max_subdivisions);
  w.kv("tol", cfg.tol);
  w.kv("source", cfg.source);
  w.kv("format", cfg.format);
  w.kv("absolute", cfg.absolute);
  w.kv("ev", cfg.ev);
  w.kv("quick", cfg.quick);
  w.kv("engage", cfg.engage);
  w.kv("u_max", cfg.u_max);
  w.key("theta_grid_deg").begin_array().value(cfg.theta_grid.start).value(cfg.theta_grid.stop)
      .value(cfg.theta_grid.count).end_array();
  w.kv("threshold_theta_rad", cfg.threshold_theta);
  w.end_object();
  return w.str();
}

std::string config_hash(const RunConfig& cfg) { return hex64(fnv1a64(canonical_config(cfg))); }

}  // namespace polder::cli

#include "cmse/materials.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "cmse/constants.hpp"
#include "cmse/errors.hpp"

namespace cmse {

namespace {

double tabulated_eps(const MaterialTable& t, double xi) {
  const double lo = t.xi.front(), hi = t.xi.back();
  if (xi < lo / 10.0 || xi > hi * 10.0)
    throw DomainError("permittivity: tabulated query outside extended range");
  // log-log interpolation in (xi, eps - 1); power-law extrapolation at edges.
  auto value = [&](std::size_t i) { return std::log(t.eps[i] - 1.0 + 1e-300); };
  double lx = std::log(std::max(xi, 1e-300));
  std::size_t j;
  if (xi <= lo)
    j = 0;
  else if (xi >= hi)
    j = t.xi.size() - 2;
  else
    j = std::upper_bound(t.xi.begin(), t.xi.end(), xi) - t.xi.begin() - 1;
  double x0 = std::log(t.xi[j]), x1 = std::log(t.xi[j + 1]);
  double y0 = value(j), y1 = value(j + 1);
  double y = y0 + (y1 - y0) * (lx - x0) / (x1 - x0);
  return 1.0 + std::exp(y);
}

}  // namespace

double permittivity(const Material& mat, double xi) {
  if (xi < 0.0) throw DomainError("permittivity: xi must be >= 0");
  switch (mat.eps_model) {
    case EpsModel::vacuum:
      return 1.0;
    case EpsModel::constant:
      return mat.eps_static;
    case EpsModel::perfect_conductor_proxy:
      return mat.eps_static;
    case EpsModel::drude: {
      if (xi == 0.0) return std::numeric_limits<double>::infinity();
      return 1.0 + mat.omega_p * mat.omega_p / (xi * (xi + mat.gamma));
    }
    case EpsModel::drude_lorentz: {
      double eps = 1.0;
      for (const auto& o : mat.oscillators)
        eps += o.strength * o.omega * o.omega /
               (o.omega * o.omega + xi * xi + o.gamma * xi);
      if (mat.omega_p > 0.0) {
        if (xi == 0.0) return std::numeric_limits<double>::infinity();
        eps += mat.omega_p * mat.omega_p / (xi * (xi + mat.gamma));
      }
      return eps;
    }
    case EpsModel::tabulated:
      if (xi == 0.0) return tabulated_eps(mat.table, mat.table.xi.front() / 10.0);
      return tabulated_eps(mat.table, xi);
  }
  throw DomainError("permittivity: unknown model");
}

double permeability(const Material& mat, double xi) {
  if (xi < 0.0) throw DomainError("permeability: xi must be >= 0");
  return mat.mu_constant;
}

Material material_table_from_rows(const std::string& name,
                                  MaterialTable table) {
  if (table.xi.size() < 8)
    throw ValidationError("material table: need at least 8 rows, got " +
                          std::to_string(table.xi.size()));
  for (std::size_t i = 0; i < table.xi.size(); ++i) {
    if (table.xi[i] <= 0.0)
      throw ValidationError("material table row " + std::to_string(i + 1) +
                            ": xi must be > 0");
    if (i > 0 && table.xi[i] <= table.xi[i - 1])
      throw ValidationError("material table row " + std::to_string(i + 1) +
                            ": xi not strictly ascending");
    if (table.eps[i] < 1.0)
      throw ValidationError("material table row " + std::to_string(i + 1) +
                            ": eps < 1 violates passivity");
  }
  Material mat;
  mat.name = name;
  mat.eps_model = EpsModel::tabulated;
  mat.table = std::move(table);
  return mat;
}

Material load_material_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("material table: cannot open " + path);
  MaterialTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double xi, eps;
    if (!(ss >> xi)) continue;  // blank / comment-only line
    if (!(ss >> eps))
      throw ValidationError("material table " + path + " line " +
                            std::to_string(lineno) + ": expected two columns");
    std::string extra;
    if (ss >> extra)
      throw ValidationError("material table " + path + " line " +
                            std::to_string(lineno) + ": trailing tokens");
    table.xi.push_back(xi);
    table.eps.push_back(eps);
  }
  if (table.xi.empty())
    throw ValidationError("material table " + path + ": no data rows");
  std::string name = path;
  auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name.erase(0, slash + 1);
  return material_table_from_rows(name, std::move(table));
}

Material builtin_material(const std::string& name) {
  Material m;
  m.name = name;
  if (name == "vacuum") {
    m.eps_model = EpsModel::vacuum;
  } else if (name == "gold") {
    // Drude surrogate: omega_p = 9.0 eV, gamma = 0.035 eV
    m.eps_model = EpsModel::drude;
    m.omega_p = ev_to_rad_per_s(9.0);
    m.gamma = ev_to_rad_per_s(0.035);
  } else if (name == "silicon_doped" || name == "silicon_intrinsic") {
    // Lattice part: eps = 1 + (11.87 - 1) / (1 + xi^2 / omega_0^2);
    // doped variant adds a carrier Drude term.
    m.eps_model = EpsModel::drude_lorentz;
    m.oscillators.push_back({11.87 - 1.0, 6.6e15, 0.0});
    if (name == "silicon_doped") {
      m.omega_p = 2.7e14;
      m.gamma = 5e13;
    }
  } else if (name == "perfect_conductor") {
    m.eps_model = EpsModel::perfect_conductor_proxy;
    m.eps_static = 1e8;
  } else {
    throw ConfigError("unknown builtin material: " + name);
  }
  return m;
}

std::vector<std::string> builtin_material_names() {
  return {"vacuum", "gold", "silicon_doped", "silicon_intrinsic",
          "perfect_conductor"};
}

}  // namespace cmse

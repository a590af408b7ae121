// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

#include <hundq/commands.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

namespace hundq {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_geometry(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string format_sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("failed writing " + path.string());
}

}  // namespace

Selector::Kind parse_selector(const std::string& name) {
  if (name == "hund") return Selector::Kind::Hund;
  if (name == "pc") return Selector::Kind::ParticleConserving;
  if (name == "full") return Selector::Kind::Full;
  throw UsageError("unknown selector '" + name + "' (expected hund, pc or full)");
}

SolveMethod parse_method(const std::string& name) {
  if (name == "dense") return SolveMethod::Dense;
  if (name == "lanczos") return SolveMethod::Lanczos;
  throw UsageError("unknown method '" + name + "' (expected dense or lanczos)");
}

SubspaceBasis select_basis(const IntegralTable& table, Selector::Kind kind) {
  const int n = table.n_electrons();
  switch (kind) {
    case Selector::Kind::Hund: return enumerate_subspace(table.n_modes(), Selector::hund(n));
    case Selector::Kind::ParticleConserving:
      return enumerate_subspace(table.n_modes(), Selector::particle_conserving(n));
    case Selector::Kind::Full: return enumerate_subspace(table.n_modes(), Selector::full());
    case Selector::Kind::Explicit: break;
  }
  throw UsageError("explicit bases are not available from the command line");
}

Solution solve_table(const IntegralTable& table, const SolveOptions& opts) {
  if (table.n_modes() > kMaxModes)
    throw CapacityError("NORB=" + std::to_string(table.n_orbitals()) + " needs " +
                        std::to_string(table.n_modes()) + " spin orbitals; the limit is " +
                        std::to_string(kMaxModes));
  auto basis = std::make_shared<const SubspaceBasis>(select_basis(table, opts.selector));
  auto h = restrict_hamiltonian(table, basis);
  const SolveMethod method =
      opts.method.value_or(h.dim() <= kDenseCap ? SolveMethod::Dense : SolveMethod::Lanczos);
  GroundStateResult g;
  if (method == SolveMethod::Lanczos && h.dim() >= 2) g = solve_lanczos(h, opts.lanczos);
  else g = solve_dense(h);
  return {std::move(h), std::move(g)};
}

std::string cmd_count(Count m, Count n, bool json) {
  if (m < 1) throw UsageError("the orbital count must be at least 1");
  if (n > 2 * m) throw UsageError("N=" + std::to_string(n) + " exceeds 2M=" + std::to_string(2 * m));
  const Count hund = hund_count(m, n);
  const Count pc = pc_count(m, n);
  const Ratio ratio = basis_ratio(m, n);
  const int jw_qubits = static_cast<int>(2 * m);
  const bool jw_fits = 2 * m <= 63;
  const Count jw = jw_fits ? Count{1} << (2 * m) : 0;

  if (json) {
    ordered_json doc;
    doc["orbitals"] = m;
    doc["electrons"] = n;
    doc["hund"] = {{"basis", hund}, {"qubits", qubit_requirement(hund)}};
    doc["pc"] = {{"basis", pc}, {"qubits", qubit_requirement(pc)}};
    doc["jw"] = {{"basis", jw_fits ? ordered_json(jw) : ordered_json(nullptr)}, {"qubits", jw_qubits}};
    doc["ratio"] = {{"numerator", ratio.numerator}, {"denominator", ratio.denominator}, {"value", ratio.value()}};
    return doc.dump(1) + "\n";
  }
  std::ostringstream os;
  auto row = [&](const char* name, const std::string& basis, int qubits) {
    os << pad(name, 11) << "basis " << pad(basis, 22) << "qubits " << qubits << '\n';
  };
  os << pad("orbitals", 11) << m << '\n' << pad("electrons", 11) << n << '\n';
  row("hund", std::to_string(hund), qubit_requirement(hund));
  row("pc", std::to_string(pc), qubit_requirement(pc));
  row("jw", jw_fits ? std::to_string(jw) : "2^" + std::to_string(2 * m), jw_qubits);
  os << pad("ratio", 11) << ratio.numerator << '/' << ratio.denominator << " = " << format_real(ratio.value())
     << '\n';
  return os.str();
}

std::string cmd_compare_grid(int max_orbitals) {
  if (max_orbitals < 1) throw UsageError("M_max must be at least 1");
  std::ostringstream os;
  os << "M,N,hund_qubits,pc_qubits,jw_qubits,pc_minus_hund,jw_minus_hund\n";
  for (Count m = 1; m <= static_cast<Count>(max_orbitals); ++m)
    for (Count n = 0; n <= 2 * m; ++n) {
      const int hq = qubit_requirement(hund_count(m, n));
      const int pq = qubit_requirement(pc_count(m, n));
      const int jq = static_cast<int>(2 * m);
      os << m << ',' << n << ',' << hq << ',' << pq << ',' << jq << ',' << pq - hq << ',' << jq - hq << '\n';
    }
  return os.str();
}

std::string cmd_solve(const std::filesystem::path& fcidump, const SolveOptions& opts, bool json) {
  const auto table = read_fcidump(fcidump);
  const auto sol = solve_table(table, opts);
  const auto& basis = sol.hamiltonian.basis();
  const auto& g = sol.ground;
  const auto sectors = sector_split(basis);
  const int qubits = qubit_requirement(basis.size());

  if (json) {
    ordered_json doc;
    doc["file"] = fcidump.string();
    doc["orbitals"] = table.n_orbitals();
    doc["electrons"] = table.n_electrons();
    doc["selector"] = to_string(opts.selector);
    doc["basis_size"] = basis.size();
    doc["qubits"] = qubits;
    doc["method"] = to_string(g.method);
    doc["iterations"] = g.iterations;
    doc["energy"] = g.energy;
    doc["residual"] = g.residual;
    doc["degeneracy"] = g.degeneracy_count;
    doc["sectors"] = ordered_json::array();
    for (const auto& s : sectors)
      doc["sectors"].push_back({{"n_up", s[0].n_up()}, {"n_down", s[0].n_down()}, {"size", s.size()}});
    doc["amplitudes"] = ordered_json::array();
    for (Eigen::Index i = 0; i < g.amplitudes.size(); ++i)
      if (std::abs(g.amplitudes(i)) > 1e-6)
        doc["amplitudes"].push_back({{"index", i},
                                     {"determinant", basis[static_cast<std::size_t>(i)].to_string()},
                                     {"amplitude", g.amplitudes(i)}});
    return doc.dump(1) + "\n";
  }

  std::ostringstream os;
  os << pad("file", 12) << fcidump.string() << '\n'
     << pad("orbitals", 12) << table.n_orbitals() << '\n'
     << pad("electrons", 12) << table.n_electrons() << '\n'
     << pad("selector", 12) << to_string(opts.selector) << '\n'
     << pad("basis", 12) << basis.size() << '\n'
     << pad("qubits", 12) << qubits << '\n'
     << pad("method", 12) << to_string(g.method);
  if (g.method == SolveMethod::Lanczos) os << " (" << g.iterations << " iterations)";
  os << '\n'
     << pad("energy", 12) << format_real(g.energy) << " Eh\n"
     << pad("residual", 12) << format_sci(g.residual) << '\n'
     << pad("degeneracy", 12) << g.degeneracy_count << '\n'
     << pad("sectors", 12);
  for (std::size_t i = 0; i < sectors.size(); ++i)
    os << (i ? " " : "") << "up" << sectors[i][0].n_up() << "/down" << sectors[i][0].n_down() << ':'
       << sectors[i].size();
  os << '\n';
  return os.str();
}

std::string cmd_pauli(const std::filesystem::path& fcidump, Selector::Kind selector,
                      const std::filesystem::path& output, bool json) {
  const auto table = read_fcidump(fcidump);
  if (table.n_modes() > kMaxModes) throw CapacityError("too many spin orbitals");
  const auto h = restrict_hamiltonian(table, select_basis(table, selector));
  const auto extended = minimal_extend(h);
  if (extended.n_qubits > kMaxDecomposeQubits)
    throw CapacityError("restricted Hamiltonian needs " + std::to_string(extended.n_qubits) +
                        " qubits; Pauli export is limited to " + std::to_string(kMaxDecomposeQubits));
  const auto encoded = apply_encoding(extended, EncodingMap::identity(extended.n_qubits));
  const auto terms = pauli_decompose(encoded);
  const auto text = export_pauli(terms, json ? PauliFormat::Json : PauliFormat::Text);
  if (output.empty()) return text;
  write_file(output, text);
  std::ostringstream os;
  os << pad("basis", 10) << h.dim() << '\n'
     << pad("qubits", 10) << extended.n_qubits << '\n'
     << pad("terms", 10) << terms.size() << '\n'
     << pad("output", 10) << output.string() << '\n';
  return os.str();
}

std::string cmd_scan(const std::filesystem::path& manifest, const SolveOptions& opts, int jobs,
                     const std::filesystem::path& output, bool json) {
  const auto spec = load_scan_spec(manifest);
  const auto result = run_scan(
      spec, [&](const ScanPoint& p) { return solve_table(read_fcidump(p.path), opts).ground.energy; }, jobs);

  auto geometry_json = [](const std::vector<double>& g) { return ordered_json(g); };
  if (json) {
    ordered_json doc;
    doc["name"] = spec.name;
    doc["parameters"] = spec.parameters;
    doc["selector"] = to_string(opts.selector);
    doc["points"] = ordered_json::array();
    for (const auto& p : result.points) doc["points"].push_back({{"geometry", geometry_json(p.geometry)}, {"energy", p.energy}});
    ordered_json summary;
    if (result.coarse_argmin) summary["coarse_argmin"] = *result.coarse_argmin;
    summary["argmin"] = geometry_json(result.argmin);
    summary["energy_min"] = result.energy_min;
    if (result.dissociation_energy) {
      summary["asymptote"] = geometry_json(*result.asymptote);
      summary["energy_asymptote"] = *result.energy_asymptote;
      summary["dissociation_energy"] = *result.dissociation_energy;
    }
    doc["summary"] = summary;
    const auto text = doc.dump(1) + "\n";
    if (output.empty()) return text;
    write_file(output, text);
    return "wrote " + output.string() + "\n";
  }

  std::ostringstream csv;
  for (const auto& name : spec.parameters) csv << name << ',';
  csv << "energy\n";
  for (const auto& p : result.points) {
    for (const double x : p.geometry) csv << format_geometry(x) << ',';
    csv << format_real(p.energy) << '\n';
  }
  auto join = [](const std::vector<double>& g) {
    std::string s;
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + format_geometry(g[i]);
    return s;
  };
  std::ostringstream summary;
  if (result.coarse_argmin) summary << "# coarse_argmin " << format_geometry(*result.coarse_argmin) << '\n';
  summary << "# argmin " << join(result.argmin) << '\n' << "# energy_min " << format_real(result.energy_min) << '\n';
  if (result.dissociation_energy) {
    summary << "# asymptote " << join(*result.asymptote) << '\n'
            << "# energy_asymptote " << format_real(*result.energy_asymptote) << '\n'
            << "# dissociation_energy " << format_real(*result.dissociation_energy) << '\n';
  }
  if (output.empty()) return csv.str() + summary.str();
  write_file(output, csv.str());
  return summary.str();
}

}  // namespace hundq

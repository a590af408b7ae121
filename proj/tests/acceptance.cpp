// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <hundq/commands.hpp>

#include "support.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hundq;
namespace t = hundq::testing;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

int failures = 0;

void criterion(const std::string& name, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS  " : "FAIL  ") << name << " (" << fmt("%.1f", seconds_since(start)) << " s)";
  if (!o.detail.empty()) std::cout << ": " << o.detail;
  std::cout << std::endl;
}

SparseHamiltonian hund_hamiltonian(const IntegralTable& table) {
  return restrict_hamiltonian(table, enumerate_subspace(table.n_modes(), Selector::hund(table.n_electrons())));
}

std::string run_cli(const std::string& args) {
  static int counter = 0;
  const auto out = fs::temp_directory_path() /
                   ("hundq-accept-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + ".out");
  const std::string cmd = std::string("\"") + HUNDQ_CLI + "\" " + args + " > \"" + out.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  auto text = t::slurp(out);
  fs::remove(out);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
    throw std::runtime_error("'" + args + "' exited with status " + std::to_string(WEXITSTATUS(status)));
  return text;
}

Outcome counting() {
  Outcome o;
  struct Row {
    const char* name;
    Count m, n, hund, hund_q, pc, pc_q, jw, jw_q;
  };
  const Row rows[] = {
      {"HF", 6, 10, 21, 5, 66, 7, 4096, 12},
      {"H2O", 7, 10, 161, 8, 1001, 10, 16384, 14},
      {"NH3", 8, 10, 784, 10, 8008, 13, 65536, 16},
      {"CH4", 9, 10, 2907, 12, 43758, 16, 262144, 18},
      {"O2", 10, 16, 615, 10, 4845, 13, 1048576, 20},
      {"H2O2", 12, 18, 8074, 13, 134596, 18, 16777216, 24},
  };
  for (const auto& r : rows) {
    const auto h = hund_count(r.m, r.n), p = pc_count(r.m, r.n);
    const Count jw = Count{1} << (2 * r.m);
    if (h != r.hund || p != r.pc || jw != r.jw) o.fail(std::string(r.name) + " basis sizes differ");
    if (static_cast<Count>(qubit_requirement(h)) != r.hund_q || static_cast<Count>(qubit_requirement(p)) != r.pc_q ||
        2 * r.m != r.jw_q)
      o.fail(std::string(r.name) + " qubit counts differ");
  }
  // HeH+ (M=2, N=2) is checked against enumeration
  const auto heh = enumerate_subspace(4, Selector::hund(2)).size();
  if (heh != hund_count(2, 2)) o.fail("HeH+ enumeration disagrees with the formula");
  o.note("6 table rows exact; M=2,N=2 formula=enumeration=" + std::to_string(heh));
  return o;
}

Outcome enumeration() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t checked = 0;
  for (int m = 1; m <= 8; ++m) {
    const int modes = 2 * m;
    std::vector<Count> counts(static_cast<std::size_t>(modes) + 1, 0);
    for (Bits b = 0; b < (Bits{1} << modes); ++b) {
      bool ok = true;
      for (int p = 0; p < m && ok; ++p) ok = !((b >> (2 * p + 1)) & 1) || ((b >> (2 * p)) & 1);
      if (ok) ++counts[static_cast<std::size_t>(std::popcount(b))];
    }
    for (int n = 0; n <= modes; ++n) {
      ++checked;
      if (counts[static_cast<std::size_t>(n)] != hund_count(m, n) ||
          enumerate_subspace(modes, Selector::hund(n)).size() != counts[static_cast<std::size_t>(n)])
        o.fail("M=" + std::to_string(m) + " N=" + std::to_string(n));
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 5.0) o.fail("took " + fmt("%.2f", elapsed) + " s");
  o.note(std::to_string(checked) + " (M,N) pairs");
  return o;
}

Outcome ratio() {
  Outcome o;
  const auto start = Clock::now();
  for (Count n = 1; n <= 4; ++n) {
    const double g = basis_ratio(10000, n).value();
    const double target = static_cast<double>(Count{1} << n);
    if (std::abs(g - target) > 0.01 * target) o.fail("N=" + std::to_string(n) + " ratio " + fmt("%.5f", g));
    o.note("N=" + std::to_string(n) + ": " + fmt("%.5f", g));
  }
  if (seconds_since(start) >= 1.0) o.fail("slower than 1 s");
  return o;
}

Outcome kernel() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t rows = 0;
  for (int n = 1; n <= 12; ++n) {
    const auto basis = enumerate_subspace(n, Selector::full());
    for (int j = 0; j < n; ++j)
      for (bool creation : {true, false}) {
        const auto m = creation ? t::jw_creator(n, j) : t::jw_annihilator(n, j);
        const auto images = apply_fermionic_op(creation ? FermionOp::create(j) : FermionOp::annihilate(j), basis);
        std::size_t k = 0;
        for (Eigen::Index c = 0; c < m.outerSize(); ++c)
          for (t::SpMat::InnerIterator it(m, c); it; ++it, ++k) {
            if (k >= images.size() || images[k].source != static_cast<std::size_t>(c) ||
                images[k].target != static_cast<Bits>(it.row()) || images[k].phase != (it.value() > 0 ? 1 : -1)) {
              o.fail("n=" + std::to_string(n) + " mode " + std::to_string(j));
              goto next;
            }
          }
        if (k != images.size()) o.fail("n=" + std::to_string(n) + " extra images");
        rows += k;
      next:;
      }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 30.0) o.fail("took " + fmt("%.1f", elapsed) + " s");
  o.note(std::to_string(rows) + " operator images compared");
  return o;
}

struct MoleculeResult {
  std::string name;
  double hund = 0.0, rhf = 0.0, fci = 0.0;
  Eigen::Index dim = 0;
  SolveMethod method = SolveMethod::Dense;
  double seconds = 0.0;
};

std::vector<MoleculeResult>& molecule_results() {
  static std::vector<MoleculeResult> results = [] {
    std::vector<MoleculeResult> out;
    for (const auto& name : t::all_molecules()) {
      const auto start = Clock::now();
      const auto sol = solve_table(read_fcidump(t::molecule_path(name)), {});
      const auto side = t::sidecar(name);
      out.push_back({name, sol.ground.energy, side["e_rhf"].get<double>(), side["e_fci"].get<double>(),
                     sol.hamiltonian.dim(), sol.ground.method, seconds_since(start)});
    }
    return out;
  }();
  return results;
}

const MoleculeResult& result_for(const std::string& name) {
  for (const auto& r : molecule_results())
    if (r.name == name) return r;
  throw std::runtime_error("no result for " + name);
}

Outcome ground_states() {
  Outcome o;
  const std::pair<const char*, double> expected[] = {
      {"heh+", -2.854}, {"h2", -1.137}, {"lih", -7.878}, {"h2o", -74.988}, {"hf", -98.592}};
  for (const auto& [name, value] : expected) {
    const double e = result_for(name).hund;
    if (std::abs(e - value) > 0.002) o.fail(std::string(name) + " " + fmt("%.6f", e));
    o.note(std::string(name) + " " + fmt("%.4f", e));
  }
  for (const auto& r : molecule_results())
    if (!(r.rhf >= r.hund && r.hund >= r.fci)) o.fail("variational chain broken for " + r.name);
  o.note("chain holds for " + std::to_string(molecule_results().size()) + " fixtures");
  const auto& big = result_for("h2o2");
  if (big.method != SolveMethod::Lanczos || big.dim != 8074) o.fail("H2O2 not solved by Lanczos at dim 8074");
  if (big.seconds >= 120.0) o.fail("H2O2 took " + fmt("%.1f", big.seconds) + " s");
  if (std::abs(big.hund - -148.790) > 0.002) o.fail("H2O2 " + fmt("%.6f", big.hund));
  o.note("h2o2 " + fmt("%.4f", big.hund) + " by Lanczos in " + fmt("%.1f", big.seconds) + " s");
  return o;
}

Outcome relative_error() {
  Outcome o;
  constexpr double kBound = 0.00121 + 1e-4;
  double worst = 0.0;
  std::string worst_name;
  for (const auto& r : molecule_results()) {
    const double rel = std::abs(r.hund - r.fci) / std::abs(r.fci);
    if (rel > worst) worst = rel, worst_name = r.name;
    if (rel > kBound) o.fail(r.name + " " + fmt("%.5f", rel) + " > " + fmt("%.5f", kBound));
  }
  o.note("largest " + worst_name + " " + fmt("%.5f", worst));
  return o;
}

Outcome encoding() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> g;
  double recon = 0.0, parseval = 0.0;
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const Eigen::Index dim = Eigen::Index{1} << n;
      Eigen::MatrixXcd a(dim, dim);
      for (auto& v : a.reshaped()) v = {g(rng), g(rng)};
      a = (a + a.adjoint()).eval() / 2.0;
      const auto terms = pauli_decompose(a, 0.0);
      recon = std::max(recon, (pauli_to_matrix(terms, n) - a).cwiseAbs().maxCoeff());
      double sum = 0.0;
      for (const auto& term : terms) sum += term.coefficient * term.coefficient;
      parseval = std::max(parseval, std::abs(sum - a.squaredNorm() / static_cast<double>(dim)));
    }
  if (recon >= 1e-12) o.fail("reconstruction error " + fmt("%.2e", recon));
  if (parseval >= 1e-12) o.fail("Parseval error " + fmt("%.2e", parseval));
  o.note("reconstruction " + fmt("%.1e", recon) + ", Parseval " + fmt("%.1e", parseval));

  const auto h2 = read_fcidump(t::molecule_path("h2"));
  const auto full = restrict_hamiltonian(h2, enumerate_subspace(h2.n_modes(), Selector::full()));
  const auto terms = pauli_decompose(apply_encoding(minimal_extend(full), EncodingMap::identity(4)));
  std::vector<PauliTerm> oracle;
  for (const auto& [word, c] : t::jw_pauli_hamiltonian(h2).terms())
    if (std::abs(c.real()) > kPauliPrune) oracle.push_back({c.real(), word});
  bool same = terms.size() == oracle.size();
  for (std::size_t k = 0; same && k < terms.size(); ++k)
    same = terms[k].word == oracle[k].word && std::abs(terms[k].coefficient - oracle[k].coefficient) < 1e-12;
  if (!same) o.fail("H2 full-space terms differ from the Jordan-Wigner expansion");
  o.note("H2 JW " + std::to_string(terms.size()) + " terms match");

  double worst = 0.0;
  int via_pauli = 0;
  for (const auto& name : t::all_molecules()) {
    const auto table = read_fcidump(t::molecule_path(name));
    const auto h = hund_hamiltonian(table);
    const double restricted = solve_auto(h).energy;
    const auto eh = apply_encoding(minimal_extend(h), EncodingMap::identity(qubit_requirement(static_cast<Count>(h.dim()))));
    const double extended = eh.matrix.rows() >= 2 ? solve_lanczos(eh.matrix).energy : solve_dense(eh.matrix).energy;
    worst = std::max(worst, std::abs(extended - restricted));
    if (eh.n_qubits <= 10) {
      const auto pauli = pauli_decompose(eh);
      const Eigen::MatrixXcd rebuilt = pauli_to_matrix(pauli, eh.n_qubits);
      const Eigen::MatrixXd real = rebuilt.real();
      if (rebuilt.imag().cwiseAbs().maxCoeff() > 1e-12) o.fail(name + " Pauli sum is not real");
      worst = std::max(worst, std::abs(solve_dense(Eigen::SparseMatrix<double>(real.sparseView())).energy - restricted));
      ++via_pauli;
    }
  }
  if (worst >= 1e-10) o.fail("lowest eigenvalue moved by " + fmt("%.2e", worst));
  o.note("lowest eigenvalue preserved on " + std::to_string(t::all_molecules().size()) + " fixtures (" +
         std::to_string(via_pauli) + " through Pauli sums), max shift " + fmt("%.1e", worst));
  return o;
}

Outcome surfaces() {
  Outcome o;
  const auto start = Clock::now();
  SolveOptions opts;
  auto summary = [&](const char* family) {
    return nlohmann::json::parse(
        cmd_scan(t::fixture_dir() / "scans" / family / "manifest.json", opts, 4, {}, true))["summary"];
  };
  const auto h2 = summary("h2");
  const auto heh = summary("heh+");
  const auto lih = summary("lih");
  auto check = [&](const char* name, const nlohmann::json& s, double r_eq, std::optional<double> d, double r_tol) {
    const double r = s["argmin"][0].get<double>();
    const double dis = s["dissociation_energy"].get<double>();
    if (std::abs(r - r_eq) > r_tol) o.fail(std::string(name) + " r_eq " + fmt("%.3f", r));
    if (d && std::abs(dis - *d) > 0.002) o.fail(std::string(name) + " D " + fmt("%.4f", dis));
    o.note(std::string(name) + " r_eq " + fmt("%.3f", r) + " D " + fmt("%.4f", dis));
  };
  check("H2", h2, 0.735, 0.204, 1e-9);
  check("HeH+", heh, 0.913, 0.054, 1e-9);
  check("LiH", lih, 1.534, std::nullopt, 0.001 + 1e-9);
  const double elapsed = seconds_since(start);
  if (elapsed >= 300.0) o.fail("took " + fmt("%.0f", elapsed) + " s");
  return o;
}

Outcome determinism() {
  Outcome o;
  auto q = [](const fs::path& p) { return "\"" + p.string() + "\""; };
  const std::vector<std::string> commands{
      "count 9 10",
      "count 12 18 --json",
      "compare-grid 16",
      "solve " + q(t::molecule_path("h2o")),
      "solve " + q(t::molecule_path("nh3")) + " --json --method lanczos --seed 7",
      "solve " + q(t::molecule_path("h2o2")) + " --json",
      "pauli " + q(t::molecule_path("h2o")),
      "pauli " + q(t::molecule_path("beh2")) + " --json",
      "scan " + q(t::fixture_dir() / "scans/h2/manifest.json") + " --jobs 4",
      "scan " + q(t::fixture_dir() / "scans/lih/manifest.json") + " --json --jobs 3",
      "scan " + q(t::fixture_dir() / "scans/h2o_2d/manifest.json"),
  };
  for (const auto& c : commands)
    if (run_cli(c) != run_cli(c)) o.fail("'" + c + "' differs between runs");
  o.note(std::to_string(commands.size()) + " commands run twice");
  return o;
}

}  // namespace

int main() {
  std::cout << "hundq acceptance suite\n";
  criterion("counting: basis sizes and qubit counts for six molecules", counting);
  criterion("enumeration: brute force equals the closed form for M <= 8", enumeration);
  criterion("ratio: M=10^4, N=1..4 within 1% of 2^N", ratio);
  criterion("operator kernel: exact match with Jordan-Wigner matrices for n <= 12", kernel);
  criterion("ground states: five energies within 0.002 Eh, variational chain, H2O2 by Lanczos", ground_states);
  criterion("relative error: |E_hund - E_FCI| / |E_FCI| <= 0.00131 on every fixture", relative_error);
  criterion("encoding: reconstruction, Parseval, H2 Jordan-Wigner terms, lowest eigenvalue", encoding);
  criterion("surfaces: H2 and HeH+ minima and dissociation energies, LiH minimum", surfaces);
  criterion("determinism: repeated CLI runs are byte-identical", determinism);
  std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : "all criteria passed") << std::endl;
  return failures ? 1 : 0;
}

// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

#include <hundq/encode.hpp>

#include <hundq/fcidump.hpp>

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hundq {

ExtendedHamiltonian<double> minimal_extend(const SparseHamiltonian& h) {
  return minimal_extend(h.matrix());
}

EncodingMap EncodingMap::identity(int n_qubits) {
  if (n_qubits < 0 || n_qubits > 40) throw DomainError("unsupported qubit count");
  EncodingMap e;
  e.target_.resize(std::size_t{1} << n_qubits);
  std::iota(e.target_.begin(), e.target_.end(), Eigen::Index{0});
  return e;
}

EncodingMap EncodingMap::from_permutation(std::vector<Eigen::Index> target) {
  std::vector<char> hit(target.size(), 0);
  for (const auto t : target) {
    if (t < 0 || static_cast<std::size_t>(t) >= target.size() || hit[static_cast<std::size_t>(t)])
      throw DomainError("encoding map is not a permutation");
    hit[static_cast<std::size_t>(t)] = 1;
  }
  EncodingMap e;
  e.target_ = std::move(target);
  return e;
}

bool EncodingMap::is_identity() const noexcept {
  for (std::size_t i = 0; i < target_.size(); ++i)
    if (target_[i] != static_cast<Eigen::Index>(i)) return false;
  return true;
}

namespace detail {

namespace {

struct WordSpec {
  std::string word;
  int n_y = 0;
};

WordSpec word_of(Eigen::Index r, Eigen::Index c, int n) {
  WordSpec w;
  w.word.assign(static_cast<std::size_t>(n), 'I');
  for (int q = 0; q < n; ++q) {
    const int code = static_cast<int>(((r >> q) & 1) << 1 | ((c >> q) & 1));
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    w.word[static_cast<std::size_t>(n - 1 - q)] = kLetters[code];
    if (code == 2) ++w.n_y;
  }
  return w;
}

// i^k * z
std::complex<double> times_i_power(std::complex<double> z, int k) {
  switch (k & 3) {
    case 0: return z;
    case 1: return {-z.imag(), z.real()};
    case 2: return -z;
    default: return {z.imag(), -z.real()};
  }
}

template <typename Matrix>
std::vector<PauliTerm> collect(const Matrix& t, int n, double prune) {
  std::vector<PauliTerm> out;
  for (Eigen::Index c = 0; c < t.cols(); ++c)
    for (Eigen::Index r = 0; r < t.rows(); ++r) {
      const std::complex<double> raw = t(r, c);
      if (raw == std::complex<double>{}) continue;
      auto spec = word_of(r, c, n);
      const auto coeff = times_i_power(raw, spec.n_y);
      if (std::abs(coeff.imag()) >= 1e-12)
        throw DomainError("matrix is not Hermitian: coefficient of " + spec.word +
                          " has imaginary part " + std::to_string(coeff.imag()));
      if (std::abs(coeff.real()) > prune) out.push_back({coeff.real(), std::move(spec.word)});
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.word < b.word; });
  return out;
}

}  // namespace

std::vector<PauliTerm> collect_terms(const Eigen::MatrixXd& t, int n, double prune) {
  return collect(t, n, prune);
}

std::vector<PauliTerm> collect_terms(const Eigen::MatrixXcd& t, int n, double prune) {
  return collect(t, n, prune);
}

}  // namespace detail

namespace {

struct Masks {
  Eigen::Index flip = 0;  // X or Y
  Eigen::Index sign = 0;  // Y or Z
  int n_y = 0;
};

Masks masks_of(std::string_view word) {
  Masks m;
  const auto n = word.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Eigen::Index bit = Eigen::Index{1} << (n - 1 - k);
    switch (word[k]) {
      case 'I': break;
      case 'X': m.flip |= bit; break;
      case 'Y': m.flip |= bit, m.sign |= bit, ++m.n_y; break;
      case 'Z': m.sign |= bit; break;
      default: throw DomainError("invalid Pauli letter in '" + std::string(word) + "'");
    }
  }
  return m;
}

std::complex<double> phase_of(int n_y, Eigen::Index c, Eigen::Index sign) {
  static const std::complex<double> kIPow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const auto z = kIPow[n_y & 3];
  return (std::popcount(static_cast<std::uint64_t>(c & sign)) & 1) ? -z : z;
}

}  // namespace

Eigen::MatrixXcd pauli_to_matrix(std::span<const PauliTerm> terms, int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : terms) {
    if (static_cast<int>(t.word.size()) != n_qubits) throw DimensionError("Pauli word length mismatch");
    const auto m = masks_of(t.word);
    for (Eigen::Index c = 0; c < dim; ++c) out(c ^ m.flip, c) += t.coefficient * phase_of(m.n_y, c, m.sign);
  }
  return out;
}

Eigen::VectorXcd pauli_apply(std::span<const PauliTerm> terms, const Eigen::VectorXcd& x) {
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(x.size());
  for (const auto& t : terms) {
    if ((Eigen::Index{1} << t.word.size()) != x.size()) throw DimensionError("Pauli word length mismatch");
    const auto m = masks_of(t.word);
    for (Eigen::Index c = 0; c < x.size(); ++c) y(c ^ m.flip) += t.coefficient * phase_of(m.n_y, c, m.sign) * x(c);
  }
  return y;
}

std::string export_pauli(std::span<const PauliTerm> terms, PauliFormat format) {
  if (format == PauliFormat::Json) {
    nlohmann::ordered_json doc;
    doc["n_qubits"] = terms.empty() ? 0 : terms.front().word.size();
    doc["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : terms) doc["terms"].push_back({{"pauli", t.word}, {"coefficient", t.coefficient}});
    return doc.dump(1) + "\n";
  }
  std::string out;
  for (const auto& t : terms) out += format_real(t.coefficient) + '\t' + t.word + '\n';
  return out;
}

std::vector<PauliTerm> parse_pauli(std::string_view text) {
  std::vector<PauliTerm> out;
  auto check_word = [&](const std::string& w, std::size_t line) {
    if (w.find_first_not_of("IXYZ") != std::string::npos)
      throw ParseError("invalid Pauli word '" + w + "'", line);
    if (!out.empty() && out.front().word.size() != w.size())
      throw ParseError("Pauli words of different lengths", line);
  };

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
      for (const auto& t : doc.at("terms")) {
        PauliTerm term{t.at("coefficient").get<double>(), t.at("pauli").get<std::string>()};
        check_word(term.word, 0);
        out.push_back(std::move(term));
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid Pauli JSON: ") + e.what(), 0);
    }
    return out;
  }

  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string coeff, word, extra;
    // a bare coefficient is the empty word of a zero-qubit register
    if (!(ls >> coeff) || ((ls >> word) && (ls >> extra)))
      throw ParseError("expected 'coefficient<TAB>word'", line_no);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(coeff.data(), coeff.data() + coeff.size(), v);
    if (ec != std::errc{} || ptr != coeff.data() + coeff.size())
      throw ParseError("non-numeric coefficient '" + coeff + "'", line_no);
    check_word(word, line_no);
    out.push_back({v, std::move(word)});
  }
  return out;
}

}  // namespace hundq

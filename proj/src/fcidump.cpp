// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

#include <hundq/fcidump.hpp>

#include <hundq/error.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace hundq {

IntegralTable::IntegralTable(int n_orbitals, int n_electrons, int ms2)
    : n_orbitals_(n_orbitals), n_electrons_(n_electrons), ms2_(ms2) {
  if (n_orbitals < 0) throw DomainError("negative orbital count");
  const auto m = static_cast<std::size_t>(n_orbitals);
  const std::size_t pairs = m * (m + 1) / 2;
  one_body_ = Eigen::MatrixXd::Zero(n_orbitals, n_orbitals);
  two_body_.assign(pairs * (pairs + 1) / 2, 0.0);
}

void IntegralTable::set_one_body(int p, int q, double v) {
  one_body_(p, q) = v;
  one_body_(q, p) = v;
}

void IntegralTable::scale(double factor) {
  core_energy_ *= factor;
  one_body_ *= factor;
  for (auto& v : two_body_) v *= factor;
}

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

bool parse_real(std::string_view token, double& out) {
  std::string t(token);
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  for (auto& c : t)
    if (c == 'D' || c == 'd') c = 'e';
  const auto* end = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(t.data(), end, out);
  return ec == std::errc{} && ptr == end && !t.empty();
}

bool parse_int(std::string_view token, long& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end && !token.empty();
}

// Namelist body "NORB=2,NELEC=2,ORBSYM=1,1," -> key -> raw value list.
std::map<std::string, std::vector<std::string>> parse_namelist(const std::string& body) {
  std::map<std::string, std::vector<std::string>> out;
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : body) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else if (c == '=') {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
      tokens.emplace_back("=");
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));

  std::string key;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i + 1 < tokens.size() && tokens[i + 1] == "=") {
      key = upper(tokens[i]);
      out[key];
      ++i;
    } else if (!key.empty() && tokens[i] != "=") {
      out[key].push_back(tokens[i]);
    }
  }
  return out;
}

}  // namespace

IntegralTable parse_fcidump(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  std::string header;
  bool in_header = false;
  bool header_done = false;
  std::string remainder;  // text after the terminator on the closing line
  while (!header_done && std::getline(in, line)) {
    ++line_no;
    std::string u = upper(line);
    if (!in_header) {
      const auto at = u.find("&FCI");
      if (at == std::string::npos) {
        if (u.find_first_not_of(" \t\r") == std::string::npos) continue;
        throw ParseError("expected '&FCI' namelist header", line_no);
      }
      in_header = true;
      u = u.substr(at + 4);
    }
    auto term = u.find("&END");
    std::size_t term_len = 4;
    if (term == std::string::npos) {
      term = u.find('/');
      term_len = 1;
    }
    if (term != std::string::npos) {
      header += u.substr(0, term);
      remainder = u.substr(term + term_len);
      header_done = true;
    } else {
      header += u;
      header += ' ';
    }
  }
  if (!header_done) throw ParseError("unterminated or missing '&FCI' header", line_no);

  const auto fields = parse_namelist(header);
  auto required_int = [&](const char* key) -> long {
    const auto it = fields.find(key);
    long v = 0;
    if (it == fields.end() || it->second.empty())
      throw ParseError(std::string("header is missing ") + key, line_no);
    if (!parse_int(it->second.front(), v))
      throw ParseError(std::string("non-integer value for ") + key, line_no);
    return v;
  };
  const long norb = required_int("NORB");
  const long nelec = required_int("NELEC");
  long ms2 = 0;
  if (fields.count("MS2")) ms2 = required_int("MS2");
  if (norb < 0 || nelec < 0) throw ParseError("negative NORB or NELEC", line_no);

  IntegralTable table(static_cast<int>(norb), static_cast<int>(nelec), static_cast<int>(ms2));

  auto handle_record = [&](const std::string& text, std::size_t at) {
    std::istringstream ls(text);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(std::move(t));
    if (tok.empty()) return;
    if (tok.size() != 5)
      throw ParseError("expected 'value i j k l', got " + std::to_string(tok.size()) + " fields",
                       at);
    double v = 0.0;
    if (!parse_real(tok[0], v)) throw ParseError("non-numeric value '" + tok[0] + "'", at);
    long idx[4];
    for (int n = 0; n < 4; ++n) {
      if (!parse_int(tok[n + 1], idx[n]))
        throw ParseError("non-integer index '" + tok[n + 1] + "'", at);
      if (idx[n] < 0 || idx[n] > norb)
        throw ParseError("index " + tok[n + 1] + " outside [0, " + std::to_string(norb) + "]", at);
    }
    const auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      table.set_core_energy(v);
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      table.set_one_body(static_cast<int>(i - 1), static_cast<int>(j - 1), v);
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      table.set_two_body(static_cast<int>(i - 1), static_cast<int>(j - 1), static_cast<int>(k - 1),
                         static_cast<int>(l - 1), v);
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // orbital energy record; not part of the Hamiltonian
    } else {
      throw ParseError("unsupported index pattern", at);
    }
  };

  handle_record(remainder, line_no);
  while (std::getline(in, line)) {
    ++line_no;
    handle_record(line, line_no);
  }
  return table;
}

IntegralTable parse_fcidump(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_fcidump(in);
}

IntegralTable read_fcidump(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return parse_fcidump(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eni") == std::string::npos) s += ".0";
  return s;
}

std::string write_fcidump(const IntegralTable& t) {
  const int m = t.n_orbitals();
  std::string out;
  out += "&FCI NORB=" + std::to_string(m) + ",NELEC=" + std::to_string(t.n_electrons()) +
         ",MS2=" + std::to_string(t.ms2()) + ",\n ORBSYM=";
  for (int i = 0; i < m; ++i) out += "1,";
  out += "\n ISYM=1,\n&END\n";

  auto record = [&](double v, int i, int j, int k, int l) {
    out += format_real(v);
    for (int x : {i, j, k, l}) out += ' ' + std::to_string(x);
    out += '\n';
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k <= i; ++k)
        for (int l = 0; l <= (k < i ? k : j); ++l)
          if (const double v = t.two_body(i, j, k, l); v != 0.0) record(v, i + 1, j + 1, k + 1, l + 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j)
      if (const double v = t.one_body(i, j); v != 0.0) record(v, i + 1, j + 1, 0, 0);
  record(t.core_energy(), 0, 0, 0, 0);
  return out;
}

}  // namespace hundq
